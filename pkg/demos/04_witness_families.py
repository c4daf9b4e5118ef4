"""The constructive witness families, at desk scale.

Each family evidences a structural statement about spaces of
interval-decomposable modules: infinite topological dimension (cube),
non-separability (binary sequences), incompleteness (a Cauchy sequence
escaping the class), non-total-boundedness (replicas), and non-open
inclusions (tail witnesses).
"""

from fractions import Fraction

from persistd import (
    PModule,
    binary_sequence_module,
    cauchy_witness,
    cube_point_module,
    module_distance,
    open_subset_witness,
    parse_interval,
    replicate,
    staircase,
)

print("== cube embedding: L-infinity geometry inside module space ==")
x = [Fraction(1, 500), Fraction(1, 701)]
y = [Fraction(0), Fraction(1, 350)]
mx, my = cube_point_module(2, x), cube_point_module(2, y)
print("  M(x):", mx)
print("  M(y):", my)
print("  d =", module_distance(mx, my), " = max|x_i - y_i| =", max(abs(a - b) for a, b in zip(x, y)))

print()
print("== binary sequences: an uncountable 1-separated family ==")
alpha, beta = [0, 1, 1, 0], [0, 1, 0, 0]
print("  M(0110):", binary_sequence_module(alpha))
print("  M(0100):", binary_sequence_module(beta))
print("  d =", module_distance(binary_sequence_module(alpha), binary_sequence_module(beta)))

print()
print("== a Cauchy sequence whose limit leaves the class ==")
for n, m in [(0, 1), (1, 2), (2, 5), (5, 12)]:
    d = module_distance(cauchy_witness(n), cauchy_witness(m))
    print(f"  d(stage {n}, stage {m}) = {d}")
print("  rank witness (summands containing the shrinking box):")
for n in (4, 6, 9, 12):
    w = Fraction(1, 2 ** (n - 2))
    print(f"    stage {n}: rank over [-{w},{w}] = {cauchy_witness(n).rank(-w, w)}")

print()
print("== staircases drift infinitely far from zero ==")
for n in (1, 4, 9):
    print(f"  d(staircase({n}), 0) = {module_distance(staircase(n), PModule.zero())}")

print()
print("== replicas rule out finite covers ==")
piece = parse_interval("[0,1)")
mods = [replicate(piece, k) for k in (1, 2, 5)]
print("  pairwise:", [str(module_distance(a, b)) for a in mods for b in mods if a != b][:3])

print()
print("== open-subset witnesses sit at exactly eps ==")
m = PModule.of("[10,14)", "[20,99]")
for inclusion in ("ffid_cd_in_ffid", "fid_in_pfd", "ffid_in_cfid"):
    w = open_subset_witness(m, inclusion, Fraction(1, 8), 3, bounds=(10, 100))
    print(f"  {inclusion}: d = {module_distance(m, w)}")
