"""Decorated intervals: construction, the interval order, and maps.

Endpoint decorations (open vs closed) are too fine for the real line's
usual picture but they decide whether module maps exist at exact
thresholds.  This walk-through builds a few intervals and pokes at the
places where decorations matter.
"""

from persistd import (
    canonical_map_parts,
    has_nonzero_map,
    parse_interval,
    residuals,
)

iv = parse_interval

print("== construction and normalization ==")
for text in ["[0,2)", "[3,3]", "(5,5]"]:
    print(f"  parse {text!r:8} -> {iv(text)}")

print()
print("== intersection tightens decorations ==")
pairs = [("[0,5)", "[3,8)"), ("[0,2]", "(0,2)"), ("[0,1)", "[1,2)")]
for a, b in pairs:
    print(f"  {a} * {b} = {iv(a).intersect(iv(b))}")

print()
print("== the interval order ==")
print("  [0,3) <= [1,5):", iv("[0,3)").leq(iv("[1,5)")))
print("  [1,5) <= [0,3):", iv("[1,5)").leq(iv("[0,3)")))
# The closed/open pair at the same endpoints is incomparable: each
# contains a boundary point the other misses.
print("  [0,2] <= (0,2):", iv("[0,2]").leq(iv("(0,2)")))
print("  (0,2) <= [0,2]:", iv("(0,2)").leq(iv("[0,2]")))

print()
print("== residuals split an ordered pair around the overlap ==")
j, i = iv("[0,5)"), iv("[3,8)")
left, right = residuals(j, i)
print(f"  J={j}, I={i}: J keeps {left}, overlap {i.intersect(j)}, I keeps {right}")

print()
print("== nonzero maps between interval modules ==")
examples = [("[0,5)", "[-2,3)"), ("[0,2]", "(0,2)"), ("[1,4)", "[0,1]")]
for src, dst in examples:
    if has_nonzero_map(iv(src), iv(dst)):
        parts = canonical_map_parts(iv(src), iv(dst))
        print(
            f"  {src} -> {dst}: image {parts.image}, "
            f"kernel {parts.kernel}, cokernel {parts.cokernel}"
        )
    else:
        print(f"  {src} -> {dst}: only the zero map")
