"""The interleaving distance between interval modules, exactly.

The distance is an infimum that is not always attained: [0,2] and (0,2)
are at distance 0 without being isomorphic.  Exact rational arithmetic
keeps such statements crisp instead of floating-point fuzzy.
"""

from fractions import Fraction

from persistd import (
    are_eps_interleaved,
    ball_membership,
    candidate_scan_interval_distance,
    distance_to_zero,
    interval_distance,
    parse_interval,
)

iv = parse_interval

print("== a distance-zero pair that is not isomorphic ==")
a, b = iv("[0,2]"), iv("(0,2)")
print("  d([0,2], (0,2)) =", interval_distance(a, b))
print("  0-interleaved?", are_eps_interleaved(a, b, 0))
print("  (1/1000)-interleaved?", are_eps_interleaved(a, b, Fraction(1, 1000)))

print()
print("== an infinite distance ==")
print("  d([0,1), [0,inf)) =", interval_distance(iv("[0,1)"), iv("[0,inf)")))

print()
print("== distance to the zero module is half the diameter ==")
for text in ["[3,3]", "[1,4]", "[0,inf)"]:
    print(f"  d({text}, 0) = {distance_to_zero(iv(text))}")

print()
print("== the closed form agrees with a decision-procedure scan ==")
pairs = [("[0,10)", "[4,50)"), ("[0,4)", "[1,2)"), ("(-1/2,7/3]", "[0,2]")]
for x, y in pairs:
    closed = interval_distance(iv(x), iv(y))
    scanned = candidate_scan_interval_distance(iv(x), iv(y))
    print(f"  d({x}, {y}) = {closed}   (scan oracle: {scanned})")

print()
print("== open balls ==")
center = iv("[0,5)")
for text, radius in [("[-1,6]", Fraction(9, 8)), ("(1,4)", Fraction(9, 8)), ("[-1,6]", 1)]:
    inside = ball_membership(iv(text), center, radius)
    print(f"  {text} in B_{radius}({center})? {inside}")
