"""Walk-through: Steenrod operations evaluated from the axioms.

Rings are presented by generators, homogeneous relations, and a table of
operation values where the axioms leave freedom; everything else follows
from instability, the squaring rule, and the Cartan formula.
"""

from modtopo import ModPRingPresentation, bockstein, sq, st, verify_axioms, w3_from_w2

print("=== Truncated polynomial ring Z/2[x]/(x^3), deg x = 1 ===")
pres = ModPRingPresentation(2, [("x", 1)], [[(1, {"x": 3})]])
x = pres.gen("x")
print("Sq^0(x^2) =", sq(0, x * x))
print("Sq^1(x)   =", sq(1, x), " (squaring rule)")
print("Sq^2(x)   =", sq(2, x), " (instability)")
print("Sq^1(x^2) =", sq(1, x * x), " (Cartan, and x^3 = 0)")
print("axiom sweep to degree 8:", verify_axioms(pres, 8) or "clean")

print()
print("=== Two line classes: Cartan in action ===")
two = ModPRingPresentation(2, [("a", 1), ("b", 1)])
a, b = two.gen("a"), two.gen("b")
print("Sq^1(ab) =", sq(1, a * b))

print()
print("=== Obstruction class from the Bockstein ===")
spin = ModPRingPresentation(
    2,
    [("w2", 2), ("v", 3)],
    operations={("Sq", 1, "w2"): [(1, {"v": 1})]},
)
print("W3 = beta(w2) =", w3_from_w2(spin.gen("w2")))
print("W3 of the zero class =", w3_from_w2(spin.zero()), " (spin case)")

print()
print("=== Odd primes: powers and the signed Leibniz Bockstein ===")
odd = ModPRingPresentation(
    3,
    [("t", 1), ("u", 2)],
    operations={("beta", "t"): [(1, {"u": 1})], ("beta", "u"): 0, ("St", 1, "t"): 0},
)
t, u = odd.gen("t"), odd.gen("u")
print("St^1(u) =", st(1, u), " (p-th power at degree 2k)")
print("beta(t) =", bockstein(t))
print("beta(t*u) =", bockstein(t * u))
print("t*t =", t * t, " (odd-degree classes square to zero)")

print()
print("=== A deliberately inconsistent table is caught ===")
bad = ModPRingPresentation(
    2,
    [("x", 1), ("u", 2)],
    [[(1, {"x": 2}), (1, {"u": 1})]],  # x^2 = u
    operations={("Sq", 1, "u"): [(1, {"x": 1, "u": 1})]},
)
for violation in verify_axioms(bad, 6):
    print(violation)
