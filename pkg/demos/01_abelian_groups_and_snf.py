"""Walk-through: exact integer matrices, Smith normal form, group arithmetic.

Everything below is computed with arbitrary-precision integers; the SNF
transforms are unimodular and reconstruct the input exactly.
"""

from modtopo import FgAbGroup, IntMatrix, homology_of_complex, smith_normal_form

print("=== Smith normal form ===")
m = IntMatrix.from_rows([[2, 4], [6, 8]])
s = smith_normal_form(m)
print("matrix:")
print(m)
print("diagonal:", s.diagonal)
print("reconstructed equals input:", s.left @ s.diag_matrix() @ s.right == m)

print()
print("=== Canonical forms ===")
print("Z/2 + Z/3 canonicalizes to:", FgAbGroup.from_divisors(2, 3))
print("Z/4 + Z/6 canonicalizes to:", FgAbGroup.from_divisors(4, 6))
g = FgAbGroup(1, (2, 12))
print(f"{g} has primary decomposition {g.primary_decomposition()}")

print()
print("=== Bifunctors on groups ===")
a, b = FgAbGroup.cyclic(4), FgAbGroup.cyclic(6)
print(f"tensor(Z/4, Z/6) = {a.tensor(b)}")
print(f"Tor(Z/4, Z/6)    = {a.tor(b)}")
print(f"Hom(Z/4, Z/6)    = {a.hom(b)}")
print(f"Ext(Z/4, Z/6)    = {a.ext(b)}")

print()
print("=== Homology of small cell complexes ===")
circle = [IntMatrix.from_rows([[0]])]
print("circle:", [str(h) for h in homology_of_complex(circle)])
rp2_style = [IntMatrix.from_rows([[0]]), IntMatrix.from_rows([[2]])]
print("disk glued by degree 2:", [str(h) for h in homology_of_complex(rp2_style)])
torus = [IntMatrix.zeros(1, 2), IntMatrix.zeros(2, 1)]
print("torus (zero boundaries):", [str(h) for h in homology_of_complex(torus)])
