"""Walk-through: products of spaces and changes of coefficients.

The graded product follows tensor/Tor bookkeeping; homology of the tensor
product complex is computed independently as a cross-check, and the
coefficient changes run through Hom/Ext and tensor/Tor.
"""

from modtopo import (
    CoefficientSpec,
    FgAbGroup,
    GradedCohomology,
    IntMatrix,
    betti,
    cohomology_with_coefficients,
    euler_characteristic,
    homology_of_complex,
    homology_with_coefficients,
    kunneth_product,
    tensor_product_complex,
)

Z = FgAbGroup.free

surface = lambda g: GradedCohomology((Z(1), Z(2 * g), Z(1)), f"genus-{g} surface")

print("=== Betti convolution for a product of surfaces ===")
prod = kunneth_product(surface(1), surface(1))
print("betti of torus x torus:", betti(prod).values)
print(
    "euler multiplicativity:",
    euler_characteristic(kunneth_product(surface(2), surface(3))),
    "=",
    euler_characteristic(surface(2)),
    "*",
    euler_characteristic(surface(3)),
)

print()
print("=== Torsion in products ===")
x = GradedCohomology((Z(1), FgAbGroup.cyclic(2)))
square = kunneth_product(x, x)
print("degree 3 of the square carries Tor(Z/2, Z/2):", square.group_at(3))

print()
print("=== Cross-check against the tensor-product complex ===")
bx = [IntMatrix.from_rows([[0]]), IntMatrix.from_rows([[2]])]
hx = homology_of_complex(bx)
lhs = kunneth_product(GradedCohomology(tuple(hx)), GradedCohomology(tuple(hx)))
rhs = homology_of_complex(tensor_product_complex(bx, bx))
print("product of homologies:", [str(g) for g in lhs.groups])
print("homology of product:  ", [str(g) for g in rhs])

print()
print("=== Universal coefficients ===")
h = [Z(1), FgAbGroup.cyclic(2)]
print("H_* =", [str(g) for g in h])
print(
    "H^*(-; Z) =",
    [str(g) for g in cohomology_with_coefficients(h, CoefficientSpec.integers())],
)
print(
    "H_*(-; Z/2) =",
    [str(g) for g in homology_with_coefficients(h, CoefficientSpec.mod_p(2))],
)
print(
    "H^*(-; Q) ranks =",
    [g.rank for g in cohomology_with_coefficients(h, CoefficientSpec.rationals())],
)
