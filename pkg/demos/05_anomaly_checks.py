"""Walk-through: wrapped-brane consistency and flux quantization.

Cohomology classes are coordinates over declared ambient groups; all
verdicts are exact.
"""

from fractions import Fraction

from modtopo import (
    CohomologyElement,
    CompactHilbertSpec,
    CuspidalHilbertSpec,
    FgAbGroup,
    IntMatrix,
    RationalClass,
    d3_action,
    flux_quantization_check,
    freed_witten_check,
    hilbert_anomaly_report,
    mms_instability_check,
)

print("=== Freed-Witten check in H^3 = Z/2 + Z ===")
ambient = FgAbGroup.from_divisors(2, 0)
w3 = CohomologyElement(ambient, (0,), (1,))
h_same = CohomologyElement(ambient, (0,), (1,))
h_zero = CohomologyElement.zero(ambient)
print("w3 + w3 (order-2 cancellation):", freed_witten_check(w3, h_same).to_json())
print("w3 + 0  (obstruction remains): ", freed_witten_check(w3, h_zero).to_json())

print()
print("=== Brane-in-brane instability ===")
pd = CohomologyElement(ambient, (0,), (1,))
print("PD equals w3 + H:", mms_instability_check(pd, w3, h_zero).to_json())

print()
print("=== Degree-3 differential on explicit coordinates ===")
src, tgt = FgAbGroup.free(1), FgAbGroup.free(1)
cup_times_5 = IntMatrix.from_rows([[5]])
one = CohomologyElement(src, (1,), ())
print("d3(1) with cup map x5:", d3_action(one, 0, cup_by_h=cup_times_5, target=tgt).to_json())

print()
print("=== Flux quantization: flux - p1/4 must be integral ===")
print(flux_quantization_check(RationalClass((Fraction(1, 2),)), [2]).to_json())
print(flux_quantization_check(RationalClass((Fraction(1),)), [2]).to_json())

print()
print("=== Degree-3 reports for Hilbert modular varieties ===")
print(hilbert_anomaly_report(CompactHilbertSpec(2, 5)).to_json())
print(hilbert_anomaly_report(CuspidalHilbertSpec.uniform(3, 1, 1)).to_json())
