"""Walk-through: Betti numbers and Hodge data of Hilbert modular varieties.

Closed forms throughout: binomial universal parts, cusp-count Eisenstein
parts, and subset-indexed cuspidal parts in the middle degree.  Boundary
quirks of the congruence tables are applied literally and flagged.
"""

from modtopo import (
    CompactHilbertSpec,
    CuspidalHilbertSpec,
    betti,
    compact_implied_volume,
    cuspidal_betti,
    hodge_filtration_dims,
    hodge_slice,
    variety_cohomology,
)

print("=== Compact quotient, n = 2, dim of weight-(2,2) forms = 5 ===")
spec = CompactHilbertSpec(2, 5)
print("betti:", betti(variety_cohomology(spec)).values)
print("implied volume (chi / (-2)^n):", compact_implied_volume(spec))

print()
print("=== Congruence quotient, n = 3, two cusps, uniform cusp dims 1 ===")
cusp = CuspidalHilbertSpec.uniform(3, 2, 1)
for m in range(7):
    rec = cuspidal_betti(cusp, m)
    flag = "  (boundary override)" if rec.boundary_overridden else ""
    print(
        f"m={m}: univ={rec.univ} eis={rec.eis} cusp={rec.cusp} "
        f"total={rec.total}{flag}"
    )

print()
print("=== Middle-degree Hodge slice ===")
sl = hodge_slice(cusp, 3)
for (p, q, part), v in sorted(sl.entries.items()):
    print(f"h^({p},{q}) [{part}] = {v}")
print("flags:", sl.flags)
print("slice total", sl.total(), "== betti total", cuspidal_betti(cusp, 3).total)

print()
print("=== Hodge filtration in the middle degree ===")
for p in range(4):
    f = hodge_filtration_dims(cusp, 3, p)
    print(f"F^{p}: univ={f.univ_dim} cusp={f.cusp_dim}")
