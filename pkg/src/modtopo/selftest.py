"""Built-in cross-check sweeps behind the ``self-test`` command.

Two suites: the circle-bundle sweep compares the closed-form K-groups
against the differential path and checks T-duality on a grid of
(genus, chern, twist); the Hodge sweep checks that every Hodge slice sums
to its Betti total for compact and congruence quotients.  ``inject_fault``
deliberately corrupts one comparison so the failure path stays honest.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .abgroup import FgAbGroup
from .hilbert import (
    CompactHilbertSpec,
    CuspidalHilbertSpec,
    compact_betti,
    cuspidal_betti,
    hodge_slice,
)
from .ktheory import CircleBundleSpec, KPair, k_groups, k_groups_via_d3, t_duality_check


@dataclass(frozen=True)
class SweepReport:
    name: str
    cases: int
    failures: tuple[tuple, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "ok" if self.ok else f"FAILED {self.failures[0]}"
        return f"{self.name}: {self.cases} cases, {status}"


def k_path_sweep(
    max_genus: int = 4,
    max_chern: int = 5,
    max_twist: int = 5,
    inject_fault: bool = False,
) -> SweepReport:
    failures: list[tuple] = []
    cases = 0
    for g, j, k in product(
        range(max_genus + 1),
        range(-max_chern, max_chern + 1),
        range(max_twist + 1),
    ):
        cases += 1
        spec = CircleBundleSpec(g, j, k)
        closed = k_groups(spec)
        via_d3 = k_groups_via_d3(spec)
        if inject_fault and (g, j, k) == (0, 0, 0):
            via_d3 = KPair(via_d3.k0.direct_sum(FgAbGroup.cyclic(2)), via_d3.k1)
        if closed != via_d3 or not t_duality_check(spec):
            failures.append((g, j, k))
    return SweepReport("k-groups closed-form vs d3", cases, tuple(failures))


def hodge_sum_sweep(
    max_n: int = 4,
    max_cusps: int = 3,
    max_dim: int = 3,
    inject_fault: bool = False,
) -> SweepReport:
    failures: list[tuple] = []
    cases = 0
    for n in range(1, max_n + 1):
        for d in range(max_dim + 1):
            spec = CompactHilbertSpec(n, d)
            for m in range(2 * n + 1):
                cases += 1
                want = compact_betti(spec, m)
                if inject_fault and (n, d, m) == (1, 0, 0):
                    want += 1
                if hodge_slice(spec, m).total() != want:
                    failures.append(("compact", n, d, m))
        for h, d in product(range(1, max_cusps + 1), range(max_dim + 1)):
            spec = CuspidalHilbertSpec.uniform(n, h, d)
            for m in range(2 * n + 1):
                cases += 1
                if hodge_slice(spec, m).total() != cuspidal_betti(spec, m).total:
                    failures.append(("cuspidal", n, h, d, m))
    return SweepReport("hilbert hodge sums vs betti", cases, tuple(failures))
