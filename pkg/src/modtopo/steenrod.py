"""Axiom-driven Steenrod operations on presented mod-p cohomology rings.

A ring is described by a :class:`ModPRingPresentation`: a prime p,
graded generators, homogeneous relations, and a table of operation values
on generators.  Elements are kept in a unique normal form (coefficients
mod p, monomials reduced by the relations under degree-lexicographic
order), so equality is decidable and the axioms can be checked literally.

The operations are evaluated from the axioms alone:

    Sq^0 = 1,   Sq^k x = 0 for deg x < k,   Sq^k x = x^2 for deg x = k,
    Sq^k(xy) = sum over i+j=k of Sq^i(x) Sq^j(y)              (p = 2),

and for odd p the powers St^k raising degree by 2k(p-1) with the same
shape (zero below degree 2k, p-th power at degree 2k, Cartan on
products).  Where the axioms do not force a generator value the table
must supply it; a missing value raises Undetermined rather than guessing.
The Bockstein is Sq^1 at p = 2 and extends supplied generator values by
the signed Leibniz rule at odd p; the integral obstruction class in
degree 3 is the Bockstein of the degree-2 class (w3_from_w2).

Topology enters only through the generator tables; there is no
chain-level construction here, and no relations between the operations
beyond the listed axioms are assumed or checked.

For odd p the ring is graded-commutative: odd-degree generators
anticommute and square to zero; at p = 2 everything commutes strictly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .abgroup import is_prime
from .errors import (
    Inhomogeneous,
    NotModTwo,
    NotOddPrime,
    Undetermined,
    WrongDegree,
)

Mono = tuple[int, ...]
Poly = dict[Mono, int]


def _deglex_key(degree: int, mono: Mono) -> tuple:
    return (degree, mono)


@dataclass(frozen=True)
class AxiomViolation:
    """One failed identity, with both computed sides rendered."""

    kind: str
    detail: str
    lhs: str = ""
    rhs: str = ""

    def __str__(self) -> str:
        core = f"{self.kind}: {self.detail}"
        if self.lhs or self.rhs:
            core += f" [{self.lhs} != {self.rhs}]"
        return core


class ModPRingPresentation:
    """Generators, relations, and operation values of a mod-p ring.

    ``generators`` is a sequence of (name, positive degree).  Relations
    are raw polynomials: lists of (coefficient, {name: exponent}) terms.
    ``operations`` maps generator values of the non-forced operations,
    keyed by ("Sq", k, name), ("St", k, name) or ("beta", name); a prime
    of 2 only admits Sq/beta entries and an odd prime only St/beta.
    Construction is permissive about the degrees of supplied values so
    that :func:`verify_axioms` can report them; everything else is
    validated eagerly.  Instances are immutable after construction.
    """

    def __init__(self, p, generators, relations=(), operations=None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = int(p)
        names = [str(n) for n, _ in generators]
        degrees = [int(d) for _, d in generators]
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names")
        if any(d < 1 for d in degrees):
            raise ValueError("generator degrees must be >= 1")
        self.names = tuple(names)
        self.degrees = tuple(degrees)
        self._index = {n: i for i, n in enumerate(names)}
        self.raw_relations = tuple(self._compile(r) for r in relations)
        self.ops: dict[tuple[str, int, int], Poly] = {}
        for key, value in (operations or {}).items():
            self.ops[self._op_key(key)] = self._compile(value)
        self._rules = self._compile_rules()
        self._sq_cache: dict[tuple[int, Mono], Poly] = {}
        self._st_cache: dict[tuple[int, Mono], Poly] = {}
        self._beta_cache: dict[Mono, Poly] = {}

    # -- input normalization ---------------------------------------------

    def _op_key(self, key) -> tuple[str, int, int]:
        if len(key) == 2:
            kind, name = key
            k = 1
        else:
            kind, k, name = key
        kind = str(kind).lower()
        if kind not in ("sq", "st", "beta"):
            raise ValueError(f"unknown operation kind {kind!r}")
        if kind == "sq" and self.p != 2:
            raise NotModTwo("Sq entries require p = 2")
        if kind == "st" and self.p == 2:
            raise NotOddPrime("St entries require an odd prime")
        if kind == "beta":
            k = 1
        if int(k) < 1:
            raise ValueError("operation index must be >= 1 in the table")
        if name not in self._index:
            raise ValueError(f"unknown generator {name!r}")
        return (kind, int(k), self._index[name])

    def _compile(self, raw) -> Poly:
        if raw in (0, "0", None):
            return {}
        poly: Poly = {}
        for coeff, powers in raw:
            exps = [0] * len(self.names)
            for name, e in powers.items():
                exps[self._index[name]] += int(e)
            sign, mono = self._canon_mono(tuple(exps))
            if mono is None:
                continue
            poly[mono] = (poly.get(mono, 0) + sign * int(coeff)) % self.p
        return {m: c for m, c in poly.items() if c}

    def _canon_mono(self, mono: Mono):
        if self.p != 2:
            for i, e in enumerate(mono):
                if e >= 2 and self.degrees[i] % 2:
                    return 1, None  # odd-degree generators square to zero
        return 1, mono

    def _compile_rules(self):
        rules = []
        for rel in self.raw_relations:
            if not rel:
                continue
            lead = max(rel, key=lambda m: _deglex_key(self.mono_degree(m), m))
            inv = pow(rel[lead], -1, self.p)
            rhs = {
                m: (-c * inv) % self.p for m, c in rel.items() if m != lead
            }
            rules.append((lead, {m: c for m, c in rhs.items() if c}))
        rules.sort(key=lambda r: _deglex_key(self.mono_degree(r[0]), r[0]))
        return tuple(rules)

    # -- monomial arithmetic ------------------------------------------------

    def mono_degree(self, mono: Mono) -> int:
        return sum(e * d for e, d in zip(mono, self.degrees))

    def _mul_mono(self, a: Mono, b: Mono):
        """Product with the graded sign; None when an odd square appears."""
        if self.p == 2:
            return 1, tuple(x + y for x, y in zip(a, b))
        odd = [i for i, d in enumerate(self.degrees) if d % 2]
        for i in odd:
            if a[i] and b[i]:
                return 1, None
        count = 0
        for pos, j in enumerate(odd):
            if b[j]:
                count += sum(a[i] for i in odd[pos + 1 :])
        sign = -1 if count % 2 else 1
        return sign, tuple(x + y for x, y in zip(a, b))

    def _divides(self, lead: Mono, mono: Mono) -> bool:
        return all(l <= m for l, m in zip(lead, mono))

    def reduce(self, poly: Poly) -> Poly:
        """Rewrite to the unique normal form under the relation rules."""
        work = {m: c % self.p for m, c in poly.items() if c % self.p}
        out: Poly = {}
        while work:
            mono = max(work, key=lambda m: _deglex_key(self.mono_degree(m), m))
            coeff = work.pop(mono)
            rule = next(
                ((l, r) for l, r in self._rules if self._divides(l, mono)), None
            )
            if rule is None:
                out[mono] = (out.get(mono, 0) + coeff) % self.p
                if not out[mono]:
                    del out[mono]
                continue
            lead, rhs = rule
            rest = tuple(m - l for m, l in zip(mono, lead))
            ksign, _ = self._mul_mono(lead, rest)
            for rm, rc in rhs.items():
                sign, prod = self._mul_mono(rm, rest)
                if prod is None:
                    continue
                c = (work.get(prod, 0) + coeff * ksign * sign * rc) % self.p
                if c:
                    work[prod] = c
                else:
                    work.pop(prod, None)
        return out

    def poly_mul(self, a: Poly, b: Poly) -> Poly:
        out: Poly = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                sign, prod = self._mul_mono(ma, mb)
                if prod is None:
                    continue
                out[prod] = (out.get(prod, 0) + sign * ca * cb) % self.p
        return self.reduce(out)

    def poly_add(self, a: Poly, b: Poly) -> Poly:
        out = dict(a)
        for m, c in b.items():
            v = (out.get(m, 0) + c) % self.p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return out

    def poly_scale(self, a: Poly, c: int) -> Poly:
        c %= self.p
        return {m: (v * c) % self.p for m, v in a.items() if (v * c) % self.p}

    # -- elements -----------------------------------------------------------

    def zero(self) -> "RingElement":
        return RingElement(self, {})

    def unit(self) -> "RingElement":
        return RingElement(self, self.reduce({(0,) * len(self.names): 1}))

    def gen(self, name: str) -> "RingElement":
        exps = [0] * len(self.names)
        exps[self._index[name]] = 1
        return RingElement(self, self.reduce({tuple(exps): 1}))

    def element(self, raw) -> "RingElement":
        return RingElement(self, self.reduce(self._compile(raw)))

    def mono_str(self, mono: Mono) -> str:
        parts = []
        for name, e in zip(self.names, mono):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def poly_str(self, poly: Poly) -> str:
        if not poly:
            return "0"
        terms = sorted(
            poly.items(),
            key=lambda it: _deglex_key(self.mono_degree(it[0]), it[0]),
            reverse=True,
        )
        rendered = []
        for m, c in terms:
            ms = self.mono_str(m)
            if c == 1:
                rendered.append(ms)
            elif ms == "1":
                rendered.append(str(c))
            else:
                rendered.append(f"{c}*{ms}")
        return " + ".join(rendered)

    # -- generator-level operation values ------------------------------------

    def _sq_gen(self, k: int, idx: int) -> Poly:
        d = self.degrees[idx]
        e = tuple(1 if i == idx else 0 for i in range(len(self.names)))
        if k == 0:
            return self.reduce({e: 1})
        if k > d:
            return {}
        if k == d:
            sign, sq = self._mul_mono(e, e)
            return self.reduce({sq: sign % self.p}) if sq else {}
        value = self.ops.get(("sq", k, idx))
        if value is None:
            raise Undetermined(
                f"Sq^{k} on generator {self.names[idx]!r} (degree {d}) is "
                "neither axiom-forced nor supplied"
            )
        return self.reduce(value)

    def _st_gen(self, k: int, idx: int) -> Poly:
        d = self.degrees[idx]
        e = tuple(1 if i == idx else 0 for i in range(len(self.names)))
        if k == 0:
            return self.reduce({e: 1})
        if 2 * k > d:
            return {}
        if 2 * k == d:
            power: Poly = {(0,) * len(self.names): 1}
            for _ in range(self.p):
                power = self.poly_mul(power, {e: 1})
            return power
        value = self.ops.get(("st", k, idx))
        if value is None:
            raise Undetermined(
                f"St^{k} on generator {self.names[idx]!r} (degree {d}) is "
                "neither axiom-forced nor supplied"
            )
        return self.reduce(value)

    def _beta_gen(self, idx: int) -> Poly:
        value = self.ops.get(("beta", 1, idx))
        if value is None:
            raise Undetermined(
                f"beta on generator {self.names[idx]!r} is not supplied"
            )
        return self.reduce(value)

    # -- operation evaluation on monomials (Cartan recursion) -----------------

    def _split(self, mono: Mono):
        idx = next(i for i, e in enumerate(mono) if e)
        rest = tuple(e - (1 if i == idx else 0) for i, e in enumerate(mono))
        return idx, rest

    def sq_mono(self, k: int, mono: Mono) -> Poly:
        key = (k, mono)
        hit = self._sq_cache.get(key)
        if hit is not None:
            return hit
        if k == 0:
            out = self.reduce({mono: 1})
        elif not any(mono):
            out = {}
        else:
            idx, rest = self._split(mono)
            out = {}
            for i in range(k + 1):
                partner = self.sq_mono(k - i, rest)
                if not partner:
                    continue  # keep undetermined values lazy
                out = self.poly_add(out, self.poly_mul(self._sq_gen(i, idx), partner))
        self._sq_cache[key] = out
        return out

    def st_mono(self, k: int, mono: Mono) -> Poly:
        key = (k, mono)
        hit = self._st_cache.get(key)
        if hit is not None:
            return hit
        if k == 0:
            out = self.reduce({mono: 1})
        elif not any(mono):
            out = {}
        else:
            idx, rest = self._split(mono)
            out = {}
            for i in range(k + 1):
                partner = self.st_mono(k - i, rest)
                if not partner:
                    continue
                out = self.poly_add(out, self.poly_mul(self._st_gen(i, idx), partner))
        self._st_cache[key] = out
        return out

    def beta_mono(self, mono: Mono) -> Poly:
        hit = self._beta_cache.get(mono)
        if hit is not None:
            return hit
        if not any(mono):
            out: Poly = {}
        else:
            idx, rest = self._split(mono)
            first = self.poly_mul(self._beta_gen(idx), self.reduce({rest: 1}))
            e = tuple(1 if i == idx else 0 for i in range(len(self.names)))
            sign = -1 if self.degrees[idx] % 2 else 1
            second = self.poly_scale(
                self.poly_mul(self.reduce({e: 1}), self.beta_mono(rest)), sign
            )
            out = self.poly_add(first, second)
        self._beta_cache[mono] = out
        return out

    # -- monomial enumeration -------------------------------------------------

    def monomials_up_to(self, max_degree: int, normal_only: bool = True):
        """All monomials of degree <= max_degree, unit included."""
        ranges = []
        for i, d in enumerate(self.degrees):
            cap = max_degree // d
            if self.p != 2 and d % 2:
                cap = min(cap, 1)
            ranges.append(range(cap + 1))
        for exps in itertools.product(*ranges):
            if self.mono_degree(exps) > max_degree:
                continue
            if normal_only and any(
                self._divides(lead, exps) for lead, _ in self._rules
            ):
                continue
            if self._canon_mono(exps)[1] is None:
                continue
            yield exps

    # -- serialization ----------------------------------------------------------

    def poly_to_json(self, poly: Poly) -> list:
        items = sorted(
            poly.items(), key=lambda it: _deglex_key(self.mono_degree(it[0]), it[0])
        )
        return [
            {
                "coeff": c,
                "monomial": {
                    self.names[i]: e for i, e in enumerate(m) if e
                },
            }
            for m, c in items
        ]

    @staticmethod
    def poly_from_json(items) -> list:
        return [(t["coeff"], dict(t.get("monomial", {}))) for t in items]

    def to_json(self) -> dict:
        ops = []
        for (kind, k, idx), value in sorted(self.ops.items()):
            label = "beta" if kind == "beta" else f"{kind.capitalize()}{k}"
            ops.append(
                {
                    "op": label,
                    "gen": self.names[idx],
                    "value": self.poly_to_json(value),
                }
            )
        return {
            "p": self.p,
            "generators": [
                {"name": n, "degree": d} for n, d in zip(self.names, self.degrees)
            ],
            "relations": [self.poly_to_json(r) for r in self.raw_relations],
            "ops": ops,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "ModPRingPresentation":
        gens = [(g["name"], g["degree"]) for g in doc["generators"]]
        rels = [cls.poly_from_json(r) for r in doc.get("relations", ())]
        ops = {}
        for entry in doc.get("ops", ()):
            label = entry["op"]
            if label == "beta":
                key = ("beta", entry["gen"])
            elif label.lower().startswith("sq"):
                key = ("sq", int(label[2:]), entry["gen"])
            elif label.lower().startswith("st"):
                key = ("st", int(label[2:]), entry["gen"])
            else:
                raise ValueError(f"unknown operation label {label!r}")
            ops[key] = cls.poly_from_json(entry["value"])
        return cls(doc["p"], gens, rels, ops)


class RingElement:
    """Normal-form polynomial in a fixed presentation."""

    __slots__ = ("pres", "poly")

    def __init__(self, pres: ModPRingPresentation, poly: Poly):
        self.pres = pres
        self.poly = poly

    @property
    def is_zero(self) -> bool:
        return not self.poly

    @property
    def is_homogeneous(self) -> bool:
        degs = {self.pres.mono_degree(m) for m in self.poly}
        return len(degs) <= 1

    @property
    def degree(self) -> int | None:
        """Common degree of the terms; None for the zero element."""
        degs = {self.pres.mono_degree(m) for m in self.poly}
        if not degs:
            return None
        if len(degs) > 1:
            raise Inhomogeneous(f"mixed degrees {sorted(degs)} in {self}")
        return degs.pop()

    def _lift(self, other):
        if isinstance(other, RingElement):
            if other.pres is not self.pres:
                raise ValueError("elements from different presentations")
            return other
        if isinstance(other, int):
            return RingElement(
                self.pres,
                self.pres.poly_scale(self.pres.unit().poly, other),
            )
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return RingElement(self.pres, self.pres.poly_add(self.poly, other.poly))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + RingElement(self.pres, self.pres.poly_scale(other.poly, -1))

    def __mul__(self, other):
        if isinstance(other, int):
            return RingElement(self.pres, self.pres.poly_scale(self.poly, other))
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return RingElement(self.pres, self.pres.poly_mul(self.poly, other.poly))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined")
        out = self.pres.unit()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = self._lift(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.pres is other.pres and self.poly == other.poly

    def __hash__(self):
        return hash((id(self.pres), tuple(sorted(self.poly.items()))))

    def __repr__(self):
        return self.pres.poly_str(self.poly)


# ---------------------------------------------------------------------------
# Operations


def _homogeneous_or_raise(x: RingElement) -> None:
    if not x.is_homogeneous:
        raise Inhomogeneous(f"{x} is not homogeneous")


def sq(k: int, x: RingElement) -> RingElement:
    """Steenrod square Sq^k, raising the degree by k (p = 2 only)."""
    if x.pres.p != 2:
        raise NotModTwo("Sq acts on mod-2 presentations only")
    if k < 0:
        raise ValueError("operation index must be nonnegative")
    _homogeneous_or_raise(x)
    out: Poly = {}
    for m, c in x.poly.items():
        out = x.pres.poly_add(out, x.pres.poly_scale(x.pres.sq_mono(k, m), c))
    return RingElement(x.pres, out)


def st(k: int, x: RingElement) -> RingElement:
    """Steenrod power St^k, raising the degree by 2k(p-1) (odd p only)."""
    if x.pres.p == 2:
        raise NotOddPrime("St acts on odd-prime presentations only")
    if k < 0:
        raise ValueError("operation index must be nonnegative")
    _homogeneous_or_raise(x)
    out: Poly = {}
    for m, c in x.poly.items():
        out = x.pres.poly_add(out, x.pres.poly_scale(x.pres.st_mono(k, m), c))
    return RingElement(x.pres, out)


def bockstein(x: RingElement) -> RingElement:
    """Degree-raising Bockstein: Sq^1 at p = 2, Leibniz extension otherwise."""
    _homogeneous_or_raise(x)
    if x.pres.p == 2:
        return sq(1, x)
    out: Poly = {}
    for m, c in x.poly.items():
        out = x.pres.poly_add(out, x.pres.poly_scale(x.pres.beta_mono(m), c))
    return RingElement(x.pres, out)


def w3_from_w2(w2: RingElement) -> RingElement:
    """Mod-2 representative of the integral degree-3 obstruction class.

    The input is the degree-2 obstruction class; its Bockstein is the
    degree-3 class whose vanishing makes the space spin.
    """
    if w2.pres.p != 2:
        raise NotModTwo("the obstruction classes live in mod-2 cohomology")
    if not w2.is_zero and w2.degree != 2:
        raise WrongDegree(f"expected a degree-2 class, got degree {w2.degree}")
    return bockstein(w2)


# ---------------------------------------------------------------------------
# Axiom verification


def _check_table_entries(pres: ModPRingPresentation, out: list[AxiomViolation]):
    for (kind, k, idx), value in sorted(pres.ops.items()):
        name = pres.names[idx]
        d = pres.degrees[idx]
        label = "beta" if kind == "beta" else f"{kind.capitalize()}^{k}"
        if value:
            degs = {pres.mono_degree(m) for m in value}
            if kind == "sq":
                want = d + k
            elif kind == "st":
                want = d + 2 * k * (pres.p - 1)
            else:
                want = d + 1
            if degs != {want}:
                out.append(
                    AxiomViolation(
                        "DEGREE",
                        f"{label}({name}) must be homogeneous of degree {want}, "
                        f"got degrees {sorted(degs)}",
                    )
                )
        if kind == "sq" and k >= d:
            forced = pres._sq_gen(k, idx)
            if pres.reduce(value) != forced:
                out.append(
                    AxiomViolation(
                        "TABLE",
                        f"{label}({name}) is axiom-forced but the table disagrees",
                        pres.poly_str(pres.reduce(value)),
                        pres.poly_str(forced),
                    )
                )
        if kind == "st" and 2 * k >= d:
            forced = pres._st_gen(k, idx)
            if pres.reduce(value) != forced:
                out.append(
                    AxiomViolation(
                        "TABLE",
                        f"{label}({name}) is axiom-forced but the table disagrees",
                        pres.poly_str(pres.reduce(value)),
                        pres.poly_str(forced),
                    )
                )


def _check_relations(pres: ModPRingPresentation, out: list[AxiomViolation]):
    for rel in pres.raw_relations:
        if not rel:
            continue
        degs = {pres.mono_degree(m) for m in rel}
        if len(degs) > 1:
            out.append(
                AxiomViolation(
                    "DEGREE",
                    f"relation {pres.poly_str(rel)} is not homogeneous "
                    f"(degrees {sorted(degs)})",
                )
            )


def _check_confluence(
    pres: ModPRingPresentation, max_degree: int, out: list[AxiomViolation]
):
    for mono in pres.monomials_up_to(max_degree, normal_only=False):
        hits = [r for r in pres._rules if pres._divides(r[0], mono)]
        if len(hits) < 2:
            continue
        results = set()
        for lead, rhs in hits:
            rest = tuple(m - l for m, l in zip(mono, lead))
            ksign, _ = pres._mul_mono(lead, rest)
            step: Poly = {}
            for rm, rc in rhs.items():
                sign, prod = pres._mul_mono(rm, rest)
                if prod is None:
                    continue
                step[prod] = (step.get(prod, 0) + ksign * sign * rc) % pres.p
            results.add(tuple(sorted(pres.reduce(step).items())))
        if len(results) > 1:
            out.append(
                AxiomViolation(
                    "CONFLUENCE",
                    f"monomial {pres.mono_str(mono)} reduces to different "
                    "normal forms depending on rule order",
                )
            )


def verify_axioms(
    pres: ModPRingPresentation, max_degree: int
) -> list[AxiomViolation]:
    """Exhaustively test the operation axioms up to a degree bound.

    Checks, over all normal-form monomials (and pairs) of degree at most
    ``max_degree``: instability and the squaring rule, the Cartan formula
    evaluated on reduced products versus term-by-term (this is what
    catches tables that are inconsistent with the relations), vanishing of
    the composite Bockstein, degree bookkeeping of supplied values, and
    confluence of the rewriting rules.  Identities that hit an
    Undetermined generator value are skipped, not reported.  Returns the
    list of violations; an empty list means every testable identity holds.
    """
    out: list[AxiomViolation] = []
    _check_table_entries(pres, out)
    _check_relations(pres, out)
    _check_confluence(pres, max_degree, out)

    monos = list(pres.monomials_up_to(max_degree))
    is_two = pres.p == 2

    def elem(m: Mono) -> RingElement:
        return RingElement(pres, pres.reduce({m: 1}))

    for m in monos:
        x = elem(m)
        if x.is_zero:
            continue
        d = pres.mono_degree(m)
        try:
            if is_two:
                for k in (d + 1, d + 2):
                    got = sq(k, x)
                    if not got.is_zero:
                        out.append(
                            AxiomViolation(
                                "INSTABILITY",
                                f"Sq^{k}({pres.mono_str(m)}) should vanish above "
                                "the degree",
                                str(got),
                                "0",
                            )
                        )
                got = sq(d, x)
                if got != x * x:
                    out.append(
                        AxiomViolation(
                            "SQUARING",
                            f"Sq^{d}({pres.mono_str(m)}) != square",
                            str(got),
                            str(x * x),
                        )
                    )
                bb = sq(1, sq(1, x))
                if not bb.is_zero:
                    out.append(
                        AxiomViolation(
                            "BOCKSTEIN",
                            f"Sq^1 Sq^1 ({pres.mono_str(m)}) != 0",
                            str(bb),
                            "0",
                        )
                    )
            else:
                for k in (d // 2 + 1, d // 2 + 2):
                    got = st(k, x)
                    if not got.is_zero:
                        out.append(
                            AxiomViolation(
                                "INSTABILITY",
                                f"St^{k}({pres.mono_str(m)}) should vanish above "
                                "half the degree",
                                str(got),
                                "0",
                            )
                        )
                if d % 2 == 0:
                    got = st(d // 2, x)
                    if got != x**pres.p:
                        out.append(
                            AxiomViolation(
                                "SQUARING",
                                f"St^{d // 2}({pres.mono_str(m)}) != p-th power",
                                str(got),
                                str(x**pres.p),
                            )
                        )
                bb = bockstein(bockstein(x))
                if not bb.is_zero:
                    out.append(
                        AxiomViolation(
                            "BOCKSTEIN",
                            f"beta beta ({pres.mono_str(m)}) != 0",
                            str(bb),
                            "0",
                        )
                    )
        except (Undetermined, Inhomogeneous):
            pass

    for ma, mb in itertools.combinations_with_replacement(monos, 2):
        total = pres.mono_degree(ma) + pres.mono_degree(mb)
        if total > max_degree:
            continue
        a, b = elem(ma), elem(mb)
        prod = a * b
        try:
            if is_two:
                for k in range(total + 2):
                    lhs = sq(k, prod) if prod.is_homogeneous else None
                    rhs = pres.zero()
                    for i in range(k + 1):
                        rhs = rhs + sq(i, a) * sq(k - i, b)
                    if lhs is not None and lhs != rhs:
                        out.append(
                            AxiomViolation(
                                "CARTAN",
                                f"Sq^{k}({pres.mono_str(ma)} * {pres.mono_str(mb)})",
                                str(lhs),
                                str(rhs),
                            )
                        )
            else:
                for k in range(total // 2 + 2):
                    lhs = st(k, prod) if prod.is_homogeneous else None
                    rhs = pres.zero()
                    for i in range(k + 1):
                        rhs = rhs + st(i, a) * st(k - i, b)
                    if lhs is not None and lhs != rhs:
                        out.append(
                            AxiomViolation(
                                "CARTAN",
                                f"St^{k}({pres.mono_str(ma)} * {pres.mono_str(mb)})",
                                str(lhs),
                                str(rhs),
                            )
                        )
                blhs = bockstein(prod)
                sign = -1 if pres.mono_degree(ma) % 2 else 1
                brhs = bockstein(a) * b + sign * (a * bockstein(b))
                if blhs != brhs:
                    out.append(
                        AxiomViolation(
                            "BOCKSTEIN",
                            f"Leibniz fails on {pres.mono_str(ma)} * "
                            f"{pres.mono_str(mb)}",
                            str(blhs),
                            str(brhs),
                        )
                    )
        except (Undetermined, Inhomogeneous):
            pass
    return out
