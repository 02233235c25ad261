"""Exact arithmetic on integer matrices and finitely generated abelian groups.

Everything in this module runs on Python's arbitrary-precision integers;
there is no floating point and no fixed-width arithmetic anywhere, so no
intermediate result can overflow.  The two core values are

* :class:`IntMatrix`, an immutable dense integer matrix (boundary maps,
  presentations, linear maps), and
* :class:`FgAbGroup`, a finitely generated abelian group in canonical form

      Z^rank  (+)  Z/d1 (+) ... (+) Z/dt      with  2 <= d1 | d2 | ... | dt.

Canonical form is the invariant-factor decomposition, so two groups are
isomorphic exactly when their fields compare equal.  Factors equal to 1
are dropped during canonicalization and Z/0 is recorded as a free summand,
never as a "factor 0".

On top of Smith normal form the module provides homology of integer chain
complexes, the bifunctors tensor/Tor/Hom/Ext on groups, and lattice
utilities (integer kernels, image bases, lattice quotients) used by the
twisted K-theory path.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import DimensionMismatch, NotAComplex, NotASublattice


def is_prime(n: int) -> bool:
    """Primality by trial division; validates mod-p coefficient systems."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _as_int(v) -> int:
    # JSON carries numbers beyond 2**53 as decimal strings
    if isinstance(v, bool):
        raise ValueError("booleans are not matrix entries")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        return int(v, 10)
    raise ValueError(f"expected integer, got {v!r}")


def json_int(v: int):
    """Ints that can exceed 2**53 are serialized as decimal strings."""
    return v if abs(v) <= 2**53 else str(v)


@dataclass(frozen=True)
class IntMatrix:
    """Immutable row-major integer matrix with exact arithmetic."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        ents = tuple(int(e) for e in self.entries)
        if len(ents) != self.rows * self.cols:
            raise ValueError(
                f"entry count {len(ents)} != rows*cols = {self.rows * self.cols}"
            )
        object.__setattr__(self, "entries", ents)

    @classmethod
    def from_rows(cls, rows: list[list[int]], cols: int | None = None) -> "IntMatrix":
        r = len(rows)
        if r == 0:
            return cls(0, 0 if cols is None else cols, ())
        c = len(rows[0])
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return cls(r, c, tuple(v for row in rows for v in row))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return self.entries[j :: self.cols] if self.cols else ()

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.entries)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(sum(ri[k] * other.at(k, j) for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, tuple(out))

    def apply(self, vec: list[int] | tuple[int, ...]) -> list[int]:
        if len(vec) != self.cols:
            raise DimensionMismatch(f"vector length {len(vec)} != cols {self.cols}")
        return [sum(self.row(i)[k] * vec[k] for k in range(self.cols)) for i in range(self.rows)]

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise DimensionMismatch("hstack needs equal row counts")
        rows = [list(self.row(i)) + list(other.row(i)) for i in range(self.rows)]
        return IntMatrix.from_rows(rows, cols=self.cols + other.cols)

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [json_int(v) for v in self.entries],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "IntMatrix":
        return cls(int(doc["rows"]), int(doc["cols"]), tuple(_as_int(v) for v in doc["entries"]))

    def __str__(self) -> str:
        if self.rows == 0 or self.cols == 0:
            return f"<{self.rows}x{self.cols} empty>"
        return "\n".join(" ".join(str(v) for v in self.row(i)) for i in range(self.rows))


def determinant(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant needs a square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(m.row(i)) for i in range(n)]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form M = left @ diag @ right.

    ``diagonal`` holds the min(rows, cols) diagonal entries: the invariant
    factors (each dividing the next) followed by zeros.  ``left`` and
    ``right`` are unimodular; ``left_inv`` and ``right_inv`` are their exact
    inverses (so left_inv @ M @ right_inv is the diagonal matrix), kept
    because integer linear solving needs them.
    """

    diagonal: tuple[int, ...]
    left: IntMatrix
    right: IntMatrix
    left_inv: IntMatrix
    right_inv: IntMatrix

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)

    def diag_matrix(self) -> IntMatrix:
        r, c = self.left.rows, self.right.rows
        ents = [0] * (r * c)
        for i, d in enumerate(self.diagonal):
            ents[i * c + i] = d
        return IntMatrix(r, c, tuple(ents))

    def cokernel(self) -> "FgAbGroup":
        """Z^rows / (column span of M), in canonical form."""
        free = self.left.rows - self.rank
        return FgAbGroup.from_divisors(*([0] * free), *(d for d in self.diagonal if d))


class _SnfWorker:
    """Row/column reduction tracking all four transforms.

    Invariant maintained by every elementary operation:
        left @ D @ right == M   and   left_inv @ M @ right_inv == D.
    """

    def __init__(self, m: IntMatrix):
        self.r, self.c = m.rows, m.cols
        self.d = [list(m.row(i)) for i in range(m.rows)]
        self.left = [[int(i == j) for j in range(self.r)] for i in range(self.r)]
        self.left_inv = [[int(i == j) for j in range(self.r)] for i in range(self.r)]
        self.right = [[int(i == j) for j in range(self.c)] for i in range(self.c)]
        self.right_inv = [[int(i == j) for j in range(self.c)] for i in range(self.c)]

    # row i += q * row k on D;  left undoes it on columns, left_inv repeats it
    def row_add(self, i: int, k: int, q: int) -> None:
        if q == 0:
            return
        d, li, lv = self.d, self.left, self.left_inv
        for j in range(self.c):
            d[i][j] += q * d[k][j]
        for a in range(self.r):
            li[a][k] -= q * li[a][i]
        for j in range(self.r):
            lv[i][j] += q * lv[k][j]

    def row_swap(self, i: int, k: int) -> None:
        if i == k:
            return
        self.d[i], self.d[k] = self.d[k], self.d[i]
        self.left_inv[i], self.left_inv[k] = self.left_inv[k], self.left_inv[i]
        for a in range(self.r):
            row = self.left[a]
            row[i], row[k] = row[k], row[i]

    def row_negate(self, i: int) -> None:
        self.d[i] = [-v for v in self.d[i]]
        self.left_inv[i] = [-v for v in self.left_inv[i]]
        for a in range(self.r):
            self.left[a][i] = -self.left[a][i]

    # col j += q * col k on D;  right undoes it on rows, right_inv repeats it
    def col_add(self, j: int, k: int, q: int) -> None:
        if q == 0:
            return
        d, ri, rv = self.d, self.right, self.right_inv
        for i in range(self.r):
            d[i][j] += q * d[i][k]
        for b in range(self.c):
            ri[k][b] -= q * ri[j][b]
        for i in range(self.c):
            rv[i][j] += q * rv[i][k]

    def col_swap(self, j: int, k: int) -> None:
        if j == k:
            return
        for i in range(self.r):
            row = self.d[i]
            row[j], row[k] = row[k], row[j]
        self.right[j], self.right[k] = self.right[k], self.right[j]
        for i in range(self.c):
            row = self.right_inv[i]
            row[j], row[k] = row[k], row[j]

    def reduce(self) -> None:
        d, r, c = self.d, self.r, self.c
        for t in range(min(r, c)):
            # smallest-nonzero-absolute-value pivot in the trailing block
            best = None
            for i in range(t, r):
                for j in range(t, c):
                    v = d[i][j]
                    if v != 0 and (best is None or abs(v) < abs(d[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return
            self.row_swap(t, best[0])
            self.col_swap(t, best[1])
            while True:
                if d[t][t] < 0:
                    self.row_negate(t)
                pivot = d[t][t]
                dirty = None
                for i in range(t + 1, r):
                    if d[i][t]:
                        self.row_add(i, t, -(d[i][t] // pivot))
                        if d[i][t]:
                            dirty = i
                if dirty is not None:
                    self.row_swap(t, dirty)
                    continue
                for j in range(t + 1, c):
                    if d[t][j]:
                        self.col_add(j, t, -(d[t][j] // pivot))
                        if d[t][j]:
                            dirty = j
                if dirty is not None:
                    self.col_swap(t, dirty)
                    continue
                # gcd sweep: pivot must divide the whole trailing block
                stray = None
                for i in range(t + 1, r):
                    for j in range(t + 1, c):
                        if d[i][j] % pivot:
                            stray = i
                            break
                    if stray is not None:
                        break
                if stray is None:
                    break
                self.row_add(t, stray, 1)


def smith_normal_form(m: IntMatrix) -> SnfResult:
    """Diagonalize an integer matrix by unimodular row/column operations.

    Returns diagonal entries satisfying the divisibility chain d1 | d2 | ...
    (then zeros) together with unimodular transforms reconstructing the
    input as left @ diag @ right.  Pivots are chosen by smallest nonzero
    absolute value with gcd row/column reduction, which keeps intermediate
    growth modest at the matrix sizes this library targets; exactness, not
    speed, is the contract.
    """
    w = _SnfWorker(m)
    w.reduce()
    diag = tuple(w.d[i][i] for i in range(min(w.r, w.c)))
    return SnfResult(
        diagonal=diag,
        left=IntMatrix.from_rows(w.left, cols=w.r),
        right=IntMatrix.from_rows(w.right, cols=w.c),
        left_inv=IntMatrix.from_rows(w.left_inv, cols=w.r),
        right_inv=IntMatrix.from_rows(w.right_inv, cols=w.c),
    )


def matrix_rank(m: IntMatrix) -> int:
    return smith_normal_form(m).rank


def integer_kernel_basis(m: IntMatrix) -> IntMatrix:
    """Basis of the integer solution lattice of M x = 0, as columns."""
    s = smith_normal_form(m)
    free_cols = [
        j
        for j in range(m.cols)
        if j >= len(s.diagonal) or s.diagonal[j] == 0
    ]
    rows = [[s.right_inv.at(i, j) for j in free_cols] for i in range(m.cols)]
    return IntMatrix.from_rows(rows, cols=len(free_cols))


def image_lattice_basis(m: IntMatrix) -> IntMatrix:
    """Basis of the lattice spanned by the columns of M, as columns."""
    s = smith_normal_form(m)
    cols = [j for j, d in enumerate(s.diagonal) if d != 0]
    rows = [[s.diagonal[j] * s.left.at(i, j) for j in cols] for i in range(m.rows)]
    return IntMatrix.from_rows(rows, cols=len(cols))


def _solve_prepared(s: SnfResult, cols: int, b) -> list[int] | None:
    y = s.left_inv.apply(list(b))
    z = [0] * cols
    for i, yi in enumerate(y):
        d = s.diagonal[i] if i < len(s.diagonal) else 0
        if d == 0:
            if yi != 0:
                return None
        else:
            if yi % d:
                return None
            z[i] = yi // d
    return s.right_inv.apply(z)


def solve_integer(m: IntMatrix, b: list[int] | tuple[int, ...]) -> list[int] | None:
    """One integer solution x of M x = b, or None if none exists."""
    if len(b) != m.rows:
        raise DimensionMismatch(f"vector length {len(b)} != rows {m.rows}")
    return _solve_prepared(smith_normal_form(m), m.cols, b)


def lattice_quotient(span_gens: IntMatrix, sub_gens: IntMatrix) -> "FgAbGroup":
    """L / S for the lattices generated by the given column sets.

    Every column of ``sub_gens`` must lie in the lattice L spanned by
    ``span_gens`` (raises NotASublattice otherwise).  The result is the
    quotient group in canonical form.
    """
    if span_gens.rows != sub_gens.rows:
        raise DimensionMismatch("lattice generators live in different ambient ranks")
    basis = image_lattice_basis(span_gens)
    t = basis.cols
    if t == 0:
        if not sub_gens.is_zero():
            raise NotASublattice("sub-lattice generators outside the zero lattice")
        return FgAbGroup.trivial()
    prepared = smith_normal_form(basis)
    coeff_cols = []
    for j in range(sub_gens.cols):
        x = _solve_prepared(prepared, basis.cols, sub_gens.column(j))
        if x is None:
            raise NotASublattice("generator not contained in the ambient lattice")
        coeff_cols.append(x)
    rows = [[coeff_cols[j][i] for j in range(len(coeff_cols))] for i in range(t)]
    coeffs = IntMatrix.from_rows(rows, cols=len(coeff_cols))
    return smith_normal_form(coeffs).cokernel()


# ---------------------------------------------------------------------------
# Finitely generated abelian groups


@dataclass(frozen=True)
class FgAbGroup:
    """Finitely generated abelian group in invariant-factor canonical form.

    ``rank`` counts the free Z summands; ``invariant_factors`` is the
    torsion chain (each >= 2, each dividing the next).  The constructor
    rejects non-canonical input; use :meth:`from_divisors` to canonicalize
    an arbitrary list of cyclic orders.
    """

    rank: int = 0
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        facs = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", facs)
        prev = None
        for d in facs:
            if d < 2:
                raise ValueError(f"invariant factor {d} < 2; canonicalize with from_divisors")
            if prev is not None and d % prev:
                raise ValueError(f"broken divisibility chain: {prev} does not divide {d}")
            prev = d

    @classmethod
    def trivial(cls) -> "FgAbGroup":
        return cls(0, ())

    @classmethod
    def free(cls, rank: int) -> "FgAbGroup":
        return cls(rank, ())

    @classmethod
    def cyclic(cls, n: int) -> "FgAbGroup":
        """Z/n, with Z/0 = Z and Z/1 = 0."""
        return cls.from_divisors(n)

    @classmethod
    def from_divisors(cls, *divisors: int) -> "FgAbGroup":
        """Canonicalize (+) Z/d over the given orders.

        Zeros become free summands, units are dropped, signs are ignored,
        and the remaining torsion is merged into a divisibility chain by
        repeated (gcd, lcm) exchanges (the Chinese-remainder shuffle).
        """
        rank = 0
        tors: list[int] = []
        for d in divisors:
            d = abs(int(d))
            if d == 0:
                rank += 1
            elif d > 1:
                tors.append(d)
        changed = True
        while changed:
            changed = False
            for i in range(len(tors)):
                for j in range(i + 1, len(tors)):
                    a, b = tors[i], tors[j]
                    if b % a:
                        g = gcd(a, b)
                        tors[i], tors[j] = g, a // g * b
                        changed = True
        return cls(rank, tuple(t for t in tors if t > 1))

    # -- structure -----------------------------------------------------

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.invariant_factors

    @property
    def torsion_order(self) -> int:
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    def primary_decomposition(self) -> tuple[int, ...]:
        """Prime-power cyclic orders (for display); rank is unchanged."""
        out: list[int] = []
        for d in self.invariant_factors:
            f = 2
            while f * f <= d:
                if d % f == 0:
                    q = 1
                    while d % f == 0:
                        d //= f
                        q *= f
                    out.append(q)
                f += 1
            if d > 1:
                out.append(d)
        return tuple(sorted(out))

    # -- operations ------------------------------------------------------

    def direct_sum(self, other: "FgAbGroup") -> "FgAbGroup":
        """A (+) B: ranks add, torsion re-canonicalized into a chain."""
        return FgAbGroup.from_divisors(
            *([0] * (self.rank + other.rank)),
            *self.invariant_factors,
            *other.invariant_factors,
        )

    def repeated_sum(self, copies: int) -> "FgAbGroup":
        """Direct sum of ``copies`` copies of this group."""
        if copies < 0:
            raise ValueError("copies must be nonnegative")
        return FgAbGroup.from_divisors(
            *([0] * (self.rank * copies)),
            *(d for d in self.invariant_factors for _ in range(copies)),
        )

    def tensor(self, other: "FgAbGroup") -> "FgAbGroup":
        """A (x) B over Z.

        Bilinear over direct sums with Z (x) G = G and
        Z/a (x) Z/b = Z/gcd(a, b).
        """
        divs: list[int] = [0] * (self.rank * other.rank)
        divs += [b for b in other.invariant_factors] * self.rank
        divs += [a for a in self.invariant_factors] * other.rank
        divs += [gcd(a, b) for a in self.invariant_factors for b in other.invariant_factors]
        return FgAbGroup.from_divisors(*divs)

    def tor(self, other: "FgAbGroup") -> "FgAbGroup":
        """Tor_1(A, B): vanishes against free groups, Z/gcd on cyclic pairs."""
        divs = [gcd(a, b) for a in self.invariant_factors for b in other.invariant_factors]
        return FgAbGroup.from_divisors(*divs)

    def hom(self, other: "FgAbGroup") -> "FgAbGroup":
        """Hom(A, B): Hom(Z, G) = G, Hom(Z/a, Z) = 0, Hom(Z/a, Z/b) = Z/gcd."""
        divs: list[int] = [0] * (self.rank * other.rank)
        divs += [b for b in other.invariant_factors] * self.rank
        divs += [gcd(a, b) for a in self.invariant_factors for b in other.invariant_factors]
        return FgAbGroup.from_divisors(*divs)

    def ext(self, other: "FgAbGroup") -> "FgAbGroup":
        """Ext^1(A, B): Ext(Z, G) = 0, Ext(Z/a, Z) = Z/a, Ext(Z/a, Z/b) = Z/gcd."""
        divs = [a for a in self.invariant_factors] * other.rank
        divs += [gcd(a, b) for a in self.invariant_factors for b in other.invariant_factors]
        return FgAbGroup.from_divisors(*divs)

    def is_isomorphic(self, other: "FgAbGroup") -> bool:
        """True exactly when canonical forms agree field by field."""
        return self == other

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        return {
            "rank": json_int(self.rank),
            "torsion": [json_int(d) for d in self.invariant_factors],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "FgAbGroup":
        return cls(_as_int(doc["rank"]), tuple(_as_int(d) for d in doc.get("torsion", ())))

    def __str__(self) -> str:
        parts: list[str] = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts += [f"Z/{d}" for d in self.invariant_factors]
        return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# Homology of chain complexes


def _validate_complex(boundaries: list[IntMatrix]) -> None:
    for i in range(len(boundaries) - 1):
        if boundaries[i].cols != boundaries[i + 1].rows:
            raise DimensionMismatch(
                f"boundary {i + 2} has {boundaries[i + 1].rows} rows but boundary "
                f"{i + 1} has {boundaries[i].cols} columns"
            )
        if not (boundaries[i] @ boundaries[i + 1]).is_zero():
            raise NotAComplex(f"boundary {i + 1} o boundary {i + 2} is nonzero")


def homology_of_complex(boundaries: list[IntMatrix]) -> list[FgAbGroup]:
    """Homology groups of an integer chain complex.

    ``boundaries[m]`` is the map from (m+1)-chains to m-chains, so the
    complex has len(boundaries) + 1 degrees; a complex concentrated in a
    single degree k is expressed by a k x 0 boundary.  Returns H_m in
    canonical form for every degree:

        H_m = Z^(dim_m - rank d_m - rank d_(m+1))  (+)  torsion(d_(m+1)),

    the torsion read off the invariant factors of the incoming boundary.
    """
    if not boundaries:
        return []
    _validate_complex(boundaries)
    dims = [boundaries[0].rows] + [b.cols for b in boundaries]
    snfs = [smith_normal_form(b) for b in boundaries]
    out: list[FgAbGroup] = []
    for m in range(len(dims)):
        rank_out = snfs[m - 1].rank if m >= 1 else 0
        rank_in = snfs[m].rank if m < len(boundaries) else 0
        free = dims[m] - rank_out - rank_in
        torsion = snfs[m].diagonal if m < len(boundaries) else ()
        out.append(FgAbGroup.from_divisors(*([0] * free), *(d for d in torsion if d)))
    return out


def cohomology_of_cochain_complex(coboundaries: list[IntMatrix]) -> list[FgAbGroup]:
    """Cohomology of a cochain complex (differentials raise the degree).

    ``coboundaries[m]`` maps degree-m cochains to degree-(m+1) cochains.
    Reading the complex backwards turns it into a chain complex, so this is
    a thin wrapper over :func:`homology_of_complex`.
    """
    if not coboundaries:
        return []
    return list(reversed(homology_of_complex(list(reversed(coboundaries)))))


def dual_complex(boundaries: list[IntMatrix]) -> list[IntMatrix]:
    """Transpose a chain complex into the Hom(-, Z) cochain complex."""
    return [b.transpose() for b in boundaries]
