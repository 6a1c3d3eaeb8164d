"""Exact matrices, permutations and the Bruhat factorisation.

Everything here works over the rationals with Python integers and
``fractions.Fraction``; nothing is ever rounded.  Matrix entries are
addressed 0-based like any Python sequence, while permutations act on
``{1, ..., n}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import NonUnimodularError, SingularMatrixError, ValidationError

__all__ = [
    "Matrix",
    "Permutation",
    "BruhatFactors",
    "determinant",
    "rank",
    "inverse_exact",
    "permutation_matrix",
    "bruhat_column_permutation",
    "bruhat_row_permutation",
    "bruhat_factorize",
    "is_permutation_times_upper",
    "coxeter_from_cartan",
]


def _norm(x):
    if isinstance(x, bool):
        raise ValidationError("booleans are not matrix entries")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, str):
        return _norm(Fraction(x))
    raise ValidationError(f"inexact or unsupported matrix entry {x!r}")


class Matrix:
    """Immutable dense matrix with exact rational entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(_norm(x) for x in r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValidationError("ragged matrix rows")
        self.rows = rows

    @classmethod
    def _trusted(cls, rows) -> Matrix:
        """Wrap rows of plain ints built inside the package, skipping validation."""
        m = cls.__new__(cls)
        m.rows = tuple(tuple(r) for r in rows)
        return m

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> Matrix:
        ncols = nrows if ncols is None else ncols
        return cls([[0] * ncols for _ in range(nrows)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def tolist(self) -> list[list]:
        return [list(r) for r in self.rows]

    def __eq__(self, other):
        if isinstance(other, Matrix):
            return self.rows == other.rows
        if isinstance(other, (list, tuple)):
            return self.rows == tuple(tuple(r) for r in other)
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Matrix({self.tolist()!r})"

    def __str__(self):
        cells = [[str(x) for x in r] for r in self.rows]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)

    @property
    def T(self) -> Matrix:
        return Matrix(zip(*self.rows)) if self.rows else Matrix([])

    def __neg__(self) -> Matrix:
        return Matrix([[-x for x in r] for r in self.rows])

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise ValidationError("shape mismatch")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise ValidationError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append([sum(a * c[k] for k, a in nz) for c in cols])
        return Matrix(out)

    def apply(self, vector: Sequence) -> tuple:
        """Matrix-vector product ``self @ vector``."""
        if len(vector) != self.ncols:
            raise ValidationError("dimension mismatch")
        return tuple(_norm(sum(a * v for a, v in zip(r, vector))) for r in self.rows)

    def is_integral(self) -> bool:
        return all(isinstance(x, int) for r in self.rows for x in r)

    def is_upper_triangular(self) -> bool:
        return all(self.rows[i][j] == 0 for i in range(self.nrows) for j in range(min(i, self.ncols)))

    def is_lower_triangular(self) -> bool:
        return self.T.is_upper_triangular()

    def diagonal(self) -> tuple:
        return tuple(self.rows[i][i] for i in range(min(self.shape)))

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.rows]

    @classmethod
    def from_json(cls, data) -> Matrix:
        if isinstance(data, (str, bytes)):
            data = json.loads(data)
        if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
            raise ValidationError("matrix JSON must be an array of arrays")
        rows = []
        for r in data:
            row = []
            for x in r:
                if not isinstance(x, str):
                    raise ValidationError(f"matrix entries must be decimal strings, got {x!r}")
                try:
                    row.append(Fraction(x))
                except ValueError as exc:
                    raise ValidationError(f"bad matrix entry {x!r}") from exc
            rows.append(row)
        return cls(rows)


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{1, ..., n}``; ``images[i - 1]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValidationError(f"not a permutation of 1..{len(images)}: {images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_mapping(cls, mapping: dict[int, int]) -> Permutation:
        n = len(mapping)
        return cls(tuple(mapping[i] for i in range(1, n + 1)))

    def __len__(self):
        return len(self.images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self.images):
            raise IndexError(f"{i} outside 1..{len(self.images)}")
        return self.images[i - 1]

    def __iter__(self):
        return iter(self.images)

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def compose(self, other: Permutation) -> Permutation:
        """``self ∘ other``, i.e. apply ``other`` first."""
        if len(other) != len(self):
            raise ValidationError("size mismatch")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def conjugate_by(self, tau: Permutation) -> Permutation:
        """``tau⁻¹ ∘ self ∘ tau``."""
        return tau.inverse().compose(self.compose(tau))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images, start=1))

    def as_dict(self) -> dict[int, int]:
        return {i: j for i, j in enumerate(self.images, start=1)}

    def __repr__(self):
        body = ", ".join(f"{i}→{j}" for i, j in enumerate(self.images, start=1))
        return f"Permutation({body})"


@dataclass(frozen=True)
class BruhatFactors:
    u1: Matrix
    p: Permutation
    u2: Matrix

    def product(self) -> Matrix:
        return self.u1 @ permutation_matrix(self.p) @ self.u2


def _require_square(m: Matrix) -> int:
    if not m.is_square():
        raise ValidationError(f"square matrix required, got shape {m.shape}")
    return m.nrows




def _int_vector(v: Sequence) -> list[int]:
    """Scale a rational vector to a primitive integer vector (same span)."""
    den = 1
    for x in v:
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    w = [int(x * den) for x in v]
    g = 0
    for x in w:
        g = gcd(g, x)
    return [x // g for x in w] if g > 1 else w


def _integral_rows(m: Matrix) -> tuple[list[list[int]], list[int]]:
    """Rows of ``m`` scaled to integers, and the per-row scale factors."""
    rows, scales = [], []
    for r in m.rows:
        den = 1
        for x in r:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        rows.append([int(x * den) for x in r])
        scales.append(den)
    return rows, scales


def determinant(m: Matrix):
    """Exact determinant by Bareiss fraction-free elimination."""
    n = _require_square(m)
    if n == 0:
        return 1
    a, scales = _integral_rows(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        akk, rk = a[k][k], a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (akk * ri[j] - aik * rk[j]) // prev
        prev = akk
    den = 1
    for s in scales:
        den *= s
    return _norm(Fraction(sign * a[n - 1][n - 1], den))


def _insert(basis: dict[int, list[int]], v: list[int]):
    """Reduce an integer vector against an echelon basis keyed by leading index.

    Stores the remainder and returns its leading index, or returns None when
    ``v`` already lies in the span.
    """
    n = len(v)
    lead = 0
    while True:
        while lead < n and v[lead] == 0:
            lead += 1
        if lead == n:
            return None
        b = basis.get(lead)
        if b is None:
            basis[lead] = v
            return lead
        x, y = b[lead], v[lead]
        v = [x * vi - y * bi for vi, bi in zip(v, b)]
        g = 0
        for vi in v:
            g = gcd(g, vi)
        if g > 1:
            v = [vi // g for vi in v]


def rank(vectors: Sequence[Sequence]) -> int:
    """Exact rank of a family of equal-length rational vectors."""
    basis: dict[int, list[int]] = {}
    return sum(_insert(basis, _int_vector(v)) is not None for v in vectors)


def inverse_exact(m: Matrix) -> Matrix:
    """Exact inverse by fraction-free Gauss-Jordan elimination on ``[m | I]``.

    All intermediate values are integers; the result is integral whenever
    ``determinant(m)`` is +1 or -1.
    """
    n = _require_square(m)
    if m.is_lower_triangular() and m.is_integral() and all(x == 1 for x in m.diagonal()):
        return _unitriangular_inverse(m)
    a, scales = _integral_rows(m)
    aug = [r + [int(i == j) for j in range(n)] for i, r in enumerate(a)]
    prev = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if aug[i][k] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        aug[k], aug[piv] = aug[piv], aug[k]
        rk = aug[k]
        akk = rk[k]
        for i in range(n):
            if i == k:
                continue
            ri = aug[i]
            aik = ri[k]
            new = []
            for x, y in zip(ri, rk):
                q, r = divmod(akk * x - aik * y, prev)
                assert r == 0, "Bareiss division must be exact"
                new.append(q)
            aug[i] = new
        prev = akk
    # Left block is now diagonal D with E·(S m) = D, so m⁻¹ = D⁻¹ E S.
    return Matrix(
        [[Fraction(aug[i][n + j] * scales[j], aug[i][i]) for j in range(n)] for i in range(n)]
    )


def _unitriangular_inverse(m: Matrix) -> Matrix:
    """Forward substitution in integers, one column of the inverse at a time."""
    n = m.nrows
    a = m.rows
    below = [[(k, a[i][k]) for k in range(i) if a[i][k]] for i in range(n)]
    cols = []
    for c in range(n):
        x = [0] * n
        for i in range(c, n):
            x[i] = (i == c) - sum(v * x[k] for k, v in below[i])
        cols.append(x)
    return Matrix([[cols[c][i] for c in range(n)] for i in range(n)])


def permutation_matrix(p: Permutation) -> Matrix:
    """0/1 matrix with a one at ``(i, p(i))`` for every row ``i``."""
    n = len(p)
    return Matrix([[int(p(i) == j) for j in range(1, n + 1)] for i in range(1, n + 1)])


def _pivot_arrival(vectors: Sequence[Sequence]) -> list[int]:
    """Insert vectors in order; return the new leading index each one contributes.

    Every vector must be independent of its predecessors.
    """
    basis: dict[int, list[int]] = {}
    out = []
    for v in vectors:
        lead = _insert(basis, _int_vector(v))
        if lead is None:
            raise SingularMatrixError("matrix is singular")
        out.append(lead)
    return out


def bruhat_column_permutation(m: Matrix) -> Permutation:
    """Column permutation of the Bruhat permutation matrix of ``m``.

    ``p_c(i)`` is the largest ``j`` such that column ``i`` restricted to rows
    ``j..n`` is not in the span of the columns to its left (same rows).  The
    set of such columns for rows ``j..n`` is the pivot set of an echelon
    basis of that row space, so adding rows bottom-up, each row contributes
    exactly one new pivot column ``i`` and ``p_c(i)`` is that row.
    """
    n = _require_square(m)
    images = [0] * n
    arrivals = _pivot_arrival([m.rows[j] for j in range(n - 1, -1, -1)])
    for step, col in enumerate(arrivals):
        images[col] = n - step
    return Permutation(tuple(images))


def bruhat_row_permutation(m: Matrix) -> Permutation:
    """Row permutation of the Bruhat permutation matrix of ``m``.

    ``p_r(i)`` is the smallest ``j`` such that row ``i`` restricted to columns
    ``1..j`` is not in the span of the rows below it (same columns).  Dual
    to :func:`bruhat_column_permutation`: columns are added left to right
    and rows are ordered from the bottom.
    """
    n = _require_square(m)
    images = [0] * n
    arrivals = _pivot_arrival([m.column(j)[::-1] for j in range(n)])
    for j, lead in enumerate(arrivals):
        images[n - 1 - lead] = j + 1
    return Permutation(tuple(images))


def bruhat_factorize(m: Matrix) -> BruhatFactors:
    """Factor ``m = u1 · P · u2`` with ``u1``, ``u2`` upper triangular.

    Columns are swept left to right.  The lowest nonzero entry of the current
    column is the pivot; entries above it are cleared by adding multiples of
    the pivot row to higher rows, and entries to its right by adding
    multiples of the pivot column to later columns.  Both are upper
    triangular operations, recorded in ``u1`` and ``u2``.
    """
    n = _require_square(m)
    x = [[Fraction(v) for v in r] for r in m.rows]
    u1 = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    u2 = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    images = [0] * n
    for j in range(n):
        r = next((i for i in range(n - 1, -1, -1) if x[i][j] != 0), None)
        if r is None:
            raise SingularMatrixError("matrix is singular")
        pivot = x[r][j]
        xr = x[r]
        for i in range(r):
            c = x[i][j] / pivot
            if c:
                # row_i -= c·row_r, compensated by col_r(u1) += c·col_i(u1)
                xi = x[i]
                for k in range(j, n):
                    xi[k] -= c * xr[k]
                for row in u1:
                    row[r] += c * row[i]
        for k in range(j + 1, n):
            c = xr[k] / pivot
            if c:
                # col_k -= c·col_j, compensated by row_j(u2) += c·row_k(u2)
                xr[k] = Fraction(0)
                u2j, u2k = u2[j], u2[k]
                for t in range(n):
                    u2j[t] += c * u2k[t]
        images[r] = j + 1
        # absorb the pivot value into u2 so that the middle factor is a 0/1 matrix
        u2[j] = [v * pivot for v in u2[j]]
    return BruhatFactors(Matrix(u1), Permutation(tuple(images)), Matrix(u2))


def is_permutation_times_upper(m: Matrix) -> Permutation | None:
    """Detect ``m = P · U`` with ``U`` upper triangular and invertible.

    Returns the map ``i ↦ column of the leading nonzero entry of row i``
    when that map is a bijection (then reordering rows makes ``m`` upper
    triangular with nonzero diagonal); returns None otherwise.
    """
    n = _require_square(m)
    leads = []
    for r in m.rows:
        j = next((j for j, v in enumerate(r) if v != 0), None)
        if j is None:
            return None
        leads.append(j + 1)
    if len(set(leads)) != n:
        return None
    return Permutation(tuple(leads))


def coxeter_from_cartan(omega: Matrix) -> Matrix:
    """``-omegaᵀ · omega⁻¹`` for a unimodular integer matrix.

    Unitriangular 0/1 matrices whose columns are blocks of consecutive ones
    (Cartan matrices of linear Nakayama algebras) take an O(n²) route.  Other
    lower unitriangular matrices (any natural labelling) solve
    ``C · omega = -omegaᵀ`` by back substitution in integers; everything
    else goes through :func:`inverse_exact`.
    """
    n = _require_square(omega)
    a = omega.rows
    spans = _interval_columns(omega)
    if spans is not None:
        return _coxeter_interval_columns(spans)
    if omega.is_lower_triangular() and all(a[i][i] == 1 for i in range(n)) and omega.is_integral():
        out = []
        for r in range(n):
            # row r of C solves x · omega = -(column r of omega)
            x = [0] * n
            for j in range(n - 1, -1, -1):
                x[j] = -a[j][r] - sum(x[k] * a[k][j] for k in range(j + 1, n) if a[k][j])
            out.append(x)
        return Matrix._trusted(out)
    det = determinant(omega)
    if det not in (1, -1):
        raise NonUnimodularError(det)
    return -(omega.T @ inverse_exact(omega))


def _interval_columns(m: Matrix) -> list[int] | None:
    """Last row of each column if column j is ones exactly on rows j..hi, else None."""
    n = m.nrows
    his = []
    for j in range(n):
        col = m.column(j)
        hi = j
        while hi + 1 < n and col[hi + 1] == 1:
            hi += 1
        if col[j] != 1 or any(col[:j]) or any(col[hi + 1 :]):
            return None
        his.append(hi)
    return his


def _coxeter_interval_columns(his: list[int]) -> Matrix:
    n = len(his)
    # inverse, column by column: x_r = e_c[r] - sum of x_i over i < r with his[i] >= r
    inv_cols = []
    for c in range(n):
        x = [0] * n
        expire = [0] * (n + 1)
        running = 0
        for r in range(n):
            running -= expire[r]
            x[r] = (r == c) - running
            running += x[r]
            expire[his[r] + 1] += x[r]
        inv_cols.append(x)
    # row r of omegaᵀ is the indicator of rows r..his[r]; sum those rows of the inverse
    prefix = [list(accumulate(col, initial=0)) for col in inv_cols]
    return Matrix._trusted([[pre[r] - pre[his[r] + 1] for pre in prefix] for r in range(n)])
