"""Exact rational and integer matrices.

All entries are ``fractions.Fraction`` (resp. ``int``), so every operation in
this module is exact.  Matrices are immutable; methods return new objects.
Row-reduction uses plain Gauss elimination over the rationals, which is
canonical (RREF) and therefore suitable for byte-stable reports.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import NonSquareError, SingularMatrixError

Vec = tuple[Fraction, ...]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot build an exact rational from {x!r}")


def vec(entries: Iterable) -> Vec:
    return tuple(_frac(x) for x in entries)


def zero_vec(n: int) -> Vec:
    return (Fraction(0),) * n


def unit_vec(n: int, i: int) -> Vec:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def vec_add(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vec_sub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vec_scale(c, a: Vec) -> Vec:
    c = _frac(c)
    return tuple(c * x for x in a)


def vec_neg(a: Vec) -> Vec:
    return tuple(-x for x in a)


def dot(a: Vec, b: Vec) -> Fraction:
    return sum((x * y for x, y in zip(a, b, strict=True)), Fraction(0))


def is_zero_vec(a: Vec) -> bool:
    return all(x == 0 for x in a)


class RatMatrix:
    """Immutable matrix over the rationals."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        rows = tuple(tuple(_frac(x) for x in row) for row in entries)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", len(rows[0]) if rows else 0)

    def __setattr__(self, *_):
        raise AttributeError("RatMatrix is immutable")

    # -- constructors -------------------------------------------------
    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r: int, c: int) -> "RatMatrix":
        return cls([[0] * c for _ in range(r)])

    @classmethod
    def from_rows(cls, rows: Sequence[Vec]) -> "RatMatrix":
        return cls([list(r) for r in rows])

    @classmethod
    def from_cols(cls, cols: Sequence[Vec]) -> "RatMatrix":
        if not cols:
            return cls([])
        n = len(cols[0])
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(n)])

    @classmethod
    def diag(cls, values: Sequence) -> "RatMatrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def block_diag(cls, blocks: Sequence["RatMatrix"]) -> "RatMatrix":
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        out = [[Fraction(0)] * m for _ in range(n)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[r0 + i][c0 + j] = b.entries[i][j]
            r0 += b.rows
            c0 += b.cols
        return cls(out)

    # -- basics --------------------------------------------------------
    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Vec:
        return self.entries[i]

    def col(self, j: int) -> Vec:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def row_list(self) -> list[Vec]:
        return list(self.entries)

    def col_list(self) -> list[Vec]:
        return [self.col(j) for j in range(self.cols)]

    def __eq__(self, other) -> bool:
        return isinstance(other, RatMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"RatMatrix[{body}]"

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def require_square(self) -> None:
        if not self.is_square:
            raise NonSquareError(f"{self.rows}x{self.cols} matrix is not square")

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def is_identity(self) -> bool:
        return self.is_square and self == RatMatrix.identity(self.rows)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.entries for x in row)

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        return RatMatrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries, strict=True)
            ]
        )

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        return RatMatrix(
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries, strict=True)
            ]
        )

    def __neg__(self) -> "RatMatrix":
        return RatMatrix([[-a for a in row] for row in self.entries])

    def scale(self, c) -> "RatMatrix":
        c = _frac(c)
        return RatMatrix([[c * a for a in row] for row in self.entries])

    def __mul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        bt = [other.col(j) for j in range(other.cols)]
        return RatMatrix(
            [[dot(row, c) for c in bt] for row in self.entries]
        )

    def apply(self, v: Vec) -> Vec:
        if len(v) != self.cols:
            raise ValueError("shape mismatch in matrix-vector product")
        return tuple(dot(row, v) for row in self.entries)

    def __pow__(self, n: int) -> "RatMatrix":
        self.require_square()
        if n < 0:
            return self.inverse() ** (-n)
        result = RatMatrix.identity(self.rows)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def transpose(self) -> "RatMatrix":
        return RatMatrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def trace(self) -> Fraction:
        self.require_square()
        return sum((self.entries[i][i] for i in range(self.rows)), Fraction(0))

    def hstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        return RatMatrix([list(r1) + list(r2) for r1, r2 in zip(self.entries, other.entries)])

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RatMatrix":
        return RatMatrix([[self.entries[i][j] for j in cols] for i in rows])

    # -- elimination ---------------------------------------------------
    def rref(self) -> tuple["RatMatrix", list[int]]:
        """Reduced row echelon form and the list of pivot columns."""
        m = [list(row) for row in self.entries]
        nr, nc = self.rows, self.cols
        pivots: list[int] = []
        r = 0
        for c in range(nc):
            pr = None
            for i in range(r, nr):
                if m[i][c] != 0:
                    pr = i
                    break
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            p = m[r][c]
            if p != 1:
                m[r] = [x / p for x in m[r]]
            for i in range(nr):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == nr:
                break
        return RatMatrix(m), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self) -> Fraction:
        self.require_square()
        m = [list(row) for row in self.entries]
        n = self.rows
        det = Fraction(1)
        for c in range(n):
            pr = None
            for i in range(c, n):
                if m[i][c] != 0:
                    pr = i
                    break
            if pr is None:
                return Fraction(0)
            if pr != c:
                m[c], m[pr] = m[pr], m[c]
                det = -det
            p = m[c][c]
            det *= p
            inv = 1 / p
            for i in range(c + 1, n):
                if m[i][c] != 0:
                    f = m[i][c] * inv
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return det

    def inverse(self) -> "RatMatrix":
        self.require_square()
        n = self.rows
        aug = self.hstack(RatMatrix.identity(n))
        red, pivots = aug.rref()
        if len(pivots) < n or pivots[:n] != list(range(n)):
            raise SingularMatrixError("matrix is singular")
        return red.submatrix(range(n), range(n, 2 * n))

    def nullspace(self) -> list[Vec]:
        """Canonical basis of the right kernel {v : Mv = 0}."""
        red, pivots = self.rref()
        nc = self.cols
        free = [c for c in range(nc) if c not in pivots]
        basis = []
        for f in free:
            v = [Fraction(0)] * nc
            v[f] = Fraction(1)
            for r, c in enumerate(pivots):
                v[c] = -red.entries[r][f]
            basis.append(tuple(v))
        return basis

    def column_space(self) -> list[Vec]:
        """Canonical (RREF-of-transpose) basis of the column span."""
        red, pivots = self.transpose().rref()
        return [red.row(i) for i in range(len(pivots))]

    def solve(self, b: Vec) -> Vec | None:
        """One solution of Mx = b, or None if inconsistent."""
        nc = self.cols
        aug = self.hstack(RatMatrix.from_cols([b]))
        red, pivots = aug.rref()
        if nc in pivots:
            return None
        x = [Fraction(0)] * nc
        for r, c in enumerate(pivots):
            x[c] = red.entries[r][nc]
        return tuple(x)

    # -- conversions ---------------------------------------------------
    def to_int(self) -> "IntMatrix":
        if not self.is_integral():
            raise ValueError("matrix has non-integer entries")
        return IntMatrix([[int(x) for x in row] for row in self.entries])

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.entries]

    @classmethod
    def from_json(cls, data) -> "RatMatrix":
        return cls(data)


class IntMatrix:
    """Immutable matrix over the integers (arbitrary precision)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", len(rows[0]) if rows else 0)

    def __setattr__(self, *_):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r: int, c: int) -> "IntMatrix":
        return cls([[0] * c for _ in range(r)])

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        return cls([list(r) for r in rows])

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"IntMatrix[{body}]"

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        cols = [[other.entries[i][j] for i in range(other.rows)] for j in range(other.cols)]
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, c)) for c in cols] for row in self.entries]
        )

    def transpose(self) -> "IntMatrix":
        return IntMatrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def row_list(self) -> list[tuple[int, ...]]:
        return list(self.entries)

    def diagonal(self) -> list[int]:
        return [self.entries[i][i] for i in range(min(self.rows, self.cols))]

    def to_rat(self) -> RatMatrix:
        return RatMatrix(self.entries)

    def det(self) -> int:
        d = self.to_rat().det()
        return int(d)

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.entries]


def subspace_basis(vectors: Iterable[Vec], dim: int) -> list[Vec]:
    """Canonical (RREF-row) basis of the span of the given vectors in Q^dim."""
    vecs = [v for v in vectors if not is_zero_vec(v)]
    if not vecs:
        return []
    red, pivots = RatMatrix.from_rows(vecs).rref()
    return [red.row(i) for i in range(len(pivots))]


def subspace_sum(a: list[Vec], b: list[Vec], dim: int) -> list[Vec]:
    return subspace_basis(list(a) + list(b), dim)


def subspace_contains(basis: list[Vec], v: Vec) -> bool:
    if is_zero_vec(v):
        return True
    if not basis:
        return False
    return RatMatrix.from_cols(basis).solve(v) is not None


def subspace_intersect(a: list[Vec], b: list[Vec], dim: int) -> list[Vec]:
    """Canonical basis of span(a) ∩ span(b)."""
    if not a or not b:
        return []
    m = RatMatrix.from_cols(list(a) + list(b))
    inter = []
    for k in m.nullspace():
        v = zero_vec(dim)
        for c, x in zip(a, k[: len(a)]):
            v = vec_add(v, vec_scale(x, c))
        inter.append(v)
    return subspace_basis(inter, dim)


def subspace_equations(basis: list[Vec], dim: int) -> RatMatrix:
    """A matrix E with span(basis) = ker(E) (rows are linear equations)."""
    if not basis:
        return RatMatrix.identity(dim)
    rows = RatMatrix.from_rows(basis).nullspace()
    if not rows:
        return RatMatrix.zeros(0, dim)
    return RatMatrix.from_rows(rows)
