"""Lie algebras over Q given by structure constants.

The bracket tensor c[i][j][k] means [e_i, e_j] = sum_k c[i][j][k] e_k.
Antisymmetry and Jacobi are checked by validate(); nilpotency is certified
by computing the lower central series with exact bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import JacobiViolation, NotNilpotent, NotSolvable
from ..exactlin import (
    RatMatrix,
    Vec,
    is_zero_vec,
    subspace_basis,
    subspace_sum,
    vec,
    zero_vec,
)


@dataclass(frozen=True)
class CentralSeries:
    """Lower central series gamma_1 >= gamma_2 >= ... >= 0, with exact bases."""

    layers: tuple[tuple[Vec, ...], ...]
    layer_dims: tuple[int, ...]

    @property
    def nilpotency_class(self) -> int:
        return len(self.layer_dims) - 2  # dims end with ..., 0

    def quotient_dims(self) -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.layer_dims, self.layer_dims[1:]))


class LieAlgebra:
    """Structure-constant Lie algebra over the rationals (exact)."""

    __slots__ = ("dim", "c")

    def __init__(self, dim: int, brackets: dict[tuple[int, int], Sequence] | None = None):
        """brackets maps (i, j) with i < j to the coordinate vector of [e_i, e_j]."""
        object.__setattr__(self, "dim", dim)
        table = [[zero_vec(dim) for _ in range(dim)] for _ in range(dim)]
        if brackets:
            for (i, j), val in brackets.items():
                if not (0 <= i < j < dim):
                    raise ValueError(f"bracket key ({i}, {j}) must satisfy 0 <= i < j < dim")
                v = vec(val)
                if len(v) != dim:
                    raise ValueError("bracket value has wrong length")
                table[i][j] = v
                table[j][i] = tuple(-x for x in v)
        object.__setattr__(self, "c", tuple(tuple(row) for row in table))

    def __setattr__(self, *_):
        raise AttributeError("LieAlgebra is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, LieAlgebra) and self.dim == other.dim and self.c == other.c

    def __hash__(self):
        return hash((self.dim, self.c))

    # -- bracket ---------------------------------------------------------
    def bracket(self, x: Vec, y: Vec) -> Vec:
        out = [Fraction(0)] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                cij = self.c[i][j]
                f = xi * yj
                for k, ck in enumerate(cij):
                    if ck != 0:
                        out[k] += f * ck
        return tuple(out)

    def ad(self, x: Vec) -> RatMatrix:
        cols = [self.bracket(x, tuple(Fraction(1 if i == j else 0) for i in range(self.dim))) for j in range(self.dim)]
        return RatMatrix.from_cols(cols)

    def basis_vector(self, i: int) -> Vec:
        return tuple(Fraction(1 if j == i else 0) for j in range(self.dim))

    # -- axioms ----------------------------------------------------------
    def check_jacobi(self) -> None:
        n = self.dim
        basis = [self.basis_vector(i) for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    s = vec_sum(
                        self.bracket(basis[i], self.c[j][k]),
                        self.bracket(basis[j], self.c[k][i]),
                        self.bracket(basis[k], self.c[i][j]),
                    )
                    if not is_zero_vec(s):
                        raise JacobiViolation(i, j, k)

    def lower_central_series(self) -> list[list[Vec]]:
        """gamma_1 = g, gamma_{k+1} = [g, gamma_k]; computed until it stabilises."""
        n = self.dim
        basis = [self.basis_vector(i) for i in range(n)]
        layers = [subspace_basis(basis, n)]
        while True:
            prev = layers[-1]
            nxt_gens = [self.bracket(b, w) for b in basis for w in prev]
            nxt = subspace_basis(nxt_gens, n)
            if len(nxt) == len(prev):
                layers.append(nxt)
                break
            layers.append(nxt)
            if not nxt:
                break
        return layers

    def derived_series(self) -> list[list[Vec]]:
        n = self.dim
        series = [subspace_basis([self.basis_vector(i) for i in range(n)], n)]
        while True:
            prev = series[-1]
            nxt = subspace_basis([self.bracket(a, b) for a in prev for b in prev], n)
            series.append(nxt)
            if len(nxt) == len(prev) or not nxt:
                break
        return series

    def is_solvable(self) -> bool:
        return not self.derived_series()[-1]

    def require_solvable(self) -> None:
        if not self.is_solvable():
            raise NotSolvable("derived series stabilises above zero")

    def validate(self) -> CentralSeries:
        """Antisymmetry is structural; checks Jacobi and nilpotency."""
        self.check_jacobi()
        layers = self.lower_central_series()
        if layers[-1]:
            raise NotNilpotent(
                f"lower central series stabilises at dimension {len(layers[-1])}"
            )
        return CentralSeries(
            layers=tuple(tuple(l) for l in layers),
            layer_dims=tuple(len(l) for l in layers),
        )

    @property
    def nilpotency_class(self) -> int:
        return self.validate().nilpotency_class

    # -- invariants --------------------------------------------------------
    def guivarch_degree(self) -> int:
        """sum_k k * dim(gamma_k / gamma_{k+1})."""
        series = self.validate()
        return sum(
            (k + 1) * d for k, d in enumerate(series.quotient_dims())
        )

    def is_automorphism(self, m: RatMatrix) -> bool:
        """True iff m is invertible and m[x,y] = [mx, my] on all basis pairs."""
        if m.rows != self.dim or m.cols != self.dim:
            raise ValueError("shape mismatch")
        if m.det() == 0:
            return False
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                lhs = m.apply(self.c[i][j])
                rhs = self.bracket(m.col(i), m.col(j))
                if lhs != rhs:
                    return False
        return True

    def is_derivation(self, d: RatMatrix) -> bool:
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                lhs = d.apply(self.c[i][j])
                rhs = vec_sum(
                    self.bracket(d.col(i), self.basis_vector(j)),
                    self.bracket(self.basis_vector(i), d.col(j)),
                )
                if lhs != rhs:
                    return False
        return True

    # -- serialization -------------------------------------------------------
    def to_json(self) -> dict:
        entries = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                for k, val in enumerate(self.c[i][j]):
                    if val != 0:
                        entries.append({"i": i, "j": j, "k": k, "value": str(val)})
        return {"dim": self.dim, "brackets": entries}

    @classmethod
    def from_json(cls, data) -> "LieAlgebra":
        dim = int(data["dim"])
        table: dict[tuple[int, int], list] = {}
        for ent in data.get("brackets", []):
            i, j, k = int(ent["i"]), int(ent["j"]), int(ent["k"])
            if not (0 <= i < j < dim):
                raise ValueError(f"structure constant with i >= j: ({i}, {j})")
            row = table.setdefault((i, j), [Fraction(0)] * dim)
            row[k] = Fraction(str(ent["value"]))
        return cls(dim, table)


def vec_sum(*vs: Vec) -> Vec:
    out = list(vs[0])
    for v in vs[1:]:
        for i, x in enumerate(v):
            out[i] += x
    return tuple(out)


# -- stock algebras -----------------------------------------------------------

def abelian_algebra(n: int) -> LieAlgebra:
    return LieAlgebra(n)


def heisenberg_algebra() -> LieAlgebra:
    """dim 3, [e1, e2] = e3."""
    return LieAlgebra(3, {(0, 1): [0, 0, 1]})


def filiform4_algebra() -> LieAlgebra:
    """dim 4, class 3: [e1, e2] = e3, [e1, e3] = e4."""
    return LieAlgebra(4, {(0, 1): [0, 0, 1, 0], (0, 2): [0, 0, 0, 1]})


def sl2_structure() -> LieAlgebra:
    """sl2: [h, e] = 2e, [h, f] = -2f, [e, f] = h  (basis order e, f, h)."""
    return LieAlgebra(
        3,
        {
            (0, 1): [0, 0, 1],   # [e, f] = h
            (0, 2): [-2, 0, 0],  # [e, h] = -2e
            (1, 2): [0, 2, 0],   # [f, h] = 2f
        },
    )
