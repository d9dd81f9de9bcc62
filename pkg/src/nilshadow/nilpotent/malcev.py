"""Malcev completion of a unipotently presented group.

Input: unipotent rational matrices generating a nilpotent matrix group.
The completion is the Q-span of iterated commutator brackets of the
generator logarithms, closed under bracket; the result is returned as a
structure-constant algebra together with the coordinate embedding.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import NotNilpotentGroup, NotUnipotentGenerator, NotNilpotent
from ..exactlin import (
    RatMatrix,
    is_unipotent,
    nilpotent_log,
)
from .algebra import LieAlgebra
from .bch import bch_product


def _commutator(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    return a * b - b * a


class MalcevEmbedding:
    """Coordinates of the completion: basis matrices + log coordinate map."""

    def __init__(self, algebra: LieAlgebra, basis: list[RatMatrix], generators: list[RatMatrix]):
        self.algebra = algebra
        self.basis = basis
        self.generators = generators
        self._flat_basis = RatMatrix.from_cols(
            [tuple(x for row in b.entries for x in row) for b in basis]
        ) if basis else None

    def coords_of_log(self, b: RatMatrix):
        """Coordinates of a matrix in the span of the basis."""
        if self._flat_basis is None:
            if not b.is_zero():
                raise ValueError("matrix outside the zero algebra")
            return ()
        flat = tuple(x for row in b.entries for x in row)
        sol = self._flat_basis.solve(flat)
        if sol is None:
            raise ValueError("matrix does not lie in the completion's algebra")
        return sol

    def embed_matrix(self, u: RatMatrix):
        """Exponential coordinates of a unipotent matrix of the group."""
        return self.coords_of_log(nilpotent_log(u))

    def embed_word(self, word: Sequence[tuple[int, int]]):
        """Coordinates of a product of generator powers [(index, exponent), ...]."""
        n = self.generators[0].rows if self.generators else 0
        acc = RatMatrix.identity(n)
        for idx, exp in word:
            acc = acc * (self.generators[idx] ** exp)
        return self.embed_matrix(acc)


def malcev_completion(generators: Sequence[RatMatrix]) -> tuple[LieAlgebra, MalcevEmbedding]:
    """Completion of the group generated by unipotent matrices.

    Raises NotUnipotentGenerator for bad input and NotNilpotentGroup when the
    bracket closure exceeds the (matrix size)^2 dimension bound or fails the
    nilpotency check.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("at least one generator required")
    n = gens[0].rows
    for g in gens:
        g.require_square()
        if g.rows != n:
            raise ValueError("generators must share a size")
        if not is_unipotent(g):
            raise NotUnipotentGenerator(f"generator {g!r} is not unipotent")

    logs = [nilpotent_log(g) for g in gens]

    def flat(b: RatMatrix):
        return tuple(x for row in b.entries for x in row)

    basis: list[RatMatrix] = []

    def in_span(b: RatMatrix) -> bool:
        if b.is_zero():
            return True
        if not basis:
            return False
        return RatMatrix.from_cols([flat(x) for x in basis]).solve(flat(b)) is not None

    def add(b: RatMatrix) -> bool:
        if in_span(b):
            return False
        basis.append(b)
        return True

    bound = n * n
    for lg in logs:
        add(lg)
    frontier = list(basis)
    while frontier:
        new = []
        for b in list(basis):
            for f in frontier:
                br = _commutator(b, f)
                if add(br):
                    new.append(br)
                    if len(basis) > bound:
                        raise NotNilpotentGroup("bracket closure exceeded the dimension bound")
        frontier = new

    dim = len(basis)
    flat_basis = RatMatrix.from_cols([flat(b) for b in basis]) if basis else None

    def coords_in_basis(b: RatMatrix):
        if flat_basis is None:
            return ()
        sol = flat_basis.solve(flat(b))
        if sol is None:
            raise ValueError("matrix does not lie in the completion's algebra")
        return sol

    brackets = {}
    for i in range(dim):
        for j in range(i + 1, dim):
            coords = coords_in_basis(_commutator(basis[i], basis[j]))
            if any(x != 0 for x in coords):
                brackets[(i, j)] = coords
    algebra = LieAlgebra(dim, brackets)
    try:
        algebra.validate()
    except NotNilpotent as exc:
        raise NotNilpotentGroup("generated matrix Lie algebra is not nilpotent") from exc
    return algebra, MalcevEmbedding(algebra, basis, gens)


def check_embedding_homomorphism(
    algebra: LieAlgebra, emb: MalcevEmbedding, words: Sequence[Sequence[tuple[int, int]]]
) -> bool:
    """BCH product in coordinates matches matrix multiplication under the embedding."""
    n = emb.generators[0].rows
    c = algebra.validate().nilpotency_class
    for w1 in words:
        for w2 in words:
            m1 = RatMatrix.identity(n)
            for idx, e in w1:
                m1 = m1 * (emb.generators[idx] ** e)
            m2 = RatMatrix.identity(n)
            for idx, e in w2:
                m2 = m2 * (emb.generators[idx] ** e)
            lhs = emb.embed_matrix(m1 * m2)
            rhs = bch_product(algebra, emb.embed_matrix(m1), emb.embed_matrix(m2), c)
            if lhs != rhs:
                return False
    return True
