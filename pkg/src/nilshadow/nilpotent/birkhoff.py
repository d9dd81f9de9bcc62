"""Faithful unipotent representation of a nilpotent algebra.

Left multiplication on the universal enveloping algebra modulo a power of
the augmentation ideal.  With a basis adapted to the lower central series
(weight of a basis vector = deepest layer containing it), the PBW monomials
of weight <= c + 1 descend to a basis of U/m^(c+2), left multiplication by
algebra elements is strictly weight-raising (hence nilpotent), and x -> x*1
shows the algebra injects.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from ..exactlin import RatMatrix, Vec, subspace_contains
from .algebra import LieAlgebra

Monomial = tuple[int, ...]  # exponents per adapted basis vector


def _adapted_basis(algebra: LieAlgebra) -> tuple[list[Vec], list[int]]:
    """Basis vectors adapted to the lower central series, with weights."""
    series = algebra.validate()
    layers = [list(l) for l in series.layers]
    basis: list[Vec] = []
    weights: list[int] = []
    # walk layers from the deepest nonzero one upwards, extending each time
    depth = len(layers) - 1  # layers[depth] == []
    for level in range(depth - 1, -1, -1):
        for v in layers[level]:
            if not subspace_contains(basis, v):
                basis.append(v)
                weights.append(level + 1)
    order = sorted(range(len(basis)), key=lambda i: (weights[i], i))
    return [basis[i] for i in order], [weights[i] for i in order]


class EnvelopingTruncation:
    """U(g) / m^(cutoff+1) on the weighted PBW monomial basis."""

    def __init__(self, algebra: LieAlgebra, cutoff: int):
        self.algebra = algebra
        self.cutoff = cutoff
        self.adapted, self.weights = _adapted_basis(algebra)
        d = len(self.adapted)
        self.monomials: list[Monomial] = []
        ranges = [range(cutoff // w + 1) for w in self.weights]
        for expo in product(*ranges):
            if sum(e * w for e, w in zip(expo, self.weights)) <= cutoff:
                self.monomials.append(expo)
        self.monomials.sort(key=lambda m: (sum(e * w for e, w in zip(m, self.weights)), m))
        self.index = {m: i for i, m in enumerate(self.monomials)}
        # structure constants of the adapted basis
        self._ad_table = [
            [self._coords(algebra.bracket(self.adapted[i], self.adapted[j])) for j in range(d)]
            for i in range(d)
        ]
        self._memo: dict[tuple[int, Monomial], dict[Monomial, Fraction]] = {}

    def _coords(self, v: Vec) -> Vec:
        sol = RatMatrix.from_cols(self.adapted).solve(v)
        if sol is None:
            raise AssertionError("vector outside the algebra span")
        return sol

    def weight(self, m: Monomial) -> int:
        return sum(e * w for e, w in zip(m, self.weights))

    def _mult_generator(self, i: int, mono: Monomial) -> dict[Monomial, Fraction]:
        """PBW straightening of  b_i * mono, dropping weight > cutoff."""
        cached = self._memo.get((i, mono))
        if cached is not None:
            return cached
        result = self._mult_generator_uncached(i, mono)
        self._memo[(i, mono)] = result
        return result

    def _mult_generator_uncached(self, i: int, mono: Monomial) -> dict[Monomial, Fraction]:
        if self.weight(mono) + self.weights[i] > self.cutoff:
            return {}
        first = next((k for k, e in enumerate(mono) if e > 0), None)
        if first is None or i <= first:
            out = list(mono)
            out[i] += 1
            return {tuple(out): Fraction(1)}
        # b_i * b_first * rest = b_first * b_i * rest + [b_i, b_first] * rest
        rest = list(mono)
        rest[first] -= 1
        rest_m = tuple(rest)
        result: dict[Monomial, Fraction] = {}
        for m2, c2 in self._mult_generator(i, rest_m).items():
            # prepend b_first to m2 (first <= every index in m2's support by induction)
            for m3, c3 in self._mult_generator(first, m2).items():
                _accum(result, m3, c2 * c3)
        bracket = self._ad_table[i][first]
        for k, ck in enumerate(bracket):
            if ck == 0:
                continue
            for m2, c2 in self._mult_generator(k, rest_m).items():
                _accum(result, m2, ck * c2)
        return result

    def left_multiplication(self, coords: Vec) -> RatMatrix:
        """Matrix of left multiplication by an algebra element (adapted coords)."""
        n = len(self.monomials)
        cols = []
        for mono in self.monomials:
            col = [Fraction(0)] * n
            for i, ci in enumerate(coords):
                if ci == 0:
                    continue
                for m2, c2 in self._mult_generator(i, mono).items():
                    col[self.index[m2]] += ci * c2
            cols.append(tuple(col))
        return RatMatrix.from_cols(cols)


def _accum(d: dict, key, val) -> None:
    cur = d.get(key, Fraction(0)) + val
    if cur == 0:
        d.pop(key, None)
    else:
        d[key] = cur


def faithful_unipotent_rep(algebra: LieAlgebra) -> list[RatMatrix]:
    """Images of the standard basis e_1..e_d under a faithful nilpotent rep.

    Bracket-preserving and injective; exponentials of the images multiply
    like the BCH group (checked in the test-suite roundtrip).
    """
    series = algebra.validate()
    c = max(series.nilpotency_class, 1)
    trunc = EnvelopingTruncation(algebra, c + 1)
    change = RatMatrix.from_cols(trunc.adapted).inverse()
    images = []
    for i in range(algebra.dim):
        coords = change.apply(algebra.basis_vector(i))
        images.append(trunc.left_multiplication(coords))
    return images
