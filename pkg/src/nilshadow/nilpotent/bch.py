"""Exact Baker-Campbell-Hausdorff product for nilpotent algebras.

Dynkin's formula expresses log(exp X exp Y) as a rational combination of
right-nested brackets indexed by words in {X, Y}:

    Z = sum over n >= 1 of (-1)^(n-1)/n *
        sum over ((r_1, s_1), ..., (r_n, s_n)), r_i + s_i >= 1, of
        [X^(r_1) Y^(s_1) ... X^(r_n) Y^(s_n)] / (|r| + |s|) / prod r_i! s_i!

where [w_1 ... w_m] = [w_1, [w_2, [..., w_m]]].  In a class-c algebra all
words longer than c vanish, so the per-word coefficient table is finite; it
is computed once per truncation degree and cached.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from ..exactlin import Vec, vec_add
from .algebra import LieAlgebra

Word = tuple[int, ...]  # 0 = X, 1 = Y


@lru_cache(maxsize=None)
def bch_word_coefficients(max_degree: int) -> dict[Word, Fraction]:
    """Summed Dynkin coefficients per word of length <= max_degree."""
    coeffs: dict[Word, Fraction] = {}

    def blocks(remaining: int):
        """All (r, s) != (0, 0) with r + s <= remaining."""
        for r in range(remaining + 1):
            for s in range(remaining - r + 1):
                if r + s >= 1:
                    yield r, s

    def recurse(word: list[int], weight_denom: int, n_blocks: int, remaining: int):
        if word:
            total = len(word)
            coeff = (
                Fraction((-1) ** (n_blocks - 1), n_blocks)
                / total
                / weight_denom
            )
            w = tuple(word)
            coeffs[w] = coeffs.get(w, Fraction(0)) + coeff
        if remaining == 0:
            return
        for r, s in blocks(remaining):
            ext = [0] * r + [1] * s
            recurse(
                word + ext,
                weight_denom * factorial(r) * factorial(s),
                n_blocks + 1,
                remaining - r - s,
            )

    # recursion adds blocks one at a time; the empty prefix contributes nothing
    for r, s in blocks(max_degree):
        recurse(
            [0] * r + [1] * s,
            factorial(r) * factorial(s),
            1,
            max_degree - r - s,
        )
    return {w: c for w, c in coeffs.items() if c != 0}


def _nested_bracket(algebra: LieAlgebra, word: Word, x: Vec, y: Vec) -> Vec:
    """[w_1, [w_2, [..., w_m]]] with letters substituted by x, y."""
    letters = [x if b == 0 else y for b in word]
    acc = letters[-1]
    for letter in reversed(letters[:-1]):
        acc = algebra.bracket(letter, acc)
    return acc


def bch_product(algebra: LieAlgebra, x: Vec, y: Vec, nilpotency_class: int | None = None) -> Vec:
    """Group product in exponential coordinates of the first kind.

    Exact: the Dynkin series truncates at the algebra's nilpotency class.
    """
    if nilpotency_class is None:
        nilpotency_class = algebra.validate().nilpotency_class
    c = max(nilpotency_class, 1)
    out = vec_add(x, y)
    table = bch_word_coefficients(c)
    for word, coeff in table.items():
        if len(word) < 2:
            continue
        term = _nested_bracket(algebra, word, x, y)
        if any(t != 0 for t in term):
            out = vec_add(out, tuple(coeff * t for t in term))
    return out


def bch_inverse(x: Vec) -> Vec:
    return tuple(-t for t in x)


class BCHGroup:
    """The simply connected group of a nilpotent algebra, in log coordinates."""

    def __init__(self, algebra: LieAlgebra):
        self.algebra = algebra
        self.nilpotency_class = algebra.validate().nilpotency_class

    def multiply(self, x: Vec, y: Vec) -> Vec:
        return bch_product(self.algebra, x, y, self.nilpotency_class)

    def inverse(self, x: Vec) -> Vec:
        return bch_inverse(x)

    def identity(self) -> Vec:
        from ..exactlin import zero_vec

        return zero_vec(self.algebra.dim)
