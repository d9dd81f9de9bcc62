"""Nilpotent Lie algebras over Q with the exact BCH group law."""

from .algebra import (
    CentralSeries,
    LieAlgebra,
    abelian_algebra,
    filiform4_algebra,
    heisenberg_algebra,
    sl2_structure,
)
from .bch import BCHGroup, bch_inverse, bch_product, bch_word_coefficients
from .birkhoff import EnvelopingTruncation, faithful_unipotent_rep
from .malcev import (
    MalcevEmbedding,
    check_embedding_homomorphism,
    malcev_completion,
)


def validate(algebra: LieAlgebra) -> CentralSeries:
    return algebra.validate()


def guivarch_degree(algebra: LieAlgebra) -> int:
    return algebra.guivarch_degree()


def is_algebra_automorphism(algebra: LieAlgebra, m) -> bool:
    return algebra.is_automorphism(m)


__all__ = [
    "BCHGroup",
    "CentralSeries",
    "EnvelopingTruncation",
    "LieAlgebra",
    "MalcevEmbedding",
    "abelian_algebra",
    "bch_inverse",
    "bch_product",
    "bch_word_coefficients",
    "check_embedding_homomorphism",
    "faithful_unipotent_rep",
    "filiform4_algebra",
    "guivarch_degree",
    "heisenberg_algebra",
    "is_algebra_automorphism",
    "malcev_completion",
    "sl2_structure",
    "validate",
]
