"""Exception and warning types shared across the package."""


class NilshadowError(Exception):
    """Base class for all errors raised by this package."""


class NonSquareError(NilshadowError):
    """A square matrix was required."""


class SingularMatrixError(NilshadowError):
    """An invertible matrix was required."""


class NotUnipotentError(NilshadowError):
    """A unipotent matrix was required."""


class NotNilpotentMatrixError(NilshadowError):
    """A nilpotent matrix was required."""


class JacobiViolation(NilshadowError):
    """Structure constants violate the Jacobi identity."""

    def __init__(self, i, j, k):
        self.triple = (i, j, k)
        super().__init__(f"Jacobi identity fails on basis triple ({i}, {j}, {k})")


class NotNilpotent(NilshadowError):
    """Lower central series stabilises above zero."""


class NotSolvable(NilshadowError):
    """Derived series stabilises above zero."""


class NotUnipotentGenerator(NilshadowError):
    """Malcev completion requires unipotent matrix generators."""


class NotNilpotentGroup(NilshadowError):
    """Bracket closure of generator logs exceeds the nilpotency bound."""


class NotAnAutomorphism(NilshadowError):
    """The candidate matrix is not an automorphism of the model."""


class NotPolynomialGrowth(NilshadowError):
    """An action matrix carries an exact witness that its spectrum leaves the unit circle."""


class NotModulusOne(NilshadowError):
    """A modulus-one spectrum certificate was required."""


class LatticeNotInvariant(NilshadowError):
    """A lattice base is not invariant under the requested matrices."""


class NoSolution(NilshadowError):
    """The conjugation solve has no solution (precondition violated)."""


class EquivalenceViolation(NilshadowError):
    """Two independently evaluated sides of a proved equivalence disagree.

    Raising this signals an implementation fault, not an input fault.
    """


class SpecSyntaxError(NilshadowError):
    """Spec file does not parse; carries a location."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        loc = f" at line {line}, column {col}" if line is not None else ""
        super().__init__(f"{message}{loc}")


class SemanticError(NilshadowError):
    """Spec file parses but violates a model invariant (the message names it)."""


class CheckFailure(NilshadowError):
    """A verification check evaluated to false."""


class HeuristicRelianceWarning(UserWarning):
    """A result rests on the numeric integer-relation tier, not on an exact certificate."""
