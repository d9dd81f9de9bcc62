"""Modulus-one spectrum certificates.

Whether a rational matrix has all eigenvalues on the unit circle is decided
by a three-tier scheme applied to the irreducible factors of the
characteristic polynomial (eigenvalues of a matrix and of its semisimple
part coincide):

  1. exact cyclotomic detection (degree-d factors are compared against all
     Phi_m with phi(m) = d);
  2. exact off-circle witnesses: any real root of a non-cyclotomic factor,
     a constant coefficient of absolute value != 1, a factor that is not
     conjugate-reciprocal, or a non-cyclotomic factor with integer
     coefficients (Kronecker); plus the exact Niven certificate for
     quadratics x^2 - 2c x + 1 with rational c not in {0, +-1/2, +-1};
  3. a numeric fallback that only ever reports Inconclusive, using a
     documented 1e-12 tolerance on ||lambda| - 1|.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from ..errors import SingularMatrixError
from .matrix import RatMatrix
from .poly import (
    Poly,
    count_real_roots,
    cyclotomic_order,
    factor_rational,
)
from .jordan import charpoly

NUMERIC_TOLERANCE = Fraction(1, 10**12)


@dataclass(frozen=True)
class SpectrumCertificate:
    kind: str  # "roots_of_unity" | "modulus_one_irrational" | "not_modulus_one" | "inconclusive"
    order: int | None = None  # for roots_of_unity: X^order = I on the semisimple part
    witness: str = ""

    @property
    def modulus_one(self) -> bool:
        return self.kind in ("roots_of_unity", "modulus_one_irrational")

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.order is not None:
            out["order"] = self.order
        if self.witness:
            out["witness"] = self.witness
        return out


def _is_conjugate_reciprocal(f: Poly) -> bool:
    """All roots on the unit circle forces x^d f(1/x) = +- f(x)."""
    rec = f.reciprocal().monic()
    return rec == f.monic()


def _numeric_moduli_off_circle(f: Poly) -> bool:
    import mpmath

    with mpmath.workprec(200):
        coeffs = [mpmath.mpf(c.numerator) / mpmath.mpf(c.denominator) for c in reversed(f.coeffs)]
        roots = mpmath.polyroots(coeffs, maxsteps=200, extraprec=200)
        tol = mpmath.mpf(1) / mpmath.mpf(10) ** 12
        return any(abs(abs(r) - 1) > tol for r in roots)


def classify_factor(f: Poly) -> SpectrumCertificate:
    """Certificate for one monic irreducible factor."""
    d = f.degree
    order = cyclotomic_order(f)
    if order is not None:
        return SpectrumCertificate("roots_of_unity", order=order)
    const = abs(f[0])
    if const != 1:
        return SpectrumCertificate(
            "not_modulus_one", witness=f"|product of roots| = {const} != 1 for factor {f!r}"
        )
    if count_real_roots(f) > 0:
        return SpectrumCertificate(
            "not_modulus_one",
            witness=f"non-cyclotomic factor {f!r} has a real root (necessarily != +-1)",
        )
    if not _is_conjugate_reciprocal(f):
        return SpectrumCertificate(
            "not_modulus_one",
            witness=f"factor {f!r} is not conjugate-reciprocal, so its roots are not inversion-closed",
        )
    if d == 2:
        # x^2 - 2c x + 1 with |c| < 1 (complex pair on the circle); Niven: the
        # angle is an irrational multiple of pi unless c in {0, +-1/2, +-1}.
        c = -f[1] / 2
        return SpectrumCertificate(
            "modulus_one_irrational",
            witness=f"Niven certificate: cos(theta) = {c} is rational, not in {{0, +-1/2, +-1}}",
        )
    if all(c.denominator == 1 for c in f.coeffs):
        return SpectrumCertificate(
            "not_modulus_one",
            witness=(
                f"integer factor {f!r} is not cyclotomic; by Kronecker's theorem "
                "some root leaves the unit circle"
            ),
        )
    if _numeric_moduli_off_circle(f):
        return SpectrumCertificate(
            "inconclusive",
            witness=f"numeric roots of {f!r} leave the circle beyond 1e-12 but no exact witness applies",
        )
    return SpectrumCertificate(
        "inconclusive",
        witness=f"roots of {f!r} are numerically on the circle (1e-12) but no exact certificate applies",
    )


def spectrum_certificate(m: RatMatrix) -> SpectrumCertificate:
    """Certificate for all eigenvalues of the (invertible) matrix."""
    m.require_square()
    chi = charpoly(m)
    if chi[0] == 0:
        raise SingularMatrixError("spectrum certificate requires an invertible matrix")
    factors = [f for f, _ in factor_rational(chi)]
    orders: list[int] = []
    irrational: SpectrumCertificate | None = None
    inconclusive: SpectrumCertificate | None = None
    for f in factors:
        cert = classify_factor(f)
        if cert.kind == "not_modulus_one":
            return cert
        if cert.kind == "roots_of_unity":
            orders.append(cert.order)
        elif cert.kind == "modulus_one_irrational":
            irrational = cert
        else:
            inconclusive = cert
    if inconclusive is not None:
        return inconclusive
    if irrational is not None:
        return irrational
    return SpectrumCertificate("roots_of_unity", order=lcm(*orders) if orders else 1)


def finite_order(m: RatMatrix) -> int | None:
    """Exact multiplicative order of a semisimple matrix, None if infinite.

    A rational matrix has finite order iff it is semisimple and every
    irreducible factor of its characteristic polynomial is cyclotomic.
    """
    cert = spectrum_certificate(m)
    if cert.kind != "roots_of_unity":
        return None
    return cert.order


def purely_imaginary_spectrum(p: Poly) -> bool:
    """Exact test: all roots of p lie on the imaginary axis (0 allowed).

    Strips x^a, requires the rest to be even, substitutes t = x^2 and checks
    by Sturm count that all roots in t are real and negative.
    """
    q = Poly(list(p.coeffs))
    while not q.is_zero() and q[0] == 0:
        q = Poly(list(q.coeffs[1:]))
    if q.degree <= 0:
        return True
    if any(q[i] != 0 for i in range(1, q.degree + 1, 2)):
        return False
    r = Poly([q[2 * i] for i in range(q.degree // 2 + 1)])
    # every root of r must be real and < 0, i.e. r has deg(r) distinct-or-not
    # roots in (-inf, 0); count distinct roots of the squarefree part and
    # compare degrees via the squarefree decomposition.
    from .poly import squarefree_decomposition

    total = 0
    for f, mult in squarefree_decomposition(r):
        neg = count_real_roots(f, None, Fraction(0))
        if neg != f.degree:
            return False
        total += mult * f.degree
    return total == r.degree
