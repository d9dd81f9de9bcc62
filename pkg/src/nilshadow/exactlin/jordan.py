"""Characteristic/minimal polynomials and exact Jordan-Chevalley decomposition.

The decomposition is computed by a Newton lift in Q[x]/(charpoly): starting
from z = x, iterate z <- z - f(z) * f'(z)^{-1} with f the squarefree part of
the characteristic polynomial.  After ceil(log2(dim)) steps f(z) vanishes
modulo the characteristic polynomial, and S = z(M) is the semisimple part,
which is by construction a polynomial in M.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import (
    NotNilpotentMatrixError,
    NotUnipotentError,
    SingularMatrixError,
)
from .matrix import RatMatrix
from .poly import Poly, poly_gcd, poly_lcm, poly_xgcd, squarefree_part


def charpoly(m: RatMatrix) -> Poly:
    """det(xI - M), monic, via the Faddeev-LeVerrier recursion."""
    m.require_square()
    n = m.rows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = RatMatrix.identity(n)
    ident = RatMatrix.identity(n)
    for k in range(1, n + 1):
        mk = m * mk
        ck = -mk.trace() / k
        coeffs[n - k] = ck
        if k < n:
            mk = mk + ident.scale(ck)
    return Poly(coeffs)


def minimal_poly(m: RatMatrix) -> Poly:
    """Monic generator of the annihilator ideal, as an lcm of Krylov annihilators."""
    m.require_square()
    n = m.rows
    result = Poly.one()
    for i in range(n):
        if result.degree >= 1 and result.eval_matrix(m).is_zero():
            break
        v = tuple(Fraction(1 if j == i else 0) for j in range(n))
        krylov = [v]
        w = v
        while True:
            w = m.apply(w)
            cols = RatMatrix.from_cols(krylov)
            sol = cols.solve(w)
            if sol is not None:
                ann = Poly(list(-c for c in sol) + [1])
                result = poly_lcm(result, ann)
                break
            krylov.append(w)
    return result.monic()


def is_nilpotent_matrix(m: RatMatrix) -> bool:
    m.require_square()
    n = m.rows
    p = m
    for _ in range(n.bit_length()):
        if p.is_zero():
            return True
        p = p * p
    return p.is_zero()


def is_unipotent(m: RatMatrix) -> bool:
    m.require_square()
    return is_nilpotent_matrix(m - RatMatrix.identity(m.rows))


def is_semisimple(m: RatMatrix) -> bool:
    p = minimal_poly(m)
    return poly_gcd(p, p.derivative()).degree == 0


def semisimple_polynomial(m: RatMatrix) -> Poly:
    """The polynomial p with S = p(M) the additive semisimple part of M.

    Newton lift in Q[x]/(chi): z_{k+1} = z_k - f(z_k) * f'(z_k)^{-1} where f
    is the squarefree part of chi = charpoly(M).  Quadratic convergence gives
    f(z) = 0 (mod chi) after ceil(log2(dim)) iterations.
    """
    chi = charpoly(m)
    f = squarefree_part(chi)
    if f.degree == chi.degree:
        return Poly.x()  # M already semisimple
    z = Poly.x() % chi
    steps = max(1, m.rows.bit_length())
    for _ in range(steps):
        fz = _compose_mod(f, z, chi)
        if fz.is_zero():
            break
        dfz = _compose_mod(f.derivative(), z, chi)
        g, s, _ = poly_xgcd(dfz, chi)
        if g.degree != 0:
            # f' and chi share a factor only off the lift path; fall back to
            # inverting modulo the cofactor.
            raise ArithmeticError("Newton lift failed to invert f'(z) mod charpoly")
        z = (z - fz * s) % chi
    return z


def _compose_mod(p: Poly, z: Poly, modulus: Poly) -> Poly:
    acc = Poly.zero()
    for c in reversed(p.coeffs):
        acc = (acc * z + Poly([c])) % modulus
    return acc


def jordan_chevalley_additive(m: RatMatrix) -> tuple[RatMatrix, RatMatrix, Poly]:
    """M = S + N with S semisimple, N nilpotent, SN = NS, S = p(M)."""
    m.require_square()
    p = semisimple_polynomial(m)
    s = p.eval_matrix(m)
    n = m - s
    return s, n, p


def jordan_chevalley_multiplicative(m: RatMatrix) -> tuple[RatMatrix, RatMatrix, Poly]:
    """M = Ms * Mu with Ms semisimple, Mu unipotent, commuting, Ms = p(M)."""
    m.require_square()
    if m.det() == 0:
        raise SingularMatrixError("multiplicative Jordan decomposition needs an invertible matrix")
    s, _, p = jordan_chevalley_additive(m)
    mu = s.inverse() * m
    return s, mu, p


def nilpotent_exp(b: RatMatrix) -> RatMatrix:
    """exp of a nilpotent matrix, as the exact finite series."""
    b.require_square()
    if not is_nilpotent_matrix(b):
        raise NotNilpotentMatrixError("matrix is not nilpotent")
    n = b.rows
    term = RatMatrix.identity(n)
    acc = term
    for k in range(1, n + 1):
        term = (term * b).scale(Fraction(1, k))
        if term.is_zero():
            break
        acc = acc + term
    return acc


def nilpotent_log(u: RatMatrix) -> RatMatrix:
    """log of a unipotent matrix: log(I + N) = N - N^2/2 + N^3/3 - ..., exact."""
    u.require_square()
    n = u.rows
    nil = u - RatMatrix.identity(n)
    if not is_nilpotent_matrix(nil):
        raise NotUnipotentError("matrix is not unipotent")
    term = nil
    acc = RatMatrix.zeros(n, n)
    for k in range(1, n + 1):
        if term.is_zero():
            break
        acc = acc + term.scale(Fraction((-1) ** (k + 1), k))
        term = term * nil
    return acc
