"""Exact univariate polynomials over the rationals.

Coefficients are stored densely in ascending degree, normalised so the
leading coefficient is nonzero (the zero polynomial has an empty tuple).
Includes the pieces the spectrum certificates need: gcd/squarefree part,
Sturm-chain real-root counting, cyclotomic polynomials, and irreducible
factorisation over Q (delegated to sympy's Zassenhaus implementation).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *_):
        raise AttributeError("Poly is immutable")

    # -- constructors ----------------------------------------------------
    @classmethod
    def zero(cls) -> "Poly":
        return cls([])

    @classmethod
    def one(cls) -> "Poly":
        return cls([1])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, n: int, c=1) -> "Poly":
        return cls([0] * n + [c])

    # -- basics ----------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # zero polynomial has degree -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x" if c != 1 else "x")
            else:
                terms.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return "Poly(" + " + ".join(terms) + ")"

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    @property
    def leading(self) -> Fraction:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return not self.is_zero() and self.leading == 1

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(n)])

    def __sub__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] - other[i] for i in range(n)])

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b != 0:
                    out[i + j] += a * b
        return Poly(out)

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        return Poly([c * a for a in self.coeffs])

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(self.coeffs) - len(other.coeffs) + 1, 0)
        d = other.degree
        lead = other.leading
        for i in range(len(rem) - 1, d - 1, -1):
            if rem[i] == 0:
                continue
            f = rem[i] / lead
            q[i - d] = f
            for j, b in enumerate(other.coeffs):
                rem[i - d + j] -= f * b
        return Poly(q), Poly(rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __pow__(self, n: int) -> "Poly":
        result = Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def eval(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_matrix(self, m):
        """Horner evaluation at a square RatMatrix."""
        from .matrix import RatMatrix

        m.require_square()
        n = m.rows
        acc = RatMatrix.zeros(n, n)
        ident = RatMatrix.identity(n)
        for c in reversed(self.coeffs):
            acc = acc * m + ident.scale(c)
        return acc

    def compose_neg(self) -> "Poly":
        """p(-x)."""
        return Poly([(-1) ** i * c for i, c in enumerate(self.coeffs)])

    def reciprocal(self) -> "Poly":
        """x^deg * p(1/x)."""
        return Poly(list(reversed(self.coeffs)))

    # -- serialization ------------------------------------------------------
    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "Poly":
        return cls([Fraction(s) for s in data])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd via the Euclidean algorithm."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        return Poly.zero()
    return ((a * b) // poly_gcd(a, b)).monic()


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """(g, s, t) with g = s*a + t*b, g monic."""
    r0, r1 = a, b
    s0, s1 = Poly.one(), Poly.zero()
    t0, t1 = Poly.zero(), Poly.one()
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lead = r0.leading
    return r0.monic(), s0.scale(1 / lead), t0.scale(1 / lead)


def squarefree_part(p: Poly) -> Poly:
    """The radical p / gcd(p, p'), monic."""
    if p.degree <= 0:
        return p.monic() if not p.is_zero() else p
    g = poly_gcd(p, p.derivative())
    return (p // g).monic()


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: [(f_i, i)] with p = lc * prod f_i^i, f_i squarefree."""
    p = p.monic()
    out: list[tuple[Poly, int]] = []
    if p.degree <= 0:
        return out
    d = p.derivative()
    a = poly_gcd(p, d)
    b = p // a
    c = d // a
    i = 1
    while b.degree > 0:
        dd = c - b.derivative()
        f = poly_gcd(b, dd)
        if f.degree > 0:
            out.append((f.monic(), i))
        b = b // f
        c = dd // f
        i += 1
    return out


# -- Sturm chains -----------------------------------------------------------

def sturm_chain(p: Poly) -> list[Poly]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def _sign_changes(values) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: Poly, lo: Fraction | None = None, hi: Fraction | None = None) -> int:
    """Distinct real roots of p in (lo, hi]; None means -/+ infinity.

    p must be nonzero.  Works on the squarefree part, so multiplicities
    are not counted.
    """
    q = squarefree_part(p)
    if q.degree <= 0:
        return 0
    chain = sturm_chain(q)

    def signs_at(x):
        if x is None:
            return None
        return [c.eval(x) for c in chain]

    def signs_at_inf(sign: int):
        return [c.leading * (sign ** c.degree) for c in chain]

    lo_vals = signs_at_inf(-1) if lo is None else signs_at(lo)
    hi_vals = signs_at_inf(1) if hi is None else signs_at(hi)
    return _sign_changes(lo_vals) - _sign_changes(hi_vals)


def root_magnitude_bound(p: Poly) -> Fraction:
    """Cauchy bound: all complex roots have |z| <= bound."""
    if p.degree <= 0:
        return Fraction(1)
    lead = abs(p.leading)
    m = max(abs(c) for c in p.coeffs[:-1]) if p.degree >= 1 else Fraction(0)
    return 1 + m / lead


# -- cyclotomic polynomials -------------------------------------------------

def euler_phi(m: int) -> int:
    result = m
    n = m
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


@lru_cache(maxsize=None)
def cyclotomic(m: int) -> Poly:
    """The m-th cyclotomic polynomial, by recursive division of x^m - 1."""
    p = Poly.monomial(m) - Poly.one()
    for d in range(1, m):
        if m % d == 0:
            p = p // cyclotomic(d)
    return p


def inverse_phi(d: int) -> list[int]:
    """All m with euler_phi(m) = d.  phi(m) >= sqrt(m/2) bounds the search."""
    bound = 2 * d * d + 2
    return [m for m in range(1, bound + 1) if euler_phi(m) == d]


def cyclotomic_order(f: Poly) -> int | None:
    """If the monic polynomial f equals some cyclotomic Phi_m, return m."""
    d = f.degree
    if d <= 0 or not f.is_monic():
        return None
    for m in inverse_phi(d):
        if f == cyclotomic(m):
            return m
    return None


# -- factorisation over Q ---------------------------------------------------

def factor_rational(p: Poly) -> list[tuple[Poly, int]]:
    """Irreducible monic factors of p over Q with multiplicities.

    Delegates to sympy (squarefree decomposition + Zassenhaus); everything
    is converted back to exact Fractions.
    """
    if p.degree <= 0:
        return []
    import sympy

    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(p.coeffs))
    _, factors = sympy.Poly(expr, x, domain="QQ").factor_list()
    out = []
    for fac, mult in factors:
        coeffs = [Fraction(c.p, c.q) for c in reversed(fac.all_coeffs())]
        out.append((Poly(coeffs).monic(), int(mult)))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return out
