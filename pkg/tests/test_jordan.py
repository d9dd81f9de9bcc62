import random
from fractions import Fraction

import pytest

from nilshadow.exactlin import (
    Poly,
    RatMatrix,
    charpoly,
    is_nilpotent_matrix,
    is_semisimple,
    is_unipotent,
    jordan_chevalley_additive,
    jordan_chevalley_multiplicative,
    minimal_poly,
    nilpotent_exp,
    nilpotent_log,
    poly_gcd,
)
from nilshadow.errors import (
    NotNilpotentMatrixError,
    NotUnipotentError,
    SingularMatrixError,
)

SEC25 = RatMatrix([[0, 0, 1], [1, 0, 1], [0, 1, -1]])


def charpoly_cofactor(m: RatMatrix) -> Poly:
    """Independent oracle: expand det(xI - M) by cofactors over Q[x]."""

    n = m.rows
    entries = [
        [
            Poly([-m.entries[i][j]]) + (Poly.x() if i == j else Poly.zero())
            for j in range(n)
        ]
        for i in range(n)
    ]

    def det(rows, cols):
        if len(rows) == 1:
            return entries[rows[0]][cols[0]]
        total = Poly.zero()
        r0 = rows[0]
        for idx, c in enumerate(cols):
            minor = det(rows[1:], cols[:idx] + cols[idx + 1 :])
            term = entries[r0][c] * minor
            total = total + (term if idx % 2 == 0 else -term)
        return total

    return det(list(range(n)), list(range(n)))


def minimal_poly_linear_oracle(m: RatMatrix) -> Poly:
    """Independent oracle: smallest d with M^d in span(I, M, ..., M^{d-1})."""
    n = m.rows
    powers = [RatMatrix.identity(n)]
    while True:
        powers.append(powers[-1] * m)
        target = [x for row in powers[-1].entries for x in row]
        cols = [[x for row in p.entries for x in row] for p in powers[:-1]]
        sol = RatMatrix.from_cols(cols).solve(tuple(target))
        if sol is not None:
            return Poly([-c for c in sol] + [Fraction(1)])


def rand_frac(rng, bound=10):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def rand_invertible(rng, n, bound=10):
    while True:
        m = RatMatrix([[rand_frac(rng, bound) for _ in range(n)] for _ in range(n)])
        if m.det() != 0:
            return m


def test_charpoly_golden():
    assert charpoly(RatMatrix.identity(2)) == Poly([1, -2, 1])  # (x-1)^2
    assert charpoly(RatMatrix([[3, 1], [2, 1]])) == Poly([1, -4, 1])
    assert charpoly(SEC25) == Poly([-1, -1, 1, 1])  # x^3 + x^2 - x - 1


def test_charpoly_against_cofactor_oracle():
    rng = random.Random(23)
    for _ in range(20):
        n = rng.randint(1, 4)
        m = RatMatrix([[rand_frac(rng, 6) for _ in range(n)] for _ in range(n)])
        assert charpoly(m) == charpoly_cofactor(m)


def test_minimal_poly_golden():
    assert minimal_poly(RatMatrix.identity(4)) == Poly([-1, 1])
    assert minimal_poly(RatMatrix([[1, 1], [0, 1]])) == Poly([1, -2, 1])
    x = Poly.x()
    one = Poly.one()
    assert minimal_poly(SEC25) == (x - one) * (x + one) ** 2


def test_minimal_poly_against_linear_oracle():
    rng = random.Random(29)
    for _ in range(20):
        n = rng.randint(1, 4)
        m = RatMatrix([[rand_frac(rng, 4) for _ in range(n)] for _ in range(n)])
        assert minimal_poly(m) == minimal_poly_linear_oracle(m)


def test_minimal_poly_divides_charpoly():
    rng = random.Random(31)
    for _ in range(20):
        n = rng.randint(1, 5)
        m = RatMatrix([[rand_frac(rng, 5) for _ in range(n)] for _ in range(n)])
        assert (charpoly(m) % minimal_poly(m)).is_zero()


def test_jc_additive_trivial_cases():
    nil = RatMatrix([[0, 1], [0, 0]])
    s, n, p = jordan_chevalley_additive(nil)
    assert s.is_zero() and n == nil and p.is_zero()
    d = RatMatrix.diag([1, 2, 3])
    s, n, p = jordan_chevalley_additive(d)
    assert s == d and n.is_zero() and p == Poly.x()


def test_jc_additive_sec25_matrix():
    # the paper's non-invariant-lattice example: theta_s must leave Z^3
    s, n, p = jordan_chevalley_additive(SEC25)
    assert s + n == SEC25
    assert s * n == n * s
    assert is_semisimple(s)
    assert is_nilpotent_matrix(n)
    assert p.eval_matrix(SEC25) == s
    assert not s.is_integral()


def test_jc_multiplicative_trivial_cases():
    unip = RatMatrix([[1, 1], [0, 1]])
    ms, mu, _ = jordan_chevalley_multiplicative(unip)
    assert ms.is_identity() and mu == unip
    rot = RatMatrix([[0, -1], [1, 0]])
    ms, mu, _ = jordan_chevalley_multiplicative(rot)
    assert ms == rot and mu.is_identity()


def test_jc_multiplicative_sec25():
    ms, mu, p = jordan_chevalley_multiplicative(SEC25)
    assert ms * mu == SEC25
    assert not ms.is_integral()  # Z^3 is not Ms-invariant
    assert is_unipotent(mu)
    assert p.eval_matrix(SEC25) == ms


def test_jc_multiplicative_rejects_singular():
    with pytest.raises(SingularMatrixError):
        jordan_chevalley_multiplicative(RatMatrix([[0, 0], [0, 1]]))


def test_jc_random_suite_small():
    rng = random.Random(37)
    for _ in range(25):
        n = rng.randint(1, 4)
        m = rand_invertible(rng, n, 5)
        ms, mu, p = jordan_chevalley_multiplicative(m)
        assert ms * mu == m
        assert ms * mu == mu * ms
        sf = minimal_poly(ms)
        assert poly_gcd(sf, sf.derivative()).degree == 0
        assert is_unipotent(mu)
        assert p.eval_matrix(m) == ms
        # additive/multiplicative consistency
        s, nn, _ = jordan_chevalley_additive(m)
        assert s == ms
        assert s.inverse() * m == mu
        # invariant rational subspaces of M are Ms-invariant: Ms = p(M)
        # keeps any M-invariant subspace invariant by construction.


def test_jc_uniqueness_rejects_perturbations():
    # uniqueness: the only commuting (semisimple, unipotent) factorization is
    # the Jordan one; perturbing Ms by a commuting unipotent breaks a property.
    m = SEC25
    ms, mu, _ = jordan_chevalley_multiplicative(m)
    perturb = mu  # commutes with ms and m
    s_alt = ms * perturb
    u_alt = perturb.inverse() * mu
    assert s_alt * u_alt == m
    if s_alt != ms:
        # the perturbed pair cannot be semisimple + unipotent at once
        assert not (is_semisimple(s_alt) and is_unipotent(u_alt))


def test_is_semisimple_is_unipotent_golden():
    ident = RatMatrix.identity(3)
    assert is_semisimple(ident) and is_unipotent(ident)
    jb = RatMatrix([[1, 1], [0, 1]])
    assert not is_semisimple(jb) and is_unipotent(jb)
    assert not is_semisimple(SEC25) and not is_unipotent(SEC25)


def test_nilpotent_log_golden():
    assert nilpotent_log(RatMatrix.identity(3)).is_zero()
    assert nilpotent_log(RatMatrix([[1, 1], [0, 1]])) == RatMatrix([[0, 1], [0, 0]])
    u = RatMatrix([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    b = nilpotent_log(u)
    # series oracle: log(I+N) = N - N^2/2 for N^3 = 0
    n = u - RatMatrix.identity(3)
    assert b == n - (n * n).scale(Fraction(1, 2))
    assert b.entries[0][2] == Fraction(-1, 2)


def test_nilpotent_exp_golden():
    assert nilpotent_exp(RatMatrix.zeros(2, 2)).is_identity()
    assert nilpotent_exp(RatMatrix([[0, 1], [0, 0]])) == RatMatrix([[1, 1], [0, 1]])
    b = RatMatrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    e = nilpotent_exp(b)
    assert e.entries[0][2] == Fraction(1, 2)


def test_exp_log_roundtrip_random_unipotent():
    rng = random.Random(41)
    for _ in range(30):
        n = rng.randint(2, 5)
        upper = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            upper[i][i] = Fraction(1)
            for j in range(i + 1, n):
                upper[i][j] = rand_frac(rng, 5)
        u = RatMatrix(upper)
        assert nilpotent_exp(nilpotent_log(u)) == u
        b = nilpotent_log(u)
        assert nilpotent_log(nilpotent_exp(b)) == b


def test_log_exp_input_validation():
    with pytest.raises(NotUnipotentError):
        nilpotent_log(RatMatrix([[2, 0], [0, 1]]))
    with pytest.raises(NotNilpotentMatrixError):
        nilpotent_exp(RatMatrix([[1, 0], [0, 0]]))
