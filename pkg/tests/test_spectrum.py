import random
from fractions import Fraction
from math import lcm

from nilshadow.exactlin import (
    Poly,
    RatMatrix,
    cyclotomic,
    purely_imaginary_spectrum,
    spectrum_certificate,
    finite_order,
)


def companion(p: Poly) -> RatMatrix:
    n = p.degree
    cols = []
    for j in range(n - 1):
        cols.append([Fraction(1 if i == j + 1 else 0) for i in range(n)])
    cols.append([-p[i] for i in range(n)])
    return RatMatrix.from_cols(cols)


def test_rotation_by_90_is_order_4():
    cert = spectrum_certificate(RatMatrix([[0, -1], [1, 0]]))
    assert cert.kind == "roots_of_unity"
    assert cert.order == 4


def test_alpha0_not_modulus_one():
    # Example 3.2 matrix: eigenvalues 2 +- sqrt(3) are not roots of unity
    cert = spectrum_certificate(RatMatrix([[3, 1], [2, 1]]))
    assert cert.kind == "not_modulus_one"
    assert cert.witness


def test_cos35_niven_certificate():
    cert = spectrum_certificate(RatMatrix([[0, -1], [1, Fraction(6, 5)]]))
    assert cert.kind == "modulus_one_irrational"
    assert "3/5" in cert.witness


def test_kronecker_check_companion_of_cyclotomic_products():
    rng = random.Random(17)
    pool = [1, 2, 3, 4, 5, 6, 8, 10, 12]
    for _ in range(20):
        indices = rng.sample(pool, rng.randint(1, 3))
        p = Poly.one()
        for m in indices:
            p = p * cyclotomic(m)
        if p.degree > 8:
            continue
        cert = spectrum_certificate(companion(p))
        assert cert.kind == "roots_of_unity"
        assert cert.order == lcm(*indices)


def test_roots_of_unity_satisfy_power_identity():
    for m, mat in [
        (4, RatMatrix([[0, -1], [1, 0]])),
        (6, companion(cyclotomic(6))),
        (12, companion(cyclotomic(12))),
    ]:
        cert = spectrum_certificate(mat)
        assert cert.kind == "roots_of_unity" and cert.order == m
        assert (mat ** cert.order).is_identity()
        assert finite_order(mat) == m


def test_mixed_quasiunipotent_order_counts_semisimple_part_only():
    # [[1,1],[0,1]] is unipotent: semisimple part I, "roots of unity" order 1
    cert = spectrum_certificate(RatMatrix([[1, 1], [0, 1]]))
    assert cert.kind == "roots_of_unity"
    assert cert.order == 1
    sec25 = RatMatrix([[0, 0, 1], [1, 0, 1], [0, 1, -1]])
    cert = spectrum_certificate(sec25)
    assert cert.kind == "roots_of_unity" and cert.order == 2
    assert finite_order(sec25) is None or not (sec25 ** 2).is_identity()


def test_non_reciprocal_and_bad_det_witnesses():
    cert = spectrum_certificate(RatMatrix([[2, 0], [0, Fraction(1, 2)]]))
    assert cert.kind == "not_modulus_one"
    cert = spectrum_certificate(RatMatrix.diag([Fraction(1, 3)]))
    assert cert.kind == "not_modulus_one"


def test_salem_like_integer_quartic_rejected():
    # x^4 - 3x^3 + x^2 - 3x + 1: integral, conjugate-reciprocal, not cyclotomic;
    # Kronecker forces a root off the circle (it has real roots, too).
    p = Poly([1, -3, 1, -3, 1])
    cert = spectrum_certificate(companion(p))
    assert cert.kind == "not_modulus_one"


def test_rational_quartic_two_niven_pairs_is_modulus_one():
    # (x^2 - 6/5 x + 1)(x^2 - 2/3 x + 1): two exact Niven pairs
    p = Poly([1, Fraction(-6, 5), 1]) * Poly([1, Fraction(-2, 3), 1])
    cert = spectrum_certificate(companion(p))
    assert cert.kind == "modulus_one_irrational"


def test_irreducible_rational_quartic_is_inconclusive_not_guessed():
    # x^4 - 1/2 x^3 + x^2 - 1/2 x + 1: irreducible over Q, conjugate-reciprocal,
    # |const| = 1, no real roots, degree > 2 -> no exact tier applies.
    p = Poly([1, Fraction(-1, 2), 1, Fraction(-1, 2), 1])
    cert = spectrum_certificate(companion(p))
    assert cert.kind == "inconclusive"


def test_purely_imaginary_spectrum():
    # ad-type test used by the nil-shadow construction
    assert purely_imaginary_spectrum(Poly([0, 1]))  # x
    assert purely_imaginary_spectrum(Poly([1, 0, 1]))  # x^2 + 1
    assert purely_imaginary_spectrum(Poly([0, 4, 0, 1]))  # x(x^2+4)
    assert not purely_imaginary_spectrum(Poly([-1, 0, 1]))  # x^2 - 1
    assert not purely_imaginary_spectrum(Poly([1, 1]))  # x + 1
    assert not purely_imaginary_spectrum(Poly([1, 0, 0, 1]))  # x^3 + 1
    # (x^2+1)^2 (x^2+9) with multiplicity
    p = Poly([1, 0, 1]) ** 2 * Poly([9, 0, 1])
    assert purely_imaginary_spectrum(p)
