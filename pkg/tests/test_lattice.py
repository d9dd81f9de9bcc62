import random

from nilshadow.exactlin import (
    IntMatrix,
    hermite_normal_form,
    integer_row_kernel,
    integral_points_of_subspace,
    invariant_factors,
    lattice_basis,
    lattice_contains,
    lattice_index,
    lattice_intersect,
    lattice_sum,
    smith_normal_form,
    subspace_basis,
)
from fractions import Fraction


def kron(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    rows = []
    for i in range(a.rows):
        for k in range(b.rows):
            rows.append(
                [a.entries[i][j] * b.entries[k][l] for j in range(a.cols) for l in range(b.cols)]
            )
    return IntMatrix(rows)


ALPHA0 = IntMatrix([[3, 1], [2, 1]])


def test_hnf_identity_and_zero():
    ident = IntMatrix.identity(3)
    h, u = hermite_normal_form(ident)
    assert h == ident and u == ident
    z = IntMatrix.zeros(2, 2)
    h, u = hermite_normal_form(z)
    assert h == z
    assert abs(u.det()) == 1


def test_hnf_golden_2x2():
    # hand row-reduction oracle: rows (2,1),(2,0) reduce to (2,0),(0,1)
    m = IntMatrix([[2, 1], [2, 0]])
    h, u = hermite_normal_form(m)
    assert (u.to_rat() * m.to_rat()) == h.to_rat()
    assert abs(u.det()) == 1
    assert h == IntMatrix([[2, 0], [0, 1]])
    assert lattice_index(2, h) == 2  # index-2 sublattice of Z^2


def test_hnf_random_properties():
    rng = random.Random(5)
    for _ in range(30):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        m = IntMatrix([[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)])
        h, u = hermite_normal_form(m)
        assert abs(u.det()) == 1
        assert (u.to_rat() * m.to_rat()) == h.to_rat()
        # row span preserved both ways
        hb = lattice_basis(m)
        for row in h.entries:
            assert lattice_contains(hb, row) or all(x == 0 for x in row)
        for row in m.entries:
            assert lattice_contains(lattice_basis(h), row)


def test_snf_golden():
    m = IntMatrix([[2, 1], [2, 0]])
    s, u, v = smith_normal_form(m)
    assert s == IntMatrix([[1, 0], [0, 2]])  # hand computation oracle
    assert (u.to_rat() * m.to_rat() * v.to_rat()) == s.to_rat()
    assert abs(u.det()) == 1 and abs(v.det()) == 1
    ident = IntMatrix.identity(4)
    s, _, _ = smith_normal_form(ident)
    assert s == ident


def test_snf_divisibility_and_cokernel_random():
    rng = random.Random(13)
    for _ in range(30):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        m = IntMatrix([[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)])
        s, u, v = smith_normal_form(m)
        assert (u.to_rat() * m.to_rat() * v.to_rat()) == s.to_rat()
        assert abs(u.det()) == 1 and abs(v.det()) == 1
        d = [x for x in s.diagonal() if x != 0]
        assert all(x > 0 for x in d)
        for a, b in zip(d, d[1:]):
            assert b % a == 0
        # off-diagonal zero
        for i in range(s.rows):
            for j in range(s.cols):
                if i != j:
                    assert s.entries[i][j] == 0
        if r == c:
            det = m.det()
            if det != 0:
                prod = 1
                for x in d:
                    prod *= x
                assert prod == abs(det)  # |cokernel| = |det|


def test_example32_block_cokernel():
    # alpha = alpha0 (x) I, beta = I (x) alpha0 on Z^4; the 4x8 block
    # [alpha - I | beta - I] must have exactly one invariant factor 2:
    # the cokernel contains Z_2, witnessing the element v0.
    ident2 = IntMatrix.identity(2)
    ident4 = IntMatrix.identity(4)
    alpha = kron(ALPHA0, ident2)
    beta = kron(ident2, ALPHA0)
    am = IntMatrix([[alpha.entries[i][j] - ident4.entries[i][j] for j in range(4)] for i in range(4)])
    bm = IntMatrix([[beta.entries[i][j] - ident4.entries[i][j] for j in range(4)] for i in range(4)])
    block = IntMatrix([list(am.entries[i]) + list(bm.entries[i]) for i in range(4)])
    facs = invariant_factors(block)
    assert facs.count(2) == 1
    assert facs == [1, 1, 1, 2]
    # mod-2 rank oracle: the stacked columns span a 3-dim subspace of F_2^4
    rows_mod2 = [[x % 2 for x in row] for row in block.entries]
    rank = 0
    pivots = []
    for col in range(8):
        pr = None
        for i in range(rank, 4):
            if rows_mod2[i][col]:
                pr = i
                break
        if pr is None:
            continue
        rows_mod2[rank], rows_mod2[pr] = rows_mod2[pr], rows_mod2[rank]
        for i in range(4):
            if i != rank and rows_mod2[i][col]:
                rows_mod2[i] = [(a + b) % 2 for a, b in zip(rows_mod2[i], rows_mod2[rank])]
        pivots.append(col)
        rank += 1
    assert rank == 3


def test_integer_row_kernel():
    m = IntMatrix([[1, 2], [2, 4], [0, 0]])
    ker = integer_row_kernel(m)
    for row in ker.entries:
        prod = [sum(row[i] * m.entries[i][j] for i in range(3)) for j in range(2)]
        assert prod == [0, 0]
    assert ker.rows == 2


def test_lattice_sum_intersect_contains():
    a = lattice_basis(IntMatrix([[2, 0], [0, 2]]))
    b = lattice_basis(IntMatrix([[3, 0], [0, 1]]))
    s = lattice_sum(a, b)
    assert lattice_index(2, s) == 1  # 2Z^2 + (3Z x Z) = Z^2
    inter = lattice_intersect(a, b)
    assert lattice_index(2, inter) == 12  # 6Z x 2Z
    assert lattice_contains(inter, (6, 2))
    assert not lattice_contains(inter, (3, 2))


def test_integral_points_of_subspace():
    # span{(1/2, 1)} in Q^2 meets Z^2 in Z(1, 2)
    basis = subspace_basis([(Fraction(1, 2), Fraction(1))], 2)
    lat = integral_points_of_subspace(basis, 2)
    assert lat.rows == 1
    assert lattice_contains(lat, (1, 2))
    assert not lattice_contains(lat, (1, 1))
    full = integral_points_of_subspace(
        [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))], 2
    )
    assert lattice_index(2, full) == 1
