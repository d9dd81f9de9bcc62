"""Hermite and Smith normal forms, and lattice arithmetic over Z.

Rows of an IntMatrix are read as generators of a sublattice of Z^n.
HNF output is canonical: positive pivots, entries above a pivot reduced
into [0, pivot), zero rows dropped by the lattice helpers.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .matrix import IntMatrix, RatMatrix, Vec


def hermite_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row HNF: returns (H, U) with H = U*M, U unimodular.

    H is upper echelon with positive pivots and reduced entries above them;
    the row span over Z is preserved.
    """
    a = [list(r) for r in m.entries]
    nr, nc = m.rows, m.cols
    u = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    pr = 0
    for c in range(nc):
        piv = None
        for i in range(pr, nr):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[pr], a[piv] = a[piv], a[pr]
        u[pr], u[piv] = u[piv], u[pr]
        # clear below the pivot with extended-gcd row ops
        for i in range(pr + 1, nr):
            while a[i][c] != 0:
                q = a[pr][c] // a[i][c]
                a[pr] = [x - q * y for x, y in zip(a[pr], a[i])]
                u[pr] = [x - q * y for x, y in zip(u[pr], u[i])]
                a[pr], a[i] = a[i], a[pr]
                u[pr], u[i] = u[i], u[pr]
        if a[pr][c] < 0:
            a[pr] = [-x for x in a[pr]]
            u[pr] = [-x for x in u[pr]]
        # reduce entries above the pivot
        p = a[pr][c]
        for i in range(pr):
            q = a[i][c] // p
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[pr])]
                u[i] = [x - q * y for x, y in zip(u[i], u[pr])]
        pr += 1
        if pr == nr:
            break
    return IntMatrix(a), IntMatrix(u)


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Returns (S, U, V) with S = U*M*V diagonal, d_i | d_{i+1}, U, V unimodular."""
    a = [list(r) for r in m.entries]
    nr, nc = m.rows, m.cols
    u = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    v = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    def clear_block(t: int) -> None:
        """Drive a[t][t] to the gcd of its row/column tail and clear both.

        Classical pattern: reduce each entry modulo the pivot (remainder on
        the entry, not the pivot) and swap only when the remainder is
        nonzero; every swap strictly shrinks |a[t][t]|, so this terminates,
        and with pivot +-1 a single pass clears everything.
        """
        while True:
            dirty = False
            for i in range(t + 1, nr):
                while a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    if q:
                        add_row(i, t, -q)
                    if a[i][t] != 0:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, nc):
                while a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    if q:
                        add_col(j, t, -q)
                    if a[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
            if not dirty and all(a[i][t] == 0 for i in range(t + 1, nr)):
                break

    t = 0
    while t < min(nr, nc):
        piv = None
        for i in range(t, nr):
            for j in range(t, nc):
                if a[i][j] != 0:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        clear_block(t)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    # enforce the divisibility chain
    r = t
    changed = True
    while changed:
        changed = False
        for i in range(r - 1):
            if a[i + 1][i + 1] % a[i][i] != 0:
                add_col(i, i + 1, 1)
                clear_block(i)
                if a[i][i] < 0:
                    a[i] = [-x for x in a[i]]
                    u[i] = [-x for x in u[i]]
                if a[i + 1][i + 1] < 0:
                    a[i + 1] = [-x for x in a[i + 1]]
                    u[i + 1] = [-x for x in u[i + 1]]
                changed = True
    return IntMatrix(a), IntMatrix(u), IntMatrix(v)


def invariant_factors(m: IntMatrix) -> list[int]:
    s, _, _ = smith_normal_form(m)
    return [d for d in s.diagonal() if d != 0]


# -- lattices ----------------------------------------------------------------

def lattice_basis(gens: IntMatrix) -> IntMatrix:
    """Canonical HNF basis of the lattice spanned by the rows (zero rows dropped)."""
    h, _ = hermite_normal_form(gens)
    rows = [r for r in h.entries if any(x != 0 for x in r)]
    return IntMatrix(rows) if rows else IntMatrix.zeros(0, gens.cols)


def lattice_sum(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.cols != b.cols:
        raise ValueError("ambient dimension mismatch")
    return lattice_basis(IntMatrix(list(a.entries) + list(b.entries)))


def lattice_contains(basis: IntMatrix, v) -> bool:
    """Membership of an integer vector in the lattice with HNF row basis."""
    v = list(int(x) for x in v)
    rows = basis.entries
    pivots = []
    for r in rows:
        j = next((k for k, x in enumerate(r) if x != 0), None)
        pivots.append(j)
    for r, pj in zip(rows, pivots):
        if pj is None:
            continue
        if v[pj] % r[pj] != 0:
            return False
        q = v[pj] // r[pj]
        v = [x - q * y for x, y in zip(v, r)]
    return all(x == 0 for x in v)


def lattice_rank(basis: IntMatrix) -> int:
    return len([r for r in basis.entries if any(x != 0 for x in r)])


def lattice_index(ambient_rank: int, basis: IntMatrix) -> int | None:
    """Index [Z^n : L] for a full-rank lattice, None if rank deficient."""
    rows = [r for r in basis.entries if any(x != 0 for x in r)]
    if len(rows) < ambient_rank:
        return None
    h = lattice_basis(IntMatrix(rows))
    prod = 1
    for i in range(ambient_rank):
        prod *= h.entries[i][i]
    return abs(prod)


def integer_row_kernel(m: IntMatrix) -> IntMatrix:
    """Basis of {x in Z^rows : x * M = 0}, via HNF transform rows at zero rows."""
    h, u = hermite_normal_form(m)
    rows = []
    for i in range(m.rows):
        if all(x == 0 for x in h.entries[i]):
            rows.append(u.entries[i])
    return lattice_basis(IntMatrix(rows)) if rows else IntMatrix.zeros(0, m.rows)


def lattice_intersect(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Intersection of two row lattices in the same ambient Z^n."""
    if a.cols != b.cols:
        raise ValueError("ambient dimension mismatch")
    ra = [r for r in a.entries if any(r)]
    rb = [r for r in b.entries if any(r)]
    if not ra or not rb:
        return IntMatrix.zeros(0, a.cols)
    # x*A = -y*B  <=>  (x, y) in the row kernel of [A; B]; the common vector is x*A
    ker = integer_row_kernel(IntMatrix(ra + rb))
    rows = []
    for kv in ker.entries:
        x = kv[: len(ra)]
        v = [0] * a.cols
        for coef, gen in zip(x, ra):
            v = [vi + coef * gi for vi, gi in zip(v, gen)]
        rows.append(v)
    return lattice_basis(IntMatrix(rows)) if rows else IntMatrix.zeros(0, a.cols)


def integral_points_of_subspace(basis: list[Vec], dim: int) -> IntMatrix:
    """HNF basis of Z^dim ∩ span_Q(basis).

    The subspace is rewritten as the kernel of an integer equation matrix;
    the integer kernel of that matrix is exactly the saturated lattice.
    """
    from .matrix import subspace_equations

    eqs = subspace_equations(basis, dim)
    if eqs.rows == 0:
        return IntMatrix.identity(dim)
    scaled_rows = []
    for row in eqs.entries:
        denom = 1
        for x in row:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        scaled_rows.append([int(x * denom) for x in row])
    eq_int = IntMatrix(scaled_rows).transpose()  # kernel on the left
    return integer_row_kernel(eq_int)


def rational_to_integer_rows(m: RatMatrix) -> IntMatrix:
    """Clear denominators row by row (each row scaled to primitive integers)."""
    rows = []
    for row in m.entries:
        denom = 1
        for x in row:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        ints = [int(x * denom) for x in row]
        g = 0
        for x in ints:
            g = gcd(g, abs(x))
        if g > 1:
            ints = [x // g for x in ints]
        rows.append(ints)
    return IntMatrix(rows)


def coset_representatives(lat: IntMatrix, ambient: int, cap: int = 100000) -> list[tuple[int, ...]] | None:
    """Representatives of Z^ambient / L for a full-rank lattice L, or None if too many."""
    idx = lattice_index(ambient, lat)
    if idx is None or idx > cap:
        return None
    h = lattice_basis(lat)
    diag = [h.entries[i][i] for i in range(ambient)]
    reps = [()]
    for d in diag:
        reps = [r + (k,) for r in reps for k in range(d)]
    return reps
