import random
from itertools import permutations

import pytest

from momang import intlat
from momang.errors import ShapeError


def random_matrix(rng, rows, cols, lo=-9, hi=9):
    return [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]


def det_by_permutations(mat):
    # Leibniz expansion, the slow oracle for the Bareiss determinant
    n = len(mat)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = 1
        for i in range(n):
            term *= mat[i][perm[i]]
        total += sign * term
    return total


def test_det_matches_permutation_expansion():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 4)
        m = random_matrix(rng, n, n)
        assert intlat.det(m) == det_by_permutations(m)


def test_det_identity_and_empty():
    assert intlat.det([]) == 1
    assert intlat.det(intlat.identity(5)) == 1


def test_det_rejects_nonsquare():
    with pytest.raises(ShapeError):
        intlat.det([[1, 2, 3], [4, 5, 6]])


def test_smith_form_properties_randomized():
    rng = random.Random(2024)
    for trial in range(200):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = random_matrix(rng, rows, cols)
        snf = intlat.smith_normal_form(m)
        assert intlat.mat_mul(intlat.mat_mul(snf.u, m), snf.v) == snf.d
        assert abs(intlat.det(snf.u)) == 1
        assert abs(intlat.det(snf.v)) == 1
        diag = snf.diagonal()
        assert all(x >= 0 for x in diag)
        # off-diagonal zero
        for i in range(rows):
            for j in range(cols):
                if i != j:
                    assert snf.d[i][j] == 0
        nz = [x for x in diag if x != 0]
        for a, b in zip(nz, nz[1:]):
            assert b % a == 0
        # zeros trail the chain
        seen_zero = False
        for x in diag:
            if x == 0:
                seen_zero = True
            elif seen_zero:
                pytest.fail("nonzero after zero on the diagonal")


def test_smith_form_deterministic():
    m = [[4, 6], [2, 8]]
    first = intlat.smith_normal_form(m)
    second = intlat.smith_normal_form([row[:] for row in m])
    assert first.d == second.d and first.u == second.u and first.v == second.v


def test_invariant_factors_known():
    assert intlat.invariant_factors([[2, 0], [0, 4]]) == [2, 4]
    assert intlat.invariant_factors([[0, 0], [0, 0]]) == []
    assert intlat.invariant_factors([[1, 2], [3, 4]]) == [1, 2]


def test_kernel_basis_randomized():
    rng = random.Random(99)
    for trial in range(100):
        rows = rng.randint(1, 4)
        cols = rng.randint(rows, 6)
        m = random_matrix(rng, rows, cols, -5, 5)
        basis = intlat.kernel_basis(m)
        assert len(basis) == cols - intlat.rank(m)
        for row in basis:
            assert intlat.mat_vec(m, row) == [0] * rows
        if basis:
            # saturation: the basis spans a direct summand
            assert intlat.invariant_factors(basis) == [1] * len(basis)


def test_kernel_basis_of_surjection():
    m = [[1, 0, -1, 0], [0, 1, 0, -1]]
    basis = intlat.kernel_basis(m)
    assert len(basis) == 2
    lattice = intlat.hermite_row_form(basis)
    assert lattice == intlat.hermite_row_form([[1, 0, 1, 0], [0, 1, 0, 1]])


def test_is_primitive():
    assert intlat.is_primitive([2, 3])
    assert not intlat.is_primitive([2, 4])
    assert intlat.is_primitive([-1])
    with pytest.raises(ValueError):
        intlat.is_primitive([0, 0])


def test_maximal_minor_gcd():
    assert intlat.maximal_minor_gcd([[2, 4, 6]]) == 2
    assert intlat.maximal_minor_gcd([[1, 0], [0, 1]]) == 1
    assert intlat.maximal_minor_gcd([[1, 1, 0], [0, 2, 2]]) == 2
    assert intlat.maximal_minor_gcd([[1, 1, 0], [0, 1, 2]]) == 1
    assert intlat.maximal_minor_gcd([[0, 0]]) == 0
    with pytest.raises(ShapeError):
        intlat.maximal_minor_gcd([[1], [2]])


def test_hermite_idempotent_and_lattice_invariant():
    rng = random.Random(5)
    for trial in range(100):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 5)
        m = random_matrix(rng, rows, cols, -6, 6)
        h = intlat.hermite_row_form(m)
        assert intlat.hermite_row_form(h) == h
        # multiplying by a unimodular matrix on the left keeps the row lattice
        u = intlat.identity(rows)
        for _ in range(4):
            i, j = rng.randrange(rows), rng.randrange(rows)
            if i != j:
                c = rng.randint(-2, 2)
                u[i] = [x + c * y for x, y in zip(u[i], u[j])]
        assert intlat.hermite_row_form(intlat.mat_mul(u, m)) == h


def test_hermite_pivot_normalization():
    h = intlat.hermite_row_form([[0, 2], [3, 1]])
    for i, row in enumerate(h):
        lead = next(j for j, x in enumerate(row) if x)
        assert row[lead] > 0
        for above in range(i):
            assert 0 <= h[above][lead] < row[lead]


def test_solve_integer_round_trip():
    rng = random.Random(31)
    for trial in range(60):
        p = rng.randint(1, 4)
        q = rng.randint(1, 4)
        bt = random_matrix(rng, p, q, -4, 4)
        c = [rng.randint(-5, 5) for _ in range(q)]
        x = intlat.mat_vec(bt, c)
        sol = intlat.solve_integer(bt, x)
        assert sol is not None
        assert intlat.mat_vec(bt, sol) == x


def test_solve_integer_unsolvable():
    assert intlat.solve_integer([[2]], [1]) is None
    assert intlat.solve_integer([[1], [0]], [3, 1]) is None


def test_inverse_unimodular():
    rng = random.Random(17)
    for trial in range(30):
        n = rng.randint(1, 4)
        u = intlat.identity(n)
        for _ in range(6):
            i, j = rng.randrange(n), rng.randrange(n)
            if i != j:
                c = rng.randint(-3, 3)
                u[i] = [x + c * y for x, y in zip(u[i], u[j])]
        inv = intlat.inverse_unimodular(u)
        assert intlat.mat_mul(u, inv) == intlat.identity(n)
    with pytest.raises(ValueError):
        intlat.inverse_unimodular([[2]])
