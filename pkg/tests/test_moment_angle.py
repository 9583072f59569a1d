import random

import pytest

from momang import intlat, moment_angle as ma
from momang.combinatorics import dual_complex, simple_polytope, simplicial_complex
from momang.errors import BudgetError, ValidationError


def simplex_dual(n):
    m = n + 1
    verts = [[j for j in range(1, m + 1) if j != i] for i in range(1, m + 1)]
    return dual_complex(simple_polytope(m, n, verts))


def square_dual():
    return dual_complex(simple_polytope(4, 2, [[1, 2], [2, 3], [3, 4], [1, 4]]))


def random_complex(rng, m):
    while True:
        count = rng.randint(1, 4)
        faces = set()
        for _ in range(count):
            size = rng.randint(1, m)
            faces.add(frozenset(rng.sample(range(1, m + 1), size)))
        maximal = {f for f in faces if not any(f < g for g in faces)}
        if set().union(*maximal) == set(range(1, m + 1)):
            return simplicial_complex(m, maximal)


def test_dimension_values():
    k = simplex_dual(2)  # m = 3
    assert ma.dimension(k, ma.COMPLEX, 2) == 5
    assert ma.dimension(k, ma.QUATERNIONIC, 2) == 11
    with pytest.raises(ValidationError):
        ma.dimension(k, "octonionic", 2)


def test_dimension_report_flags_quaternionic():
    k = simplex_dual(1)
    rep = ma.dimension_report(k, ma.QUATERNIONIC, 1)
    assert rep.value == 7 and rep.m_plus_n == 3
    assert rep.differs_from_m_plus_n
    rep_c = ma.dimension_report(k, ma.COMPLEX, 1)
    assert rep_c.value == rep_c.m_plus_n == 3
    assert not rep_c.differs_from_m_plus_n


def test_cell_model_counts_segment():
    model = ma.build_cell_model(simplex_dual(1), ma.COMPLEX)
    # all 9 tuples except dd (the full set {1,2} is not a face of two points)
    assert sum(model.cell_counts().values()) == 8
    assert model.top_dimension() == 3


def test_boundary_squares_to_zero():
    rng = random.Random(12)
    for trial in range(15):
        k = random_complex(rng, rng.randint(2, 4))
        for flavor in (ma.COMPLEX, ma.QUATERNIONIC):
            model = ma.build_cell_model(k, flavor)
            for dim, mat in model.boundaries.items():
                lower = model.boundaries.get(dim - 1)
                if lower and lower[0] and mat and mat[0]:
                    prod = intlat.mat_mul(lower, mat)
                    assert all(all(x == 0 for x in row) for row in prod)


def test_budget_enforced():
    k = simplicial_complex(11, [[i] for i in range(1, 12)])
    with pytest.raises(BudgetError) as exc:
        ma.build_cell_model(k, ma.COMPLEX)
    assert exc.value.bound == 10
    with pytest.raises(BudgetError):
        ma.build_cell_model(simplicial_complex(10, [[i] for i in range(1, 11)]),
                            ma.QUATERNIONIC)


def test_simplex_models_are_spheres_complex():
    for n in range(1, 4):
        k = simplex_dual(n)
        profile = ma.homology(ma.build_cell_model(k, ma.COMPLEX))
        assert ma.is_sphere_profile(profile, 2 * n + 1), profile.groups


def test_simplex_models_are_spheres_quaternionic():
    for n in range(1, 3):
        k = simplex_dual(n)
        profile = ma.homology(ma.build_cell_model(k, ma.QUATERNIONIC))
        assert ma.is_sphere_profile(profile, 4 * n + 3), profile.groups


def test_square_model_is_product_of_spheres():
    profile = ma.homology(ma.build_cell_model(square_dual(), ma.COMPLEX))
    assert profile.rank(0) == 1 and profile.rank(3) == 2 and profile.rank(6) == 1
    assert profile.nonzero_degrees() == [0, 3, 6]
    assert all(not profile.torsion(d) for d in range(7))


def test_poincare_duality_ranks():
    for k, flavor, n in [(square_dual(), ma.COMPLEX, 2),
                         (simplex_dual(2), ma.COMPLEX, 2),
                         (simplex_dual(1), ma.QUATERNIONIC, 1)]:
        model = ma.build_cell_model(k, flavor)
        profile = ma.homology(model)
        top = ma.dimension(k, flavor, n)
        for deg in range(top + 1):
            assert profile.rank(deg) == profile.rank(top - deg), (flavor, deg)


def test_euler_characteristic_consistency():
    rng = random.Random(44)
    for trial in range(10):
        k = random_complex(rng, rng.randint(2, 4))
        model = ma.build_cell_model(k, ma.COMPLEX)
        profile = ma.homology(model)
        assert ma.euler_characteristic(model) == ma.euler_characteristic_from_homology(profile)


def test_full_simplex_model_is_contractible():
    # over the full simplex the product is D^2 x D^2, a contractible space
    k = simplicial_complex(2, [[1, 2]])
    profile = ma.homology(ma.build_cell_model(k, ma.COMPLEX))
    assert profile.rank(0) == 1
    assert profile.nonzero_degrees() == [0]
