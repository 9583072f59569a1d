"""Disk-sphere cell models of moment-angle manifolds and their homology.

Each coordinate carries the minimal CW structure of (D^2, S^1) in the
complex flavor or (D^4, S^3) in the quaternionic one: a base point b, a
sphere cell s, and a disc cell d with boundary s.  A cell of the model
is a tuple over {b, s, d} whose d-support is a face of the complex; the
boundary operator replaces one d by s with the usual product-complex
Koszul sign.  This brute-force model is the homology oracle for the
rest of the package.
"""

from dataclasses import dataclass
from itertools import product

from .intlat import AbelianGroupInvariants, invariant_factors
from .errors import BudgetError, ValidationError

COMPLEX = "complex"
QUATERNIONIC = "quaternionic"

CELL_DIMS = {
    COMPLEX: {"b": 0, "s": 1, "d": 2},
    QUATERNIONIC: {"b": 0, "s": 3, "d": 4},
}

DEFAULT_BUDGETS = {COMPLEX: 10, QUATERNIONIC: 9}


@dataclass
class CellModel:
    m: int
    flavor: str
    cells: dict       # total dimension -> sorted list of tuples over "b","s","d"
    boundaries: dict  # dimension k -> matrix (rows: cells of k-1, cols: cells of k)

    def top_dimension(self):
        return max(self.cells)

    def cell_counts(self):
        return {k: len(v) for k, v in self.cells.items()}


def dimension(k, flavor, n):
    """Dimension of the moment-angle manifold over an n-polytope with m facets.

    The quaternionic count is 4n + 3(m - n) = 3m + n: each of the n disc
    coordinates at a vertex chart contributes 4, each of the remaining
    m - n sphere coordinates contributes 3.
    """
    m = k.vertex_count
    if flavor == COMPLEX:
        return m + n
    if flavor == QUATERNIONIC:
        return 3 * m + n
    raise ValidationError(f"unknown flavor {flavor!r}")


@dataclass
class DimensionReport:
    """Quaternionic dimension bookkeeping, flagging the additive shortcut.

    The coordinate count 4n + 3(m-n) equals 3m + n; it agrees with the
    naive m + n only in the complex flavor.  `differs_from_m_plus_n`
    surfaces the mismatch so callers cannot silently conflate the two.
    """

    flavor: str
    value: int
    m_plus_n: int
    differs_from_m_plus_n: bool


def dimension_report(k, flavor, n):
    value = dimension(k, flavor, n)
    naive = k.vertex_count + n
    return DimensionReport(flavor, value, naive, value != naive)


def build_cell_model(k, flavor, budget=None):
    """Enumerate the admissible cell tuples and their signed boundary matrices."""
    if flavor not in CELL_DIMS:
        raise ValidationError(f"unknown flavor {flavor!r}")
    m = k.vertex_count
    limit = DEFAULT_BUDGETS[flavor] if budget is None else budget
    if m > limit:
        raise BudgetError(
            f"cell enumeration over 3^{m} tuples exceeds the budget m <= {limit}", limit)
    dims = CELL_DIMS[flavor]
    cells = {}
    for tup in product("bds", repeat=m):
        support = [i + 1 for i, c in enumerate(tup) if c == "d"]
        if support and not k.is_face(support):
            continue
        total = sum(dims[c] for c in tup)
        cells.setdefault(total, []).append(tup)
    for level in cells.values():
        level.sort()
    index = {dim: {cell: j for j, cell in enumerate(level)}
             for dim, level in cells.items()}

    sphere_dim = dims["s"]
    boundaries = {}
    for dim in sorted(cells):
        if dim == 0:
            continue
        lower = cells.get(dim - 1, [])
        matrix = [[0] * len(cells[dim]) for _ in range(len(lower))]
        lower_index = index.get(dim - 1, {})
        for col, cell in enumerate(cells[dim]):
            prefix = 0
            for i, c in enumerate(cell):
                if c == "d":
                    target = cell[:i] + ("s",) + cell[i + 1:]
                    sign = -1 if prefix % 2 else 1
                    matrix[lower_index[target]][col] += sign
                prefix += dims[c]
        boundaries[dim] = matrix
    return CellModel(m=m, flavor=flavor, cells=cells, boundaries=boundaries)


@dataclass
class HomologyProfile:
    groups: dict  # degree -> AbelianGroupInvariants, degrees 0..top

    def rank(self, degree):
        g = self.groups.get(degree)
        return g.free_rank if g else 0

    def torsion(self, degree):
        g = self.groups.get(degree)
        return list(g.torsion) if g else []

    def nonzero_degrees(self):
        return [d for d, g in sorted(self.groups.items()) if not g.is_trivial()]


def homology(model):
    """Integral homology of the model from the Smith forms of its boundaries."""
    top = model.top_dimension()
    ranks = {}
    factors = {}
    for dim, mat in model.boundaries.items():
        f = invariant_factors(mat) if mat and mat[0] else []
        factors[dim] = f
        ranks[dim] = len(f)
    groups = {}
    for deg in range(top + 1):
        cell_count = len(model.cells.get(deg, []))
        free = cell_count - ranks.get(deg, 0) - ranks.get(deg + 1, 0)
        torsion = [x for x in factors.get(deg + 1, []) if x > 1]
        groups[deg] = AbelianGroupInvariants(free, torsion)
    return HomologyProfile(groups=groups)


def euler_characteristic(model):
    return sum((-1) ** dim * len(level) for dim, level in model.cells.items())


def euler_characteristic_from_homology(profile):
    return sum((-1) ** deg * g.free_rank for deg, g in profile.groups.items())


def is_sphere_profile(profile, dim):
    """True iff the profile is that of S^dim: Z in degrees 0 and dim, else 0."""
    for deg, g in profile.groups.items():
        expected_rank = 1 if deg in (0, dim) else 0
        if g.free_rank != expected_rank or g.torsion:
            return False
    return profile.rank(0) == 1 and profile.rank(dim) == 1
