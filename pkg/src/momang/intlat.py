"""Exact integer-lattice linear algebra.

Smith and Hermite normal forms, saturated kernel bases, primitivity and
unimodularity tests.  Everything here is arbitrary-precision integer
arithmetic on plain list-of-lists matrices; no floating point is used
anywhere (normal-form pivots can blow up intermediate values well past
machine range).
"""

from dataclasses import dataclass, field
from itertools import combinations
from math import gcd

from .errors import ShapeError

Matrix = list  # list[list[int]], row-major


def zeros(rows, cols):
    return [[0] * cols for _ in range(rows)]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    if a and b and len(a[0]) != len(b):
        raise ShapeError(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x{len(b[0]) if b else 0}")
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(cols)]
            for i in range(len(a))]


def mat_vec(a, v):
    if a and len(a[0]) != len(v):
        raise ShapeError(f"cannot apply {len(a)}x{len(a[0])} to vector of length {len(v)}")
    return [sum(row[k] * v[k] for k in range(len(v))) for row in a]


def transpose(a):
    if not a:
        return []
    return [[a[i][j] for i in range(len(a))] for j in range(len(a[0]))]


def copy_matrix(a):
    return [row[:] for row in a]


def det(mat):
    """Exact determinant via fraction-free (Bareiss) elimination."""
    n = len(mat)
    if n == 0:
        return 1
    if any(len(row) != n for row in mat):
        raise ShapeError("determinant requires a square matrix")
    a = copy_matrix(mat)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def is_unimodular(mat):
    return len(mat) == (len(mat[0]) if mat else 0) and abs(det(mat)) == 1


@dataclass
class SmithDecomposition:
    """U @ source @ V = D with U, V unimodular and D a divisibility-chain diagonal."""

    u: Matrix
    d: Matrix
    v: Matrix

    def diagonal(self):
        return [self.d[i][i] for i in range(min(len(self.d), len(self.d[0]) if self.d else 0))]

    def invariant_factors(self):
        return [x for x in self.diagonal() if x != 0]

    def rank(self):
        return len(self.invariant_factors())


@dataclass
class AbelianGroupInvariants:
    """A finitely generated abelian group: Z^free_rank + sum of Z/t cyclic parts."""

    free_rank: int
    torsion: list = field(default_factory=list)

    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def smith_normal_form(mat):
    """Smith normal form with transforms.

    Returns a SmithDecomposition (u, d, v) with u @ mat @ v = d, u and v
    unimodular, and the diagonal of d nonnegative in divisibility order.
    Deterministic for a fixed input: pivots are chosen as the smallest
    nonzero absolute value, ties broken by position.
    """
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    if any(len(row) != cols for row in mat):
        raise ShapeError("ragged matrix")
    a = copy_matrix(mat)
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, factor):
        a[dst] = [x + factor * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + factor * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, factor):
        for row in a:
            row[dst] += factor * row[src]
        for row in v:
            row[dst] += factor * row[src]

    t = 0
    while t < min(rows, cols):
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0 and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            restart = False
            for i in range(t + 1, rows):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    add_row(t, i, -q)
                    if a[i][t] != 0:
                        swap_rows(t, i)
                        restart = True
                        break
            if restart:
                continue
            for j in range(t + 1, cols):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    add_col(t, j, -q)
                    if a[t][j] != 0:
                        swap_cols(t, j)
                        restart = True
                        break
            if restart:
                continue
            # enforce the divisibility chain: d_t must divide the rest
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if a[i][j] % a[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(offender, t, 1)
        t += 1

    # nonnegative diagonal; sign absorbed into u
    for i in range(min(rows, cols)):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]
    return SmithDecomposition(u=u, d=a, v=v)


def invariant_factors(mat):
    """Nonzero diagonal of the Smith form, without the transform matrices."""
    return smith_normal_form(mat).invariant_factors()


def rank(mat):
    return len(invariant_factors(mat))


def kernel_basis(mat):
    """A saturated Z-basis of the integer kernel of mat, as rows.

    The stacked rows span ker(mat) exactly, and their Smith invariant
    factors are all 1 (the basis is a direct summand of Z^cols).
    """
    cols = len(mat[0]) if mat else 0
    snf = smith_normal_form(mat)
    r = snf.rank()
    basis = []
    for j in range(r, cols):
        row = [snf.v[i][j] for i in range(cols)]
        lead = next((x for x in row if x != 0), 1)
        if lead < 0:
            row = [-x for x in row]
        basis.append(row)
    return basis


def is_primitive(vec):
    """True iff the gcd of the entries is 1.  The zero vector is rejected."""
    if not any(vec):
        raise ValueError("primitivity is undefined for the zero vector")
    g = 0
    for x in vec:
        g = gcd(g, x)
    return g == 1


def maximal_minor_gcd(mat):
    """gcd of the absolute values of all maximal (rows x rows) minors.

    Returns 0 iff the matrix has rank below its row count.
    """
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    if rows > cols:
        raise ShapeError(f"need rows <= cols, got {rows}x{cols}")
    g = 0
    for subset in combinations(range(cols), rows):
        minor = det([[mat[i][j] for j in subset] for i in range(rows)])
        g = gcd(g, minor)
        if g == 1:
            return 1
    return abs(g)


def hermite_row_form(mat):
    """Canonical row-style Hermite form of the row lattice of mat.

    Positive pivots, entries above a pivot reduced into [0, pivot), zero
    rows pruned.  Two matrices have equal row lattices iff their forms
    are identical.
    """
    rows = [row[:] for row in mat]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivot_row = 0
    for col in range(ncols):
        if pivot_row == nrows:
            break
        while True:
            nonzero = [i for i in range(pivot_row, nrows) if rows[i][col] != 0]
            if not nonzero:
                break
            best = min(nonzero, key=lambda i: (abs(rows[i][col]), i))
            rows[pivot_row], rows[best] = rows[best], rows[pivot_row]
            p = rows[pivot_row][col]
            clean = True
            for i in range(pivot_row + 1, nrows):
                if rows[i][col] != 0:
                    q = rows[i][col] // p
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[pivot_row])]
                    if rows[i][col] != 0:
                        clean = False
            if clean:
                break
        if rows[pivot_row][col] == 0:
            continue
        if rows[pivot_row][col] < 0:
            rows[pivot_row] = [-x for x in rows[pivot_row]]
        p = rows[pivot_row][col]
        for i in range(pivot_row):
            q = rows[i][col] // p
            if q:
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[pivot_row])]
        pivot_row += 1
    return rows[:pivot_row]


def solve_integer(bt, x):
    """Solve bt @ c = x over the integers via the Smith form.

    Returns the solution vector c (with free coordinates set to 0), or
    None when no integer solution exists.  When the solution is unique
    it is returned exactly.
    """
    p = len(bt)
    q = len(bt[0]) if bt else 0
    if len(x) != p:
        raise ShapeError(f"vector length {len(x)} does not match {p} rows")
    snf = smith_normal_form(bt)
    y = mat_vec(snf.u, x)
    w = [0] * q
    for i in range(min(p, q)):
        d = snf.d[i][i]
        if d != 0:
            if y[i] % d != 0:
                return None
            w[i] = y[i] // d
        elif y[i] != 0:
            return None
    for i in range(min(p, q), p):
        if y[i] != 0:
            return None
    return mat_vec(snf.v, w)


def inverse_unimodular(mat):
    """Exact inverse of a unimodular integer matrix."""
    snf = smith_normal_form(mat)
    n = len(mat)
    if snf.d != identity(n):
        raise ValueError("matrix is not unimodular")
    return mat_mul(snf.v, snf.u)
