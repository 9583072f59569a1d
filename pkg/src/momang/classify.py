"""Decision procedures for equivariant-homeomorphism questions.

Two characteristic pairs over the same polytope are equivalent when one
matrix is carried to the other by a unimodular base change, a symmetry
of the dual complex, and per-facet signs; the search anchors on a fixed
vertex, solves for the base change, and verifies it columnwise.  Kernel
bundles are compared as sublattices of the degree-2 component, which is
exactly equivalence up to reparametrizing the kernel torus.
"""

from dataclasses import dataclass, field
from itertools import permutations, product

from . import intlat
from .bundles import kernel_chern_classes
from .charpair import (from_columns, validate_characteristic_pair,
                       validate_quaternionic_functor)
from .combinatorics import automorphisms, dual_complex, isomorphisms
from .errors import BudgetError, IncomparableError, ValidationError

LEVEL_EQUIVALENT = "equivalent"
LEVEL_INEQUIVALENT = "inequivalent"
LEVEL_PRIMARY_EQUIVALENT = "primary-equivalent"
LEVEL_PRIMARY_DISTINCT = "primary-distinct"
LEVEL_INCOMPARABLE = "incomparable"


@dataclass
class EquivalenceCertificate:
    """Witness that lam2 = delta . lam . P_sigma . D_signs.

    `sigma` maps facet i of the first pair to facet sigma[i-1] of the
    second; `signs[i-1]` is the sign applied to column i.
    """

    delta: list   # unimodular n x n
    sigma: tuple  # facet permutation, 1-based images
    signs: tuple  # entries +-1, per facet of the first pair

    def apply(self, lam):
        """Transform lam by this certificate, returning the target columns."""
        cols = [None] * lam.m
        for i in range(1, lam.m + 1):
            vec = intlat.mat_vec(self.delta, lam.column(i))
            cols[self.sigma[i - 1] - 1] = [self.signs[i - 1] * x for x in vec]
        return from_columns(cols)

    def inverse(self, n):
        delta_inv = intlat.inverse_unimodular(self.delta)
        m = len(self.sigma)
        sigma_inv = [0] * m
        signs_inv = [1] * m
        for i in range(1, m + 1):
            j = self.sigma[i - 1]
            sigma_inv[j - 1] = i
            signs_inv[j - 1] = self.signs[i - 1]
        return EquivalenceCertificate(delta_inv, tuple(sigma_inv), tuple(signs_inv))


@dataclass
class RigidityVerdict:
    level: str
    certificate: EquivalenceCertificate = None
    bundle_report: dict = field(default_factory=dict)


def _certificate_search(p, lam, lam2, sigmas):
    """Anchor-vertex search over the given facet permutations."""
    n = p.dim
    anchor = min(tuple(sorted(v)) for v in p.vertices)
    m1 = lam.columns(anchor)
    for sigma in sigmas:
        image = [sigma[i - 1] for i in anchor]
        m2 = lam2.columns(image)
        for eps in product((1, -1), repeat=n):
            signed = [[m1[r][c] * eps[c] for c in range(n)] for r in range(n)]
            if abs(intlat.det(signed)) != 1:
                continue
            delta = intlat.mat_mul(m2, intlat.inverse_unimodular(signed))
            if abs(intlat.det(delta)) != 1:
                continue
            signs = [0] * lam.m
            for pos, i in enumerate(anchor):
                signs[i - 1] = eps[pos]
            ok = True
            for i in range(1, lam.m + 1):
                if signs[i - 1]:
                    continue
                cand = intlat.mat_vec(delta, lam.column(i))
                target = lam2.column(sigma[i - 1])
                if cand == target:
                    signs[i - 1] = 1
                elif [-x for x in cand] == target:
                    signs[i - 1] = -1
                else:
                    ok = False
                    break
            if ok:
                return EquivalenceCertificate(delta, tuple(sigma), tuple(signs))
    return None


def equivalent_pairs(p, lam, lam2, bound=12):
    """Certificate for equivalence of two pairs over the same polytope, or None."""
    for cand in (lam, lam2):
        report = validate_characteristic_pair(p, cand)
        if not report.valid:
            raise ValidationError("invalid pair: " + "; ".join(report.failures))
    k = dual_complex(p)
    return _certificate_search(p, lam, lam2, automorphisms(k, bound=bound))


def compare_kernel_bundles(t, t2, pres=None):
    """True iff the two tuples generate the same sublattice of degree 2."""
    m1 = t.coordinate_matrix()
    m2 = t2.coordinate_matrix()
    w1 = {len(row) for row in m1} or {0}
    w2 = {len(row) for row in m2} or {0}
    if w1 != w2:
        raise IncomparableError("tuples live over different presentations")
    return intlat.hermite_row_form(m1) == intlat.hermite_row_form(m2)


def rigidity_verdict_complex(p, lam, p2, lam2, bound=12):
    """Full verdict for two complex inputs.

    Equivalent iff the dual complexes are isomorphic and some
    identification admits an equivalence certificate; the kernel-bundle
    sublattice comparison is then run as a consistency assertion, since
    equivalent pairs determine isomorphic bundles.
    """
    for poly, cand in ((p, lam), (p2, lam2)):
        report = validate_characteristic_pair(poly, cand)
        if not report.valid:
            raise ValidationError("invalid pair: " + "; ".join(report.failures))
    k1, k2 = dual_complex(p), dual_complex(p2)
    isos = isomorphisms(k1, k2, bound=bound)
    if not isos:
        return RigidityVerdict(LEVEL_INCOMPARABLE,
                               bundle_report={"equal_sublattice": False})
    # relabel the second pair back to the first polytope via each isomorphism
    for iso in isos:
        inv = [0] * len(iso)
        for i, j in enumerate(iso, start=1):
            inv[j - 1] = i
        relabeled = from_columns([lam2.column(iso[i - 1]) for i in range(1, lam2.m + 1)])
        cert = _certificate_search(p, lam, relabeled, automorphisms(k1, bound=bound))
        if cert is not None:
            # consistency: the transformed pair carries the same bundle sublattice
            transformed = cert.apply(lam)
            t1 = kernel_chern_classes(p, transformed)
            t2 = kernel_chern_classes(p, relabeled)
            equal = compare_kernel_bundles(t1, t2)
            if not equal:
                raise ValidationError(
                    "certificate found but kernel sublattices differ; corrupt input")
            return RigidityVerdict(LEVEL_EQUIVALENT, certificate=cert,
                                   bundle_report={"equal_sublattice": True})
    return RigidityVerdict(LEVEL_INEQUIVALENT,
                           bundle_report={"equal_sublattice": False})


def _functors_match(p, f, p2, f2, bound=12):
    """Label data equal up to dual-complex isomorphism and relabeling of the
    acting-coordinate universe."""
    if f.n_act != f2.n_act:
        return False
    if f.n_act > bound:
        raise BudgetError(
            f"universe relabeling search limited to {bound} coordinates, "
            f"got {f.n_act}", bound)
    k1, k2 = dual_complex(p), dual_complex(p2)
    isos = isomorphisms(k1, k2, bound=bound)
    universe = range(1, f.n_act + 1)
    for iso in isos:
        pairs = [(f.label(i), f2.label(iso[i - 1]))
                 for i in range(1, p.facet_count + 1)]
        if any(len(a) != len(b) for a, b in pairs):
            continue
        for perm in permutations(universe):
            if all(frozenset(perm[a - 1] for a in src) == dst
                   for src, dst in pairs):
                return True
    return False


def rigidity_verdict_quaternionic(p, f, tuple1, p2, f2, tuple2, bound=12):
    """Verdict for quaternionic inputs with computed primary tuples.

    Over a 4-dimensional base the primary degree-4 tuples are complete
    invariants and a full equivalent/inequivalent verdict is emitted;
    over higher-dimensional bases only primary-equivalent or
    primary-distinct is ever reported.
    """
    for poly, functor in ((p, f), (p2, f2)):
        report = validate_quaternionic_functor(poly, functor)
        if not report.valid:
            raise ValidationError("invalid functor: " + "; ".join(report.failures))
    if tuple1.base_dim != tuple2.base_dim:
        return RigidityVerdict(LEVEL_INCOMPARABLE,
                               bundle_report={"equal_sublattice": False})
    base_dim = tuple1.base_dim
    functors_ok = _functors_match(p, f, p2, f2, bound=bound)
    lattices_ok = (intlat.hermite_row_form(tuple1.classes)
                   == intlat.hermite_row_form(tuple2.classes))
    same = functors_ok and lattices_ok
    report = {"equal_sublattice": lattices_ok, "functors_match": functors_ok}
    if base_dim == 4:
        level = LEVEL_EQUIVALENT if same else LEVEL_INEQUIVALENT
    else:
        level = LEVEL_PRIMARY_EQUIVALENT if same else LEVEL_PRIMARY_DISTINCT
    assert not (base_dim > 4 and level == LEVEL_EQUIVALENT)
    return RigidityVerdict(level, bundle_report=report)
