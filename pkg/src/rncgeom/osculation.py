"""Osculating spaces of parametrized varieties and their projections.

A parametrization carries the N+1 homogeneous components of a rational
map ``C^d -> P^N``; affine charts are the special case with leading
component 1.  The osculating space of order k at a parameter point is
the projective span of all partial derivatives of the lifted map up to
order k, which is independent of the lift because the derivative arrays
are triangular against each other.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import sampling
from .errors import (
    DegenerateCurveError,
    DegenerateParametrizationError,
    DimensionMismatchError,
    GeneralPositionError,
)
from .linalg import (
    LinearProjection,
    ProjSubspace,
    projection_from,
    span_of,
    try_direct_sum,
)
from .poly import Polynomial, RationalCurve, curve_normalize


def _multi_indices(nvars: int, min_deg: int, max_deg: int):
    """All exponent tuples with total degree in [min_deg, max_deg]."""
    out = []
    for total in range(min_deg, max_deg + 1):
        for cuts in itertools.combinations(range(total + nvars - 1), nvars - 1):
            prev = -1
            expo = []
            for c in list(cuts) + [total + nvars - 1]:
                expo.append(c - prev - 1)
                prev = c
            out.append(tuple(expo))
    return out


class Parametrization:
    """Rational map C^d -> P^N with polynomial homogeneous components."""

    __slots__ = ("nparams", "components", "_span")

    def __init__(self, nparams: int, components: Sequence[Polynomial], check=True):
        comps = tuple(components)
        if not comps:
            raise DimensionMismatchError("no components")
        for c in comps:
            if c.nvars != nparams:
                raise DimensionMismatchError("component variable count mismatch")
        self.nparams = nparams
        self.components = comps
        self._span = None
        if check:
            self._check_generic_rank()

    @classmethod
    def from_affine(cls, nparams: int, affine_components, check=True):
        """Chart x = v(t) embedded projectively as [1 : v(t)]."""
        comps = [Polynomial.one(nparams)] + list(affine_components)
        return cls(nparams, comps, check=check)

    @property
    def ambient_dim(self) -> int:
        return len(self.components) - 1

    def eval(self, point) -> tuple:
        return tuple(c.eval(point) for c in self.components)

    def _check_generic_rank(self):
        rng = random.Random(0xA11CE)
        for _ in range(sampling.MAX_RETRIES):
            p = sampling.rand_vector(rng, self.nparams)
            if self.eval(p) == (0,) * len(self.components):
                continue
            rep = osculator(self, p, 1, _unchecked=True)
            if rep.subspace.dim == self.nparams:
                return
        raise DegenerateParametrizationError(
            "map does not have generic rank equal to its parameter count"
        )

    def span(self) -> ProjSubspace:
        """Projective span of the image: row space of the coefficient matrix."""
        if self._span is None:
            monomials = sorted({e for c in self.components for e, _ in c.items()})
            rows = []
            for m in monomials:
                rows.append([c.coefficient(m) for c in self.components])
            self._span = span_of(rows, self.ambient_dim)
        return self._span

    def as_curve(self) -> RationalCurve:
        if self.nparams != 1:
            raise DimensionMismatchError("not a curve")
        return RationalCurve(self.components)

    @classmethod
    def from_curve(cls, curve: RationalCurve, check=False) -> "Parametrization":
        return cls(1, curve.components, check=check)


@dataclass
class OsculatorReport:
    """Order-k osculating space with the regularity verdict."""

    order: int
    subspace: ProjSubspace
    is_regular: bool
    expected_dim_plus_1: int

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "dim": self.subspace.dim,
            "regular": self.is_regular,
            "expected_dim_plus_1": self.expected_dim_plus_1,
        }


def osculator(v: Parametrization, point, k: int, _unchecked=False) -> OsculatorReport:
    """Osculating space of order k at a parameter point.

    Spanned by the lifted point and all derivative vectors of order
    1..k; regular when the projective dimension reaches C(d+k, d) - 1.
    """
    if k < 0:
        raise ValueError("order must be non-negative")
    point = tuple(Fraction(x) for x in point)
    if len(point) != v.nparams:
        raise DimensionMismatchError("point length mismatch")
    rows = [v.eval(point)]
    if all(x == 0 for x in rows[0]) and not _unchecked:
        raise DegenerateParametrizationError("base point of the parametrization")
    for orders in _multi_indices(v.nparams, 1, k):
        rows.append(tuple(c.partial(orders).eval(point) for c in v.components))
    sub = span_of(rows, v.ambient_dim)
    expected = math.comb(v.nparams + k, v.nparams)
    return OsculatorReport(k, sub, sub.dim + 1 == expected, expected)


def regularity_order(v: Parametrization, point) -> int:
    """Largest k such that the map is k-regular at the point.

    Terminates because the osculator dimension is capped by the ambient
    space while the regular dimension keeps growing with k.
    """
    k = 1
    while True:
        rep = osculator(v, point, k)
        if not rep.is_regular:
            return k - 1
        k += 1


@dataclass
class AdmissibilityReport:
    ok: bool
    assignments_tested: int
    failure: Optional[str] = None

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "assignments_tested": self.assignments_tested,
            "failure": self.failure,
        }


def _distinct_permutations(values):
    return sorted(set(itertools.permutations(values)))


def admissibility_check(
    v: Parametrization,
    points: Sequence,
    weights: Sequence[int],
    rng: Optional[random.Random] = None,
    sample_limit: int = 40,
) -> AdmissibilityReport:
    """Direct-sum admissibility test for an n-tuple of parameter points.

    ``weights`` is the pondération (rho_1..rho_{n-1}); its multiset must
    match the shifted Euclidean division of q = sum(rho_i + 1) - 1 by
    n - 1.  Every choice of an omitted point and of a weight assignment
    to the rest (all of them for n <= 5, a seeded sample otherwise) must
    give regular osculators in projective direct sum equal to the span
    of the variety.

    This certifies the direct-sum condition at the given points only; it
    does not (and cannot, pointwise) certify that admissible tuples form
    a dense open set.
    """
    n = len(points)
    if len(weights) != n - 1:
        raise DimensionMismatchError("need one weight per point but one")
    q = sum(w + 1 for w in weights) - 1
    rho, m = q // (n - 1), q % (n - 1) + 1
    expected = sorted([rho] * m + [rho - 1] * (n - 1 - m))
    if sorted(weights) != expected:
        raise ValueError(
            f"weight multiset {sorted(weights)} differs from pondération {expected}"
        )
    pts = [tuple(Fraction(x) for x in p) for p in points]
    if len({p for p in pts}) != n:
        return AdmissibilityReport(False, 0, "repeated points")

    ambient = v.span()
    cache = {}

    def osc(i, order):
        key = (i, order)
        if key not in cache:
            cache[key] = osculator(v, pts[i], order)
        return cache[key]

    assignments = []
    perms = _distinct_permutations(tuple(weights))
    for omitted in range(n):
        kept = [i for i in range(n) if i != omitted]
        for perm in perms:
            assignments.append(tuple(zip(kept, perm)))
    if len(assignments) > sample_limit and n > 5:
        rng = rng or random.Random(0)
        assignments = rng.sample(assignments, sample_limit)

    tested = 0
    for assignment in assignments:
        tested += 1
        parts = []
        for i, order in assignment:
            rep = osc(i, order)
            if not rep.is_regular:
                return AdmissibilityReport(
                    False,
                    tested,
                    f"osculator at point {i} order {order} not regular "
                    f"(dim {rep.subspace.dim})",
                )
            parts.append(rep.subspace)
        ok, joined, expected_dim = try_direct_sum(parts)
        if not ok or joined != ambient:
            return AdmissibilityReport(
                False,
                tested,
                f"assignment {assignment}: join dim {joined.dim}, "
                f"expected {expected_dim} = span dim {ambient.dim}",
            )
    return AdmissibilityReport(True, tested)


def osculating_projection_map(v: Parametrization, centers):
    """Projection from a direct sum of osculators, with the composed map.

    ``centers`` is a list of (parameter point, order) pairs.  Returns
    ``(projection, image)``; the center subspaces must be in projective
    direct sum, and the composed map lands in the coordinate complement
    of the center.
    """
    parts = [osculator(v, p, k).subspace for p, k in centers]
    ok, center, expected = try_direct_sum(parts)
    if not ok:
        raise GeneralPositionError(
            f"osculators not in direct sum (dim {center.dim} < {expected})"
        )
    proj = projection_from(center, v.ambient_dim)
    comps = proj.apply_polys(list(v.components))
    return proj, Parametrization(v.nparams, comps)


def osculating_projection(v: Parametrization, centers) -> Parametrization:
    """Image of the variety under the projection from its osculators."""
    return osculating_projection_map(v, centers)[1]


def project_curve(proj: LinearProjection, curve: RationalCurve) -> RationalCurve:
    """Image of a curve under a linear projection, in normalized form."""
    comps = proj.apply_polys(list(curve.components))
    return curve_normalize(RationalCurve(comps))


def curve_projection_check(curve: RationalCurve, t0, k: int) -> bool:
    """Projection of a curve from one of its own points.

    Checks the chart computation: the image of the curve from the point
    a = c(t0) extends through a' = (tangent line at a) cap (target), is
    k-regular there, and its order-k osculator is the image of the
    order-(k+1) osculator of the original curve.  Requires the curve to
    be (k+1)-regular at t0.
    """
    t0 = Fraction(t0)
    curve = curve_normalize(curve)
    wrapped = Parametrization.from_curve(curve)
    rep = osculator(wrapped, (t0,), k + 1)
    if not rep.is_regular:
        raise DegenerateCurveError(
            f"curve is not {k + 1}-regular at t = {t0}"
        )
    point_vec = curve.eval(t0)
    center = span_of([point_vec], curve.ambient_dim)
    proj = projection_from(center, curve.ambient_dim)
    image = project_curve(proj, curve)

    # extension through a' = image of the tangent direction
    tangent = osculator(wrapped, (t0,), 1).subspace
    a_prime = proj.image_of(tangent)
    value = image.eval(t0)
    if all(x == 0 for x in value):
        return False
    if span_of([value], image.ambient_dim) != a_prime:
        return False

    if k == 0:
        # a projected line degenerates to the constant map a'
        return True

    image_osc = osculator(Parametrization.from_curve(image), (t0,), k)
    pushed = proj.image_of(rep.subspace)
    return image_osc.subspace == pushed and image_osc.subspace.dim == k


# ---------------------------------------------------------------------------
# contact loci of monomial coordinate systems
# ---------------------------------------------------------------------------


def min_hitting_set(supports) -> int:
    """Size of a minimum hitting set, by exact branch and bound.

    Branches on the variables of an uncovered support of minimal size;
    instances here have at most a handful of variables.
    """
    supports = [frozenset(s) for s in supports]
    if any(not s for s in supports):
        raise ValueError("empty support cannot be hit")
    best = [len(frozenset().union(*supports))] if supports else [0]

    def search(remaining, chosen):
        if not remaining:
            best[0] = min(best[0], chosen)
            return
        if chosen + 1 >= best[0]:
            return
        pivot = min(remaining, key=len)
        for var in sorted(pivot):
            rest = [s for s in remaining if var not in s]
            search(rest, chosen + 1)

    search(supports, 0)
    return best[0]


def contact_locus_dim_monomial(indices, nvars: int, k: int) -> int:
    """Dimension of the contact locus of a monomial chart at the origin.

    The locus where all chart monomials of total degree >= k+1 vanish is a
    union of coordinate subspaces; its dimension is nvars minus a minimum
    hitting set of the monomial supports.
    """
    supports = []
    for idx in indices:
        idx = tuple(idx)
        if len(idx) != nvars:
            raise DimensionMismatchError("index length mismatch")
        if sum(idx) >= k + 1:
            supports.append(frozenset(i for i, e in enumerate(idx) if e > 0))
    if not supports:
        return nvars
    return nvars - min_hitting_set(supports)
