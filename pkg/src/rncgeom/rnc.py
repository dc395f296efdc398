"""Exact construction and certification of rational normal curves.

The interpolation routine through d+3 points uses the classical frame
normalization: d+2 points go to the coordinate simplex and unit point,
the curve becomes x_i(t) = prod_{j != i} (t - b_j), and the nodes b_j are
read off the remaining point by exact ratio equations.  The two leftover
Moebius parameters are fixed by an explicit choice that callers may vary
to probe projective uniqueness.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from . import catalog, sampling
from .catalog import (
    ConeStandard,
    CubicSpecial,
    QuadricVeronese,
    Scroll,
    ScrollSpec,
    SegreSpecial,
    StandardScroll,
    Veronese,
    Veronese33,
    declared_class,
)
from .errors import (
    DegenerateCurveError,
    DimensionMismatchError,
    GeneralPositionError,
    GenericityError,
    SpecError,
    SplittingFieldRequiredError,
)
from .linalg import QMatrix, intersect, nullspace, rank, rref, span_of
from .poly import (
    Polynomial,
    RationalCurve,
    curve_normalize,
    poly_gcd_univariate,
)


@dataclass
class CurveCertificate:
    """Degree and span of a normalized curve; RNC means they coincide."""

    degree: int
    span_dim: int
    is_rnc: bool

    def to_json(self) -> dict:
        return {"degree": self.degree, "span_dim": self.span_dim, "is_rnc": self.is_rnc}


def certify_curve(curve: RationalCurve) -> CurveCertificate:
    """Exact degree and span of a curve; degree = span characterizes RNCs."""
    c = curve_normalize(curve)
    degree = c.degree()
    if degree < 1:
        raise DegenerateCurveError("constant curve has no certificate")
    rows = []
    for power in range(degree + 1):
        rows.append([comp.coefficient((power,)) for comp in c.components])
    span_dim = rank(rows, c.ambient_dim + 1) - 1
    return CurveCertificate(degree, span_dim, degree == span_dim)


def curve_contains_point(curve: RationalCurve, point, assume_normalized=False) -> bool:
    """Exact membership of a projective point in the image of the curve.

    Works through the gcd of the 2x2 cross minors against a nonzero
    coordinate of the point; a common root, or a match with the value at
    infinity, certifies membership.
    """
    c = curve if assume_normalized else curve_normalize(curve)
    point = tuple(Fraction(x) for x in point)
    if len(point) != c.ambient_dim + 1:
        raise DimensionMismatchError("point/curve ambient mismatch")
    if all(x == 0 for x in point):
        raise ValueError("zero vector is not a projective point")
    m = next(i for i, x in enumerate(point) if x != 0)
    minors = []
    for j in range(len(point)):
        if j == m:
            continue
        poly = c.components[j].scale(point[m]) - c.components[m].scale(point[j])
        if not poly.is_zero():
            minors.append(poly)
    if not minors:
        return True
    g = minors[0]
    for poly in minors[1:]:
        g = poly_gcd_univariate(g, poly)
        if g.total_degree() == 0:
            break
    if g.total_degree() >= 1:
        return True
    inf = c.value_at_infinity()
    return all(
        point[m] * inf[j] - point[j] * inf[m] == 0 for j in range(len(point))
    )


# ---------------------------------------------------------------------------
# interpolation through d+3 points
# ---------------------------------------------------------------------------


def _check_general_position(d: int, points) -> None:
    for subset in combinations(range(len(points)), d + 1):
        if rank([points[i] for i in subset], d + 1) != d + 1:
            raise GeneralPositionError(
                f"points {list(subset)} span less than a P^{d}", witness=subset
            )


def rnc_through_points(
    d: int, points: Sequence, free_params=(Fraction(0), Fraction(-1))
) -> RationalCurve:
    """The unique degree-d rational normal curve through d+3 general points.

    ``free_params`` = (t_w, kappa) fixes the leftover Moebius freedom;
    any choice with kappa != 0 yields the same curve as a point set.
    """
    pts = [tuple(Fraction(x) for x in p) for p in points]
    if len(pts) != d + 3:
        raise DimensionMismatchError(f"need {d + 3} points, got {len(pts)}")
    if any(len(p) != d + 1 for p in pts):
        raise DimensionMismatchError("points must have d+1 homogeneous coordinates")
    _check_general_position(d, pts)

    t_w, kappa = (Fraction(x) for x in free_params)
    if kappa == 0:
        raise ValueError("kappa must be nonzero")

    simplex = pts[: d + 1]
    unit_target = pts[d + 1]
    last = pts[d + 2]

    base = QMatrix(simplex).transpose()
    lam = base.inverse().matvec(unit_target)
    assert all(x != 0 for x in lam), "guaranteed by the general-position check"
    frame = QMatrix(
        [[lam[j] * simplex[j][i] for j in range(d + 1)] for i in range(d + 1)]
    )
    w = frame.inverse().matvec(last)
    # general position makes every w_i nonzero and pairwise distinct
    assert all(x != 0 for x in w) and len(set(w)) == len(w)
    nodes = [t_w - kappa / wi for wi in w]

    t = Polynomial.variable(1, 0)
    factors = [t - Polynomial.constant(1, b) for b in nodes]
    comps_simplex = []
    for i in range(d + 1):
        prod = Polynomial.one(1)
        for j in range(d + 1):
            if j != i:
                prod = prod * factors[j]
        comps_simplex.append(prod)
    comps = []
    for i in range(d + 1):
        acc = Polynomial.zero(1)
        for j in range(d + 1):
            coeff = frame.entries[i][j]
            if coeff:
                acc = acc + comps_simplex[j].scale(coeff)
        comps.append(acc)
    return curve_normalize(RationalCurve(comps))


# ---------------------------------------------------------------------------
# scroll sections
# ---------------------------------------------------------------------------


@dataclass
class SectionFit:
    """Solution of the linear section system on a scroll."""

    scroll: ScrollSpec
    polys: list  # P_0 .. P_r with deg P_k <= n-1-a_k
    solution_dim: int


def fit_scroll_section(a: ScrollSpec, samples: Sequence) -> SectionFit:
    """Section s_k = P_k(t)/P_0(t) through n sample points (t_i, s_i).

    Homogeneous system of r n equations in r n + 1 coefficients; a
    generic sample leaves a one-dimensional solution space.
    """
    n, r = a.n, a.r
    samples = [
        (Fraction(t), tuple(Fraction(x) for x in s)) for t, s in samples
    ]
    if len(samples) != n:
        raise DimensionMismatchError(f"need n = {n} samples")
    if any(len(s) != r for _, s in samples):
        raise DimensionMismatchError("sample s-part must have length r")
    ts = [t for t, _ in samples]
    if len(set(ts)) != n:
        raise GeneralPositionError("sample parameters t_i must be distinct")

    sizes = [n - a.degrees[k] for k in range(r + 1)]
    offsets = [0]
    for size in sizes:
        offsets.append(offsets[-1] + size)
    total = offsets[-1]  # = r n + 1

    rows = []
    for t, s in samples:
        powers = [t**j for j in range(max(sizes))]
        for k in range(1, r + 1):
            row = [Fraction(0)] * total
            for j in range(sizes[0]):
                row[offsets[0] + j] = s[k - 1] * powers[j]
            for j in range(sizes[k]):
                row[offsets[k] + j] = -powers[j]
            rows.append(row)
    kernel = nullspace(rows, total)
    if len(kernel) != 1:
        raise GenericityError(
            f"section system has solution dimension {len(kernel)}, expected 1"
        )
    coeffs = kernel[0]
    polys = [
        Polynomial.univariate(coeffs[offsets[k] : offsets[k + 1]])
        for k in range(r + 1)
    ]
    if polys[0].is_zero():
        raise GenericityError("section denominator P_0 vanished")
    for t, s in samples:
        assert all(
            s[k - 1] * polys[0].eval((t,)) == polys[k].eval((t,))
            for k in range(1, r + 1)
        ), "interpolation conditions must hold exactly"
    return SectionFit(a, polys, 1)


def _pushforward_scroll(spec: StandardScroll, fit: SectionFit) -> RationalCurve:
    """Image of a scroll section under the monomial model of A(rho, chi)."""
    index_set = catalog.build_A(spec.a, spec.rho, spec.chi)
    p0 = fit.polys[0]
    prest = fit.polys[1:]
    t = Polynomial.variable(1, 0)
    comps = [p0**spec.rho]
    for idx in index_set.sorted_indices():
        k, alpha = idx[0], idx[1:]
        term = t**k if k else Polynomial.one(1)
        for pj, e in zip(prest, alpha):
            if e:
                term = term * pj**e
        term = term * p0 ** (spec.rho - sum(alpha))
        comps.append(term)
    return curve_normalize(RationalCurve(comps))


# ---------------------------------------------------------------------------
# conics on quadrics
# ---------------------------------------------------------------------------


def _plane_conic(qmat: QMatrix, p1, p2, p3):
    """Conic cut on a quadric by the plane of three of its points.

    Returns the ambient components (degree <= 2 polynomials in the affine
    parameter) and the three parameter values as homogeneous pairs.
    """
    pts = [tuple(Fraction(x) for x in p) for p in (p1, p2, p3)]
    n = qmat.nrows
    if any(len(p) != n for p in pts):
        raise DimensionMismatchError("point length disagrees with the form")
    for p in pts:
        value = sum(x * y for x, y in zip(qmat.matvec(p), p))
        if value != 0:
            raise GeneralPositionError("point does not lie on the quadric")
    if rank(pts, n) != 3:
        raise GeneralPositionError("the three points do not span a plane")

    def pairing(u, v):
        return sum(x * y for x, y in zip(qmat.matvec(u), v))

    a = 2 * pairing(pts[0], pts[1])
    b = 2 * pairing(pts[0], pts[2])
    c = 2 * pairing(pts[1], pts[2])
    if a == 0 or b == 0 or c == 0:
        raise GeneralPositionError("plane section is a degenerate conic")

    t = Polynomial.variable(1, 0)
    u0 = t.scale(c)
    u1 = -(t.scale(b) + Polynomial.constant(1, a))
    u2 = t * u1
    comps = []
    for coord in range(n):
        acc = u0.scale(pts[0][coord]) + u1.scale(pts[1][coord]) + u2.scale(pts[2][coord])
        comps.append(acc)
    params = [(b, -a), (Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]
    return comps, params


def conic_on_quadric(qmat: QMatrix, p1, p2, p3) -> RationalCurve:
    """Exact conic through three points of a quadric, within their plane."""
    comps, _ = _plane_conic(qmat, p1, p2, p3)
    return curve_normalize(RationalCurve(comps))


def projectivity_p1(sources, targets) -> QMatrix:
    """2x2 matrix sending three source parameter pairs to three targets."""

    def frame(pts):
        p0, p1, p2 = [tuple(Fraction(x) for x in p) for p in pts]
        mat = QMatrix([[p0[0], p1[0]], [p0[1], p1[1]]])
        c = mat.inverse().matvec(p2)
        if c[0] == 0 or c[1] == 0:
            raise GeneralPositionError("parameter pairs are not pairwise distinct")
        return QMatrix(
            [[c[0] * p0[0], c[1] * p1[0]], [c[0] * p0[1], c[1] * p1[1]]]
        )

    return frame(targets) @ frame(sources).inverse()


def mobius_substitute(comps, matrix: QMatrix, degree: int):
    """Components after the parameter change (lam, mu) -> matrix . (lam, mu).

    ``comps`` are affine representatives of homogeneous degree ``degree``
    components; the result is again a list of affine polynomials.
    """
    lam = Polynomial.univariate([matrix.entries[0][0], matrix.entries[0][1]])
    mu = Polynomial.univariate([matrix.entries[1][0], matrix.entries[1][1]])
    lam_pow = [Polynomial.one(1)]
    mu_pow = [Polynomial.one(1)]
    for _ in range(degree):
        lam_pow.append(lam_pow[-1] * lam)
        mu_pow.append(mu_pow[-1] * mu)
    out = []
    for comp in comps:
        acc = Polynomial.zero(1)
        for k in range(degree + 1):
            coeff = comp.coefficient((k,))
            if coeff:
                acc = acc + (mu_pow[k] * lam_pow[degree - k]).scale(coeff)
        out.append(acc)
    return out


def _interpolate(points) -> Polynomial:
    """Lagrange interpolation through (x_i, y_i) with distinct x_i."""
    t = Polynomial.variable(1, 0)
    acc = Polynomial.zero(1)
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        num = Polynomial.one(1)
        den = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j != i:
                num = num * (t - Polynomial.constant(1, xj))
                den *= xi - xj
        acc = acc + num.scale(Fraction(yi) / den)
    return acc


# ---------------------------------------------------------------------------
# the fit dispatcher
# ---------------------------------------------------------------------------


def sample_parameter_points(spec, rng: random.Random):
    """Random parameter points matching the spec's class size n."""
    params = declared_class(spec)
    n = params.n
    if isinstance(spec, Veronese):
        while True:
            pts = [sampling.rand_vector(rng, spec.dim) for _ in range(2)]
            if pts[0] != pts[1]:
                return pts
    if isinstance(spec, (Scroll, StandardScroll)):
        ts = sampling.rand_distinct_rationals(rng, n)
        return [(t,) + sampling.rand_vector(rng, spec.a.r) for t in ts]
    if isinstance(spec, SegreSpecial):
        taus = sampling.rand_distinct_rationals(rng, 3)
        return [(tau,) + sampling.rand_vector(rng, spec.r) for tau in taus]
    if isinstance(spec, (ConeStandard, CubicSpecial)):
        return [sampling.rand_vector(rng, params.r + 1) for _ in range(n)]
    if isinstance(spec, QuadricVeronese):
        return [sampling.rand_vector(rng, spec.r + 1) for _ in range(3)]
    if isinstance(spec, Veronese33):
        return [sampling.rand_vector(rng, 3) for _ in range(6)]
    raise SpecError(f"unknown spec {spec!r}")


def fit_rnc_through(spec, points, rng: Optional[random.Random] = None) -> RationalCurve:
    """Rational normal curve of the class degree through the given points.

    ``points`` are parameter points of the chart built by make_variety;
    genericity failures raise GenericityError so callers can resample.
    """
    if isinstance(spec, Veronese):
        return _fit_veronese_line(spec, points)
    if isinstance(spec, Scroll):
        return _fit_standard_scroll(StandardScroll(spec.a, 1, 0), points)
    if isinstance(spec, StandardScroll):
        return _fit_standard_scroll(spec, points)
    if isinstance(spec, ConeStandard):
        return _fit_cone(spec, points, rng or random.Random(0))
    if isinstance(spec, QuadricVeronese):
        return _fit_quadric_veronese(spec, points)
    if isinstance(spec, SegreSpecial):
        return _fit_segre(spec, points)
    if isinstance(spec, CubicSpecial):
        return _fit_cubic_special(spec, points)
    if isinstance(spec, Veronese33):
        return _fit_through_twisted_cubic(
            [(Fraction(1),) + tuple(Fraction(x) for x in p) for p in points],
            _veronese_forms(3, 3),
        )
    raise SpecError(f"unknown spec {spec!r}")


def _fit_veronese_line(spec: Veronese, points) -> RationalCurve:
    u, v = [tuple(Fraction(x) for x in p) for p in points]
    if len(u) != spec.dim or len(v) != spec.dim:
        raise DimensionMismatchError("parameter points of wrong length")
    if u == v:
        raise GeneralPositionError("the two parameter points coincide")
    line = [
        Polynomial.univariate([ui, vi - ui]) for ui, vi in zip(u, v)
    ]
    comps = [Polynomial.one(1)]
    for expo in catalog.veronese_exponents(spec.dim, spec.order):
        comps.append(Polynomial.monomial(spec.dim, expo).compose(line))
    return curve_normalize(RationalCurve(comps))


def _fit_standard_scroll(spec: StandardScroll, points) -> RationalCurve:
    samples = [(p[0], tuple(p[1:])) for p in points]
    fit = fit_scroll_section(spec.a, samples)
    for t, _ in samples:
        if fit.polys[0].eval((t,)) == 0:
            raise GenericityError("P_0 vanishes at a sample parameter")
    return _pushforward_scroll(spec, fit)


def _fit_segre(spec: SegreSpecial, points) -> RationalCurve:
    r = spec.r
    pts = [tuple(Fraction(x) for x in p) for p in points]
    if len(pts) != 3 or any(len(p) != r + 1 for p in pts):
        raise DimensionMismatchError("need three (tau, s) parameter points")
    taus = [p[0] for p in pts]
    if len(set(taus)) != 3:
        raise GeneralPositionError("tau values must be distinct")
    qf = catalog.segre_quadratic_form(spec)
    quadric_pts = [
        (Fraction(1),) + p[1:] + (qf.eval(p[1:]),) for p in pts
    ]
    # ambient quadric U_0 U_{r+1} = q(U_1..U_r)
    size = r + 2
    m = [[Fraction(0)] * size for _ in range(size)]
    m[0][size - 1] = Fraction(1, 2)
    m[size - 1][0] = Fraction(1, 2)
    qmat_inner = qf.matrix()
    for i in range(r):
        for j in range(r):
            m[1 + i][1 + j] = -qmat_inner.entries[i][j]
    conic_comps, conic_params = _plane_conic(QMatrix(m), *quadric_pts)
    mat = projectivity_p1([(Fraction(1), tau) for tau in taus], conic_params)
    g = mobius_substitute(conic_comps, mat, 2)
    t = Polynomial.variable(1, 0)
    g0, gs, gq = g[0], g[1 : 1 + r], g[r + 1]
    # chart order [1, t, s, t s, q, t q]
    comps = [g0, t * g0] + gs + [t * gj for gj in gs] + [gq, t * gq]
    return curve_normalize(RationalCurve(comps))


def _fit_quadric_veronese(spec: QuadricVeronese, points) -> RationalCurve:
    """Plane section of the quadric pushed through the order-rho system.

    The curve-through-points construction for this family is not spelled
    out in the classification; the route here (plane through the three
    quadric points, conic in that plane, pushforward) is the natural
    reading of the degree-2rho section count and is certified after the
    fact by the degree/span/incidence checks.
    """
    r, rho = spec.r, spec.rho
    pts = [tuple(Fraction(x) for x in p) for p in points]
    if len(pts) != 3 or any(len(p) != r + 1 for p in pts):
        raise DimensionMismatchError("need three parameter points in Q^{r+1}")
    h = catalog.quadric_hyperplane_form(spec)
    lifted = [(Fraction(1), -h.eval(p)) + p for p in pts]
    size = r + 3
    m = [[Fraction(0)] * size for _ in range(size)]
    m[0][1] = Fraction(1, 2)
    m[1][0] = Fraction(1, 2)
    hmat = h.matrix()
    for i in range(r + 1):
        for j in range(r + 1):
            m[2 + i][2 + j] = hmat.entries[i][j]
    conic_comps, _ = _plane_conic(QMatrix(m), *lifted)
    x0 = conic_comps[0]
    xprime = conic_comps[1:]  # U_1 .. U_{r+2} along the conic
    if x0.is_zero():
        raise GenericityError("conic lies in the hyperplane at infinity")
    block_a, block_b = catalog.quadric_veronese_blocks(r, rho)
    comps = [x0**rho]
    for beta in block_a:
        term = Polynomial.one(1)
        for f, e in zip(xprime, beta):
            if e:
                term = term * f**e
        comps.append(term)
    for gamma in block_b:
        term = x0 ** (rho - sum(gamma))
        for f, e in zip(xprime[1:], gamma):
            if e:
                term = term * f**e
        comps.append(term)
    return curve_normalize(RationalCurve(comps))


def _fit_cone(spec: ConeStandard, points, rng: random.Random) -> RationalCurve:
    r, q = spec.r, spec.q
    sigma = q // 2
    pts = [tuple(Fraction(x) for x in p) for p in points]
    if len(pts) != 5 or any(len(p) != r + 1 for p in pts):
        raise DimensionMismatchError("need five parameter points in Q^{r+1}")
    plane_pts = [(Fraction(1), p[0], p[1]) for p in pts]
    if len(set(plane_pts)) != 5:
        raise GeneralPositionError("coincident (t1, t2) plane points")

    # implicit conic through the five plane points
    monos = [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]
    rows = []
    for p in plane_pts:
        rows.append([p[0] ** e0 * p[1] ** e1 * p[2] ** e2 for e0, e1, e2 in monos])
    kernel = nullspace(rows, 6)
    if len(kernel) != 1:
        raise GenericityError("conic through the plane points is not unique")
    coeffs = kernel[0]
    cmat = QMatrix(
        [
            [coeffs[0], coeffs[1] / 2, coeffs[2] / 2],
            [coeffs[1] / 2, coeffs[3], coeffs[4] / 2],
            [coeffs[2] / 2, coeffs[4] / 2, coeffs[5]],
        ]
    )
    if cmat.rank() != 3:
        raise GenericityError("conic through the plane points is degenerate")

    base = plane_pts[0]

    def pairing(u, v):
        return sum(x * y for x, y in zip(cmat.matvec(u), v))

    for _ in range(sampling.MAX_RETRIES + 1):
        v = sampling.rand_vector(rng, 3)
        w = sampling.rand_vector(rng, 3)
        if rank([base, v, w], 3) != 3:
            continue
        # parameters (lam : mu) of the five points in the pencil through base
        frame = QMatrix([base, v, w]).transpose().inverse()
        params = []
        ok = True
        for idx, p in enumerate(plane_pts):
            if idx == 0:
                # base point sits at the tangent direction of the pencil
                av = pairing(base, v)
                aw = pairing(base, w)
                pair = (aw, -av)
            else:
                c = frame.matvec(p)
                pair = (c[1], c[2])
            if pair[0] == 0:
                ok = False
                break
            params.append(pair)
        if not ok:
            continue
        tvals = [mu / lam for lam, mu in params]
        if len(set(tvals)) != 5:
            continue

        t = Polynomial.variable(1, 0)
        direction = [
            Polynomial.constant(1, vv) + t.scale(ww) for vv, ww in zip(v, w)
        ]
        qu = Polynomial.zero(1)
        for i in range(3):
            for j in range(3):
                if cmat.entries[i][j]:
                    qu = qu + (direction[i] * direction[j]).scale(cmat.entries[i][j])
        lin = Polynomial.zero(1)
        for i in range(3):
            row = cmat.matvec(base)
            if row[i]:
                lin = lin + direction[i].scale(row[i])
        tpolys = [
            qu.scale(base[i]) - (lin * direction[i]).scale(2) for i in range(3)
        ]
        t0poly, t1poly, t2poly = tpolys
        # sanity: the conic parametrization must hit the five points
        for pair, p in zip(params, plane_pts):
            tv = pair[1] / pair[0]
            val = tuple(c.eval((tv,)) for c in tpolys)
            if rank([val, p], 3) != 1:
                raise GenericityError("conic parametrization missed a point")

        spolys = []
        for j in range(r - 1):
            data = []
            for tv, p in zip(tvals, pts):
                data.append((tv, p[2 + j] * t0poly.eval((tv,)) ** 2))
            spolys.append(_interpolate(data))

        index_set = catalog.build_A_cone(r, q)
        comps = [t0poly**sigma]
        for idx in index_set.sorted_indices():
            i, j, alpha = idx[0], idx[1], idx[2:]
            term = Polynomial.one(1)
            if i:
                term = term * t1poly**i
            if j:
                term = term * t2poly**j
            for sp, e in zip(spolys, alpha):
                if e:
                    term = term * sp**e
            term = term * t0poly ** (sigma - i - j - 2 * sum(alpha))
            comps.append(term)
        return curve_normalize(RationalCurve(comps))
    raise GenericityError("could not find a workable pencil basis")


def _veronese_forms(dim: int, order: int):
    """Homogeneous forms matching the affine Veronese chart ordering."""
    nv = dim + 1
    forms = [Polynomial.monomial(nv, (order,) + (0,) * dim)]
    for expo in catalog.veronese_exponents(dim, order):
        forms.append(Polynomial.monomial(nv, (order - sum(expo),) + tuple(expo)))
    return forms


def _cubic_special_forms(spec: CubicSpecial):
    """Cubic forms in [T0, T1, S] matching the CubicSpecial chart order."""
    r = spec.r
    nv = r + 2
    T0 = Polynomial.variable(nv, 0)
    T1 = Polynomial.variable(nv, 1)
    S = [Polynomial.variable(nv, 2 + j) for j in range(r)]
    qpoly = catalog.cubic_quadratic_form(spec).poly().compose(S)
    forms = [T0**3, T0**2 * T1, T0 * T1**2, T1**3]
    forms += [T0**2 * sj for sj in S]
    forms += [T0 * T1 * sj for sj in S]
    forms += [T1**2 * sj for sj in S]
    forms += [T0 * qpoly, T1 * qpoly]
    return forms


def _fit_through_twisted_cubic(lifted_points, forms) -> RationalCurve:
    """Twisted cubic through six points pushed through degree-3 forms."""
    gamma = rnc_through_points(3, lifted_points)
    comps = [f.compose(list(gamma.components)) for f in forms]
    return curve_normalize(RationalCurve(comps))


def _isqrt_fraction(value: Fraction):
    """Exact square root of a non-negative rational, or None."""
    if value < 0:
        return None
    num = math.isqrt(value.numerator)
    den = math.isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None


def _fit_cubic_special(spec: CubicSpecial, points) -> RationalCurve:
    r = spec.r
    pts = [tuple(Fraction(x) for x in p) for p in points]
    if len(pts) != 4 or any(len(p) != r + 1 for p in pts):
        raise DimensionMismatchError("need four parameter points in Q^{r+1}")
    lifted = [(Fraction(1),) + p for p in pts]
    span4 = span_of(lifted, r + 1)
    if span4.dim != 3:
        raise GenericityError("the four points do not span a P^3")
    s_plane_rows = []
    for j in range(r):
        row = [Fraction(0)] * (r + 2)
        row[2 + j] = Fraction(1)
        s_plane_rows.append(row)
    s_plane = span_of(s_plane_rows, r + 1)
    line = intersect(span4, s_plane)
    if line.dim != 1:
        raise GenericityError("span meets {T0 = T1 = 0} in the wrong dimension")
    w1, w2 = line.basis
    qf = catalog.cubic_quadratic_form(spec)

    def qeval(vec):
        return qf.eval(vec[2:])

    a = qeval(w1)
    c = qeval(w2)
    b = qeval(tuple(x + y for x, y in zip(w1, w2))) - a - c
    roots = []
    if a == 0:
        if b == 0:
            raise GeneralPositionError("double intersection with the quadric")
        roots = [(Fraction(1), Fraction(0)), (-c, b)]
    else:
        disc = b * b - 4 * a * c
        if disc == 0:
            raise GeneralPositionError("double intersection with the quadric")
        root = _isqrt_fraction(disc)
        if root is None:
            raise SplittingFieldRequiredError(disc)
        roots = [((-b + root) / (2 * a), Fraction(1)), ((-b - root) / (2 * a), Fraction(1))]
    qpts = []
    for lam, mu in roots:
        qpts.append(tuple(lam * x + mu * y for x, y in zip(w1, w2)))

    six = lifted + qpts
    # express the six points in coordinates of the spanning P^3
    basis = list(span4.basis)
    bmat_rows = [list(v) for v in basis]
    six_in_p3 = []
    for p in six:
        sol = _solve_in_rowspan(bmat_rows, p)
        if sol is None:
            raise GenericityError("intersection point escaped the span")
        six_in_p3.append(tuple(sol))
    gamma3 = rnc_through_points(3, six_in_p3)
    lift = QMatrix(bmat_rows).transpose()
    ambient_comps = []
    for i in range(r + 2):
        acc = Polynomial.zero(1)
        for j in range(4):
            coeff = lift.entries[i][j]
            if coeff:
                acc = acc + gamma3.components[j].scale(coeff)
        ambient_comps.append(acc)
    forms = _cubic_special_forms(spec)
    comps = [f.compose(ambient_comps) for f in forms]
    return curve_normalize(RationalCurve(comps))


def _solve_in_rowspan(rows, target):
    """Coefficients expressing target in the span of rows, or None."""
    aug = [list(r) for r in QMatrix(rows).transpose().entries]
    for i, value in enumerate(target):
        aug[i].append(value)
    reduced, pivots = rref(aug, len(rows) + 1)
    if len(rows) in pivots:
        return None
    sol = [Fraction(0)] * len(rows)
    for row, p in zip(reduced, pivots):
        sol[p] = row[-1]
    return sol
