"""Closed-form dimension formulas and constructors for every variety family.

Families are identified by small frozen spec objects that can be round
tripped through the JSON document format ``{"family": ..., "params":
{...}}`` shared by the CLI and the verification reports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import SpecError
from .linalg import QMatrix
from .osculation import Parametrization
from .poly import Polynomial, grlex_key


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero outside the usual range."""
    if b < 0 or a < b:
        return 0
    return math.comb(a, b)


# ---------------------------------------------------------------------------
# class parameters and index sets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassParams:
    """The triple (r, n, q) with its shifted Euclidean division of q.

    q = rho (n-1) + m - 1 with m in {1..n-1}; chi = m - 1 is the other
    normalization used by the classification.
    """

    r: int
    n: int
    q: int

    def __post_init__(self):
        if self.r < 1 or self.n < 2 or self.q < self.n - 1:
            raise SpecError(f"invalid class parameters {(self.r, self.n, self.q)}")

    @property
    def rho(self) -> int:
        return self.q // (self.n - 1)

    @property
    def m(self) -> int:
        return self.q % (self.n - 1) + 1

    @property
    def chi(self) -> int:
        return self.m - 1

    def alternate_branch(self) -> Optional[tuple]:
        """(rho+1, -1) when q = -1 mod n-1 and it stays in range."""
        if self.m == self.n - 1:
            return (self.rho + 1, -1)
        return None


def pi_formula(params: ClassParams) -> int:
    """Maximal span dimension of a variety of the class (r, n, q)."""
    r, rho, m, n = params.r, params.rho, params.m, params.n
    return m * binom(r + rho + 1, r + 1) + (n - 1 - m) * binom(r + rho, r + 1) - 1


def pi(r: int, n: int, q: int) -> int:
    return pi_formula(ClassParams(r, n, q))


def castelnuovo_bound(r: int, n: int, d: int) -> int:
    """Castelnuovo-Harris bound on the corrected geometric genus.

    Uses the shifted division d - 1 = sigma (n-1) + m with m in {1..n-1}.
    """
    if d < 1:
        raise SpecError("degree must be >= 1")
    m = (d - 2) % (n - 1) + 1
    sigma = (d - 1 - m) // (n - 1)
    return m * binom(sigma + 1, r + 1) + (n - 1 - m) * binom(sigma, r + 1)


def ponderation(params: ClassParams) -> tuple:
    """Weight vector (rho-1, ..., rho-1, rho, ..., rho) of length n-1."""
    return tuple(
        [params.rho - 1] * (params.n - 1 - params.m) + [params.rho] * params.m
    )


@dataclass(frozen=True)
class ScrollSpec:
    """Non-increasing degree vector (a_0, ..., a_r) of a rational normal scroll."""

    degrees: tuple

    def __post_init__(self):
        degs = tuple(int(a) for a in self.degrees)
        object.__setattr__(self, "degrees", degs)
        if not degs or any(a < 0 for a in degs):
            raise SpecError(f"invalid scroll degrees {degs}")
        if any(degs[i] < degs[i + 1] for i in range(len(degs) - 1)):
            raise SpecError(f"scroll degrees must be non-increasing: {degs}")
        if sum(degs) < 1:
            raise SpecError("scroll degrees must sum to at least 1")

    @property
    def r(self) -> int:
        return len(self.degrees) - 1

    @property
    def n(self) -> int:
        return sum(self.degrees) + 1

    @property
    def is_cone(self) -> bool:
        return self.degrees[0] == self.n - 1


class IndexSet:
    """Finite set of nonzero multi-indices defining a monomial variety."""

    __slots__ = ("nvars", "indices")

    def __init__(self, nvars: int, indices):
        idx = frozenset(tuple(int(e) for e in i) for i in indices)
        for i in idx:
            if len(i) != nvars:
                raise SpecError(f"index {i} has wrong length")
            if any(e < 0 for e in i):
                raise SpecError(f"negative entry in {i}")
            if all(e == 0 for e in i):
                raise SpecError("zero index not allowed")
        self.nvars = nvars
        self.indices = idx

    def sorted_indices(self) -> list:
        return sorted(self.indices, key=grlex_key)

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.sorted_indices())

    def __eq__(self, other):
        if not isinstance(other, IndexSet):
            return NotImplemented
        return self.nvars == other.nvars and self.indices == other.indices

    def is_downward_closed(self) -> bool:
        for idx in self.indices:
            for j in range(self.nvars):
                if idx[j] > 0:
                    lower = idx[:j] + (idx[j] - 1,) + idx[j + 1 :]
                    if any(lower) and lower not in self.indices:
                        return False
        return True

    def is_degree_one_complete(self) -> bool:
        for j in range(self.nvars):
            unit = tuple(1 if i == j else 0 for i in range(self.nvars))
            if unit not in self.indices:
                return False
        return True


def I_formula(a: ScrollSpec, rho: int, chi: int) -> int:
    """Dimension count sum((alpha . a + chi + 1)^+) over |alpha| = rho.

    For chi >= -1 this equals card A(rho, chi) + 1 and only depends on
    sum(a); for chi < -1 it genuinely depends on the degree vector.
    """
    if rho < 1:
        raise SpecError("rho must be >= 1")
    degs = a.degrees
    total = 0
    for alpha in _compositions(rho, len(degs)):
        value = sum(x * d for x, d in zip(alpha, degs)) + chi + 1
        if value > 0:
            total += value
    return total


def _compositions(total: int, parts: int):
    """All tuples of non-negative ints of the given length summing to total."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def build_A(a: ScrollSpec, rho: int, chi: int) -> IndexSet:
    """Index set A(rho, chi) of the monomial model over the scroll ``a``.

    Entries (k, alpha) with |alpha| <= rho and
    k <= (rho - |alpha|) a_0 + sum(alpha_j a_j) + chi.
    """
    n = a.n
    r = a.r
    if rho < 1 or not (-1 <= chi <= n - 2):
        raise SpecError(f"parameters (rho, chi) = {(rho, chi)} out of range")
    if rho * (n - 1) + chi < n - 1:
        raise SpecError("q = rho (n-1) + chi must be at least n-1")
    a0 = a.degrees[0]
    rest = a.degrees[1:]
    out = []
    for total in range(rho + 1):
        for alpha in _compositions(total, r) if r else ([()] if total == 0 else []):
            bound = (rho - total) * a0 + sum(x * d for x, d in zip(alpha, rest)) + chi
            for k in range(0, bound + 1):
                idx = (k,) + tuple(alpha)
                if any(idx):
                    out.append(idx)
    return IndexSet(r + 1, out)


def build_A_cone(r: int, q: int) -> IndexSet:
    """Index set of the standard model over the cone on a Veronese surface.

    Entries (i, j, alpha) in N^2 x N^{r-1} with 1 <= 2(i+j) + 4|alpha| <= q,
    defined for even q >= 4.
    """
    if r < 1:
        raise SpecError("r must be >= 1")
    if q < 4 or q % 2:
        raise SpecError("q must be an even integer >= 4")
    out = []
    for i in range(q // 2 + 1):
        for j in range(q // 2 + 1):
            rem = q - 2 * (i + j)
            if rem < 0:
                continue
            for total in range(rem // 4 + 1):
                for alpha in (
                    _compositions(total, r - 1) if r > 1 else ([()] if total == 0 else [])
                ):
                    weight = 2 * (i + j) + 4 * total
                    if 1 <= weight <= q:
                        out.append((i, j) + tuple(alpha))
    return IndexSet(r + 1, out)


# ---------------------------------------------------------------------------
# quadratic forms in hyperbolic normal form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuadraticForm:
    """Rank-k quadratic form on ``nvars`` variables in hyperbolic normal form.

    Pairs x_1 x_2 + x_3 x_4 + ... plus a final square when the rank is
    odd.  Over C the rank classifies quadrics, and this presentation has
    the rational points needed for exact parametrizations.
    """

    rank: int
    nvars: int

    def __post_init__(self):
        if self.rank < 0 or self.rank > self.nvars:
            raise SpecError(f"rank {self.rank} out of range for {self.nvars} variables")

    def poly(self) -> Polynomial:
        p = Polynomial.zero(self.nvars)
        for i in range(self.rank // 2):
            e = [0] * self.nvars
            e[2 * i] = 1
            e[2 * i + 1] = 1
            p = p + Polynomial.monomial(self.nvars, e)
        if self.rank % 2:
            e = [0] * self.nvars
            e[self.rank - 1] = 2
            p = p + Polynomial.monomial(self.nvars, e)
        return p

    def eval(self, point) -> Fraction:
        return self.poly().eval(point)

    def matrix(self) -> QMatrix:
        """Symmetric bilinear form matrix (rank equals the declared rank)."""
        m = [[Fraction(0)] * self.nvars for _ in range(self.nvars)]
        for i in range(self.rank // 2):
            m[2 * i][2 * i + 1] = Fraction(1, 2)
            m[2 * i + 1][2 * i] = Fraction(1, 2)
        if self.rank % 2:
            m[self.rank - 1][self.rank - 1] = Fraction(1)
        return QMatrix(m)


# ---------------------------------------------------------------------------
# variety specs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Veronese:
    dim: int
    order: int
    family = "Veronese"

    def __post_init__(self):
        if self.dim < 1 or self.order < 1:
            raise SpecError("Veronese needs dim >= 1 and order >= 1")


@dataclass(frozen=True)
class Scroll:
    a: ScrollSpec
    family = "Scroll"


@dataclass(frozen=True)
class StandardScroll:
    a: ScrollSpec
    rho: int
    chi: int
    family = "StandardScroll"


@dataclass(frozen=True)
class ConeStandard:
    r: int
    q: int
    family = "ConeStandard"


@dataclass(frozen=True)
class QuadricVeronese:
    r: int
    rho: int
    rank: int
    family = "QuadricVeronese"

    def __post_init__(self):
        # the classification wants rank >= 5; full rank in P^{r+2} is r+3
        if not 5 <= self.rank <= self.r + 3:
            raise SpecError(f"quadric rank {self.rank} outside [5, r+3]")
        if self.rho < 1:
            raise SpecError("rho must be >= 1")


@dataclass(frozen=True)
class SegreSpecial:
    r: int
    mu: int
    family = "SegreSpecial"

    def __post_init__(self):
        # q(s) below has rank mu - 2, which must be >= 1
        if self.mu < 3 or self.mu > self.r + 2:
            raise SpecError(f"quadric rank {self.mu} outside [3, r+2]")


@dataclass(frozen=True)
class CubicSpecial:
    r: int
    mu_prime: int
    family = "CubicSpecial"

    def __post_init__(self):
        if self.r < 2:
            raise SpecError("CubicSpecial needs r >= 2")
        if not 1 <= self.mu_prime <= self.r:
            raise SpecError(f"quadric rank {self.mu_prime} outside [1, r]")


@dataclass(frozen=True)
class Veronese33:
    family = "Veronese33"


def declared_class(spec) -> ClassParams:
    """The class (r, n, q) a catalog spec claims membership of."""
    if isinstance(spec, Veronese):
        return ClassParams(spec.dim - 1, 2, spec.order)
    if isinstance(spec, Scroll):
        return ClassParams(spec.a.r, spec.a.n, spec.a.n - 1)
    if isinstance(spec, StandardScroll):
        return ClassParams(spec.a.r, spec.a.n, spec.rho * (spec.a.n - 1) + spec.chi)
    if isinstance(spec, ConeStandard):
        return ClassParams(spec.r, 5, spec.q)
    if isinstance(spec, QuadricVeronese):
        return ClassParams(spec.r, 3, 2 * spec.rho)
    if isinstance(spec, SegreSpecial):
        return ClassParams(spec.r, 3, 3)
    if isinstance(spec, CubicSpecial):
        return ClassParams(spec.r, 4, 5)
    if isinstance(spec, Veronese33):
        return ClassParams(2, 6, 9)
    raise SpecError(f"unknown spec {spec!r}")


def veronese_exponents(dim: int, order: int) -> list:
    """Exponent tuples 1 <= |alpha| <= order in graded-lex order."""
    out = []
    for total in range(1, order + 1):
        out.extend(sorted(_compositions(total, dim)))
    return sorted(out, key=grlex_key)


def segre_quadratic_form(spec: SegreSpecial) -> QuadraticForm:
    return QuadraticForm(spec.mu - 2, spec.r)


def cubic_quadratic_form(spec: CubicSpecial) -> QuadraticForm:
    return QuadraticForm(spec.mu_prime, spec.r)


def quadric_hyperplane_form(spec: QuadricVeronese) -> QuadraticForm:
    """The form h with ambient quadric U_0 U_1 + h(U_2..U_{r+2})."""
    return QuadraticForm(spec.rank - 2, spec.r + 1)


def quadric_veronese_blocks(r: int, rho: int):
    """Exponent blocks of a basis of |rho H| on the hyperbolic quadric.

    Reduction by U_0 U_1 = -h leaves the degree-rho monomials avoiding
    that product: block A collects exponents over (U_1, .., U_{r+2}) of
    degree rho, block B exponents over (U_2, .., U_{r+2}) of degree
    1..rho-1 (the missing constant is the leading coordinate U_0^rho).
    """
    block_a = sorted(_compositions(rho, r + 2), key=grlex_key)
    block_b = []
    for total in range(1, rho):
        block_b.extend(sorted(_compositions(total, r + 1), key=grlex_key))
    return block_a, block_b


def _monomial_components(index_set: IndexSet) -> list:
    return [
        Polynomial.monomial(index_set.nvars, idx) for idx in index_set.sorted_indices()
    ]


def make_variety(spec) -> Parametrization:
    """Explicit parametrization of a catalog spec, as an affine chart."""
    if isinstance(spec, Veronese):
        d = spec.dim
        comps = [
            Polynomial.monomial(d, e) for e in veronese_exponents(d, spec.order)
        ]
        return Parametrization.from_affine(d, comps)

    if isinstance(spec, Veronese33):
        return make_variety(Veronese(3, 3))

    if isinstance(spec, Scroll):
        return make_variety(StandardScroll(spec.a, 1, 0))

    if isinstance(spec, StandardScroll):
        index_set = build_A(spec.a, spec.rho, spec.chi)
        return Parametrization.from_affine(
            index_set.nvars, _monomial_components(index_set)
        )

    if isinstance(spec, ConeStandard):
        index_set = build_A_cone(spec.r, spec.q)
        return Parametrization.from_affine(
            index_set.nvars, _monomial_components(index_set)
        )

    if isinstance(spec, QuadricVeronese):
        r, rho = spec.r, spec.rho
        h = quadric_hyperplane_form(spec)
        nv = r + 1
        # graph chart of the quadric: U_1 = -h(s), U_{1+j} = s_j
        u = [-h.poly()] + [Polynomial.variable(nv, j) for j in range(nv)]
        block_a, block_b = quadric_veronese_blocks(r, rho)
        comps = []
        for beta in block_a:
            term = Polynomial.one(nv)
            for f, e in zip(u, beta):
                if e:
                    term = term * f**e
            comps.append(term)
        for gamma in block_b:
            comps.append(Polynomial.monomial(nv, gamma))
        return Parametrization.from_affine(nv, comps)

    if isinstance(spec, SegreSpecial):
        r = spec.r
        nv = r + 1  # variables (t, s_1..s_r)
        t = Polynomial.variable(nv, 0)
        s = [Polynomial.variable(nv, 1 + j) for j in range(r)]
        qpoly = segre_quadratic_form(spec).poly().compose(s)
        comps = [t] + s + [t * sj for sj in s] + [qpoly, t * qpoly]
        return Parametrization.from_affine(nv, comps)

    if isinstance(spec, CubicSpecial):
        r = spec.r
        nv = r + 1
        t = Polynomial.variable(nv, 0)
        s = [Polynomial.variable(nv, 1 + j) for j in range(r)]
        qpoly = cubic_quadratic_form(spec).poly().compose(s)
        comps = (
            [t, t**2, t**3]
            + s
            + [t * sj for sj in s]
            + [t**2 * sj for sj in s]
            + [qpoly, t * qpoly]
        )
        return Parametrization.from_affine(nv, comps)

    raise SpecError(f"unknown spec {spec!r}")


# ---------------------------------------------------------------------------
# JSON document format
# ---------------------------------------------------------------------------


def spec_to_json(spec) -> dict:
    if isinstance(spec, Veronese):
        params = {"dim": spec.dim, "order": spec.order}
    elif isinstance(spec, Scroll):
        params = {"a": list(spec.a.degrees)}
    elif isinstance(spec, StandardScroll):
        params = {"a": list(spec.a.degrees), "rho": spec.rho, "chi": spec.chi}
    elif isinstance(spec, ConeStandard):
        params = {"r": spec.r, "q": spec.q}
    elif isinstance(spec, QuadricVeronese):
        params = {"r": spec.r, "rho": spec.rho, "rank": spec.rank}
    elif isinstance(spec, SegreSpecial):
        params = {"r": spec.r, "mu": spec.mu}
    elif isinstance(spec, CubicSpecial):
        params = {"r": spec.r, "mu_prime": spec.mu_prime}
    elif isinstance(spec, Veronese33):
        params = {}
    else:
        raise SpecError(f"unknown spec {spec!r}")
    return {"family": spec.family, "params": params}


def spec_from_json(doc) -> object:
    if not isinstance(doc, dict):
        raise SpecError("spec document must be a JSON object")
    family = doc.get("family")
    params = doc.get("params", {})
    if not isinstance(params, dict):
        raise SpecError("params must be an object")

    def need(*names):
        missing = [k for k in names if k not in params]
        if missing:
            raise SpecError(f"{family} spec missing params {missing}")
        return [params[k] for k in names]

    try:
        if family == "Veronese":
            dim, order = need("dim", "order")
            return Veronese(int(dim), int(order))
        if family == "Scroll":
            (a,) = need("a")
            return Scroll(ScrollSpec(tuple(a)))
        if family == "StandardScroll":
            a, rho, chi = need("a", "rho", "chi")
            return StandardScroll(ScrollSpec(tuple(a)), int(rho), int(chi))
        if family == "ConeStandard":
            r, q = need("r", "q")
            return ConeStandard(int(r), int(q))
        if family == "QuadricVeronese":
            r, rho, rank_ = need("r", "rho", "rank")
            return QuadricVeronese(int(r), int(rho), int(rank_))
        if family == "SegreSpecial":
            r, mu = need("r", "mu")
            return SegreSpecial(int(r), int(mu))
        if family == "CubicSpecial":
            r, mu_prime = need("r", "mu_prime")
            return CubicSpecial(int(r), int(mu_prime))
        if family == "Veronese33":
            return Veronese33()
    except (TypeError, ValueError) as exc:
        raise SpecError(f"bad parameter value: {exc}") from exc
    raise SpecError(f"unknown family {family!r}")
