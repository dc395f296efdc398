"""Sparse multivariate polynomials over exact rationals.

A polynomial in ``d`` variables is a finite map from exponent tuples
(``MultiIndex``, one non-negative int per variable) to ``Fraction``
coefficients.  Zero coefficients are never stored, so structural equality
is semantic equality.  The canonical term order everywhere is graded
lexicographic: higher total degree first, ties broken lexicographically
on the exponent tuple.

``RationalCurve`` holds the homogeneous components of a rational map
``P^1 -> P^N`` as N+1 univariate polynomials sharing the parameter.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegenerateCurveError, DimensionMismatchError

Rational = Fraction
MultiIndex = tuple  # tuple[int, ...], length = number of variables


def grlex_key(exponents):
    """Sort key realizing the graded-lex order (use with reverse=True)."""
    return (sum(exponents), exponents)


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


class Polynomial:
    """Immutable sparse polynomial with Fraction coefficients."""

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for expo, coeff in dict(terms).items():
                expo = tuple(int(e) for e in expo)
                if len(expo) != nvars:
                    raise DimensionMismatchError(
                        f"exponent {expo} has length {len(expo)}, expected {nvars}"
                    )
                if any(e < 0 for e in expo):
                    raise ValueError(f"negative exponent in {expo}")
                coeff = _as_fraction(coeff)
                if coeff != 0:
                    clean[expo] = coeff
        self._terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: _as_fraction(value)})

    @classmethod
    def one(cls, nvars: int) -> "Polynomial":
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        if not 0 <= index < nvars:
            raise DimensionMismatchError(f"variable index {index} out of range")
        expo = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, {expo: Fraction(1)})

    @classmethod
    def monomial(cls, nvars: int, exponents, coeff=1) -> "Polynomial":
        return cls(nvars, {tuple(exponents): _as_fraction(coeff)})

    @classmethod
    def univariate(cls, coeffs: Sequence) -> "Polynomial":
        """Build a one-variable polynomial from coefficients, low degree first."""
        return cls(1, {(i,): _as_fraction(c) for i, c in enumerate(coeffs)})

    # -- structure ----------------------------------------------------

    def items(self):
        """Terms in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def coefficient(self, exponents) -> Fraction:
        return self._terms.get(tuple(exponents), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"Polynomial({self.nvars}, {self.to_text()!r})"

    # -- ring operations ----------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise DimensionMismatchError("variable counts differ")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.nvars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for expo, coeff in other._terms.items():
            total = terms.get(expo, Fraction(0)) + coeff
            if total:
                terms[expo] = total
            else:
                terms.pop(expo, None)
        out = Polynomial(self.nvars)
        out._terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = Polynomial(self.nvars)
        out._terms = {e: -c for e, c in self._terms.items()}
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                total = terms.get(expo, Fraction(0)) + c1 * c2
                if total:
                    terms[expo] = total
                else:
                    terms.pop(expo, None)
        out = Polynomial(self.nvars)
        out._terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.one(self.nvars)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def scale(self, scalar) -> "Polynomial":
        scalar = _as_fraction(scalar)
        if scalar == 0:
            return Polynomial.zero(self.nvars)
        out = Polynomial(self.nvars)
        out._terms = {e: c * scalar for e, c in self._terms.items()}
        return out

    # -- calculus and evaluation ---------------------------------------

    def partial(self, orders) -> "Polynomial":
        """Iterated partial derivative; ``orders[i]`` differentiations in x_i."""
        orders = tuple(int(o) for o in orders)
        if len(orders) != self.nvars:
            raise DimensionMismatchError(
                f"derivative multi-index length {len(orders)} != {self.nvars}"
            )
        if any(o < 0 for o in orders):
            raise ValueError("negative derivative order")
        terms = {}
        for expo, coeff in self._terms.items():
            if any(e < o for e, o in zip(expo, orders)):
                continue
            factor = 1
            for e, o in zip(expo, orders):
                # falling factorial e (e-1) ... (e-o+1)
                for j in range(o):
                    factor *= e - j
            new_expo = tuple(e - o for e, o in zip(expo, orders))
            terms[new_expo] = terms.get(new_expo, Fraction(0)) + coeff * factor
        return Polynomial(self.nvars, terms)

    def eval(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise DimensionMismatchError(
                f"point length {len(point)} != {self.nvars} variables"
            )
        values = [_as_fraction(p) for p in point]
        total = Fraction(0)
        for expo, coeff in self._terms.items():
            term = coeff
            for v, e in zip(values, expo):
                if e:
                    term *= v**e
            total += term
        return total

    def compose(self, args: Sequence["Polynomial"]) -> "Polynomial":
        """Substitute ``args[i]`` for variable i; args share a variable count."""
        if len(args) != self.nvars:
            raise DimensionMismatchError("one substitution polynomial per variable")
        if not args:
            raise DimensionMismatchError("compose needs at least one variable")
        m = args[0].nvars
        if any(a.nvars != m for a in args):
            raise DimensionMismatchError("substitution polynomials disagree on variables")
        # cache powers of each argument
        powers = [[Polynomial.one(m), a] for a in args]
        def power(i, e):
            col = powers[i]
            while len(col) <= e:
                col.append(col[-1] * col[1])
            return col[e]
        result = Polynomial.zero(m)
        for expo, coeff in self._terms.items():
            term = Polynomial.constant(m, coeff)
            for i, e in enumerate(expo):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    # -- univariate helpers --------------------------------------------

    def univariate_coeffs(self) -> list:
        """Coefficient list (low degree first) of a one-variable polynomial."""
        if self.nvars != 1:
            raise DimensionMismatchError("not univariate")
        if not self._terms:
            return []
        deg = max(e[0] for e in self._terms)
        return [self._terms.get((i,), Fraction(0)) for i in range(deg + 1)]

    # -- text form -------------------------------------------------------

    def to_text(self, varnames=None) -> str:
        """Canonical text form: graded-lex ordered sum of ``coeff * x^e`` terms."""
        if varnames is None:
            varnames = [f"x{i + 1}" for i in range(self.nvars)]
        if not self._terms:
            return "0"
        chunks = []
        for expo, coeff in self.items():
            factors = []
            for name, e in zip(varnames, expo):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(coeff)
            if factors and mag == 1:
                body = " * ".join(factors)
            elif factors:
                body = " * ".join([str(mag)] + factors)
            else:
                body = str(mag)
            sign = "-" if coeff < 0 else "+"
            chunks.append((sign, body))
        first_sign, first_body = chunks[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in chunks[1:]:
            text += f" {sign} {body}"
        return text


def poly_partial_derivative(p: Polynomial, index) -> Polynomial:
    """Exact iterated partial derivative of ``p`` by the multi-index ``index``."""
    return p.partial(index)


def poly_eval(p: Polynomial, point) -> Fraction:
    """Exact value of ``p`` at a rational point."""
    return p.eval(point)


# ---------------------------------------------------------------------------
# univariate gcd machinery
# ---------------------------------------------------------------------------


def _univariate_divmod(a: Polynomial, b: Polynomial):
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    ac = a.univariate_coeffs()
    bc = b.univariate_coeffs()
    q = [Fraction(0)] * max(len(ac) - len(bc) + 1, 1)
    rem = list(ac)
    while len(rem) >= len(bc) and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) < len(bc):
            break
        shift = len(rem) - len(bc)
        factor = rem[-1] / bc[-1]
        q[shift] = factor
        for i, c in enumerate(bc):
            rem[shift + i] -= factor * c
        rem.pop()
    return Polynomial.univariate(q), Polynomial.univariate(rem)


def _integer_content(coeffs: Iterable[Fraction]) -> Fraction:
    """gcd of numerators over lcm of denominators; 0 for no coefficients."""
    num = 0
    den = 1
    seen = False
    for c in coeffs:
        seen = True
        num = math.gcd(num, abs(c.numerator))
        den = den * c.denominator // math.gcd(den, c.denominator)
    if not seen:
        return Fraction(0)
    return Fraction(num, den)


def _primitive_positive(p: Polynomial) -> Polynomial:
    """Scale to integer coefficients with gcd 1 and positive leading coefficient."""
    coeffs = list(p._terms.values())
    if not coeffs:
        return p
    content = _integer_content(coeffs)
    lead = p.univariate_coeffs()[-1] if p.nvars == 1 else None
    scaled = p.scale(1 / content)
    if lead is not None and lead < 0:
        scaled = -scaled
    return scaled


def poly_gcd_univariate(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic-free canonical gcd: primitive integer coefficients, positive lead."""
    if a.nvars != 1 or b.nvars != 1:
        raise DimensionMismatchError("gcd requires univariate polynomials")
    x, y = a, b
    while not y.is_zero():
        _, r = _univariate_divmod(x, y)
        x, y = y, r
    if x.is_zero():
        return x
    return _primitive_positive(x)


def poly_divexact_univariate(a: Polynomial, b: Polynomial) -> Polynomial:
    q, r = _univariate_divmod(a, b)
    if not r.is_zero():
        raise ValueError("division is not exact")
    return q


# ---------------------------------------------------------------------------
# rational curves
# ---------------------------------------------------------------------------


class RationalCurve:
    """Rational map P^1 -> P^N given by N+1 univariate components."""

    __slots__ = ("components",)

    def __init__(self, components: Sequence[Polynomial]):
        comps = tuple(components)
        if not comps:
            raise DegenerateCurveError("a curve needs at least one component")
        for c in comps:
            if c.nvars != 1:
                raise DimensionMismatchError("curve components must be univariate")
        if all(c.is_zero() for c in comps):
            raise DegenerateCurveError("all curve components are zero")
        self.components = comps

    @property
    def ambient_dim(self) -> int:
        return len(self.components) - 1

    def degree(self) -> int:
        return max(c.total_degree() for c in self.components)

    def eval(self, t) -> tuple:
        t = _as_fraction(t)
        return tuple(c.eval((t,)) for c in self.components)

    def value_at_infinity(self) -> tuple:
        """Coefficient vector of t^degree across components."""
        d = self.degree()
        return tuple(c.coefficient((d,)) for c in self.components)

    def coefficient_vectors(self) -> list:
        """Exact coefficient lists (low degree first), one per component."""
        d = self.degree()
        return [
            [c.coefficient((k,)) for k in range(d + 1)] for c in self.components
        ]

    def __eq__(self, other):
        if not isinstance(other, RationalCurve):
            return NotImplemented
        return self.components == other.components

    def __repr__(self):
        body = ", ".join(c.to_text(["t"]) for c in self.components)
        return f"RationalCurve([{body}])"


def curve_normalize(curve: RationalCurve) -> RationalCurve:
    """Canonical form: gcd and content removed, first nonzero lead positive."""
    comps = list(curve.components)
    g = None
    for c in comps:
        if c.is_zero():
            continue
        g = c if g is None else poly_gcd_univariate(g, c)
        if g.total_degree() == 0:
            break
    if g is not None and g.total_degree() > 0:
        comps = [
            c if c.is_zero() else poly_divexact_univariate(c, g) for c in comps
        ]
    content = _integer_content(
        coeff for c in comps for coeff in c._terms.values()
    )
    if content not in (0, 1):
        comps = [c.scale(1 / content) for c in comps]
    for c in comps:
        if not c.is_zero():
            if c.univariate_coeffs()[-1] < 0:
                comps = [-x for x in comps]
            break
    return RationalCurve(comps)
