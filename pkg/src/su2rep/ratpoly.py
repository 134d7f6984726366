"""Exact rational polynomials and rational functions.

Polynomials are stored sparsely as a map from exponents to nonzero
``fractions.Fraction`` coefficients.  Univariate polynomials (arity 1) use
non-negative integer exponents in the variable ``t``; bivariate polynomials
(arity 2) use ``(i, j)`` exponent pairs in the variables ``(x, y)``, listed
in lexicographic (x-degree, y-degree) order whenever they are serialized.

Rational functions are kept in a canonical form: numerator and denominator
are coprime (the polynomial gcd over Q is divided out) and the denominator
is an integer-primitive polynomial with positive leading coefficient.
Equality of canonical forms is plain structural equality, and it agrees
with equality by cross multiplication.

All values are immutable after construction and every operation is a pure
function, so the types here are safe for unrestricted concurrent use.
"""

from __future__ import annotations

import math
from fractions import Fraction


class NotPolynomialError(ValueError):
    """A rational function failed to simplify to a polynomial.

    Carries the witness of the failed division: ``quotient`` and a nonzero
    ``remainder`` with numerator = quotient * denominator + remainder.
    """

    def __init__(self, quotient: "RatPoly", remainder: "RatPoly"):
        self.quotient = quotient
        self.remainder = remainder
        super().__init__(f"not a polynomial; division leaves remainder {remainder}")


class PoleAtZeroError(ValueError):
    """Power-series expansion requested for a function with a pole at 0."""


def _coerce_coeff(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"coefficient must be an int or Fraction, got {type(value).__name__}")


class RatPoly:
    """Sparse polynomial over Q in one variable ``t`` or two variables ``(x, y)``."""

    __slots__ = ("arity", "_coeffs")

    def __init__(self, coeffs=None, arity: int = 1):
        if arity not in (1, 2):
            raise ValueError("arity must be 1 or 2")
        data = {}
        for exp, value in (coeffs or {}).items():
            value = _coerce_coeff(value)
            if not value:
                continue
            if arity == 1:
                if not isinstance(exp, int) or exp < 0:
                    raise ValueError(f"univariate exponent must be a non-negative int, got {exp!r}")
            else:
                i, j = exp
                exp = (int(i), int(j))
                if exp[0] < 0 or exp[1] < 0:
                    raise ValueError(f"bivariate exponents must be non-negative, got {exp!r}")
            data[exp] = value
        self.arity = arity
        self._coeffs = data

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, arity: int = 1) -> "RatPoly":
        return cls({}, arity)

    @classmethod
    def one(cls, arity: int = 1) -> "RatPoly":
        return cls.constant(1, arity)

    @classmethod
    def constant(cls, value, arity: int = 1) -> "RatPoly":
        exp = 0 if arity == 1 else (0, 0)
        return cls({exp: Fraction(value)}, arity)

    @classmethod
    def t(cls, power: int = 1) -> "RatPoly":
        """The monomial t**power."""
        return cls({power: Fraction(1)})

    @classmethod
    def x(cls, power: int = 1) -> "RatPoly":
        return cls({(power, 0): Fraction(1)}, 2)

    @classmethod
    def y(cls, power: int = 1) -> "RatPoly":
        return cls({(0, power): Fraction(1)}, 2)

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def degree(self):
        """Total degree; -inf for the zero polynomial."""
        if not self._coeffs:
            return -math.inf
        if self.arity == 1:
            return max(self._coeffs)
        return max(i + j for i, j in self._coeffs)

    def coefficient(self, exp) -> Fraction:
        return self._coeffs.get(exp, Fraction(0))

    def items(self):
        """Coefficients as (exponent, value) pairs in canonical order."""
        return sorted(self._coeffs.items())

    def dense_coefficients(self, upto: int | None = None) -> list[Fraction]:
        """Univariate coefficient list c0..c_max (or ..c_upto)."""
        self._require_univariate()
        top = self.degree()
        n = int(top) if top >= 0 else 0
        if upto is not None:
            n = upto
        return [self.coefficient(k) for k in range(n + 1)]

    def leading_coefficient(self) -> Fraction:
        self._require_univariate()
        if self.is_zero:
            return Fraction(0)
        return self._coeffs[max(self._coeffs)]

    def _require_univariate(self):
        if self.arity != 1:
            raise ValueError("operation requires a univariate polynomial")

    def _require_same_arity(self, other: "RatPoly"):
        if self.arity != other.arity:
            raise ValueError("arity mismatch: cannot mix univariate and bivariate polynomials")

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RatPoly.constant(other, self.arity)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        self._require_same_arity(other)
        out = dict(self._coeffs)
        for exp, value in other._coeffs.items():
            acc = out.get(exp, Fraction(0)) + value
            if acc:
                out[exp] = acc
            else:
                out.pop(exp, None)
        return RatPoly(out, self.arity)

    __radd__ = __add__

    def __neg__(self):
        return RatPoly({e: -c for e, c in self._coeffs.items()}, self.arity)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            scale = Fraction(other)
            if not scale:
                return RatPoly.zero(self.arity)
            return RatPoly({e: c * scale for e, c in self._coeffs.items()}, self.arity)
        if not isinstance(other, RatPoly):
            return NotImplemented
        self._require_same_arity(other)
        out: dict = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                exp = e1 + e2 if self.arity == 1 else (e1[0] + e2[0], e1[1] + e2[1])
                acc = out.get(exp, Fraction(0)) + c1 * c2
                if acc:
                    out[exp] = acc
                else:
                    out.pop(exp, None)
        return RatPoly(out, self.arity)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = RatPoly.one(self.arity)
        for _ in range(exponent):
            result = result * self
        return result

    def __call__(self, value) -> Fraction:
        """Evaluate a univariate polynomial at an exact rational point."""
        self._require_univariate()
        value = Fraction(value)
        return sum((c * value**e for e, c in self._coeffs.items()), Fraction(0))

    # -- comparison and display ---------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other) if not isinstance(other, RatPoly) else other
        if other is None:
            return NotImplemented
        return self.arity == other.arity and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.arity, frozenset(self._coeffs.items())))

    def __bool__(self):
        return not self.is_zero

    def _term_str(self, exp, coeff) -> str:
        if self.arity == 1:
            vars_part = "" if exp == 0 else ("t" if exp == 1 else f"t^{exp}")
        else:
            i, j = exp
            pieces = []
            if i:
                pieces.append("x" if i == 1 else f"x^{i}")
            if j:
                pieces.append("y" if j == 1 else f"y^{j}")
            vars_part = "*".join(pieces)
        if not vars_part:
            return str(coeff)
        if coeff == 1:
            return vars_part
        if coeff == -1:
            return f"-{vars_part}"
        return f"{coeff}*{vars_part}"

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = [self._term_str(e, c) for e, c in self.items()]
        out = terms[0]
        for term in terms[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def __repr__(self):
        return f"RatPoly({self})"

    # -- serialization -------------------------------------------------------

    def to_json(self) -> list:
        """JSON form: [exponent(s), numerator-string, denominator-string] triples.

        Integer parts are emitted as decimal strings so arbitrary precision
        survives any JSON consumer.
        """
        out = []
        for exp, coeff in self.items():
            key = exp if self.arity == 1 else [exp[0], exp[1]]
            out.append([key, str(coeff.numerator), str(coeff.denominator)])
        return out


def poly_arith(p: RatPoly, q: RatPoly, op: str) -> RatPoly:
    """Add, subtract or multiply two polynomials of the same arity."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def poly_reciprocal(p: RatPoly, d: int) -> RatPoly:
    """The reversal t**d * p(1/t); requires d >= deg(p) so the result is a polynomial."""
    p._require_univariate()
    if d < 0:
        raise ValueError("reversal degree must be non-negative")
    if not p.is_zero and d < p.degree():
        raise ValueError(f"reversal degree {d} is below deg(p) = {p.degree()}")
    return RatPoly({d - e: c for e, c in p._coeffs.items()})


def poly_divmod(a: RatPoly, b: RatPoly) -> tuple[RatPoly, RatPoly]:
    """Euclidean division of univariate polynomials: a = q*b + r, deg r < deg b."""
    a._require_univariate()
    b._require_univariate()
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    quot: dict = {}
    rem = dict(a._coeffs)
    deg_b = b.degree()
    lead_b = b.leading_coefficient()
    while rem and max(rem) >= deg_b:
        deg_r = max(rem)
        factor = rem[deg_r] / lead_b
        shift = deg_r - deg_b
        quot[shift] = factor
        for e, c in b._coeffs.items():
            k = e + shift
            acc = rem.get(k, Fraction(0)) - factor * c
            if acc:
                rem[k] = acc
            else:
                rem.pop(k, None)
    return RatPoly(quot), RatPoly(rem)


def poly_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    """Monic gcd of univariate polynomials over Q (zero if both are zero)."""
    a._require_univariate()
    b._require_univariate()
    while not b.is_zero:
        a, b = b, poly_divmod(a, b)[1]
    if a.is_zero:
        return a
    return a * (1 / a.leading_coefficient())


def _primitive_scale(p: RatPoly) -> Fraction:
    # Scalar s with p/s integer-primitive and positive leading coefficient.
    nums = math.gcd(*(abs(c.numerator) for c in p._coeffs.values()))
    dens = math.lcm(*(c.denominator for c in p._coeffs.values()))
    scale = Fraction(nums, dens)
    if p.leading_coefficient() < 0:
        scale = -scale
    return scale


class RatFn:
    """Univariate rational function over Q in canonical reduced form."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=1):
        num = self._as_poly(numerator)
        den = self._as_poly(denominator)
        num._require_univariate()
        den._require_univariate()
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            num, den = RatPoly.zero(), RatPoly.one()
        else:
            g = poly_gcd(num, den)
            if g.degree() > 0:
                num = poly_divmod(num, g)[0]
                den = poly_divmod(den, g)[0]
            scale = _primitive_scale(den)
            num = num * (1 / scale)
            den = den * (1 / scale)
        self.numerator = num
        self.denominator = den

    @staticmethod
    def _as_poly(value) -> RatPoly:
        if isinstance(value, RatPoly):
            return value
        if isinstance(value, (int, Fraction)):
            return RatPoly.constant(value)
        raise TypeError(f"cannot interpret {type(value).__name__} as a polynomial")

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, RatFn):
            return other
        if isinstance(other, (RatPoly, int, Fraction)):
            return cls(other)
        return None

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFn(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFn(-self.numerator, self.denominator)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFn(self.numerator * other.numerator, self.denominator * other.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.numerator.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFn(self.numerator * other.denominator, self.denominator * other.numerator)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __bool__(self):
        return not self.numerator.is_zero

    def __str__(self):
        if self.denominator == RatPoly.one():
            return str(self.numerator)
        return f"({self.numerator}) / ({self.denominator})"

    def __repr__(self):
        return f"RatFn({self})"

    # -- queries --------------------------------------------------------------

    @property
    def is_polynomial(self) -> bool:
        return self.denominator.degree() == 0

    def to_polynomial(self) -> RatPoly:
        """The polynomial equal to this function, or NotPolynomialError."""
        if self.is_polynomial:
            return self.numerator * (1 / self.denominator.coefficient(0))
        raise NotPolynomialError(*poly_divmod(self.numerator, self.denominator))

    def series(self, n_max: int = 40) -> list[Fraction]:
        """Exact Taylor coefficients c0..c_{n_max} at t = 0."""
        if n_max < 0:
            raise ValueError("series order must be non-negative")
        d0 = self.denominator.coefficient(0)
        if not d0:
            raise PoleAtZeroError("denominator vanishes at t = 0")
        den_deg = int(max(self.denominator.degree(), 0))
        out: list[Fraction] = []
        for k in range(n_max + 1):
            acc = self.numerator.coefficient(k)
            for j in range(1, min(k, den_deg) + 1):
                acc -= self.denominator.coefficient(j) * out[k - j]
            out.append(acc / d0)
        return out

    def to_json(self) -> dict:
        return {"numerator": self.numerator.to_json(), "denominator": self.denominator.to_json()}


def ratfn_simplify_to_poly(f: RatFn) -> RatPoly:
    """Collapse a rational function to the polynomial it equals."""
    return f.to_polynomial()


def series_expand(f: RatFn, n_max: int = 40) -> list[Fraction]:
    """Exact power-series coefficients of ``f`` through degree ``n_max``."""
    return f.series(n_max)
