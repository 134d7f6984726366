"""Closed-form Poincare polynomials and series for the representation varieties.

Everything here is a pure function of a :class:`~su2rep.targets.SurfaceTarget`.
The basic closed forms are, writing P3 = (1+t^3)^n and M = (t+t^2)^n:

* regular fiber:   P3 + M           (plus and minus sector summands)
* singular fiber:  P3 + t^2 M
* generic class:   (1+t^2) (P3 + M)  (a 2-sphere factor splits off)

The orbit-space Poincare polynomial is computed twice on purpose, once from
the closed five-case expression and once assembled from the exact sequence
of the pair (orbit space, fixed orbits); the redundancy is the test, and
:func:`orbit_poincare` refuses to return if the two routes disagree.

Cup products on the pair are trivial, and for the singular variety the whole
reduced orbit-space ring is trivial; for the regular variety the middle class
acts through the localization picture, with the single undetermined product
being the square of the degree-n class, which is not guessed here.  These
facts are reported as metadata flags by the CLI rather than computed rings.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exterior import fixed_point_poincare
from .ratpoly import RatFn, RatPoly, poly_reciprocal
from .targets import SurfaceTarget, TargetKind, Variant


class ConsistencyError(RuntimeError):
    """Two independently derived closed forms disagreed; the library is wrong."""


def _t(power: int = 1) -> RatPoly:
    return RatPoly.t(power)


def _one_plus_t() -> RatPoly:
    return RatPoly.one() + _t()


def _one_minus_t() -> RatPoly:
    return RatPoly.one() - _t()


@lru_cache(maxsize=None)
def poincare_sectors(target: SurfaceTarget) -> tuple[RatPoly, RatPoly]:
    """Poincare polynomials of the plus and minus sectors of the involution."""
    n = target.n
    plus = (RatPoly.one() + _t(3)) ** n
    minus = (_t(1) + _t(2)) ** n
    if target.is_central and target.variant is Variant.SINGULAR:
        minus = _t(2) * minus
    if target.kind is TargetKind.GENERIC:
        sphere = RatPoly.one() + _t(2)
        plus, minus = sphere * plus, sphere * minus
    return plus, minus


def poincare(target: SurfaceTarget) -> RatPoly:
    """Rational Poincare polynomial of the variety."""
    plus, minus = poincare_sectors(target)
    return plus + minus


def bigraded_poincare(target: SurfaceTarget) -> RatPoly:
    """Two-variable Poincare polynomial in (x, y); central targets only.

    The plus sector contributes (1 + x y^2)^n and the minus sector
    (x + y^2)^n, with an extra factor y^2 on the singular fiber.  A class of
    bidegree (k, 2l) appears as x^k y^(2l).
    """
    if not target.is_central:
        raise ValueError("the bigrading is stated for central targets only")
    n = target.n
    x, y2 = RatPoly.x(), RatPoly.y(2)
    one = RatPoly.one(arity=2)
    plus = (one + x * y2) ** n
    minus = (x + y2) ** n
    if target.variant is Variant.SINGULAR:
        minus = y2 * minus
    return plus + minus


def specialize_total_degree(p: RatPoly) -> RatPoly:
    """Collapse the bigrading to the single grading: x^a y^b -> t^(a+b).

    A bidegree-(k, 2l) class has cohomological degree k + 2l, so the rule is
    forced by the minimal-c1 representatives of the canonical basis.
    """
    if p.arity != 2:
        raise ValueError("expected a bivariate polynomial")
    out = RatPoly.zero()
    for (a, b), coeff in p.items():
        out = out + RatPoly({a + b: coeff})
    return out


@dataclass(frozen=True)
class RecursionStep:
    k: int
    regular_ok: bool
    pair_ok: bool
    singular_ok: bool
    dimension_ok: bool

    @property
    def passed(self) -> bool:
        return self.regular_ok and self.pair_ok and self.singular_ok and self.dimension_ok


@dataclass(frozen=True)
class RecursionReport:
    n_max: int
    steps: tuple[RecursionStep, ...]

    @property
    def passed(self) -> bool:
        return all(step.passed for step in self.steps)

    @property
    def failures(self) -> list[str]:
        return [f"k={s.k}" for s in self.steps if not s.passed]


def recursion_verify(n_max: int) -> RecursionReport:
    """Bootstrap the Poincare polynomials from exact sequences and compare.

    Seeds: the 0-cross-cap regular fiber is two points (P = 2) and the
    singular fiber is a 2-sphere (P = 1 + t^2).  For k >= 1:

    * regular(k) = singular(k-1) + t^(3k) * reversal of singular(k-1),
    * the relative polynomial of (ambient tuples, regular fiber) equals
      ambient(k+1) + t*regular(k) - (1+t)*ambient(k), which must come out as
      t^3 (1+t^3)^k + t (t+t^2)^k,
    * singular(k) = t^(3k+3) * reversal of that relative polynomial
      (Lefschetz duality across the complement of the regular fiber).

    Every step is compared against the closed forms, and the total dimension
    2^(k+1) is compared against the fixed-locus dimension.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    t = _t

    def ambient(m: int) -> RatPoly:
        return (RatPoly.one() + t(3)) ** m

    singular_prev = RatPoly.one() + t(2)
    steps = []
    for k in range(1, n_max + 1):
        regular_k = singular_prev + poly_reciprocal(singular_prev, 3 * k)
        regular_ok = regular_k == poincare(SurfaceTarget.regular(k))

        relative = ambient(k + 1) + t(1) * regular_k - _one_plus_t() * ambient(k)
        pair_ok = relative == t(3) * ambient(k) + t(1) * (t(1) + t(2)) ** k

        singular_k = poly_reciprocal(relative, 3 * k + 3)
        singular_ok = singular_k == poincare(SurfaceTarget.singular(k))

        dim = 2 ** (k + 1)
        fixed_dim = int(fixed_point_poincare(k)(1))
        dimension_ok = regular_k(1) == dim and singular_k(1) == dim and fixed_dim == dim
        steps.append(RecursionStep(k, regular_ok, pair_ok, singular_ok, dimension_ok))
        singular_prev = singular_k
    return RecursionReport(n_max, tuple(steps))


@dataclass(frozen=True)
class EquivariantSeries:
    g_series: RatFn
    t_series: RatFn


def equivariant_poincare(target: SurfaceTarget) -> EquivariantSeries:
    """Equivariant Poincare series for the full group and for the torus.

    The action is equivariantly formal, so the series are the ordinary
    polynomial divided by 1 - t^4 (full group) and 1 - t^2 (torus).
    """
    p = poincare(target)
    return EquivariantSeries(
        g_series=RatFn(p, RatPoly.one() - _t(4)),
        t_series=RatFn(p, RatPoly.one() - _t(2)),
    )


def gxt_equivariant_series(target: SurfaceTarget) -> RatFn:
    """Equivariant series of the union of orbits through the fixed locus.

    Closed forms of the Weyl-invariant fixed-locus series:

    * central +1:  (1+t)^n/(1-t^2) + (1-t)^n/(1+t^2)
    * central -1:  (1+t)^n/(1-t^2)
    * generic:     2 (1+t)^n/(1-t^2)
    """
    n = target.n
    plus_part = RatFn(_one_plus_t() ** n, RatPoly.one() - _t(2))
    if target.kind is TargetKind.CENTRAL_PLUS:
        return plus_part + RatFn(_one_minus_t() ** n, RatPoly.one() + _t(2))
    if target.kind is TargetKind.CENTRAL_MINUS:
        return plus_part
    return 2 * plus_part


def pair_poincare(target: SurfaceTarget) -> RatFn:
    """Poincare series of the pair (orbit space, fixed orbits).

    Equals t * (series of orbits through the fixed locus - full equivariant
    series); its cup product is trivial.
    """
    return RatFn(_t(1)) * (gxt_equivariant_series(target) - equivariant_poincare(target).g_series)


def pair_poincare_direct(target: SurfaceTarget) -> RatFn:
    """The five-case closed display of the pair series, transcribed term by term."""
    n = target.n
    t = RatFn(_t(1))
    a = RatFn(_one_plus_t() ** n, RatPoly.one() - _t(2))
    b = RatFn(_one_minus_t() ** n, RatPoly.one() + _t(2))
    regular_p = (RatPoly.one() + _t(3)) ** n + (_t(1) + _t(2)) ** n
    singular_p = (RatPoly.one() + _t(3)) ** n + _t(2) * (_t(1) + _t(2)) ** n
    one_minus_t4 = RatPoly.one() - _t(4)
    if target.kind is TargetKind.CENTRAL_PLUS:
        inner = a + b - RatFn(singular_p if n % 2 else regular_p, one_minus_t4)
    elif target.kind is TargetKind.CENTRAL_MINUS:
        inner = a - RatFn(regular_p if n % 2 else singular_p, one_minus_t4)
    else:
        inner = 2 * a - RatFn(regular_p, RatPoly.one() - _t(2))
    return t * inner


def fixed_orbit_space_poincare(target: SurfaceTarget) -> RatPoly:
    """Poincare polynomial of the fixed locus modulo the Weyl reflection.

    (1+t)^n + (1-t)^n when the reflection preserves the two components
    (central +1), (1+t)^n when it swaps them (central -1), and 2 (1+t)^n for
    the doubled fixed locus of a generic class.
    """
    n = target.n
    if target.kind is TargetKind.CENTRAL_PLUS:
        return _one_plus_t() ** n + _one_minus_t() ** n
    if target.kind is TargetKind.CENTRAL_MINUS:
        return _one_plus_t() ** n
    return 2 * _one_plus_t() ** n


def kernel_poincare(target: SurfaceTarget) -> RatPoly:
    """Poincare polynomial of the kernel of the connecting map; central only.

    1 for the singular fiber; 1 + t^n for the regular fiber (the unit and
    the top minus-sector fixed class survive).
    """
    if not target.is_central:
        raise ValueError("the kernel polynomial is stated for central targets only")
    if target.variant is Variant.SINGULAR:
        return RatPoly.one()
    return RatPoly.one() + _t(target.n)


def _connecting_kernel(target: SurfaceTarget) -> RatPoly:
    if target.is_central:
        return kernel_poincare(target)
    # Generic class: the unit and the top minus class again span the kernel;
    # doubling this term breaks the n = 0 and n = 1 orbit spaces.
    return RatPoly.one() + _t(target.n)


def orbit_poincare_direct(target: SurfaceTarget) -> RatFn:
    """Closed five-case expression for the orbit-space Poincare polynomial."""
    n = target.n
    t = RatFn(_t(1))
    tail_small = _one_plus_t()
    tail_full = _one_plus_t() * (RatPoly.one() + _t(n))
    pair = pair_poincare_direct(target)
    if target.kind is TargetKind.CENTRAL_PLUS:
        fixed = _one_plus_t() ** n + _one_minus_t() ** n
        tail = tail_small if n % 2 else tail_full
    elif target.kind is TargetKind.CENTRAL_MINUS:
        fixed = _one_plus_t() ** n
        tail = tail_full if n % 2 else tail_small
    else:
        fixed = 2 * _one_plus_t() ** n
        tail = tail_full
    return pair - t * RatFn(fixed) + RatFn(tail)


def orbit_poincare_assembled(target: SurfaceTarget) -> RatFn:
    """Orbit-space series assembled from the long exact sequence of the pair."""
    pair = pair_poincare(target)
    fixed = fixed_orbit_space_poincare(target)
    kernel = _connecting_kernel(target)
    return pair - RatFn(_t(1) * fixed) + RatFn(_one_plus_t() * kernel)


def orbit_poincare(target: SurfaceTarget) -> RatPoly:
    """Poincare polynomial of the orbit space, checked along two routes.

    The closed expression and the exact-sequence assembly must agree and
    collapse to a polynomial with non-negative integer coefficients.
    """
    direct = orbit_poincare_direct(target)
    assembled = orbit_poincare_assembled(target)
    if direct != assembled:
        raise ConsistencyError(
            f"orbit-space routes disagree for {target}: {direct} vs {assembled}"
        )
    polynomial = direct.to_polynomial()
    for exponent, coeff in polynomial.items():
        if coeff.denominator != 1 or coeff < 0:
            raise ConsistencyError(
                f"orbit-space polynomial has a bad coefficient {coeff} at degree {exponent}"
            )
    return polynomial


def has_two_torsion(target: SurfaceTarget) -> bool:
    """Whether integral degree-2 homology of the variety has 2-torsion.

    True for the regular fiber once n >= 2 and for the singular fiber once
    n >= 1; transcribed, not computed (the library works over Q).
    """
    if not target.is_central:
        raise ValueError("the torsion statement covers central targets only")
    if target.variant is Variant.REGULAR:
        return target.n >= 2
    return target.n >= 1


def euler_characteristic(target: SurfaceTarget) -> int:
    """Euler characteristic, evaluated exactly at t = -1."""
    value = poincare(target)(-1)
    assert value.denominator == 1
    return int(value)
