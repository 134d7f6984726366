"""Exterior algebra of the fixed-point locus and its equivariant extension.

The torus-fixed locus of the varieties studied here is two disjoint copies
of an n-torus, so its cohomology is (group ring of Z2) tensor Lambda[a_1..a_n]
with each a_i in degree 1.  The component-swapping involution splits every
computation into a plus and a minus sector, and the equivariant theory of the
fixed locus appends a polynomial generator c1 of degree 2.

Exterior monomials a_S are encoded as bitmasks (bit i-1 set iff a_i occurs)
together with a sign.  Products use the Koszul convention: the sign is
(-1)**(number of inversions in the sorted merge of the two index lists).
Golden outputs depend on this convention; do not change it.

The involution is realized by negating the 0th tuple coordinate.  Negating
any other coordinate is isotopic to it and induces the same action on
cohomology, so nothing downstream depends on the choice.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction

from .ratpoly import RatFn, RatPoly
from .targets import TargetKind

#: Enumerations over all 2**n exterior monomials refuse to run past this
#: size unless explicitly overridden.
ENUMERATION_CAP = 16

#: Hard limit imposed by the bitmask encoding.
MAX_GENERATORS = 63


def check_enumeration_cap(n: int, allow_large: bool = False):
    if n > MAX_GENERATORS:
        raise ValueError(f"at most {MAX_GENERATORS} exterior generators are supported")
    if n > ENUMERATION_CAP and not allow_large:
        raise ValueError(
            f"n = {n} exceeds the enumeration cap {ENUMERATION_CAP}; "
            "pass allow_large=True to force a 2**n-sized enumeration"
        )


class Sector(Enum):
    """Eigenspace label for the component-swapping involution."""

    PLUS = "plus"
    MINUS = "minus"

    def __mul__(self, other: "Sector") -> "Sector":
        if not isinstance(other, Sector):
            return NotImplemented
        return Sector.PLUS if self is other else Sector.MINUS


def koszul_sign(mask_a: int, mask_b: int) -> int:
    """Sign of the merge of two disjoint sorted index sets."""
    sign = 1
    b = mask_b
    while b:
        low = b & -b
        above = mask_a >> low.bit_length()
        if above.bit_count() & 1:
            sign = -sign
        b ^= low
    return sign


@dataclass(frozen=True)
class ExtMono:
    """Signed exterior monomial a_S on n degree-1 generators."""

    n: int
    mask: int
    sign: int = 1

    def __post_init__(self):
        if not 0 <= self.n <= MAX_GENERATORS:
            raise ValueError(f"generator count must be between 0 and {MAX_GENERATORS}")
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError("monomial mask uses generators beyond n")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def degree(self) -> int:
        return self.mask.bit_count()

    @property
    def indices(self) -> tuple[int, ...]:
        """1-based generator indices, ascending."""
        return tuple(i + 1 for i in range(self.n) if self.mask >> i & 1)


def ext_mul(m1: ExtMono, m2: ExtMono) -> ExtMono | None:
    """Product in the exterior algebra; None encodes the zero element."""
    if m1.n != m2.n:
        raise ValueError("monomials live on different generator counts")
    if m1.mask & m2.mask:
        return None
    sign = m1.sign * m2.sign * koszul_sign(m1.mask, m2.mask)
    return ExtMono(m1.n, m1.mask | m2.mask, sign)


@dataclass(frozen=True)
class BigradedClass:
    """sector  x  exterior monomial  x  c1-power, with a rational coefficient.

    The bidegree is (k, 2l) for k the exterior degree and l the c1-power;
    the total degree is k + 2l.  The monomial sign is folded into the
    coefficient so equality is structural.
    """

    sector: Sector
    mono: ExtMono
    c1_power: int
    coeff: Fraction = Fraction(1)

    def __post_init__(self):
        if self.c1_power < 0:
            raise ValueError("c1-power must be non-negative")
        coeff = Fraction(self.coeff) * self.mono.sign
        if not coeff:
            raise ValueError("classes carry nonzero coefficients; use None for zero")
        object.__setattr__(self, "coeff", coeff)
        if self.mono.sign != 1:
            object.__setattr__(self, "mono", replace(self.mono, sign=1))

    @property
    def exterior_degree(self) -> int:
        return self.mono.degree

    @property
    def bidegree(self) -> tuple[int, int]:
        return (self.mono.degree, 2 * self.c1_power)

    @property
    def total_degree(self) -> int:
        return self.mono.degree + 2 * self.c1_power

    def to_json(self) -> dict:
        return {
            "sector": self.sector.value,
            "subset": list(self.mono.indices),
            "c1_power": self.c1_power,
            "coeff": str(self.coeff),
        }


def bigraded_mul(c1: BigradedClass, c2: BigradedClass) -> BigradedClass | None:
    """Product of bigraded classes; None encodes zero."""
    mono = ext_mul(c1.mono, c2.mono)
    if mono is None:
        return None
    return BigradedClass(
        sector=c1.sector * c2.sector,
        mono=mono,
        c1_power=c1.c1_power + c2.c1_power,
        coeff=c1.coeff * c2.coeff,
    )


def fixed_point_sector_poincare(n: int) -> RatPoly:
    """Poincare polynomial (1+t)**n of one sector of the fixed locus."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return (RatPoly.one() + RatPoly.t()) ** n


def fixed_point_poincare(n: int) -> RatPoly:
    """Poincare polynomial 2(1+t)**n of the full fixed locus (two n-tori)."""
    return 2 * fixed_point_sector_poincare(n)


def weyl_invariant_series(
    n: int, kind: TargetKind, n_max: int = 40, *, allow_large: bool = False
) -> RatFn:
    """Hilbert series of the Weyl invariants of the equivariant fixed locus.

    Computed by direct character counting on the monomial basis a_S * c1**l:

    * central +1 class: the Weyl reflection preserves both components and
      sends a_i -> -a_i, c1 -> -c1, so each component keeps exactly the
      monomials with |S| + l even;
    * central -1 class: the reflection swaps the two components, leaving one
      full copy of the monomial basis;
    * generic class: the fixed locus doubles and the reflection transposes
      the doubling, leaving two full copies.

    The per-monomial sums in l are geometric, so the result is an exact
    rational function; the expansion is re-checked coefficient by coefficient
    against an explicit monomial count through degree ``n_max``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    check_enumeration_cap(n, allow_large)
    t = RatPoly.t
    numerator = RatPoly.zero()
    if kind is TargetKind.CENTRAL_PLUS:
        for mask in range(1 << n):
            k = mask.bit_count()
            numerator = numerator + 2 * t(k + 2 * (k & 1))
        series = RatFn(numerator, RatPoly.one() - t(4))
    else:
        copies = 1 if kind is TargetKind.CENTRAL_MINUS else 2
        for mask in range(1 << n):
            numerator = numerator + copies * t(mask.bit_count())
        series = RatFn(numerator, RatPoly.one() - t(2))

    counts = [0] * (n_max + 1)
    for mask in range(1 << n):
        k = mask.bit_count()
        if k > n_max:
            continue
        for l in range((n_max - k) // 2 + 1):
            if kind is TargetKind.CENTRAL_PLUS:
                if (k + l) % 2 == 0:
                    counts[k + 2 * l] += 2
            elif kind is TargetKind.CENTRAL_MINUS:
                counts[k + 2 * l] += 1
            else:
                counts[k + 2 * l] += 2
    assert [Fraction(c) for c in counts] == series.series(n_max)
    return series
