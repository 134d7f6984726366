"""Localization images and the ordinary cohomology ring they determine.

Restriction to the torus-fixed locus embeds the equivariant cohomology of a
central-target variety into the free module spanned by a_S * c1**l.  Per
sector the image is cut out by a bidegree predicate on (k, l) with
k = |S|:

* plus sector (both variants):   k <= l
* minus sector, regular fiber:   k + l >= n
* minus sector, singular fiber:  k + l >= n + 1

Each predicate is upward closed in l, so it is captured by the minimal
admissible c1-power for each k.  The ordinary cohomology ring is the
quotient of the image by the classes divisible by c1; it is modelled here by
the canonical minimal-c1 representatives, one per (sector, subset), which
makes cup products a single bigraded multiplication followed by one
predicate test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exterior import Sector, check_enumeration_cap, koszul_sign
from .ratpoly import RatFn, RatPoly
from .targets import Variant


@dataclass(frozen=True)
class ImageSpec:
    """Per-sector localization image of one central-target variety."""

    n: int
    variant: Variant
    sector: Sector

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")

    def min_c1_power(self, k: int) -> int:
        """Smallest admissible c1-power above exterior degree k."""
        if not 0 <= k <= self.n:
            raise ValueError(f"exterior degree {k} out of range 0..{self.n}")
        if self.sector is Sector.PLUS:
            return k
        if self.variant is Variant.REGULAR:
            return max(0, self.n - k)
        return self.n + 1 - k

    def admits(self, k: int, l: int) -> bool:
        return l >= self.min_c1_power(k)


def _mask_basis(n_total, max_total_degree, min_c1_of_mask, allow_large):
    check_enumeration_cap(n_total, allow_large)
    if max_total_degree < 0:
        raise ValueError("degree bound must be non-negative")
    out = []
    for mask in range(1 << n_total):
        k = mask.bit_count()
        l = min_c1_of_mask(mask)
        while k + 2 * l <= max_total_degree:
            out.append((mask, l))
            l += 1
    return out


def _mask_hilbert_series(n_total, min_c1_of_mask, allow_large) -> RatFn:
    check_enumeration_cap(n_total, allow_large)
    numerator = RatPoly.zero()
    for mask in range(1 << n_total):
        numerator = numerator + RatPoly.t(mask.bit_count() + 2 * min_c1_of_mask(mask))
    return RatFn(numerator, RatPoly.one() - RatPoly.t(2))


def image_basis(
    spec: ImageSpec, max_total_degree: int, *, allow_large: bool = False
) -> list[tuple[int, int]]:
    """All admissible (subset mask, c1-power) pairs with total degree <= bound.

    Ordered by mask (colexicographic on subsets) and then by c1-power.
    """
    return _mask_basis(
        spec.n,
        max_total_degree,
        lambda mask: spec.min_c1_power(mask.bit_count()),
        allow_large,
    )


def image_hilbert_series(spec: ImageSpec) -> RatFn:
    """Hilbert series sum(C(n,k) t^(k+2l)) over admissible (k, l), exactly."""
    numerator = RatPoly.zero()
    for k in range(spec.n + 1):
        numerator = numerator + math.comb(spec.n, k) * RatPoly.t(k + 2 * spec.min_c1_power(k))
    return RatFn(numerator, RatPoly.one() - RatPoly.t(2))


@dataclass(frozen=True)
class CombinedImage:
    """Tensor over Q[c1] of two same-sector images, on concatenated generators.

    The fixed loci of a product glue by merging the 0th coordinates and
    concatenating the rest, so the left factor owns generator indices
    1..left.n and the right factor the remaining right.n indices.  Only
    like sectors tensor: the quotient by the diagonal involution kills the
    mixed terms, and the plus (resp. minus) part of the product is
    plus x plus (resp. minus x minus).
    """

    left: ImageSpec
    right: ImageSpec

    def __post_init__(self):
        if self.left.sector is not self.right.sector:
            raise ValueError("only like sectors combine; mixed sectors die in the quotient")

    @property
    def n(self) -> int:
        return self.left.n + self.right.n

    @property
    def sector(self) -> Sector:
        return self.left.sector

    def min_c1_power_of_mask(self, mask: int) -> int:
        k_left = (mask & ((1 << self.left.n) - 1)).bit_count()
        k_right = (mask >> self.left.n).bit_count()
        return self.left.min_c1_power(k_left) + self.right.min_c1_power(k_right)

    def admits(self, mask: int, l: int) -> bool:
        return l >= self.min_c1_power_of_mask(mask)

    def basis(self, max_total_degree: int, *, allow_large: bool = False) -> list[tuple[int, int]]:
        return _mask_basis(self.n, max_total_degree, self.min_c1_power_of_mask, allow_large)

    def hilbert_series(self, *, allow_large: bool = False) -> RatFn:
        return _mask_hilbert_series(self.n, self.min_c1_power_of_mask, allow_large)


def kunneth_combine(a: ImageSpec, b: ImageSpec) -> CombinedImage:
    """Image of a product variety as an explicit bidegree predicate."""
    return CombinedImage(a, b)


@dataclass(frozen=True)
class FactorizationCase:
    variant: Variant
    sector: Sector
    basis_match: bool
    series_match: bool
    tensor_series_match: bool
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.basis_match and self.series_match and self.tensor_series_match


@dataclass(frozen=True)
class FactorizationReport:
    n: int
    degree_bound: int
    cases: tuple[FactorizationCase, ...]

    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases)

    @property
    def first_discrepancy(self) -> str | None:
        for case in self.cases:
            if not case.passed:
                return f"{case.variant.value}/{case.sector.value}: {case.detail}"
        return None


def factorization_check(
    n: int, degree_bound: int | None = None, *, allow_large: bool = False
) -> FactorizationReport:
    """Compare direct localization images against their product factorizations.

    The regular image on n+1 tuple slots must match (regular on n slots)
    tensor (regular on 2 slots); the singular image must match (regular on
    n+1 slots) tensor (the n = 0 singular image).  Both are checked basis
    element by basis element up to the degree bound and symbolically through
    Hilbert series, which also pins down the eventually periodic tail.
    """
    if n < 1:
        raise ValueError("factorization requires n >= 1")
    bound = 2 * n + 6 if degree_bound is None else degree_bound
    cases = []
    for variant in (Variant.REGULAR, Variant.SINGULAR):
        for sector in (Sector.PLUS, Sector.MINUS):
            direct = ImageSpec(n, variant, sector)
            if variant is Variant.REGULAR:
                combined = kunneth_combine(
                    ImageSpec(n - 1, Variant.REGULAR, sector),
                    ImageSpec(1, Variant.REGULAR, sector),
                )
            else:
                combined = kunneth_combine(
                    ImageSpec(n, Variant.REGULAR, sector),
                    ImageSpec(0, Variant.SINGULAR, sector),
                )
            direct_basis = image_basis(direct, bound, allow_large=allow_large)
            combined_basis = combined.basis(bound, allow_large=allow_large)
            basis_match = direct_basis == combined_basis
            direct_series = image_hilbert_series(direct)
            series_match = direct_series == combined.hilbert_series(allow_large=allow_large)
            tensor_series = (
                image_hilbert_series(combined.left)
                * image_hilbert_series(combined.right)
                * (RatPoly.one() - RatPoly.t(2))
            )
            tensor_series_match = direct_series == tensor_series
            detail = ""
            if not basis_match:
                extra = set(direct_basis) ^ set(combined_basis)
                detail = f"first differing basis element {sorted(extra)[0]}"
            elif not (series_match and tensor_series_match):
                detail = "Hilbert series disagree"
            cases.append(
                FactorizationCase(variant, sector, basis_match, series_match, tensor_series_match, detail)
            )
    return FactorizationReport(n, bound, tuple(cases))


@dataclass(frozen=True)
class OrdClass:
    """Basis class of ordinary cohomology: a sector and a generator subset.

    The class is represented by the admissible image element with the least
    c1-power over its subset; its cohomological degree is k + 2*l_min.
    """

    n: int
    variant: Variant
    sector: Sector
    mask: int

    def __post_init__(self):
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError("subset mask uses generators beyond n")

    @property
    def k(self) -> int:
        return self.mask.bit_count()

    @property
    def c1_power(self) -> int:
        return ImageSpec(self.n, self.variant, self.sector).min_c1_power(self.k)

    @property
    def bidegree(self) -> tuple[int, int]:
        return (self.k, 2 * self.c1_power)

    @property
    def degree(self) -> int:
        return self.k + 2 * self.c1_power

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.n) if self.mask >> i & 1)

    def to_json(self) -> dict:
        return {
            "sector": self.sector.value,
            "subset": list(self.indices),
            "c1_power": self.c1_power,
            "coeff": "1",
        }


def ordinary_basis(n: int, variant: Variant, *, allow_large: bool = False) -> list[OrdClass]:
    """The 2**(n+1) canonical basis classes: all plus subsets, then all minus."""
    check_enumeration_cap(n, allow_large)
    out = [OrdClass(n, variant, Sector.PLUS, mask) for mask in range(1 << n)]
    out += [OrdClass(n, variant, Sector.MINUS, mask) for mask in range(1 << n)]
    return out


def cup_product(c1: OrdClass, c2: OrdClass) -> tuple[int, OrdClass] | None:
    """Cup product of two basis classes: a signed basis class, or None for zero.

    Multiply the minimal representatives; the product survives the quotient
    by c1-divisible classes exactly when its c1-power is again minimal for
    the resulting subset.
    """
    if (c1.n, c1.variant) != (c2.n, c2.variant):
        raise ValueError("classes live on different varieties")
    if c1.mask & c2.mask:
        return None
    result = OrdClass(c1.n, c1.variant, c1.sector * c2.sector, c1.mask | c2.mask)
    l = c1.c1_power + c2.c1_power
    assert l >= result.c1_power, "product escaped the localization image"
    if l > result.c1_power:
        return None
    return koszul_sign(c1.mask, c2.mask), result


def cup_table(n: int, variant: Variant, *, allow_large: bool = False) -> dict:
    """Full multiplication table over the canonical basis, JSON-ready.

    Entries are (i, j, k, coeff) with basis indices into ``basis`` and only
    nonzero products listed.
    """
    basis = ordinary_basis(n, variant, allow_large=allow_large)
    index = {cls: i for i, cls in enumerate(basis)}
    table = []
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            product = cup_product(a, b)
            if product is not None:
                sign, cls = product
                table.append([i, j, index[cls], sign])
    return {
        "n": n,
        "target": variant.value,
        "basis": [cls.to_json() for cls in basis],
        "table": table,
    }


def minus_pairing_matrix(n: int, *, allow_large: bool = False) -> list[list[Fraction]]:
    """Pairing of minus-sector classes of the regular variety into top degree 3n."""
    check_enumeration_cap(n, allow_large)
    top = OrdClass(n, Variant.REGULAR, Sector.PLUS, (1 << n) - 1)
    size = 1 << n
    matrix = []
    for mask_a in range(size):
        row = []
        a = OrdClass(n, Variant.REGULAR, Sector.MINUS, mask_a)
        for mask_b in range(size):
            b = OrdClass(n, Variant.REGULAR, Sector.MINUS, mask_b)
            product = cup_product(a, b)
            if product is None:
                row.append(Fraction(0))
            else:
                sign, cls = product
                row.append(Fraction(sign) if cls == top else Fraction(0))
        matrix.append(row)
    return matrix


def matrix_rank_exact(matrix: list[list[Fraction]]) -> int:
    """Rank over Q by fraction-free-enough Gaussian elimination."""
    rows = [list(row) for row in matrix]
    if not rows:
        return 0
    cols = len(rows[0])
    rank = 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            if rows[r][col]:
                factor = rows[r][col] / lead
                rows[r] = [rv - factor * pv for rv, pv in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def bigraded_generating_function(n: int, variant: Variant, *, allow_large: bool = False) -> RatPoly:
    """Two-variable generating function sum(x^k y^(2l)) of the canonical basis."""
    out = RatPoly.zero(arity=2)
    for cls in ordinary_basis(n, variant, allow_large=allow_large):
        k, two_l = cls.bidegree
        out = out + RatPoly({(k, two_l): 1}, arity=2)
    return out


def total_degree_table(n: int, variant: Variant, *, allow_large: bool = False) -> dict[tuple[int, int], int]:
    """Map each occupied bidegree (k, 2l) to the cohomological degree k + 2l.

    Derived from the canonical basis; this is the validated specialization
    rule from the bigrading back to the single grading.
    """
    table: dict[tuple[int, int], int] = {}
    for cls in ordinary_basis(n, variant, allow_large=allow_large):
        bi = cls.bidegree
        degree = cls.degree
        if table.setdefault(bi, degree) != degree:
            raise AssertionError("inconsistent total degree within one bidegree")
    return table
