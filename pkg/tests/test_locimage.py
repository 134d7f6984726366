import itertools
import json
from pathlib import Path

import pytest

from su2rep.exterior import Sector
from su2rep.locimage import (
    CombinedImage,
    ImageSpec,
    OrdClass,
    bigraded_generating_function,
    cup_product,
    cup_table,
    factorization_check,
    image_basis,
    image_hilbert_series,
    kunneth_combine,
    matrix_rank_exact,
    minus_pairing_matrix,
    ordinary_basis,
    total_degree_table,
)
from su2rep.ratpoly import RatFn, RatPoly
from su2rep.surfaces import bigraded_poincare, poincare, poincare_sectors
from su2rep.targets import SurfaceTarget, Variant

GOLDEN = Path(__file__).parent / "golden"

t = RatPoly.t
one = RatPoly.one()


def subsets(pairs):
    """(mask, l) pairs as a set of (sorted index tuple, l) for readability."""
    return {(tuple(i + 1 for i in range(8) if mask >> i & 1), l) for mask, l in pairs}


# -- image bases and series -----------------------------------------------------


def test_minus_regular_basis_low_degrees():
    spec = ImageSpec(1, Variant.REGULAR, Sector.MINUS)
    assert subsets(image_basis(spec, 4)) == {((), 1), ((), 2), ((1,), 0), ((1,), 1)}


def test_plus_basis_low_degrees():
    for variant in Variant:
        spec = ImageSpec(1, variant, Sector.PLUS)
        assert subsets(image_basis(spec, 3)) == {((), 0), ((), 1), ((1,), 1)}


def test_minus_singular_basis_n0():
    spec = ImageSpec(0, Variant.SINGULAR, Sector.MINUS)
    assert subsets(image_basis(spec, 4)) == {((), 1), ((), 2)}


def test_basis_is_ordered_by_mask_then_power():
    spec = ImageSpec(2, Variant.REGULAR, Sector.MINUS)
    basis = image_basis(spec, 6)
    assert basis == sorted(basis)


def test_hilbert_series_small_closed_forms():
    assert image_hilbert_series(ImageSpec(1, Variant.REGULAR, Sector.PLUS)) == RatFn(
        one + t(3), one - t(2)
    )
    assert image_hilbert_series(ImageSpec(1, Variant.REGULAR, Sector.MINUS)) == RatFn(
        t() + t(2), one - t(2)
    )
    assert image_hilbert_series(ImageSpec(0, Variant.SINGULAR, Sector.MINUS)) == RatFn(
        t(2), one - t(2)
    )


def test_hilbert_series_equals_sector_poincare_over_torus_factor():
    for n in range(13):
        for variant in Variant:
            target = (
                SurfaceTarget.regular(n) if variant is Variant.REGULAR else SurfaceTarget.singular(n)
            )
            plus, minus = poincare_sectors(target)
            assert image_hilbert_series(ImageSpec(n, variant, Sector.PLUS)) == RatFn(
                plus, one - t(2)
            )
            assert image_hilbert_series(ImageSpec(n, variant, Sector.MINUS)) == RatFn(
                minus, one - t(2)
            )


def test_basis_counts_match_series_coefficients():
    for n in range(7):
        for variant in Variant:
            for sector in Sector:
                spec = ImageSpec(n, variant, sector)
                bound = 2 * n + 6
                counts = [0] * (bound + 1)
                for mask, l in image_basis(spec, bound):
                    counts[bin(mask).count("1") + 2 * l] += 1
                assert counts == image_hilbert_series(spec).series(bound)


def test_image_is_closed_under_multiplication_by_c1():
    for n in range(5):
        for variant in Variant:
            for sector in Sector:
                spec = ImageSpec(n, variant, sector)
                for k in range(n + 1):
                    l = spec.min_c1_power(k)
                    assert spec.admits(k, l) and spec.admits(k, l + 1)


# -- Kunneth combination ---------------------------------------------------------


def test_combined_predicates_match_direct_ones():
    # regular(n) against regular(n-1) x regular(1), all sectors
    for n in range(1, 6):
        for sector in Sector:
            combined = kunneth_combine(
                ImageSpec(n - 1, Variant.REGULAR, sector), ImageSpec(1, Variant.REGULAR, sector)
            )
            direct = ImageSpec(n, Variant.REGULAR, sector)
            for mask in range(1 << n):
                k = bin(mask).count("1")
                assert combined.min_c1_power_of_mask(mask) == direct.min_c1_power(k)


def test_combined_singular_predicate():
    for n in range(4):
        combined = kunneth_combine(
            ImageSpec(n, Variant.REGULAR, Sector.MINUS), ImageSpec(0, Variant.SINGULAR, Sector.MINUS)
        )
        direct = ImageSpec(n, Variant.SINGULAR, Sector.MINUS)
        for mask in range(1 << n):
            assert combined.min_c1_power_of_mask(mask) == direct.min_c1_power(bin(mask).count("1"))


def test_mixed_sector_combination_is_rejected():
    with pytest.raises(ValueError):
        CombinedImage(
            ImageSpec(1, Variant.REGULAR, Sector.PLUS), ImageSpec(1, Variant.REGULAR, Sector.MINUS)
        )


def test_factorization_hand_case_n1():
    spec = ImageSpec(1, Variant.REGULAR, Sector.MINUS)
    combined = kunneth_combine(
        ImageSpec(0, Variant.REGULAR, Sector.MINUS), ImageSpec(1, Variant.REGULAR, Sector.MINUS)
    )
    expected = [(0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (1, 2)]
    assert image_basis(spec, 6) == expected
    assert combined.basis(6) == expected


@pytest.mark.parametrize("n", [1, 2, 5])
def test_factorization_check_passes(n):
    report = factorization_check(n)
    assert report.passed
    assert report.first_discrepancy is None
    assert report.degree_bound == 2 * n + 6


# -- ordinary basis and cup products ---------------------------------------------


def test_ordinary_basis_n0():
    regular = ordinary_basis(0, Variant.REGULAR)
    assert [(c.sector, c.degree) for c in regular] == [(Sector.PLUS, 0), (Sector.MINUS, 0)]
    singular = ordinary_basis(0, Variant.SINGULAR)
    assert [(c.sector, c.bidegree) for c in singular] == [
        (Sector.PLUS, (0, 0)),
        (Sector.MINUS, (0, 2)),
    ]


def test_ordinary_basis_n1_regular_degrees():
    degrees = sorted(c.degree for c in ordinary_basis(1, Variant.REGULAR))
    assert degrees == [0, 1, 2, 3]


def test_ordinary_basis_size_matches_fixed_locus():
    for n in range(13):
        for variant in Variant:
            assert len(ordinary_basis(n, variant)) == 2 ** (n + 1)


def test_basis_degrees_reproduce_poincare_polynomial():
    for n in range(9):
        for variant, make in ((Variant.REGULAR, SurfaceTarget.regular), (Variant.SINGULAR, SurfaceTarget.singular)):
            acc = RatPoly.zero()
            for c in ordinary_basis(n, variant):
                acc = acc + t(c.degree) if c.degree else acc + one
            assert acc == poincare(make(n))


def test_cup_pairing_of_complementary_minus_classes():
    a = OrdClass(2, Variant.REGULAR, Sector.MINUS, 0b01)
    b = OrdClass(2, Variant.REGULAR, Sector.MINUS, 0b10)
    assert cup_product(a, b) == (1, OrdClass(2, Variant.REGULAR, Sector.PLUS, 0b11))


def test_cup_singular_minus_classes_annihilate():
    a = OrdClass(2, Variant.SINGULAR, Sector.MINUS, 0b01)
    b = OrdClass(2, Variant.SINGULAR, Sector.MINUS, 0b10)
    assert cup_product(a, b) is None


def test_cup_unit_acts_trivially():
    for n in range(4):
        for variant in Variant:
            unit = OrdClass(n, variant, Sector.PLUS, 0)
            for c in ordinary_basis(n, variant):
                assert cup_product(unit, c) == (1, c)
                assert cup_product(c, unit) == (1, c)


def test_cup_rejects_mismatched_varieties():
    with pytest.raises(ValueError):
        cup_product(
            OrdClass(1, Variant.REGULAR, Sector.PLUS, 0), OrdClass(1, Variant.SINGULAR, Sector.PLUS, 0)
        )


def _as_vector(product, basis_index, dim):
    vec = [0] * dim
    if product is not None:
        sign, cls = product
        vec[basis_index[cls]] = sign
    return vec


def test_cup_product_graded_commutative_and_associative():
    for n in range(4):
        for variant in Variant:
            basis = ordinary_basis(n, variant)
            index = {c: i for i, c in enumerate(basis)}
            for a, b in itertools.product(basis, repeat=2):
                left = cup_product(a, b)
                right = cup_product(b, a)
                sign = (-1) ** (a.degree * b.degree)
                assert _as_vector(left, index, len(basis)) == [
                    sign * v for v in _as_vector(right, index, len(basis))
                ]
            for a, b, c in itertools.product(basis, repeat=3):
                ab = cup_product(a, b)
                bc = cup_product(b, c)
                left = None if ab is None else cup_product(ab[1], c)
                left_sign = None if left is None else ab[0] * left[0]
                right = None if bc is None else cup_product(a, bc[1])
                right_sign = None if right is None else bc[0] * right[0]
                if left is None or right is None:
                    assert left is None and right is None
                else:
                    assert (left_sign, left[1]) == (right_sign, right[1])


def test_minus_pairing_is_perfect_for_small_n():
    for n in range(5):
        matrix = minus_pairing_matrix(n)
        assert matrix_rank_exact(matrix) == 1 << n


def test_plus_subring_matches_exterior_structure_constants():
    # Independent sign oracle: count inversions by explicit insertion sort.
    def sort_sign(seq):
        seq = list(seq)
        sign = 1
        for i in range(1, len(seq)):
            j = i
            while j > 0 and seq[j - 1] > seq[j]:
                seq[j - 1], seq[j] = seq[j], seq[j - 1]
                sign = -sign
                j -= 1
        return sign

    for n in range(5):
        for variant in Variant:
            plus = [c for c in ordinary_basis(n, variant) if c.sector is Sector.PLUS]
            for a, b in itertools.product(plus, repeat=2):
                product = cup_product(a, b)
                if set(a.indices) & set(b.indices):
                    assert product is None
                else:
                    sign, cls = product
                    assert cls.sector is Sector.PLUS
                    assert set(cls.indices) == set(a.indices) | set(b.indices)
                    assert sign == sort_sign(a.indices + b.indices)


def test_reduced_plus_times_minus_vanishes():
    for n in range(5):
        for variant in Variant:
            basis = ordinary_basis(n, variant)
            plus = [c for c in basis if c.sector is Sector.PLUS and c.mask]
            minus = [c for c in basis if c.sector is Sector.MINUS]
            assert all(cup_product(a, b) is None for a in plus for b in minus)


# -- bigrading -------------------------------------------------------------------


def test_bigraded_generating_function_matches_closed_form():
    for n in range(13):
        for variant, make in ((Variant.REGULAR, SurfaceTarget.regular), (Variant.SINGULAR, SurfaceTarget.singular)):
            assert bigraded_generating_function(n, variant) == bigraded_poincare(make(n))


def test_total_degree_table_is_bidegree_sum():
    for n in range(7):
        for variant in Variant:
            for (k, two_l), degree in total_degree_table(n, variant).items():
                assert degree == k + two_l


# -- golden tables ----------------------------------------------------------------


@pytest.mark.parametrize("n", range(4))
@pytest.mark.parametrize("variant", list(Variant))
def test_cup_tables_match_goldens(n, variant):
    path = GOLDEN / f"cup_table_n{n}_{variant.value}.json"
    assert json.loads(path.read_text()) == cup_table(n, variant)
