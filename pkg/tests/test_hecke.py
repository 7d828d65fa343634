import pytest

from heckeperiod.matrices import IDENTITY, ProjMatrix
from heckeperiod.sums import FormalSum
from heckeperiod.hecke import (
    hecke_infty,
    hecke_manin,
    hecke_plus,
    in_lower_region,
    in_upper_region,
    lower_region,
    shift_to_lower,
    shift_to_upper,
    upper_region,
)


def sigma1(m):
    return sum(d for d in range(1, m + 1) if m % d == 0)


def test_infty_small_values():
    assert hecke_infty(1) == FormalSum.single(IDENTITY)
    assert hecke_infty(2) == FormalSum(
        2, [(ProjMatrix(1, 0, 0, 2), 1), (ProjMatrix(1, 1, 0, 2), 1), (ProjMatrix(2, 0, 0, 1), 1)]
    )
    assert len(hecke_infty(6)) == 12


@pytest.mark.parametrize("m", list(range(1, 101)))
def test_infty_term_count_is_divisor_sum(m):
    assert len(hecke_infty(m)) == sigma1(m)


def test_plus_small_values():
    assert hecke_plus(1) == FormalSum.single(IDENTITY)
    expected = FormalSum(
        2,
        [
            (ProjMatrix(1, 0, 0, 2), 1),
            (ProjMatrix(1, 1, 0, 2), 1),
            (ProjMatrix(2, 0, 0, 1), 1),
            (ProjMatrix(2, 0, 1, 1), 1),
        ],
    )
    assert hecke_plus(2) == expected
    assert all(g.is_nonneg() for g in hecke_plus(2).support())


@pytest.mark.parametrize("m", list(range(1, 31)))
def test_plus_entry_bounds_and_unit_coefficients(m):
    hp = hecke_plus(m)
    assert hp.is_positive_support()
    for g, coef in hp.items():
        a, b, c, d = g.as_tuple()
        assert coef == 1
        assert a > c >= 0 and d > b >= 0
        assert a <= m and d <= m


def test_plus_matches_unbounded_reference_enumeration():
    # oracle: enumerate with a deliberately larger box and the raw condition
    for m in (2, 3, 4, 5, 6, 7):
        ref = set()
        for a in range(1, 3 * m + 1):
            for d in range(1, 3 * m + 1):
                for c in range(a):
                    for b in range(d):
                        if a * d - b * c == m:
                            ref.add((a, b, c, d))
        assert {g.as_tuple() for g in hecke_plus(m).support()} == ref


def test_manin_small_values():
    assert hecke_manin(1) == FormalSum.single(IDENTITY)
    assert hecke_manin(2) == hecke_plus(2)
    # the coincidence is special to m <= 2
    assert hecke_manin(3) != hecke_plus(3)


@pytest.mark.parametrize("m", list(range(1, 31)))
def test_manin_unit_coefficients(m):
    assert all(coef == 1 for _, coef in hecke_manin(m).items())


def test_manin_window_boundaries():
    # ad = 4, d = 2: window -1 < b <= 1; ad = 4, a = 2: window c in {-..,1}, c != 0
    terms = {g.as_tuple(): c for g, c in hecke_manin(4).items()}
    assert terms.get((2, 0, 0, 2)) == 1
    assert terms.get((2, 1, 0, 2)) == 1
    assert (2, -1, 0, 2) not in terms
    assert terms.get((2, 0, 1, 2)) == 1
    assert (2, 0, 2, 2) not in terms


def test_region_membership_predicates():
    assert in_upper_region(ProjMatrix(2, 0, 1, 1))
    assert not in_upper_region(ProjMatrix(2, 0, 0, 1))
    assert in_lower_region(ProjMatrix(0, -2, 1, 1))
    assert not in_lower_region(ProjMatrix(2, 0, 1, 1))


def test_shift_examples():
    g = ProjMatrix(2, 0, 1, 1)
    assert shift_to_lower(g) == ProjMatrix(0, -2, 1, 1)
    assert shift_to_upper(ProjMatrix(0, -2, 1, 1)) == g


def test_shift_uses_mathematical_floor():
    # a = 3, c = 2: the exponent is floor(-3/2) = -2, not -1
    g = ProjMatrix(3, 0, 2, 1)
    h = shift_to_lower(g)
    assert h == ProjMatrix(-1, -2, 2, 1)
    assert in_lower_region(h)
    assert shift_to_upper(h) == g


def test_shift_preconditions():
    with pytest.raises(ValueError):
        shift_to_lower(ProjMatrix(1, 0, 0, 1))
    with pytest.raises(ValueError):
        shift_to_upper(ProjMatrix(2, 0, 1, 1))


@pytest.mark.parametrize("n", list(range(1, 13)))
def test_regions_are_exchanged_bijectively(n):
    upper = upper_region(n)
    lower = lower_region(n)
    assert len(upper) == len(lower)
    image = [shift_to_lower(g) for g in upper]
    assert sorted(image) == lower
    assert all(shift_to_upper(shift_to_lower(g)) == g for g in upper)
    assert all(shift_to_lower(shift_to_upper(h)) == h for h in lower)


def test_region_defining_inequalities():
    for n in (4, 6):
        for g in upper_region(n):
            a, b, c, d = g.as_tuple()
            assert a > c > 0 and d > b >= 0 and a * d - b * c == n
        for h in lower_region(n):
            assert in_lower_region(h)


def test_grade_validation():
    for fn in (hecke_infty, hecke_plus, hecke_manin):
        with pytest.raises(ValueError):
            fn(0)
