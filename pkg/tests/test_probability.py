"""Tests for the exact ideal probabilities."""

from fractions import Fraction

import pytest

from idealgate.census import census_ideal_count, enumerate_subgroups_bruteforce
from idealgate.finite import ProductRing
from idealgate.probability import (
    ProbabilityReport,
    count_subspaces,
    prob_nm,
    prob_pp,
    prob_vector_space,
)


def _census_ratio(moduli) -> tuple[int, int]:
    census = enumerate_subgroups_bruteforce(ProductRing(moduli))
    return census_ideal_count(census), len(census)


def test_report_invariants():
    with pytest.raises(ValueError):
        ProbabilityReport("Z_2 x Z_2", 4, 5, Fraction(3, 5))
    with pytest.raises(ValueError):
        ProbabilityReport("bad", 6, 5, Fraction(6, 5))


def test_prob_pp_frozen_examples():
    assert prob_pp(2, 1, 1).probability == Fraction(4, 5)
    assert prob_pp(3, 1, 1).probability == Fraction(2, 3)
    assert prob_pp(2, 1, 2).probability == Fraction(3, 4)
    report = prob_pp(2, 1, 2)
    assert (report.ideal_count, report.subgroup_count) == (6, 8)
    assert report.ring == "Z_2 x Z_4"


def test_prob_pp_equal_prime_closed_form():
    for p in (2, 3, 5, 7, 11):
        assert prob_pp(p, 1, 1).probability == Fraction(4, p + 3)


def test_prob_pp_normalizes_exponents():
    assert prob_pp(2, 2, 1).probability == prob_pp(2, 1, 2).probability


def test_prob_pp_rejects_nonprime():
    with pytest.raises(ValueError):
        prob_pp(6, 1, 1)


def test_prob_pp_matches_census():
    # p = 5 covers its full stated range here (5^(r+s) <= 10^4); the deeper
    # p in {2, 3} sweeps run in the acceptance suite
    for p, cap in ((2, 729), (3, 729), (5, 10_000)):
        for r in range(8):
            for s in range(r, 8):
                if p ** (r + s) > cap:
                    continue
                ideals, subgroups = _census_ratio((p**r, p**s))
                report = prob_pp(p, r, s)
                assert (report.ideal_count, report.subgroup_count) == (ideals, subgroups)


def test_prob_pp_equal_exponent_closed_form():
    # the closed form specializes cleanly at r == s
    for p in (2, 3, 5):
        for r in range(1, 5):
            expected = Fraction(
                (r + 1) ** 2 * (p - 1) ** 2,
                p ** (r + 1) * (p + 1) - 2 * r * (p - 1) - 3 * p + 1,
            )
            assert prob_pp(p, r, r).probability == expected


def test_prob_pp_strictly_decreasing_in_exponent():
    for p in (2, 3):
        values = [prob_pp(p, r, r).probability for r in range(0, 7)]
        assert all(a > b for a, b in zip(values, values[1:]))


def test_prob_nm_frozen_examples():
    report = prob_nm(6, 6)
    assert report.probability == Fraction(8, 15)
    assert (report.ideal_count, report.subgroup_count) == (16, 30)
    assert prob_nm(1, 9).probability == 1
    assert prob_nm(7, 1).probability == 1
    assert prob_nm(1, 1).probability == 1
    assert prob_nm(4, 2).probability == Fraction(3, 4)


def test_prob_nm_rejects_bad_moduli():
    with pytest.raises(ValueError):
        prob_nm(0, 3)
    with pytest.raises(ValueError):
        prob_nm(3, -1)


def test_prob_nm_is_product_of_prime_power_parts():
    from idealgate.exactarith import factorize

    for n in range(1, 31):
        for m in range(1, 31):
            expected = Fraction(1)
            en, em = dict(factorize(n)), dict(factorize(m))
            for p in sorted(set(en) | set(em)):
                lo, hi = sorted((en.get(p, 0), em.get(p, 0)))
                expected *= prob_pp(p, lo, hi).probability
            assert prob_nm(n, m).probability == expected


def test_prob_nm_matches_census():
    for n in range(1, 9):
        for m in range(1, 9):
            ideals, subgroups = _census_ratio((n, m))
            report = prob_nm(n, m)
            assert (report.ideal_count, report.subgroup_count) == (ideals, subgroups), (n, m)


def test_count_subspaces_frozen_examples():
    assert count_subspaces(2, 2) == 5
    assert count_subspaces(2, 3) == 16
    assert count_subspaces(7, 0) == 1
    with pytest.raises(ValueError):
        count_subspaces(4, 2)


def test_count_subspaces_matches_census():
    # subgroups of a product of Z_p factors are exactly the subspaces
    assert count_subspaces(2, 3) == len(enumerate_subgroups_bruteforce(ProductRing((2, 2, 2))))
    assert count_subspaces(3, 2) == len(enumerate_subgroups_bruteforce(ProductRing((3, 3))))
    assert count_subspaces(2, 4) == len(
        enumerate_subgroups_bruteforce(ProductRing((2, 2, 2, 2)))
    )


def test_prob_vector_space_frozen_examples():
    assert prob_vector_space(2, 2).probability == Fraction(4, 5)
    assert prob_vector_space(2, 3).probability == Fraction(1, 2)
    assert prob_vector_space(3, 2).probability == Fraction(2, 3)
    report = prob_vector_space(2, 3)
    assert (report.ideal_count, report.subgroup_count) == (8, 16)
    assert report.ring == "Z_2^3"


def test_prob_vector_space_matches_census():
    ideals, subgroups = _census_ratio((2, 2, 2))
    report = prob_vector_space(2, 3)
    assert (report.ideal_count, report.subgroup_count) == (ideals, subgroups)


def test_prob_vector_space_cross_module_identity():
    for p in (2, 3, 5, 7):
        assert prob_vector_space(p, 2).probability == prob_pp(p, 1, 1).probability


def test_prob_vector_space_rejects_bad_input():
    with pytest.raises(ValueError):
        prob_vector_space(6, 2)
    with pytest.raises(ValueError):
        prob_vector_space(2, 0)
