import numpy as np
import pytest

from cubicdist import build_field
from cubicdist.closed_forms import (closed_form_cubic_intdist, closed_form_cubic_muldist,
                                    closed_form_related_monomials, cubic_branch,
                                    cubic_row_counts, cubic_target, related_monomial_cases)
from cubicdist.distributions import (intersection_distribution, multiplicity_matrix,
                                     multiplicity_row)
from cubicdist.field import prime_powers
from cubicdist.polyfn import Cubic, Monomial


def row(F, a, b):
    return {i: c for i, c in closed_form_cubic_muldist(F, a, b).counts.items()}


def test_row_examples():
    assert row(build_field(2, 3), 0, 1) == {0: 3, 1: 3, 2: 1, 3: 1}
    assert row(build_field(13), 0, 0) == {0: 8, 1: 1, 3: 4}
    assert row(build_field(11), 0, 0) == {1: 11}
    assert row(build_field(7), 0, 0) == {0: 4, 1: 1, 3: 2}
    assert row(build_field(3, 2), 1, 0) == {0: 3, 1: 4, 2: 1, 3: 1}


def test_distribution_examples():
    assert closed_form_cubic_intdist(build_field(3, 2), 1).as_dict() == \
        {"0": 27, "1": 36, "2": 9, "3": 9}
    assert closed_form_cubic_intdist(build_field(3, 3), 0).as_dict() == \
        {"0": 234, "1": 378, "3": 117}
    F7 = build_field(7)
    assert {closed_form_cubic_intdist(F7, a).non_hitting for a in range(7)} == {16}


def test_related_monomial_examples():
    assert closed_form_related_monomials(build_field(3, 2), 6).as_dict() == \
        {"0": 28, "1": 33, "2": 12, "3": 8}
    assert closed_form_related_monomials(build_field(2, 3), 5).non_hitting == 21
    assert closed_form_related_monomials(build_field(13), 10).non_hitting == 54
    with pytest.raises(ValueError):
        closed_form_related_monomials(build_field(13), 5)


def test_related_monomial_case_selection():
    assert related_monomial_cases(build_field(2, 3)) == {3: 1, 5: 1}
    assert related_monomial_cases(build_field(2, 4)) == {13: 2}
    assert related_monomial_cases(build_field(3, 2)) == {6: 3}
    assert related_monomial_cases(build_field(13)) == {10: 4}
    assert related_monomial_cases(build_field(11)) == {4: 5, 8: 5}


def test_branch_labels():
    F8, F9, F7 = build_field(2, 3), build_field(3, 2), build_field(7)
    assert cubic_branch(F8, 0, 0) == "special" and cubic_branch(F8, 0, 3) == "generic"
    assert cubic_branch(F8, 2, F8.mul(2, 2)) == "special"
    assert cubic_branch(F9, 1, 5) == "shifted"
    assert cubic_branch(F9, 0, 0) == "zero"
    assert cubic_branch(F9, 0, 1) == "square"
    assert cubic_branch(F7, 0, 3) == "nonsquare"
    minus_third = F7.neg(F7.inv(3))
    assert cubic_branch(F7, 1, minus_third) == "zero"


@pytest.mark.parametrize("q,p,m", prime_powers(32, 4))
def test_closed_forms_equal_enumeration_on_every_row(q, p, m):
    F = build_field(p, m)
    for a in range(q):
        M = multiplicity_matrix(Cubic(F, a))
        for b in range(q):
            want = cubic_row_counts(F, cubic_branch(F, a, b))
            assert M[b, :4].tolist() == list(want) and not M[b, 4:].any(), (a, b)
        assert intersection_distribution(Cubic(F, a)) == closed_form_cubic_intdist(F, a)


@pytest.mark.parametrize("q,p,m", prime_powers(1000))
def test_closed_form_rows_satisfy_identities(q, p, m):
    F = build_field(p, m)
    rng = np.random.default_rng(q)
    labels = {cubic_branch(F, a, b) for a, b in rng.integers(0, q, size=(40, 2))}
    labels |= {cubic_branch(F, 0, 0), cubic_branch(F, 0, 1)}
    for label in labels:
        r = cubic_row_counts(F, label)
        assert min(r) >= 0
        assert sum(r) == q
        assert sum(i * c for i, c in enumerate(r)) == q
    v = closed_form_cubic_intdist(F, 0)
    assert sum(v.counts.values()) == q * q
    assert sum(i * c for i, c in v.counts.items()) == q * q
    assert sum(i * (i - 1) * c for i, c in v.counts.items()) == q * (q - 1)
    for d in related_monomial_cases(F):
        w = closed_form_related_monomials(F, d)
        assert sum(w.counts.values()) == q * q


def test_target_depends_on_characteristic():
    assert cubic_target(build_field(3, 2)).as_dict() == {"0": 24, "1": 45, "3": 12}
    assert cubic_target(build_field(7)).as_dict() == {"0": 16, "1": 22, "2": 6, "3": 5}


def test_single_row_helper_agrees():
    F = build_field(5, 2)
    for b in (0, 1, 7, 24):
        assert multiplicity_row(Cubic(F, 3), b).same_counts(closed_form_cubic_muldist(F, 3, b))


def test_related_monomials_small_oracle():
    for q, p, m in prime_powers(128):
        F = build_field(p, m)
        for d in related_monomial_cases(F):
            assert intersection_distribution(Monomial(F, d)) == \
                closed_form_related_monomials(F, d), (q, d)
