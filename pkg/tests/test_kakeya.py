import numpy as np
import pytest
from hypothesis import given, strategies as st

from cubicdist import build_field
from cubicdist.config import BudgetExceeded
from cubicdist.distributions import intersection_distribution, multiplicity_row
from cubicdist.field import prime_powers
from cubicdist.kakeya import (NUCLEUS, PG2, branch_representatives, cubic_kakeya_formula,
                              cubic_kakeya_table, dk_set, kakeya_size,
                              kakeya_size_affine, known_sizes, normalize,
                              set_intersection_distribution, table_sizes)
from cubicdist.polyfn import Cubic, Monomial

import naive


def field_of(q):
    (_, p, m), = prime_powers(q, q)
    return build_field(p, m)


def test_plane_sizes():
    P = PG2(build_field(2))
    assert len(P) == 7
    assert all(len(P.points_on(L)) == 3 for L in P.lines)
    P3 = PG2(build_field(3))
    assert len(P3.points) == 13 and len(P3.lines) == 13


def test_two_points_share_one_line():
    F = build_field(2, 2)
    P = PG2(F)
    rng = np.random.default_rng(0)
    for _ in range(30):
        i, j = rng.choice(len(P), size=2, replace=False)
        a, b = P.points[i], P.points[j]
        common = [L for L in P.lines if P.incident(a, L) and P.incident(b, L)]
        assert len(common) == 1
        assert tuple(P.join(a, b)) == tuple(common[0])


def test_normalize():
    F = build_field(5)
    assert normalize(F, [2, 4, 1]).tolist() == [[1, 2, 3]]
    assert normalize(F, [0, 3, 3]).tolist() == [[0, 1, 1]]
    with pytest.raises(ValueError):
        normalize(F, [0, 0, 0])


def test_plane_budget():
    with pytest.raises(BudgetExceeded):
        PG2(build_field(11), limit=9)


def test_dk_set_shape():
    F = build_field(3)
    dk = dk_set(F, Monomial(F, 3), 0)
    assert len(dk) == 5
    assert tuple(NUCLEUS) in {tuple(p) for p in dk.points}
    F4 = build_field(2, 2)
    assert len(dk_set(F4, Monomial(F4, 2), 1)) == 6


def test_nucleus_lines_meet_once_more():
    F = build_field(7)
    P = PG2(F)
    dk = dk_set(F, Monomial(F, 3), 2)
    through = [L for L in P.lines if P.incident(NUCLEUS, L)]
    assert len(through) == 8
    assert (P.meet_counts(dk.points, np.array(through)) == 2).all()


def test_set_distribution_examples():
    F = build_field(5)
    P = PG2(F)
    one = set_intersection_distribution(P, P.points[:1])
    assert one.counts == {0: 25, 1: 6}
    line = P.points_on(P.lines[0])
    full = set_intersection_distribution(P, line)
    assert full.counts == {1: 30, 6: 1}
    F11 = build_field(11)
    dk = dk_set(F11, Monomial(F11, 3), 0)
    u = set_intersection_distribution(PG2(F11), dk.points)
    assert u.non_hitting == 40


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
def test_dual_count_matches_pure_python_lines(q):
    F = field_of(q)
    N = naive.NaiveField(F.p, F.m, F.modulus)
    _, lines = naive.projective_lines(N)
    for a in range(q):
        fx = naive.values(F, Cubic(F, a))
        for b in range(q):
            pts = {naive.normalize(N, (x, fx[x], 1)) for x in range(q)}
            pts |= {(0, 1, 0), naive.normalize(N, (1, b, 0))}
            u0 = sum(1 for L in lines if not (L & pts))
            r = kakeya_size(F, Cubic(F, a), b)
            assert r["via_dual_count"] == q * q - u0
            assert r["size"] == q * q - u0


def test_size_examples():
    assert kakeya_size(build_field(11), Monomial(build_field(11), 3), 0)["size"] == 81
    F13 = build_field(13)
    assert kakeya_size(F13, Monomial(F13, 3), 1)["size"] == 117
    F9 = build_field(3, 2)
    square = next(b for b in range(1, 9) if F9.is_square(b))
    assert kakeya_size(F9, Monomial(F9, 3), square)["size"] == 63


def test_size_routes_agree_and_record_parts():
    F = build_field(2, 3)
    r = kakeya_size(F, Cubic(F, 1), 3)
    assert r["via_formula"] == r["via_dual_count"] == r["via_affine_union"] == r["size"]
    assert r["v0"] == intersection_distribution(Cubic(F, 1)).non_hitting
    assert r["M0"] == multiplicity_row(Cubic(F, 1), 3)[0]
    assert sum(r["u"].values()) == 64 + 8 + 1


def test_affine_route_without_plane():
    F = build_field(17)
    r = kakeya_size(F, Cubic(F, 0), 0, dual=False)
    assert r["via_dual_count"] is None
    assert r["size"] == kakeya_size_affine(F, Cubic(F, 0), 0)


def test_table_examples():
    assert set(table_sizes(cubic_kakeya_table(build_field(17)))) == {193, 199}
    assert set(table_sizes(cubic_kakeya_table(build_field(19)))) == {247, 253}
    assert set(table_sizes(cubic_kakeya_table(build_field(3, 3)))) == {495, 513}


@pytest.mark.parametrize("q,p,m", prime_powers(32))
def test_formula_on_every_pair(q, p, m):
    F = build_field(p, m)
    P = PG2(F)
    for a in range(q):
        for b in range(q):
            size, _ = cubic_kakeya_formula(F, a, b)
            assert kakeya_size(F, Cubic(F, a), b, plane=P)["size"] == size, (a, b)


def test_representatives_cover_both_branches():
    for q, p, m in prime_powers(81):
        F = build_field(p, m)
        labels = {cubic_kakeya_formula(F, a, b)[1] for a, b in branch_representatives(F)}
        assert len(labels) == 2, q


def test_known_sizes():
    k = dict(known_sizes(13))
    assert k[117] == "new"
    assert k[97] == "known"
    assert dict(known_sizes(9))[51] == "not constructed"
    assert known_sizes(23) == []


@given(st.sampled_from([build_field(p, m) for q, p, m in prime_powers(16)]), st.data())
def test_dual_distribution_identities(F, data):
    q = F.q
    a = data.draw(st.integers(0, q - 1))
    b = data.draw(st.integers(0, q - 1))
    dk = dk_set(F, Cubic(F, a), b)
    u = set_intersection_distribution(PG2(F), dk.points)
    assert u.total() == q * q + q + 1
    assert u.incidences() == (q + 2) * (q + 1)
    assert q * (q + 1) // 2 <= q * q - u.non_hitting <= q * q
