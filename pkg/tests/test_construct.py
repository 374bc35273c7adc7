import csv
import io
from fractions import Fraction

import pytest

from loclib.bounds import avg_locality_lb_general, avg_locality_lb_tight
from loclib.code import min_distance
from loclib.construct import (
    G0_TRANSPOSE,
    RealizationConfig,
    applicability,
    embedded_g0,
    g0_csv,
    plan,
    plan_class1,
    plan_class2,
    plan_class3,
    plan_coverage_ok,
    realize,
)
from loclib.errors import NotApplicable, RealizationFailed
from loclib.field import GF256, make_field
from loclib.linalg import matmul
from loclib.locality import locality_profile


def groups(p):
    return [sorted(g) for g in p.local_groups]


@pytest.mark.parametrize(
    "params,expected",
    [((16, 10, 5), {3}), ((9, 4, 5), {1}), ((13, 5, 8), {2}), ((8, 4, 4), {3})],
)
def test_applicability(params, expected):
    assert applicability(*params) == expected


def test_class1_plan():
    p = plan_class1(9, 4, 5)
    assert groups(p) == [[0, 1, 2], [3, 4, 5], [6, 7, 8]]
    assert p.global_checks == 2
    assert p.expected_rbar == 2 == avg_locality_lb_general(9, 4, 5)


def test_class2_plan():
    p = plan_class2(13, 5, 8)
    assert groups(p) == [[0, 1, 2], [3, 4, 5, 6], [7, 8, 9, 10], [6, 10, 11, 12]]
    assert p.global_checks == 4
    assert p.expected_profile == {2: 3, 3: 10}
    assert p.expected_rbar == Fraction(36, 13) == avg_locality_lb_general(13, 5, 8)


def test_class3_plan_844():
    p = plan_class3(8, 4, 4)
    assert groups(p) == [[0, 1, 2], [3, 4, 5], [2, 5, 6, 7]]
    assert p.global_checks == 1 and p.theta_star == 2
    assert p.expected_profile == {2: 6, 3: 2}


def test_class3_plan_16():
    p = plan_class3(16, 10, 5)
    assert [len(g) for g in p.local_groups] == [4, 4, 5, 7]
    last = p.local_groups[3]
    assert len(last & p.local_groups[0]) == 1 and len(last & p.local_groups[1]) == 1
    assert len(last & p.local_groups[2]) == 2
    assert p.theta_star == 3 and p.r_last == 6
    assert p.expected_profile == {3: 8, 4: 5, 6: 3}
    assert p.expected_rbar == avg_locality_lb_tight(16, 10, 5)[0]


def test_class3_theta_zero():
    p = plan_class3(6, 3, 2)
    assert p.theta_star == 0
    assert groups(p) == [[0, 1], [2, 3], [4, 5]]
    assert p.global_checks == 0


def test_not_applicable():
    with pytest.raises(NotApplicable):
        plan_class1(16, 10, 5)
    with pytest.raises(NotApplicable):
        plan(3, 9, 4, 5)


def test_plans_meet_their_bound_on_grid():
    # every plan that builds satisfies coverage and hits its target exactly
    for n in range(4, 18):
        for k in range(1, n):
            for d in range(2, n - k + 2):
                for cid in applicability(n, k, d):
                    p = plan(cid, n, k, d)
                    assert plan_coverage_ok(p)[0]
                    assert p.expected_rbar == p.target_bound


def test_realize_844_deterministic():
    cfg = RealizationConfig(GF256, seed=1)
    a = realize(plan_class3(8, 4, 4), cfg)
    b = realize(plan_class3(8, 4, 4), cfg)
    assert a.H == b.H
    assert min_distance(a.H) == 4
    assert locality_profile(a).r_avg == Fraction(9, 4)
    assert a.meta["seed"] == 1 and a.meta["class"] == 3


def test_realize_class1_and_class2():
    c1 = realize(plan_class1(9, 4, 5))
    assert min_distance(c1.H) == 5 and locality_profile(c1).r_avg == 2
    c2 = realize(plan_class2(13, 5, 8))
    assert min_distance(c2.H) == 8 and locality_profile(c2).r_avg == Fraction(36, 13)


def test_realize_16_meets_tight_bound(code16):
    assert min_distance(code16.H) == 5
    assert locality_profile(code16).r_avg == avg_locality_lb_tight(16, 10, 5)[0]


def test_small_field_fails():
    # 4-wise independence with this sparsity needs a larger field
    with pytest.raises(RealizationFailed) as exc:
        realize(plan_class3(16, 10, 5), RealizationConfig(make_field(2), seed=0, max_retries=64))
    assert exc.value.attempts == 64


def test_g0_rows():
    assert G0_TRANSPOSE[4] == (35, 134, 39, 29, 15, 191, 187, 3, 102, 38)
    for idx in (0, 1, 2, 3, 9, 10, 11, 12, 13, 14, 15):
        row = G0_TRANSPOSE[idx]
        unit = sorted(row) == [0] * 9 + [1]
        assert unit or row == (0, 0, 0, 1, 1, 1, 1, 0, 0, 0)


def test_embedded_g0(g0):
    assert g0.field.poly == 0x11D
    assert matmul(g0.G, g0.H.T).is_zero()
    assert [list(c) for c in zip(*g0.G.to_list())] == [list(r) for r in G0_TRANSPOSE]


def test_g0_csv():
    rows = list(csv.reader(io.StringIO(g0_csv())))
    assert len(rows) == 16
    assert [tuple(map(int, r)) for r in rows] == list(G0_TRANSPOSE)


def test_plan_to_dict():
    d = plan_class3(8, 4, 4).to_dict()
    assert d["class"] == 3 and d["theta_star"] == 2
