import csv
import io
import json
from math import factorial

import pytest

from planar_count.oracle import (
    CLAIMS,
    brute_g,
    brute_g_hat,
    brute_multigraph_total,
    brute_u,
    brute_w2,
    brute_w2_interleaved,
    catalan,
    count_w2_interleaved,
    verify_all,
)
from planar_count.budget import BudgetExceeded

CLEAN = tuple(c for c in CLAIMS if c != "factorised_walks_doubleprime")


def test_brute_u_examples():
    for m in range(6):
        assert brute_u(m, m) == factorial(m)
        assert brute_u(m, 1) == 1
    assert [brute_u(n, 2) for n in range(1, 6)] == [1, 2, 5, 14, 42]
    with pytest.raises(BudgetExceeded):
        brute_u(10, 2)


def test_brute_g_examples():
    assert brute_g(1, 2, 2) == 1
    assert brute_g(1, 2, 1) == 1
    assert brute_g(2, 2, 1) == 1
    assert brute_g(2, 2, 2) == 3
    assert brute_g_hat(1, 2, 1) == 0
    assert brute_g_hat(1, 2, 2) == 1
    assert brute_g(0, 3, 0) == 1


@pytest.mark.parametrize("n,r", [(2, 2), (3, 2), (2, 3), (4, 2)])
def test_brute_g_monotone_and_saturates(n, r):
    values = [brute_g(n, r, d) for d in range(n * r + 1)]
    assert values == sorted(values)
    assert values[n] == brute_multigraph_total(n, r)


@pytest.mark.parametrize("n", range(0, 9))
def test_r1_reduction(n):
    for d in range(0, n + 1):
        assert brute_g(n, 1, d) == brute_u(n, d)


def test_catalan():
    assert [catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]


def test_interleaved_dp_matches_enumeration():
    for mp in (0, 2, 4):
        for mm in (0, 2, 4):
            for p in [(0, 0), (-1, 1), (1, -1)]:
                assert count_w2_interleaved(mp, mm, p) == brute_w2_interleaved(mp, mm, p)
                # Every interleaving of a fixed positive and negative sequence counts once.
                assert count_w2_interleaved(mp, mm, p) == (
                    factorial(mp + mm) // factorial(mp) // factorial(mm) * brute_w2(mp, mm, p)
                )


def test_verify_vacuous():
    report = verify_all(max_rn=0)
    assert report.passed


def test_verify_clean_claims_pass():
    report = verify_all(claims=CLEAN)
    assert report.passed, [r.to_dict() for r in report.failures]
    assert {row.claim for row in report.rows} == set(CLEAN)


def test_verify_default_failures_are_the_interleaved_flavor_only():
    report = verify_all()
    assert {row.claim for row in report.failures} == {"factorised_walks_doubleprime"}


@pytest.mark.xfail(strict=True, reason="interleaved flavor of the two-dimensional identity does not hold; see notes")
def test_verify_default_all_pass():
    assert verify_all().passed


@pytest.mark.parametrize("claim", ["rsk", "matching_cross_method", "bessel_determinant"])
def test_corrupted_fixture_fails_exactly_one_row(claim):
    report = verify_all(max_rn=4, claims=CLEAN, corrupt=claim)
    assert len(report.failures) == 1
    assert report.failures[0].claim == claim


def test_report_serialisation_is_deterministic():
    a = verify_all(max_rn=3, max_d=2, x_bound=4)
    b = verify_all(max_rn=3, max_d=2, x_bound=4)
    assert a.to_json() == b.to_json()
    assert a.to_csv() == b.to_csv()
    data = json.loads(a.to_json())
    assert data["summary"]["rows"] == len(a.rows)
    rows = list(csv.reader(io.StringIO(a.to_csv())))
    assert rows[0] == ["claim", "params", "method", "value", "pass"]
    assert all(row[4] in ("true", "false") for row in rows[1:])
