import itertools
import random

import pytest

from planar_count.multigraph import (
    Configuration,
    enumerate_configurations,
    enumerate_multigraphs,
    expand_configuration,
    is_expanded,
    planar_matching_size,
)
from planar_count.oracle import brute_g, brute_g_hat
from planar_count.tableaux import (
    TableauPair,
    YoungTableau,
    check_condition_T,
    check_condition_T_hat,
    count_tableau_pairs,
    inverse_rsk,
    partitions,
    row_insert,
    rsk,
    standard_tableaux,
)

T = YoungTableau
FIG3_P = T(((1, 3), (2, 5), (4,), (6,)))
FIG3_Q = T(((1, 5), (2, 6), (3,), (4,)))


def _lis(seq):
    best = []
    for i, x in enumerate(seq):
        best.append(1 + max((best[j] for j in range(i) if seq[j] < x), default=0))
    return max(best, default=0)


def test_tableau_validation():
    with pytest.raises(ValueError):
        T(((2, 1),))
    with pytest.raises(ValueError):
        T(((1,), (2, 3)))
    with pytest.raises(ValueError):
        T(((2, 3), (1,)))
    with pytest.raises(ValueError):
        T(((1, 1),))


def test_tableau_json():
    assert FIG3_P.to_json() == '{"rows":[[1,3],[2,5],[4],[6]]}'
    assert T.from_dict(FIG3_P.to_dict()) == FIG3_P


def test_row_insert_examples():
    t, box = row_insert(T.empty(), 5)
    assert t.rows == ((5,),) and box == (0, 0)
    t, box = row_insert(T(((2,),)), 1)
    assert t.rows == ((1,), (2,)) and box == (1, 0)
    t, box = row_insert(T(((1,), (2,))), 3)
    assert t.rows == ((1, 3), (2,)) and box == (0, 1)


def test_rsk_examples():
    assert rsk((1, 2, 3)) == TableauPair(T(((1, 2, 3),)), T(((1, 2, 3),)))
    assert rsk((3, 2, 1)) == TableauPair(T(((1,), (2,), (3,))), T(((1,), (2,), (3,))))
    pair = rsk((2, 1, 3))
    assert pair.P.rows == ((1, 3), (2,)) and pair.Q.rows == ((1, 3), (2,))
    with pytest.raises(ValueError):
        rsk((1, 1, 2))


def test_inverse_rsk_examples():
    assert inverse_rsk(TableauPair(T(((1, 2, 3),)), T(((1, 2, 3),)))) == (1, 2, 3)
    assert inverse_rsk(TableauPair(T(((1, 3), (2,))), T(((1, 3), (2,))))) == (2, 1, 3)
    pair = TableauPair(FIG3_P, FIG3_Q)
    perm = inverse_rsk(pair)
    assert sorted(perm) == list(range(1, 7))
    assert rsk(perm) == pair


def test_pair_shape_mismatch_rejected():
    with pytest.raises(ValueError):
        TableauPair(T(((1, 2),)), T(((1,), (2,))))


@pytest.mark.parametrize("m", range(0, 7))
def test_rsk_roundtrip_and_symmetries(m):
    for perm in itertools.permutations(range(1, m + 1)):
        pair = rsk(perm)
        assert inverse_rsk(pair) == perm
        inv = tuple(sorted(range(1, m + 1), key=lambda i: perm[i - 1]))
        assert rsk(inv) == TableauPair(pair.Q, pair.P)
        assert pair.P.columns == _lis(perm)


def test_rsk_is_bijective_onto_pairs():
    m = 5
    images = {rsk(p) for p in itertools.permutations(range(1, m + 1))}
    pairs = {
        TableauPair(p, q)
        for shape in partitions(m)
        for p in standard_tableaux(shape)
        for q in standard_tableaux(shape)
    }
    assert images == pairs


def test_bumping_lemma_randomized():
    rng = random.Random(20240601)
    failures = 0
    for _ in range(10_000):
        size = rng.randint(0, 12)
        values = rng.sample(range(1, 40), size + 2)
        x, x2 = values[-2:]
        t = rsk_tableau(values[:-2], rng)
        t1, (r1, c1) = row_insert(t, x)
        _, (r2, c2) = row_insert(t1, x2)
        if x < x2:
            ok = c1 < c2 and r1 >= r2
        else:
            ok = c2 <= c1 and r2 > r1
        failures += not ok
    assert failures == 0


def rsk_tableau(values, rng):
    t = T.empty()
    order = list(values)
    rng.shuffle(order)
    for v in order:
        t, _ = row_insert(t, v)
    return t


def test_condition_examples():
    assert check_condition_T(FIG3_P, 3, 2)
    assert not check_condition_T(T(((1, 2),)), 1, 2)
    assert check_condition_T(T(((1,), (2,))), 1, 2)
    assert check_condition_T_hat(T(((1, 2),)), 1, 2)
    assert not check_condition_T_hat(T(((1,), (2,))), 1, 2)
    for t in standard_tableaux((2, 1)):
        assert check_condition_T_hat(t, 3, 1)
    with pytest.raises(ValueError):
        check_condition_T(T(((1, 3),)), 1, 2)


def test_standard_tableaux_counts():
    assert len(list(standard_tableaux((2, 1)))) == 2
    assert len(list(standard_tableaux((3, 2)))) == 5
    assert len(list(standard_tableaux((3, 2, 1)))) == 16


def test_partitions():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(partitions(4, 2)) == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_count_tableau_pairs_examples():
    assert count_tableau_pairs(1, 2, 2, "T") == 1
    assert count_tableau_pairs(2, 2, 2, "T") == 3
    assert count_tableau_pairs(2, 1, 1, "T") == 1
    with pytest.raises(ValueError):
        count_tableau_pairs(1, 1, 1, "X")


@pytest.mark.parametrize("n,r", [(2, 2), (3, 2), (2, 3), (4, 1)])
def test_count_tableau_pairs_matches_brute_force(n, r):
    for d in range(0, n * r + 1):
        assert count_tableau_pairs(n, r, d, "T") == brute_g(n, r, d)
        assert count_tableau_pairs(n, r, d, "T_hat") == brute_g_hat(n, r, d)


def _seq(f):
    return tuple(v + 1 for v in f.pairing)


@pytest.mark.parametrize("n,r", [(6, 1), (3, 2), (2, 3), (1, 6), (2, 2)])
def test_block_condition_characterises_lifts(n, r):
    for f in enumerate_configurations(n, r):
        pair = rsk(_seq(f))
        both_T = check_condition_T(pair.P, n, r) and check_condition_T(pair.Q, n, r)
        expanded = is_expanded(f)
        assert both_T == expanded
        if expanded:
            assert pair.P.columns == planar_matching_size(f)


@pytest.mark.parametrize("n,r", [(3, 2), (2, 3), (1, 6), (2, 2)])
def test_consecutive_descent(n, r):
    for g in enumerate_multigraphs(n, r):
        seq = _seq(expand_configuration(g))
        t = T.empty()
        for start in range(0, n * r, r):
            block = seq[start : start + r]
            assert all(x > y for x, y in zip(block, block[1:]))
            rows = []
            for x in block:
                t, (row, _) = row_insert(t, x)
                rows.append(row)
            assert all(a < b for a, b in zip(rows, rows[1:]))
