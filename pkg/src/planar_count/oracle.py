"""Brute-force ground truth and the cross-method verification report.

Nothing in the counting helpers below calls into the modules being checked:
matrices are enumerated afresh and planar sizes come from a quadratic
longest-chain search.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Any, Callable, Iterator

from planar_count.budget import BudgetExceeded, resolve_budget

DEFAULT_MAX_M = 9


# -- independent enumeration ---------------------------------------------------


def _matrices(n: int, r: int) -> Iterator[list[list[int]]]:
    # Row by row; each row is any composition of r respecting remaining column room.
    def compositions(total: int, room: list[int]) -> Iterator[list[int]]:
        if len(room) == 1:
            if total <= room[0]:
                yield [total]
            return
        for x in range(min(total, room[0]) + 1):
            for rest in compositions(total - x, room[1:]):
                yield [x] + rest

    def rec(k: int, room: list[int]) -> Iterator[list[list[int]]]:
        if k == n:
            if all(x == 0 for x in room):
                yield []
            return
        for row in compositions(r, room):
            for tail in rec(k + 1, [a - b for a, b in zip(room, row)]):
                yield [row] + tail

    if n == 0:
        yield []
        return
    yield from rec(0, [r] * n)


def _longest_chain(edges: list[tuple[int, int]], strict: bool) -> int:
    # Quadratic DP over edges sorted so that every compatible predecessor comes first.
    if strict:
        edges = sorted(edges, key=lambda e: (e[0], -e[1]))
        ok: Callable[[tuple[int, int], tuple[int, int]], bool] = lambda e, f: e[0] < f[0] and e[1] < f[1]
    else:
        edges = sorted(edges)
        ok = lambda e, f: e[0] <= f[0] and e[1] <= f[1]
    best = [1] * len(edges)
    for j in range(len(edges)):
        for i in range(j):
            if ok(edges[i], edges[j]) and best[i] + 1 > best[j]:
                best[j] = best[i] + 1
    return max(best, default=0)


def _edges(mat: list[list[int]]) -> list[tuple[int, int]]:
    return [(u, v) for u, row in enumerate(mat) for v, t in enumerate(row) for _ in range(t)]


@lru_cache(maxsize=None)
def _histograms(n: int, r: int) -> tuple[dict[int, int], dict[int, int]]:
    matching: dict[int, int] = {}
    subgraph: dict[int, int] = {}
    cap = resolve_budget()
    for count, mat in enumerate(_matrices(n, r)):
        if count >= cap:
            raise BudgetExceeded(f"oracle enumeration exceeded budget of {cap}")
        e = _edges(mat)
        lm = _longest_chain(e, strict=True)
        ls = _longest_chain(e, strict=False)
        matching[lm] = matching.get(lm, 0) + 1
        subgraph[ls] = subgraph.get(ls, 0) + 1
    return matching, subgraph


def brute_g(n: int, r: int, d: int) -> int:
    """Number of ``r``-regular multigraphs whose largest planar matching has at most ``d`` edges."""
    hist, _ = _histograms(n, r)
    return sum(c for size, c in hist.items() if size <= d)


def brute_g_hat(n: int, r: int, d: int) -> int:
    """Number of ``r``-regular multigraphs whose largest planar subgraph has at most ``d`` edges."""
    _, hist = _histograms(n, r)
    return sum(c for size, c in hist.items() if size <= d)


def brute_multigraph_total(n: int, r: int) -> int:
    hist, _ = _histograms(n, r)
    return sum(hist.values())


def _lis(seq: tuple[int, ...]) -> int:
    best = [1] * len(seq)
    for j in range(len(seq)):
        for i in range(j):
            if seq[i] < seq[j] and best[i] + 1 > best[j]:
                best[j] = best[i] + 1
    return max(best, default=0)


@lru_cache(maxsize=None)
def _lis_histogram(m: int) -> dict[int, int]:
    hist: dict[int, int] = {}
    for perm in itertools.permutations(range(m)):
        k = _lis(perm)
        hist[k] = hist.get(k, 0) + 1
    return hist


def brute_u(m: int, d: int, max_m: int = DEFAULT_MAX_M) -> int:
    """Permutations of ``1..m`` with no increasing subsequence longer than ``d``."""
    if m > max_m:
        raise BudgetExceeded(f"brute_u limited to m <= {max_m}")
    return sum(c for k, c in _lis_histogram(m).items() if k <= d)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def brute_w2(mp: int, mm: int, p: tuple[int, int], blocks_down: bool = True) -> int:
    """Two-dimensional representative walks with ``mp`` / ``mm`` steps to ``p``, listed one by one.

    With ``blocks_down`` consecutive pairs of positive (and of negative)
    labels must be non-increasing.
    """
    def ok(seq: tuple[int, ...]) -> bool:
        return not blocks_down or all(seq[i] >= seq[i + 1] for i in range(0, len(seq) - 1, 2))

    total = 0
    for a in itertools.product((1, 2), repeat=mp):
        if not ok(a):
            continue
        for b in itertools.product((1, 2), repeat=mm):
            if not ok(b):
                continue
            x = (a.count(1) - b.count(1), a.count(2) - b.count(2))
            if x == p:
                total += 1
    return total


def brute_w2_interleaved(mp: int, mm: int, p: tuple[int, int]) -> int:
    """Walks in any step order whose positive/negative subsequences have non-increasing pairs."""
    total = 0
    for steps in itertools.product((1, 2, -1, -2), repeat=mp + mm):
        pos = [s for s in steps if s > 0]
        neg = [-s for s in steps if s < 0]
        if len(pos) != mp:
            continue
        if any(pos[i] < pos[i + 1] for i in range(0, mp - 1, 2)):
            continue
        if any(neg[i] < neg[i + 1] for i in range(0, mm - 1, 2)):
            continue
        if (pos.count(1) - neg.count(1), pos.count(2) - neg.count(2)) == p:
            total += 1
    return total


def count_w2_interleaved(mp: int, mm: int, p: tuple[int, int]) -> int:
    """Same count as :func:`brute_w2_interleaved`, by a step-by-step DP.

    State: position, steps of each sign taken, and the first label of a
    half-finished positive / negative pair.
    """
    states: dict[tuple, int] = {((0, 0), 0, 0, 0, 0): 1}
    for _ in range(mp + mm):
        nxt: dict[tuple, int] = {}
        for (x, np_, nm, open_p, open_m), count in states.items():
            for label in (1, 2):
                if np_ < mp and not (open_p and label > open_p):
                    y = (x[0] + (label == 1), x[1] + (label == 2))
                    key = (y, np_ + 1, nm, 0 if open_p else label, open_m)
                    nxt[key] = nxt.get(key, 0) + count
                if nm < mm and not (open_m and label > open_m):
                    y = (x[0] - (label == 1), x[1] - (label == 2))
                    key = (y, np_, nm + 1, open_p, 0 if open_m else label)
                    nxt[key] = nxt.get(key, 0) + count
        states = nxt
    return sum(c for (x, *_), c in states.items() if x == tuple(p))


def brute_w2_restricted(k: int, l: int, mp: int, mm: int, p: tuple[int, int]) -> int:
    """Sum over ``k`` forced positive pairs and ``l`` forced negative pairs of walks whose
    forced pairs read ``1, 2`` (other pairs unrestricted)."""
    if k > mp // 2 or l > mm // 2:
        return 0
    total = 0
    for K in itertools.combinations(range(mp // 2), k):
        for L in itertools.combinations(range(mm // 2), l):
            for a in itertools.product((1, 2), repeat=mp):
                if any((a[2 * i], a[2 * i + 1]) != (1, 2) for i in K):
                    continue
                for b in itertools.product((1, 2), repeat=mm):
                    if any((b[2 * j], b[2 * j + 1]) != (1, 2) for j in L):
                        continue
                    if (a.count(1) - b.count(1), a.count(2) - b.count(2)) == p:
                        total += 1
    return total


# -- report ------------------------------------------------------------------


def _plain(value: Any) -> str:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


@dataclass
class ReportRow:
    claim: str
    params: dict[str, Any]
    values: dict[str, Any]
    expected: Any = None

    @property
    def passed(self) -> bool:
        vals = list(self.values.values())
        return all(v == vals[0] for v in vals)

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "params": {k: _plain(v) for k, v in self.params.items()},
            "expected": None if self.expected is None else _plain(self.expected),
            "values": {k: _plain(v) for k, v in self.values.items()},
            "pass": self.passed,
        }


@dataclass
class VerificationReport:
    rows: list[ReportRow] = field(default_factory=list)

    def add(self, claim: str, params: dict[str, Any], **values: Any) -> ReportRow:
        row = ReportRow(claim, params, values)
        self.rows.append(row)
        return row

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    @property
    def failures(self) -> list[ReportRow]:
        return [row for row in self.rows if not row.passed]

    def summary(self) -> dict[str, int]:
        failed = len(self.failures)
        return {"rows": len(self.rows), "passed": len(self.rows) - failed, "failed": failed}

    def to_dict(self) -> dict:
        return {"summary": self.summary(), "rows": [row.to_dict() for row in self.rows]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["claim", "params", "method", "value", "pass"])
        for row in self.rows:
            params = ";".join(f"{k}={_plain(v)}" for k, v in row.params.items())
            for method, value in row.values.items():
                writer.writerow([row.claim, params, method, _plain(value), "true" if row.passed else "false"])
        return buf.getvalue()


CLAIMS = (
    "matching_cross_method",
    "subgraph_cross_method",
    "catalan",
    "bessel_determinant",
    "interleaved_signed_sum",
    "two_regular_series",
    "bessel_determinant_primitives",
    "factorised_walks_prime",
    "factorised_walks_doubleprime",
    "inclusion_exclusion",
    "label_roundtrip",
    "label_image",
    "involution",
    "rsk",
    "chamber_walks",
    "configuration_weight",
)


def _nrd(max_rn: int, max_d: int) -> Iterator[tuple[int, int, int]]:
    for r in range(1, max_rn + 1):
        for n in range(1, max_rn // r + 1):
            for d in range(1, min(n * r, max_d) + 1):
                yield n, r, d


def verify_all(
    max_rn: int = 6,
    max_d: int = 4,
    x_bound: int = 8,
    claims: tuple[str, ...] | None = None,
    corrupt: str | None = None,
) -> VerificationReport:
    """Run every cross-method equality at the given scale and collect one row per check.

    ``claims`` restricts the run to a subset of :data:`CLAIMS`.  ``corrupt``
    names a claim whose first computed value is deliberately perturbed, which
    lets callers confirm that failures surface in the report.
    """
    from planar_count import multigraph as mg
    from planar_count import series, tableaux, walks

    selected = CLAIMS if claims is None else tuple(claims)
    unknown = set(selected) - set(CLAIMS)
    if unknown:
        raise ValueError(f"unknown claims: {sorted(unknown)}")
    report = VerificationReport()
    corrupted = False

    def add(claim: str, params: dict[str, Any], **values: Any) -> None:
        nonlocal corrupted
        if corrupt == claim and not corrupted:
            first = next(iter(values))
            values[first] = values[first] + 1
            corrupted = True
        report.add(claim, params, **values)

    half = x_bound // 2

    if "matching_cross_method" in selected:
        for n, r, d in _nrd(max_rn, max_d):
            add(
                "matching_cross_method",
                {"n": n, "r": r, "d": d},
                brute=brute_g(n, r, d),
                walks=walks.signed_toeplitz_sum(d, n, r, "prime"),
                tableaux=tableaux.count_tableau_pairs(n, r, d, "T"),
            )
    if "subgraph_cross_method" in selected:
        for n, r, d in _nrd(max_rn, max_d):
            add(
                "subgraph_cross_method",
                {"n": n, "r": r, "d": d},
                brute=brute_g_hat(n, r, d),
                walks=walks.signed_toeplitz_sum(d, n, r, "hat"),
                tableaux=tableaux.count_tableau_pairs(n, r, d, "T_hat"),
            )
    if "catalan" in selected:
        for n in range(1, max_rn + 1):
            add("catalan", {"n": n}, formula=catalan(n), brute=brute_g(n, 1, 2),
                walks=walks.signed_toeplitz_sum(2, n, 1))
    if "bessel_determinant" in selected:
        for d in range(1, max_d + 1):
            det = series.gessel_determinant(d, x_bound)
            for m in range(half + 1):
                add("bessel_determinant", {"d": d, "m": m},
                    series=det.coefficient(2 * m) * factorial(m) ** 2, brute=brute_u(m, d))
    if "interleaved_signed_sum" in selected:
        for d in range(1, max_d + 1):
            for m in range(max_rn + 1):
                add("interleaved_signed_sum", {"d": d, "m": m}, walks=walks.signed_interleaved_sum(d, m),
                    brute=comb(2 * m, m) * brute_u(m, d))
    if "two_regular_series" in selected:
        gf = series.theorem8_generating_function(x_bound)
        for n in range(x_bound // 4 + 1):
            if 2 * n > max_rn:
                break
            add("two_regular_series", {"n": n}, series=gf.coefficient(4 * n),
                brute=Fraction(brute_g(n, 2, 2), factorial(2 * n) ** 2))
    if "bessel_determinant_primitives" in selected:
        alt = series.gessel_determinant_alt(x_bound)
        det2 = series.gessel_determinant(2, x_bound)
        for e in range(x_bound + 1):
            add("bessel_determinant_primitives", {"power": e}, alt=alt.coefficient(e), det=det2.coefficient(e))
    for flavor in ("prime", "doubleprime"):
        claim = f"factorised_walks_{flavor}"
        if claim not in selected:
            continue
        for mp in range(0, max_rn + 1, 2):
            for mm in range(0, max_rn + 1, 2):
                for p in ((0, 0), (-1, 1)):
                    lhs = series.corollary2_rhs(p, mp, mm, flavor) * factorial(mp) * factorial(mm)
                    if flavor == "prime":
                        direct = brute_w2(mp, mm, p)
                    else:
                        direct = count_w2_interleaved(mp, mm, p)
                    add(claim, {"m+": mp, "m-": mm, "p": p}, formula=lhs, direct=direct)
    if "inclusion_exclusion" in selected:
        for mp in range(0, min(max_rn, 4) + 1, 2):
            for mm in range(0, min(max_rn, 4) + 1, 2):
                for p in ((0, 0), (-1, 1)):
                    alt = sum(
                        (-1) ** (k + l) * brute_w2_restricted(k, l, mp, mm, p)
                        for k in range(mp // 2 + 1)
                        for l in range(mm // 2 + 1)
                    )
                    add("inclusion_exclusion", {"m+": mp, "m-": mm, "p": p},
                        inclusion_exclusion=alt, direct=brute_w2(mp, mm, p))
    if "label_roundtrip" in selected:
        for r in range(1, min(max_rn, 5) + 1):
            for n in range(1, min(max_rn, 5) // r + 1):
                bad = sum(
                    1 for f in mg.enumerate_configurations(n, r)
                    if walks.phi(walks.Phi(f)).pairing != f.pairing
                )
                add("label_roundtrip", {"n": n, "r": r}, mismatches=bad, expected=0)
    if "label_image" in selected:
        for n, r, d in _nrd(min(max_rn, 4), min(max_d, 3)):
            image = {
                walks.Phi(f, d)
                for f in mg.enumerate_configurations(n, r)
                if mg.is_expanded(f) and mg.planar_matching_size(f) <= d
            }
            good = {w for w in walks.enumerate_restricted_walks(d, n, r) if walks.check_condition_C(w)[0]}
            add("label_image", {"n": n, "r": r, "d": d}, image=len(image), condition_C=len(good),
                common=len(image & good))
    if "involution" in selected:
        for r in range(1, min(max_rn, 4) + 1):
            for n in range(1, min(max_rn, 4) // r + 1):
                bad = 0
                total = 0
                signed = 0
                for w in walks.enumerate_restricted_walks(2, n, r):
                    ok, u = walks.check_condition_C(w)
                    if ok:
                        continue
                    total += 1
                    t = walks.rho(w)
                    sw = walks.toeplitz_perm_of(walks.endpoint(w))
                    st = walks.toeplitz_perm_of(walks.endpoint(t))
                    signed += walks.permutation_sign(sw)
                    good = (
                        walks.rho(t) == w
                        and walks.is_W_prime(t)
                        and st is not None
                        and walks.permutation_sign(st) == -walks.permutation_sign(sw)
                        and walks.check_condition_C(t) == (False, u)
                    )
                    bad += not good
                add("involution", {"n": n, "r": r, "d": 2, "violators": total}, failures=bad, signed_sum=signed, expected=0)
    if "rsk" in selected:
        for m in range(0, min(max_rn, 6) + 1):
            bad = 0
            for perm in itertools.permutations(range(1, m + 1)):
                pair = tableaux.rsk(perm)
                inv = [0] * m
                for i, x in enumerate(perm, start=1):
                    inv[x - 1] = i
                pair_inv = tableaux.rsk(inv)
                good = (
                    tableaux.inverse_rsk(pair) == perm
                    and pair_inv.P == pair.Q
                    and pair_inv.Q == pair.P
                    and pair.P.columns == _lis(perm)
                )
                bad += not good
            add("rsk", {"m": m}, failures=bad, expected=0)
    if "chamber_walks" in selected:
        for n, r, d in _nrd(max_rn, min(max_d, 3)):
            add("chamber_walks", {"n": n, "r": r, "d": d}, chamber=walks.count_chamber_walks(d, n, r),
                brute=brute_g(n, r, d))
    if "configuration_weight" in selected:
        for r in range(1, max_rn + 1):
            for n in range(1, max_rn // r + 1):
                total = sum(mg.configuration_count_of(g) for g in mg.enumerate_multigraphs(n, r))
                add("configuration_weight", {"n": n, "r": r}, weighted=total, factorial=factorial(n * r))
    return report
