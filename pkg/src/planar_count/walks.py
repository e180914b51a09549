"""Restricted lattice walks, Toeplitz signed sums and the walk/configuration maps.

A representative walk lists its positive steps ``a`` (indexed by U-copy rank)
before its negative steps ``b`` (indexed by V-copy rank).  Step labels are
directions ``1..d``; copy ranks are 0-based, grouped into blocks of ``r``.

Two block restrictions appear throughout:

``"prime"``
    every block of ``r`` labels is non-increasing (planar matchings),
``"hat"``
    every block is strictly increasing (planar subgraphs).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Literal, Sequence

from planar_count._json import canonical_json
from planar_count.budget import BudgetExceeded, limited
from planar_count.multigraph import Configuration, QuasiConfiguration, matching_depths

Variant = Literal["prime", "hat"]
Point = tuple[int, ...]

MAX_SIGNED_DIMENSION = 8
MAX_DP_STATES = 10**7


@dataclass(frozen=True)
class Walk:
    """A lattice walk from the origin written as signed direction labels."""

    d: int
    steps: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "steps", tuple(int(s) for s in self.steps))
        if any(s == 0 or abs(s) > self.d for s in self.steps):
            raise ValueError(f"steps must be nonzero with |step| <= {self.d}")

    def positions(self) -> list[Point]:
        x = [0] * self.d
        out = [tuple(x)]
        for s in self.steps:
            x[abs(s) - 1] += 1 if s > 0 else -1
            out.append(tuple(x))
        return out

    def to_dict(self) -> dict:
        return {"d": self.d, "steps": list(self.steps)}

    @classmethod
    def from_dict(cls, data: dict) -> Walk:
        return cls(data["d"], tuple(data["steps"]))


@dataclass(frozen=True)
class RepresentativeWalk:
    d: int
    n: int
    r: int
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self) -> None:
        a = tuple(int(x) for x in self.a)
        b = tuple(int(x) for x in self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        m = self.n * self.r
        if len(a) != m or len(b) != m:
            raise ValueError(f"a and b must both have length rn={m}")
        if any(not 1 <= x <= self.d for x in a + b):
            raise ValueError(f"labels must lie in 1..{self.d}")

    @property
    def size(self) -> int:
        return self.n * self.r

    def to_walk(self) -> Walk:
        return Walk(self.d, self.a + tuple(-x for x in self.b))

    def to_dict(self) -> dict:
        return {"d": self.d, "n": self.n, "r": self.r, "a": list(self.a), "b": list(self.b)}

    @classmethod
    def from_dict(cls, data: dict) -> RepresentativeWalk:
        return cls(data["d"], data["n"], data["r"], tuple(data["a"]), tuple(data["b"]))

    def to_json(self) -> str:
        return canonical_json(self.to_dict())

    def __str__(self) -> str:
        return "".join(map(str, self.a)) + "|" + "".join(map(str, self.b))


def parse_walk(text: str, r: int = 1, d: int | None = None) -> RepresentativeWalk:
    """Parse the compact ``"112122|122122"`` notation (single-digit labels)."""
    left, right = text.split("|")
    a = tuple(int(c) for c in left)
    b = tuple(int(c) for c in right)
    if len(a) % r:
        raise ValueError("length must be a multiple of r")
    if d is None:
        d = max(a + b, default=1)
    return RepresentativeWalk(d, len(a) // r, r, a, b)


def endpoint(w: Walk | RepresentativeWalk) -> Point:
    if isinstance(w, RepresentativeWalk):
        w = w.to_walk()
    x = [0] * w.d
    for s in w.steps:
        x[abs(s) - 1] += 1 if s > 0 else -1
    return tuple(x)


# -- Toeplitz points ---------------------------------------------------------


@dataclass(frozen=True)
class ToeplitzPoint:
    point: Point
    perm: tuple[int, ...]

    @classmethod
    def of(cls, perm: Sequence[int]) -> ToeplitzPoint:
        perm = tuple(perm)
        return cls(toeplitz_point(perm), perm)

    @property
    def sign(self) -> int:
        return permutation_sign(self.perm)


def toeplitz_point(perm: Sequence[int]) -> Point:
    """``(1 - perm(1), ..., d - perm(d))`` for a permutation of ``1..d``."""
    return tuple(k - p for k, p in enumerate(perm, start=1))


def permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def toeplitz_points(d: int) -> Iterator[ToeplitzPoint]:
    for perm in itertools.permutations(range(1, d + 1)):
        yield ToeplitzPoint.of(perm)


def toeplitz_perm_of(p: Sequence[int]) -> tuple[int, ...] | None:
    """The permutation generating ``p``, or None when ``p`` is not a Toeplitz point."""
    perm = tuple(k - x for k, x in enumerate(p, start=1))
    if sorted(perm) == list(range(1, len(p) + 1)):
        return perm
    return None


# -- block restrictions ------------------------------------------------------


def _blocks(seq: Sequence[int], r: int) -> list[Sequence[int]]:
    return [seq[i : i + r] for i in range(0, len(seq), r)] if r else []


def is_W_prime(w: RepresentativeWalk) -> bool:
    """Every block of positive and of negative labels is non-increasing."""
    return all(
        all(x >= y for x, y in zip(block, block[1:]))
        for seq in (w.a, w.b)
        for block in _blocks(seq, w.r)
    )


def is_W_hat(w: RepresentativeWalk) -> bool:
    """Every block of positive and of negative labels is strictly increasing."""
    return all(
        all(x < y for x, y in zip(block, block[1:]))
        for seq in (w.a, w.b)
        for block in _blocks(seq, w.r)
    )


def _check_variant(variant: str) -> None:
    if variant not in ("prime", "hat"):
        raise ValueError(f"variant must be 'prime' or 'hat', got {variant!r}")


def block_sequences(d: int, r: int, variant: Variant) -> list[tuple[int, ...]]:
    """Admissible label blocks of length ``r``, sorted lexicographically."""
    _check_variant(variant)
    if variant == "prime":
        blocks = itertools.combinations_with_replacement(range(d, 0, -1), r)
    else:
        blocks = itertools.combinations(range(1, d + 1), r)
    return sorted(blocks)


@lru_cache(maxsize=None)
def _block_power(d: int, n: int, r: int, variant: Variant) -> dict[Point, int]:
    # Coefficients of (sum over admissible blocks of x^block)^n, keyed by count vector.
    block_vectors: dict[Point, int] = {}
    for block in block_sequences(d, r, variant):
        c = [0] * d
        for x in block:
            c[x - 1] += 1
        block_vectors[tuple(c)] = block_vectors.get(tuple(c), 0) + 1
    power: dict[Point, int] = {(0,) * d: 1}
    for _ in range(n):
        nxt: dict[Point, int] = {}
        for c, count in power.items():
            for e, mult in block_vectors.items():
                key = tuple(x + y for x, y in zip(c, e))
                nxt[key] = nxt.get(key, 0) + count * mult
        if len(nxt) > MAX_DP_STATES:
            raise BudgetExceeded(f"block DP exceeded {MAX_DP_STATES} states")
        power = nxt
    return power


def count_block_sequences(d: int, n: int, r: int, c: Sequence[int], variant: Variant = "prime") -> int:
    """Label sequences of ``n`` admissible blocks in which label ``k`` occurs ``c[k-1]`` times."""
    _check_variant(variant)
    if len(c) != d or sum(c) != n * r or any(x < 0 for x in c):
        return 0
    return _block_power(d, n, r, variant).get(tuple(c), 0)


def _compositions(total: int, parts: int) -> Iterator[Point]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _count_to(power: dict[Point, int], p: Point, m: int) -> int:
    lower = tuple(max(0, x) for x in p)
    spare = m - sum(lower)
    if spare < 0:
        return 0
    total = 0
    for extra in _compositions(spare, len(p)):
        plus = tuple(x + y for x, y in zip(lower, extra))
        n_plus = power.get(plus)
        if n_plus:
            minus = tuple(x - y for x, y in zip(plus, p))
            total += n_plus * power.get(minus, 0)
    return total


def count_restricted_walks(d: int, n: int, r: int, p: Sequence[int], variant: Variant = "prime") -> int:
    """Number of representative walks to ``p`` with ``rn`` positive and ``rn`` negative steps
    whose blocks obey ``variant``."""
    _check_variant(variant)
    p = tuple(p)
    if len(p) != d:
        raise ValueError(f"endpoint must have {d} coordinates")
    if sum(p) != 0:
        return 0
    return _count_to(_block_power(d, n, r, variant), p, n * r)


def _perms_with_small_displacement(d: int, cap: int) -> Iterator[tuple[tuple[int, ...], int]]:
    # Permutations of 1..d whose positive displacements sum to at most cap, with signs.
    used = [False] * (d + 1)
    perm: list[int] = []

    def rec(k: int, spent: int, parity: int) -> Iterator[tuple[tuple[int, ...], int]]:
        if k > d:
            yield tuple(perm), -1 if parity else 1
            return
        for v in range(1, d + 1):
            if used[v]:
                continue
            cost = spent + max(0, k - v)
            if cost > cap:
                continue
            inv = sum(1 for u in perm if u > v)
            used[v] = True
            perm.append(v)
            yield from rec(k + 1, cost, parity ^ (inv & 1))
            perm.pop()
            used[v] = False

    yield from rec(1, 0, 0)


def signed_toeplitz_sum(d: int, n: int, r: int, variant: Variant = "prime") -> int:
    """Sum over permutations of ``1..d`` of sign times the restricted walk count to its Toeplitz point.

    With ``variant="prime"`` this counts ``r``-regular multigraphs whose largest
    planar matching has at most ``d`` edges; with ``"hat"`` it counts those
    whose largest planar subgraph does.
    """
    _check_variant(variant)
    if d < 1:
        raise ValueError("d must be at least 1")
    if d > MAX_SIGNED_DIMENSION:
        raise BudgetExceeded(f"signed sums are limited to d <= {MAX_SIGNED_DIMENSION}")
    m = n * r
    power = _block_power(d, n, r, variant)
    total = 0
    for perm, sign in _perms_with_small_displacement(d, m):
        total += sign * _count_to(power, toeplitz_point(perm), m)
    return total


def signed_interleaved_sum(d: int, m: int) -> int:
    """Signed count of all walks of length ``2m`` to Toeplitz points (any step order)."""
    if m == 0:
        return 1
    return comb(2 * m, m) * signed_toeplitz_sum(d, m, 1, "prime")


# -- walks <-> configurations ----------------------------------------------


def _crossing(us: Sequence[int], vs: Sequence[int]) -> list[tuple[int, int]]:
    return list(zip(us, reversed(vs)))


def phi(w: RepresentativeWalk) -> QuasiConfiguration:
    """Pair U-copies and V-copies with equal labels in the crossing way.

    For each label ``k`` the longer of the two label classes is trimmed: the
    leading U-copies or the trailing V-copies of that label.
    """
    pairing: list[int | None] = [None] * w.size
    for k in range(1, w.d + 1):
        A = [i for i, x in enumerate(w.a) if x == k]
        B = [j for j, x in enumerate(w.b) if x == k]
        if len(A) >= len(B):
            A = A[: len(B)]
        else:
            B = B[len(B) - len(A) :]
        for u, v in _crossing(A, B):
            pairing[u] = v
    return QuasiConfiguration(w.n, w.r, tuple(pairing))


def Phi(f: Configuration, d: int | None = None) -> RepresentativeWalk:
    """Label every copy by the largest planar matching of ``f`` ending at its edge."""
    a = matching_depths(f)
    b = [0] * f.size
    for u, v in enumerate(f.pairing):
        b[v] = a[u]
    if d is None:
        d = max(f.size, 1)
    if any(x > d for x in a):
        raise ValueError(f"a label exceeds the working dimension d={d}")
    return RepresentativeWalk(d, f.n, f.r, tuple(a), tuple(b))


def _kl(a: Sequence[int], u: int) -> tuple[int, int]:
    h = a[u]
    prefix = a[: u + 1]
    return prefix.count(h), prefix.count(h - 1)


def check_condition_C(w: RepresentativeWalk) -> tuple[bool, int | None]:
    """Check the last-appearance ordering condition; return ``(ok, first violating rank)``.

    For a U-copy with label ``h > 1``, let ``k``/``l`` count the labels ``h`` /
    ``h - 1`` among it and its predecessors.  We need ``l > 0`` and, when the
    ``l``-th-to-last ``h - 1`` exists among the negative steps, an ``h`` at
    the ``k``-th-to-last position after it.
    """
    for u, h in enumerate(w.a):
        if h == 1:
            continue
        k, l = _kl(w.a, u)
        if l == 0:
            return False, u
        lower = [j for j, x in enumerate(w.b) if x == h - 1]
        if len(lower) < l:
            continue
        upper = [j for j, x in enumerate(w.b) if x == h]
        if len(upper) < k or upper[-k] < lower[-l]:
            return False, u
    return True, None


def _swap_in_blocks(seq: list[int], positions: Iterable[int], r: int, h: int) -> None:
    by_block: dict[int, list[int]] = {}
    for i in positions:
        if seq[i] in (h, h - 1):
            by_block.setdefault(i // r, []).append(i)
    for idx in by_block.values():
        n_low = sum(1 for i in idx if seq[i] == h - 1)
        for pos, i in enumerate(idx):
            seq[i] = h if pos < n_low else h - 1


def rho(w: RepresentativeWalk) -> RepresentativeWalk:
    """Sign-reversing involution on walks that end at a Toeplitz point and violate the condition.

    Let ``u`` be the first violating U-copy with label ``h`` and ``v`` the
    position of the ``l(u)``-th-to-last ``h - 1`` among the negative steps
    (past the end when ``l(u) = 0``).  Positive steps after ``u`` and negative
    steps before ``v`` have their numbers of ``h`` and ``h - 1`` labels swapped
    block by block, keeping every block non-increasing.
    """
    ok, u = check_condition_C(w)
    if ok or u is None:
        raise ValueError("rho is only defined on walks violating the condition")
    if not is_W_prime(w):
        raise ValueError("rho requires non-increasing blocks")
    if toeplitz_perm_of(endpoint(w)) is None:
        raise ValueError("rho requires a walk ending at a Toeplitz point")
    h = w.a[u]
    _, l = _kl(w.a, u)
    if l == 0:
        v = w.size
    else:
        v = [j for j, x in enumerate(w.b) if x == h - 1][-l]
    a, b = list(w.a), list(w.b)
    _swap_in_blocks(a, range(u + 1, w.size), w.r, h)
    _swap_in_blocks(b, range(0, v), w.r, h)
    return RepresentativeWalk(w.d, w.n, w.r, tuple(a), tuple(b))


# -- exhaustive streams and chamber walks --------------------------------------


def _label_sequences(d: int, n: int, r: int, variant: Variant) -> list[tuple[int, ...]]:
    blocks = block_sequences(d, r, variant)
    return [sum(choice, ()) for choice in itertools.product(blocks, repeat=n)]


def _counts(seq: Sequence[int], d: int) -> Point:
    c = [0] * d
    for x in seq:
        c[x - 1] += 1
    return tuple(c)


def enumerate_restricted_walks(
    d: int,
    n: int,
    r: int,
    endpoints: Iterable[Sequence[int]] | None = None,
    variant: Variant = "prime",
    budget: int | None = None,
) -> Iterator[RepresentativeWalk]:
    """Every block-restricted representative walk ending in ``endpoints``, ordered by ``(a, b)``.

    ``endpoints=None`` means the set of all Toeplitz points.
    """
    _check_variant(variant)
    if endpoints is None:
        targets = {tp.point for tp in toeplitz_points(d)}
    else:
        targets = {tuple(p) for p in endpoints}
    seqs = _label_sequences(d, n, r, variant)
    by_counts: dict[Point, list[tuple[int, ...]]] = {}
    for s in seqs:
        by_counts.setdefault(_counts(s, d), []).append(s)

    def stream() -> Iterator[RepresentativeWalk]:
        for a in seqs:
            ca = _counts(a, d)
            bs: list[tuple[int, ...]] = []
            for p in targets:
                cb = tuple(x - y for x, y in zip(ca, p))
                bs.extend(by_counts.get(cb, ()))
            for b in sorted(bs):
                yield RepresentativeWalk(d, n, r, a, b)

    yield from limited(stream(), budget)


def _in_chamber(x: Sequence[int]) -> bool:
    return all(x[i] >= x[i + 1] for i in range(len(x) - 1))


def count_chamber_walks(d: int, n: int, r: int, budget: int | None = None) -> int:
    """Closed walks ``a | reversed(b)`` with non-increasing blocks that never leave
    the chamber ``x_1 >= x_2 >= ... >= x_d``.

    ``a`` consists of ``n`` non-increasing blocks; reversing ``b`` turns its
    blocks into non-decreasing ones, applied as negative steps.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    cap = budget if budget is not None else MAX_DP_STATES
    down = block_sequences(d, r, "prime")
    up = [tuple(reversed(block)) for block in down]

    def advance(states: dict[Point, int], blocks: list[tuple[int, ...]], sign: int) -> dict[Point, int]:
        nxt: dict[Point, int] = {}
        for x, count in states.items():
            for block in blocks:
                y = list(x)
                for label in block:
                    y[label - 1] += sign
                    if not _in_chamber(y):
                        break
                else:
                    key = tuple(y)
                    nxt[key] = nxt.get(key, 0) + count
        if len(nxt) > cap:
            raise BudgetExceeded(f"chamber DP exceeded {cap} states")
        return nxt

    states: dict[Point, int] = {(0,) * d: 1}
    for _ in range(n):
        states = advance(states, down, +1)
    for _ in range(n):
        states = advance(states, up, -1)
    return states.get((0,) * d, 0)
