"""Regular bipartite multigraphs, their configuration-model lifts, and planar sizes.

Vertices of each colour class are indexed ``0..n-1`` in their drawing order.
A configuration pairs the copies ``U x [r]`` with ``V x [r]``; copy ``s`` of
vertex ``u`` has rank ``u * r + s`` (0-based) so ranks follow the
lexicographic order on copies.  JSON payloads use 1-based ranks.
"""

from __future__ import annotations

import itertools
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from math import factorial, prod
from typing import Iterator, Sequence

from planar_count._json import canonical_json
from planar_count.budget import limited


@dataclass(frozen=True)
class BipartiteMultigraph:
    """An ``r``-regular bipartite multigraph given by its multiplicity matrix."""

    n: int
    r: int
    mult: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        mult = tuple(tuple(int(x) for x in row) for row in self.mult)
        object.__setattr__(self, "mult", mult)
        if self.n < 0 or self.r < 0:
            raise ValueError("n and r must be non-negative")
        if len(mult) != self.n or any(len(row) != self.n for row in mult):
            raise ValueError(f"multiplicity matrix must be {self.n}x{self.n}")
        if any(x < 0 for row in mult for x in row):
            raise ValueError("multiplicities must be non-negative")
        if any(sum(row) != self.r for row in mult):
            raise ValueError(f"every row must sum to r={self.r}")
        if any(sum(col) != self.r for col in zip(*mult)):
            raise ValueError(f"every column must sum to r={self.r}")

    @classmethod
    def from_matrix(cls, mult: Sequence[Sequence[int]]) -> BipartiteMultigraph:
        """Build from a square matrix, inferring ``n`` and ``r``."""
        rows = [list(row) for row in mult]
        n = len(rows)
        r = sum(rows[0]) if n else 0
        return cls(n, r, tuple(tuple(row) for row in rows))

    def edges(self) -> list[tuple[int, int]]:
        """Edges with multiplicity materialised as repeated ``(u, v)`` pairs."""
        return [
            (u, v)
            for u, row in enumerate(self.mult)
            for v, t in enumerate(row)
            for _ in range(t)
        ]

    def to_dict(self) -> dict:
        return {"n": self.n, "r": self.r, "mult": [list(row) for row in self.mult]}

    @classmethod
    def from_dict(cls, data: dict) -> BipartiteMultigraph:
        return cls(data["n"], data["r"], tuple(tuple(row) for row in data["mult"]))

    def to_json(self) -> str:
        return canonical_json(self.to_dict())


@dataclass(frozen=True)
class Configuration:
    """A perfect pairing of ``U x [r]`` with ``V x [r]``.

    ``pairing[i]`` is the 0-based rank of the V-copy matched to U-copy ``i``,
    so a configuration is just a permutation of ``range(r * n)``.
    """

    n: int
    r: int
    pairing: tuple[int, ...]

    def __post_init__(self) -> None:
        pairing = tuple(int(x) for x in self.pairing)
        object.__setattr__(self, "pairing", pairing)
        m = self.n * self.r
        if len(pairing) != m or sorted(pairing) != list(range(m)):
            raise ValueError(f"pairing must be a permutation of range({m})")

    @property
    def size(self) -> int:
        return self.n * self.r

    def edges(self) -> list[tuple[int, int]]:
        return list(enumerate(self.pairing))

    def to_dict(self) -> dict:
        return {"n": self.n, "r": self.r, "pairing": [p + 1 for p in self.pairing]}

    @classmethod
    def from_dict(cls, data: dict) -> Configuration:
        return cls(data["n"], data["r"], tuple(p - 1 for p in data["pairing"]))

    def to_json(self) -> str:
        return canonical_json(self.to_dict())


@dataclass(frozen=True)
class QuasiConfiguration:
    """A configuration with some pairings deleted; ``None`` marks an unmatched U-copy."""

    n: int
    r: int
    pairing: tuple[int | None, ...]

    def __post_init__(self) -> None:
        m = self.n * self.r
        if len(self.pairing) != m:
            raise ValueError(f"pairing must have length {m}")
        matched = [p for p in self.pairing if p is not None]
        if len(set(matched)) != len(matched) or any(not 0 <= p < m for p in matched):
            raise ValueError("matched entries must be distinct ranks in range")

    def is_configuration(self) -> bool:
        return all(p is not None for p in self.pairing)

    def to_configuration(self) -> Configuration:
        if not self.is_configuration():
            raise ValueError("quasi configuration has unmatched copies")
        return Configuration(self.n, self.r, self.pairing)  # type: ignore[arg-type]


def _longest_chain(values: Sequence[int], strict: bool) -> int:
    tails: list[int] = []
    place = bisect_left if strict else bisect_right
    for v in values:
        i = place(tails, v)
        if i == len(tails):
            tails.append(v)
        else:
            tails[i] = v
    return len(tails)


def planar_matching_size(g: BipartiteMultigraph | Configuration) -> int:
    """Size of a largest set of pairwise noncrossing edges.

    Edges sharing an endpoint (in particular parallel edges) cross, so the
    answer is the longest chain strictly increasing in both endpoints.
    """
    edges = sorted(g.edges(), key=lambda e: (e[0], -e[1]))
    return _longest_chain([v for _, v in edges], strict=True)


def planar_subgraph_size(g: BipartiteMultigraph | Configuration) -> int:
    """Size of a largest noncrossing edge multiset whose edges may share endpoints."""
    edges = sorted(g.edges())
    return _longest_chain([v for _, v in edges], strict=False)


def matching_depths(f: Configuration) -> list[int]:
    """For every U-copy, the largest planar matching of ``f`` ending with its edge."""
    tails: list[int] = []
    depths = []
    for v in f.pairing:
        i = bisect_left(tails, v)
        if i == len(tails):
            tails.append(v)
        else:
            tails[i] = v
        depths.append(i + 1)
    return depths


def expand_configuration(g: BipartiteMultigraph) -> Configuration:
    """The configuration whose copies of each vertex have pairwise crossing edges.

    For an edge ``(u, v)`` of multiplicity ``t`` with ``i`` edges from ``u``
    to later V-vertices and ``j`` edges into ``v`` from later U-vertices,
    copy ``i + s`` of ``u`` is paired with copy ``j + t - s + 1`` of ``v``
    (1-based, ``s = 1..t``).
    """
    n, r, mult = g.n, g.r, g.mult
    pairing = [0] * (n * r)
    for u in range(n):
        for v in range(n):
            t = mult[u][v]
            if not t:
                continue
            i = sum(mult[u][v + 1 :])
            j = sum(mult[x][v] for x in range(u + 1, n))
            for s in range(1, t + 1):
                pairing[u * r + i + s - 1] = v * r + j + t - s
    return Configuration(n, r, tuple(pairing))


def project(f: Configuration) -> BipartiteMultigraph:
    """Forget copy indices: the multigraph underlying a configuration."""
    n, r = f.n, f.r
    mult = [[0] * n for _ in range(n)]
    for ub, vb in enumerate(f.pairing):
        mult[ub // r][vb // r] += 1
    return BipartiteMultigraph(n, r, tuple(tuple(row) for row in mult))


def transpose(f: Configuration) -> Configuration:
    inverse = [0] * f.size
    for ub, vb in enumerate(f.pairing):
        inverse[vb] = ub
    return Configuration(f.n, f.r, tuple(inverse))


def is_expanded(f: Configuration) -> bool:
    """True when ``f`` is the canonical lift of its own projection."""
    return expand_configuration(project(f)) == f


def _compositions_desc(total: int, caps: Sequence[int]) -> Iterator[tuple[int, ...]]:
    # Compositions of ``total`` bounded entrywise by ``caps``, largest first entry first.
    if not caps:
        if total == 0:
            yield ()
        return
    rest = sum(caps[1:])
    for x in range(min(total, caps[0]), max(0, total - rest) - 1, -1):
        for tail in _compositions_desc(total - x, caps[1:]):
            yield (x,) + tail


def _regular_matrices(n: int, r: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    def rows(k: int, colsums: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
        if k == n:
            yield ()
            return
        caps = tuple(r - c for c in colsums)
        for row in _compositions_desc(r, caps):
            new = tuple(c + x for c, x in zip(colsums, row))
            # Remaining rows must be able to fill every column.
            if any(r - c > r * (n - k - 1) for c in new):
                continue
            for tail in rows(k + 1, new):
                yield (row,) + tail

    yield from rows(0, (0,) * n)


def enumerate_multigraphs(n: int, r: int, budget: int | None = None) -> Iterator[BipartiteMultigraph]:
    """Every ``r``-regular multigraph on ``n + n`` vertices exactly once.

    Matrices come out in decreasing lexicographic order of their row-major
    entries, so the diagonal matrix ``r * I`` is first.
    """
    if n < 0 or r < 0:
        raise ValueError("n and r must be non-negative")
    for mult in limited(_regular_matrices(n, r), budget):
        yield BipartiteMultigraph(n, r, mult)


def enumerate_configurations(n: int, r: int, budget: int | None = None) -> Iterator[Configuration]:
    """All ``(rn)!`` configurations in lexicographic order of their pairing."""
    if n < 0 or r < 0:
        raise ValueError("n and r must be non-negative")
    for perm in limited(itertools.permutations(range(n * r)), budget):
        yield Configuration(n, r, perm)


def configuration_count_of(g: BipartiteMultigraph) -> int:
    """Number of configurations projecting onto ``g``: ``(r!)^(2n) / prod(mult!)``."""
    num = factorial(g.r) ** (2 * g.n)
    den = prod(factorial(t) for row in g.mult for t in row)
    count, rem = divmod(num, den)
    assert rem == 0
    return count
