"""Standard Young tableaux, RSK row insertion and the block descent conditions.

Rows are numbered from 0 at the top; box positions are ``(row, column)``
pairs, 0-based.  Tableau entries are the positive integers being inserted.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Callable, Iterator, Literal, Sequence

from planar_count._json import canonical_json
from planar_count.budget import limited

Condition = Literal["T", "T_hat"]


@dataclass(frozen=True)
class YoungTableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        # Trailing empty rows carry no information.
        while rows and not rows[-1]:
            rows = rows[:-1]
        object.__setattr__(self, "rows", rows)
        entries = [x for row in rows for x in row]
        if len(set(entries)) != len(entries):
            raise ValueError("tableau entries must be distinct")
        for i, row in enumerate(rows):
            if not row:
                raise ValueError("empty row inside tableau")
            if i and len(row) > len(rows[i - 1]):
                raise ValueError("row lengths must weakly decrease")
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError(f"row {i} is not increasing")
            if i and any(rows[i - 1][j] >= row[j] for j in range(len(row))):
                raise ValueError(f"column violation between rows {i - 1} and {i}")

    @classmethod
    def empty(cls) -> YoungTableau:
        return cls(())

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    @property
    def columns(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def entries(self) -> set[int]:
        return {x for row in self.rows for x in row}

    def row_of(self) -> dict[int, int]:
        """Map each entry to the index of the row holding it."""
        return {x: i for i, row in enumerate(self.rows) for x in row}

    def to_dict(self) -> dict:
        return {"rows": [list(row) for row in self.rows]}

    @classmethod
    def from_dict(cls, data: dict) -> YoungTableau:
        return cls(tuple(tuple(row) for row in data["rows"]))

    def to_json(self) -> str:
        return canonical_json(self.to_dict())


@dataclass(frozen=True)
class TableauPair:
    P: YoungTableau
    Q: YoungTableau

    def __post_init__(self) -> None:
        if self.P.shape != self.Q.shape:
            raise ValueError("P and Q must have the same shape")
        if self.Q.entries() != set(range(1, self.Q.size + 1)):
            raise ValueError("Q must be filled with 1..m")

    @property
    def shape(self) -> tuple[int, ...]:
        return self.P.shape


def row_insert(t: YoungTableau, x: int) -> tuple[YoungTableau, tuple[int, int]]:
    """Schensted row insertion ``t <- x``; returns the new tableau and the added box."""
    if x in t.entries():
        raise ValueError(f"{x} is already in the tableau")
    rows = [list(row) for row in t.rows]
    i = 0
    while True:
        if i == len(rows):
            rows.append([x])
            return YoungTableau(tuple(map(tuple, rows))), (i, 0)
        row = rows[i]
        j = bisect_right(row, x)
        if j == len(row):
            row.append(x)
            return YoungTableau(tuple(map(tuple, rows))), (i, j)
        row[j], x = x, row[j]
        i += 1


def _check_permutation(seq: Sequence[int]) -> None:
    if sorted(seq) != list(range(1, len(seq) + 1)):
        raise ValueError("sequence must be a permutation of 1..m")


def rsk(sequence: Sequence[int]) -> TableauPair:
    """RSK correspondence for a permutation of ``1..m`` (one-line notation)."""
    _check_permutation(sequence)
    p = YoungTableau.empty()
    q_rows: list[list[int]] = []
    for step, x in enumerate(sequence, start=1):
        p, (i, _) = row_insert(p, x)
        if i == len(q_rows):
            q_rows.append([])
        q_rows[i].append(step)
    return TableauPair(p, YoungTableau(tuple(map(tuple, q_rows))))


def inverse_rsk(pair: TableauPair) -> tuple[int, ...]:
    """Recover the permutation whose RSK image is ``pair`` by reverse bumping."""
    if pair.P.entries() != set(range(1, pair.P.size + 1)):
        raise ValueError("P must be filled with 1..m")
    p = [list(row) for row in pair.P.rows]
    q_pos = {x: (i, j) for i, row in enumerate(pair.Q.rows) for j, x in enumerate(row)}
    out = []
    for step in range(pair.Q.size, 0, -1):
        i, j = q_pos[step]
        x = p[i].pop(j)
        if not p[i]:
            p.pop(i)
        for k in range(i - 1, -1, -1):
            row = p[k]
            # Largest entry smaller than x is bumped back up.
            pos = bisect_right(row, x) - 1
            row[pos], x = x, row[pos]
        out.append(x)
    return tuple(reversed(out))


def _block_pairs(n: int, r: int) -> Iterator[tuple[int, int]]:
    for i in range(1, n + 1):
        for s in range(1, r):
            yield r * (i - 1) + s, r * (i - 1) + s + 1


def _check_entries(t: YoungTableau, n: int, r: int) -> dict[int, int]:
    if t.entries() != set(range(1, n * r + 1)):
        raise ValueError(f"tableau entries must be exactly 1..{n * r}")
    return t.row_of()


def check_condition_T(t: YoungTableau, n: int, r: int) -> bool:
    """Within each block of ``r`` consecutive values, each value sits strictly above the next."""
    row = _check_entries(t, n, r)
    return all(row[a] < row[b] for a, b in _block_pairs(n, r))


def check_condition_T_hat(t: YoungTableau, n: int, r: int) -> bool:
    """Within each block, each value sits weakly below the next one."""
    row = _check_entries(t, n, r)
    return all(row[b] <= row[a] for a, b in _block_pairs(n, r))


def partitions(m: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``m`` with parts at most ``max_part``, in reverse lexicographic order."""
    if max_part is None:
        max_part = m
    if m == 0:
        yield ()
        return
    for first in range(min(m, max_part), 0, -1):
        for rest in partitions(m - first, first):
            yield (first,) + rest


def standard_tableaux(shape: Sequence[int]) -> Iterator[YoungTableau]:
    """All standard Young tableaux of ``shape``, filled by placing 1, 2, ... in legal corners."""
    shape = tuple(shape)
    total = sum(shape)
    rows: list[list[int]] = [[] for _ in shape]

    def fill(value: int) -> Iterator[YoungTableau]:
        if value > total:
            yield YoungTableau(tuple(tuple(row) for row in rows))
            return
        for i, row in enumerate(rows):
            if len(row) < shape[i] and (i == 0 or len(rows[i - 1]) > len(row)):
                row.append(value)
                yield from fill(value + 1)
                row.pop()

    yield from fill(1)


def count_tableau_pairs(n: int, r: int, d: int, condition: Condition = "T", budget: int | None = None) -> int:
    """Pairs of equal-shape tableaux on ``1..rn`` with at most ``d`` columns, both passing ``condition``.

    Equals the number of ``r``-regular multigraphs whose largest planar
    matching (condition ``T``) or planar subgraph (``T_hat``) has at most
    ``d`` edges.
    """
    if min(n, r, d) < 0:
        raise ValueError("n, r, d must be non-negative")
    checks: dict[str, Callable[[YoungTableau, int, int], bool]] = {
        "T": check_condition_T,
        "T_hat": check_condition_T_hat,
    }
    if condition not in checks:
        raise ValueError(f"unknown condition {condition!r}")
    check = checks[condition]
    total = 0
    tableaux = limited(
        ((shape, t) for shape in partitions(n * r, d) for t in standard_tableaux(shape)),
        budget,
    )
    per_shape: dict[tuple[int, ...], int] = {}
    for shape, t in tableaux:
        per_shape.setdefault(shape, 0)
        if check(t, n, r):
            per_shape[shape] += 1
    for count in per_shape.values():
        total += count * count
    return total
