"""Exhaustive generation of ballot and odd order permutations and their counts.

All refined counts are produced by one exhaustive pass per (kind, n) that
classifies every permutation by its statistic d (descents for ballot
permutations, cyclic weight for odd order permutations) and by the two
neighbors (i, j) of the largest letter, read as the factor i n j (cyclic
inside the decomposition's cycles).  Counting is definitionally exhaustive so
that these tables can serve as the trusted oracle for every other module.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cycles import CycleDecomposition, max_letter_neighbors, perm_weight
from .errors import BudgetError, DomainError
from .words import Word, descents, find_factor

KINDS = ("ballot", "odd")

# Desk-scale enumeration budgets; larger n fails fast instead of running unbounded.
MAX_ENUM_N = {"ballot": 10, "odd": 11}
# Checks that need full member lists keep them in memory only up to this size.
MAX_MEMBER_N = 9


def _check_kind(kind: str) -> str:
    if kind not in KINDS:
        raise DomainError(f"kind must be one of {KINDS}, got {kind!r}")
    return kind


def _check_budget(kind: str, n: int, limit: int | None = None) -> None:
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    cap = MAX_ENUM_N[kind] if limit is None else limit
    if n > cap:
        raise BudgetError(f"exhaustive {kind} enumeration is budgeted up to n={cap}, got n={n}")


def double_factorial(k: int) -> int:
    """k!! with the conventions (-1)!! = 0!! = 1."""
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def ballot_count_closed(n: int) -> int:
    """Closed form for the number of ballot permutations of [n]."""
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    if n % 2 == 0:
        return double_factorial(n - 1) ** 2
    return double_factorial(n) * double_factorial(n - 2)


def enumerate_ballot(n: int):
    """Yield the ballot permutations of [n] once each, in lexicographic order.

    Backtracking over one-line prefixes, pruned as soon as a prefix height
    would go negative.
    """
    _check_budget("ballot", n)
    prefix: list[int] = []

    def rec(h, avail):
        if not avail:
            yield tuple(prefix)
            return
        if prefix:
            last = prefix[-1]
            for idx, x in enumerate(avail):
                nh = h + 1 if x > last else h - 1
                if nh < 0:
                    continue
                prefix.append(x)
                yield from rec(nh, avail[:idx] + avail[idx + 1:])
                prefix.pop()
        else:
            for idx, x in enumerate(avail):
                prefix.append(x)
                yield from rec(0, avail[:idx] + avail[idx + 1:])
                prefix.pop()

    yield from rec(0, tuple(range(1, n + 1)))


def enumerate_odd_order(n: int):
    """Yield the odd order permutations of [n] once each, as canonical decompositions.

    Cycles are built smallest available letter first; closing a cycle is
    offered before every extension, so the stream is lexicographic on the
    canonical cycle encoding.
    """
    _check_budget("odd", n)
    cycles: list[tuple[int, ...]] = []
    cyc: list[int] = []

    def rec(unused):
        if not cyc:
            if not unused:
                yield tuple(cycles)
                return
            cyc.append(unused[0])
            yield from rec(unused[1:])
            cyc.pop()
            return
        if len(cyc) % 2 == 1:
            cycles.append(tuple(cyc))
            saved = cyc[:]
            cyc.clear()
            yield from rec(unused)
            cyc.extend(saved)
            cycles.pop()
        for idx, x in enumerate(unused):
            cyc.append(x)
            yield from rec(unused[:idx] + unused[idx + 1:])
            cyc.pop()

    yield from rec(tuple(range(1, n + 1)))


def ballot_cell(p: Word) -> tuple[int, tuple[int, int] | None]:
    """(descents, neighbors of n) for a ballot permutation; None when n is last."""
    n = len(p)
    pos = p.index(n)
    nb = None if pos == n - 1 else (p[pos - 1], p[pos + 1])
    return descents(p), nb


def odd_cell(cycles: CycleDecomposition) -> tuple[int, tuple[int, int] | None]:
    """(cyclic weight, cyclic neighbors of n) for a decomposition; None when n is fixed."""
    return perm_weight(cycles), max_letter_neighbors(cycles)


_CELL_FN = {"ballot": ballot_cell, "odd": odd_cell}
_STREAM_FN = {"ballot": enumerate_ballot, "odd": enumerate_odd_order}


@dataclass(frozen=True)
class CountTable:
    """Full (d, i, j) classification of one kind at one n.

    ``totals[d]`` counts all members with statistic d; ``cells[d][i-1][j-1]``
    counts those whose largest letter has neighbors (i, j).  Counts are
    immutable mathematical facts and never invalidated.
    """

    kind: str
    n: int
    totals: tuple[int, ...]
    cells: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def d_max(self) -> int:
        return (self.n - 1) // 2

    @property
    def grand_total(self) -> int:
        return sum(self.totals)

    def total(self, d: int | None = None) -> int:
        if d is None:
            return self.grand_total
        if d < 0 or d > self.d_max:
            return 0
        return self.totals[d]

    def cell(self, d: int | None, i: int, j: int) -> int:
        if not (1 <= i <= self.n - 1 and 1 <= j <= self.n - 1 and i != j):
            raise DomainError(f"cell letters must satisfy 1 <= i != j <= {self.n - 1}, got ({i}, {j})")
        if d is None:
            return sum(layer[i - 1][j - 1] for layer in self.cells)
        if d < 0 or d > self.d_max:
            return 0
        return self.cells[d][i - 1][j - 1]


def _fill_table(kind: str, n: int) -> CountTable:
    d_max = (n - 1) // 2
    totals = [0] * (d_max + 1)
    cells = [[[0] * (n - 1) for _ in range(n - 1)] for _ in range(d_max + 1)]
    cell_fn = _CELL_FN[kind]
    for member in _STREAM_FN[kind](n):
        d, nb = cell_fn(member)
        totals[d] += 1
        if nb is not None:
            cells[d][nb[0] - 1][nb[1] - 1] += 1
    frozen = tuple(tuple(tuple(row) for row in layer) for layer in cells)
    return CountTable(kind=kind, n=n, totals=tuple(totals), cells=frozen)


_TABLES: dict[tuple[str, int], CountTable] = {}


def count_table(kind: str, n: int, store=None) -> CountTable:
    """Memoized count table; optionally backed by an on-disk store (load/save)."""
    _check_kind(kind)
    _check_budget(kind, n)
    key = (kind, n)
    table = _TABLES.get(key)
    if table is not None:
        return table
    if store is not None:
        table = store.load(kind, n)
        if table is not None:
            _TABLES[key] = table
            return table
    table = _fill_table(kind, n)
    _TABLES[key] = table
    if store is not None:
        store.save(table)
    return table


@dataclass(frozen=True)
class CountKey:
    """Query key for refined counts: n, optional statistic d, optional letters (i, j)."""

    n: int
    d: int | None = None
    i: int | None = None
    j: int | None = None

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"n must be at least 1, got {self.n}")
        if self.d is not None and not 0 <= self.d <= (self.n - 1) // 2:
            raise DomainError(f"d must satisfy 0 <= d <= {(self.n - 1) // 2}, got {self.d}")
        if (self.i is None) != (self.j is None):
            raise DomainError("letters i and j must be given together")
        if self.i is not None:
            if not (1 <= self.i <= self.n - 1 and 1 <= self.j <= self.n - 1):
                raise DomainError(f"letters must lie in [1, {self.n - 1}], got ({self.i}, {self.j})")
            if self.i == self.j:
                raise DomainError("letters i and j must differ")


def count(kind: str, key: CountKey, store=None) -> int:
    """Refined count for ``key``: total, by statistic, by neighbor cell, or both."""
    table = count_table(_check_kind(kind), key.n, store=store)
    if key.i is None:
        return table.total(key.d)
    return table.cell(key.d, key.i, key.j)


@dataclass(frozen=True)
class CountMatrix:
    """(n-1) x (n-1) matrix of neighbor-cell counts, zero on the diagonal."""

    kind: str
    n: int
    d: int | None
    entries: tuple[tuple[int, ...], ...]

    def to_text(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.entries)

    def to_json_obj(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "d": self.d,
            "entries": [list(row) for row in self.entries],
        }

    def to_csv(self) -> str:
        header = "i\\j," + ",".join(str(j) for j in range(1, self.n))
        lines = [header]
        for i, row in enumerate(self.entries, start=1):
            lines.append(f"{i}," + ",".join(str(v) for v in row))
        return "\n".join(lines)


def build_matrix(kind: str, n: int, d: int | None = None, store=None) -> CountMatrix:
    """Count matrix for one kind at one n; d=None sums over all statistics."""
    if n < 3:
        raise DomainError(f"count matrices need n >= 3, got {n}")
    if d is not None and not 0 <= d <= (n - 1) // 2:
        raise DomainError(f"d must satisfy 0 <= d <= {(n - 1) // 2}, got {d}")
    table = count_table(_check_kind(kind), n, store=store)
    entries = tuple(
        tuple(0 if i == j else table.cell(d, i, j) for j in range(1, n))
        for i in range(1, n)
    )
    return CountMatrix(kind=kind, n=n, d=d, entries=entries)


_WORD_PAIRS: dict[tuple[int, Word, Word], tuple[int, ...]] = {}


def count_word_pair(n: int, d: int, u, v) -> int:
    """Ballot permutations of [n] with statistic d containing the factor u n v."""
    u, v = tuple(u), tuple(v)
    if not u or not v:
        raise DomainError("word-pair counts need nonempty words on both sides")
    if set(u) & set(v):
        raise DomainError(f"word pair letters overlap: {u} and {v}")
    if n in u or n in v:
        raise DomainError(f"word pair letters must not contain n={n}")
    if len(u) + len(v) + 1 > n:
        return 0
    if d < 0 or d > (n - 1) // 2:
        return 0
    key = (n, u, v)
    vector = _WORD_PAIRS.get(key)
    if vector is None:
        needle = u + (n,) + v
        counts = [0] * ((n - 1) // 2 + 1)
        for p in enumerate_ballot(n):
            if find_factor(p, needle) is not None:
                counts[descents(p)] += 1
        vector = tuple(counts)
        _WORD_PAIRS[key] = vector
    return vector[d]


class MemberIndex:
    """Member lists of one kind at one n, classified by (d, i, j).

    ``by_d`` maps each statistic to all members; ``by_cell`` maps (d, i, j)
    to the members whose largest letter has neighbors (i, j); ``unanchored``
    holds the members whose largest letter is last (ballot) or fixed (odd).
    """

    def __init__(self, kind: str, n: int):
        self.kind = kind
        self.n = n
        by_d: dict[int, list] = {}
        by_cell: dict[tuple[int, int, int], list] = {}
        unanchored: dict[int, list] = {}
        cell_fn = _CELL_FN[kind]
        for member in _STREAM_FN[kind](n):
            d, nb = cell_fn(member)
            by_d.setdefault(d, []).append(member)
            if nb is None:
                unanchored.setdefault(d, []).append(member)
            else:
                by_cell.setdefault((d, nb[0], nb[1]), []).append(member)
        self.by_d = {d: tuple(ms) for d, ms in by_d.items()}
        self.by_cell = {k: tuple(ms) for k, ms in by_cell.items()}
        self.unanchored = {d: tuple(ms) for d, ms in unanchored.items()}

    def stat_class(self, d: int):
        return self.by_d.get(d, ())

    def cell(self, d: int, i: int, j: int):
        return self.by_cell.get((d, i, j), ())

    def cell_union(self, i: int, j: int):
        """All members containing the factor i n j, any statistic."""
        out = []
        for d in range((self.n - 1) // 2 + 1):
            out.extend(self.by_cell.get((d, i, j), ()))
        return tuple(out)


_INDEXES: dict[tuple[str, int], MemberIndex] = {}


def member_index(kind: str, n: int) -> MemberIndex:
    _check_kind(kind)
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    if n > MAX_MEMBER_N:
        raise BudgetError(f"member lists are budgeted up to n={MAX_MEMBER_N}, got n={n}")
    key = (kind, n)
    index = _INDEXES.get(key)
    if index is None:
        index = MemberIndex(kind, n)
        _INDEXES[key] = index
    return index


def clear_memo() -> None:
    """Drop all in-memory tables, indexes, and word-pair vectors (mainly for tests)."""
    _TABLES.clear()
    _INDEXES.clear()
    _WORD_PAIRS.clear()
