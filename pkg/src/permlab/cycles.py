"""Cycle decompositions in canonical form and their cyclic weight.

A cycle is stored rotated so that its minimum letter comes first; a
decomposition is a tuple of such cycles sorted by minimum letter, whose
letter sets partition {1, ..., n}.  Cyclic descents count the pairs
c[t] > c[t+1] read around the cycle including the wrap-around pair, and the
weight of a cycle is min(cyclic descents, cyclic ascents).
"""

from __future__ import annotations

import re

from .errors import DomainError
from .words import Word, find_cyclic_factor

Cycle = tuple[int, ...]
CycleDecomposition = tuple[Cycle, ...]


def rotate_min_first(cycle) -> Cycle:
    c = tuple(cycle)
    if not c:
        raise DomainError("empty cycle")
    k = c.index(min(c))
    return c[k:] + c[:k]


def canonicalize_cycles(raw) -> CycleDecomposition:
    """Normalize a list of cycle words: min-first rotations, sorted by minimum.

    The cycles' letter sets must partition {1, ..., n}; overlapping or
    incomplete letter sets are rejected.  Two inputs describing the same
    permutation yield identical output.
    """
    cycles = [rotate_min_first(c) for c in raw]
    letters = [x for c in cycles for x in c]
    if sorted(letters) != list(range(1, len(letters) + 1)):
        raise DomainError(f"cycles must partition {{1, ..., n}}, got letters {sorted(letters)}")
    return tuple(sorted(cycles, key=lambda c: c[0]))


def decomposition_size(cycles: CycleDecomposition) -> int:
    return sum(len(c) for c in cycles)


def cycles_from_one_line(p: Word) -> CycleDecomposition:
    """Cycle decomposition of a one-line permutation read as the map i -> p[i-1]."""
    n = len(p)
    if sorted(p) != list(range(1, n + 1)):
        raise DomainError(f"not a one-line permutation: {p}")
    seen = [False] * (n + 1)
    cycles = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = p[x - 1]
        cycles.append(tuple(cyc))
    return tuple(cycles)


def one_line_from_cycles(cycles: CycleDecomposition) -> Word:
    """One-line form of the permutation mapping each cycle letter to its successor."""
    cycles = canonicalize_cycles(cycles)
    n = decomposition_size(cycles)
    image = [0] * (n + 1)
    for c in cycles:
        for t, x in enumerate(c):
            image[x] = c[(t + 1) % len(c)]
    return tuple(image[1:])


def cycle_stats(c: Cycle) -> tuple[int, int, int]:
    """(cyclic descents, cyclic ascents, weight) of one cycle.

    A singleton cycle has one cyclic ascent, no descent, weight 0.
    """
    k = len(c)
    if k == 0:
        raise DomainError("empty cycle")
    cdes = sum(1 for t in range(k) if c[t] > c[(t + 1) % k])
    casc = k - cdes
    return cdes, casc, min(cdes, casc)


def cycle_weight(c: Cycle) -> int:
    return cycle_stats(c)[2]


def perm_weight(cycles: CycleDecomposition) -> int:
    """Total cyclic weight: the sum of min(cdes, casc) over all cycles."""
    return sum(cycle_weight(c) for c in cycles)


def reverse_cycles(cycles: CycleDecomposition) -> CycleDecomposition:
    """Reverse every cycle word; exchanges cyclic descents and ascents per cycle."""
    return canonicalize_cycles([tuple(reversed(c)) for c in cycles])


def is_odd_order(cycles: CycleDecomposition) -> bool:
    return all(len(c) % 2 == 1 for c in cycles)


def cycle_containing(cycles: CycleDecomposition, letter: int) -> tuple[int, Cycle]:
    """(index, cycle) of the cycle holding ``letter``."""
    for k, c in enumerate(cycles):
        if letter in c:
            return k, c
    raise DomainError(f"letter {letter} not present in {cycles}")


def max_letter_neighbors(cycles: CycleDecomposition) -> tuple[int, int] | None:
    """Cyclic (predecessor, successor) of the largest letter, or None if it is fixed."""
    n = decomposition_size(cycles)
    _, c = cycle_containing(cycles, n)
    if len(c) == 1:
        return None
    t = c.index(n)
    return c[t - 1], c[(t + 1) % len(c)]


def has_cyclic_factor(cycles: CycleDecomposition, needle: Word) -> bool:
    """Whether ``needle`` occurs contiguously (with wrap-around) inside some cycle."""
    return any(find_cyclic_factor(c, needle) is not None for c in cycles)


def format_cycles(cycles: CycleDecomposition) -> str:
    """Cycle text form: parenthesized groups, e.g. ``(1 6 8 2 10)(3 12 9 11 7 5 4)``."""
    return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycles)


def parse_cycles(text: str) -> CycleDecomposition:
    """Parse parenthesized cycle groups (letters separated by spaces or commas)."""
    stripped = text.strip()
    groups = re.findall(r"\(([^()]*)\)", stripped)
    if not groups or re.sub(r"\(([^()]*)\)|\s", "", stripped):
        raise DomainError(f"cannot parse {text!r} as parenthesized cycles")
    cycles = []
    for group in groups:
        parts = group.replace(",", " ").split()
        try:
            cycles.append(tuple(int(part) for part in parts))
        except ValueError:
            raise DomainError(f"cannot parse cycle ({group}) in {text!r}") from None
    return canonicalize_cycles(cycles)
