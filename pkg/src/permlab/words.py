"""Words over distinct positive integers and their descent statistics.

A word is a tuple of pairwise distinct positive integers; the empty tuple is
the empty word.  A one-line permutation of [n] is a word whose letter set is
exactly {1, ..., n}.  An adjacent pair (a, b) is an ascent when a < b and a
descent when a > b; the height of a word is ascents minus descents, and a
word is ballot when every prefix has nonnegative height.
"""

from __future__ import annotations

from .errors import DomainError

Word = tuple[int, ...]
Signature = tuple[int, ...]


def check_word(letters) -> Word:
    """Validate and normalize a sequence of distinct positive integers."""
    w = tuple(letters)
    for x in w:
        if not isinstance(x, int) or x < 1:
            raise DomainError(f"letters must be positive integers, got {x!r}")
    if len(set(w)) != len(w):
        raise DomainError(f"letters must be pairwise distinct, got {w}")
    return w


def check_permutation(letters) -> Word:
    """Validate a one-line permutation of [n]."""
    p = tuple(letters)
    n = len(p)
    if n == 0 or sorted(p) != list(range(1, n + 1)):
        raise DomainError(f"not a one-line permutation of [{n}]: {p}")
    return p


def ascent_descent(w: Word) -> tuple[int, int]:
    """Number of (ascents, descents) over the adjacent pairs of ``w``."""
    asc = des = 0
    for a, b in zip(w, w[1:]):
        if a < b:
            asc += 1
        else:
            des += 1
    return asc, des


def descents(w: Word) -> int:
    return ascent_descent(w)[1]


def height(w: Word) -> int:
    """Ascents minus descents; the empty word has height 0."""
    asc, des = ascent_descent(w)
    return asc - des


def prefix_heights(w: Word) -> tuple[int, ...]:
    """Heights of the nonempty prefixes of ``w``, in order."""
    out = []
    h = 0
    for k in range(len(w)):
        if k:
            h += 1 if w[k - 1] < w[k] else -1
        out.append(h)
    return tuple(out)


def is_ballot(w) -> bool:
    """True iff every prefix of ``w`` has nonnegative height (true for the empty word)."""
    h = 0
    for k in range(1, len(w)):
        h += 1 if w[k - 1] < w[k] else -1
        if h < 0:
            return False
    return True


def reversal(w: Word) -> Word:
    """Letters in reverse order; an involution, fixing the empty word."""
    return tuple(reversed(w))


def signature(w: Word) -> Signature:
    """The +-1 sequence with -1 at each descent and +1 at each ascent."""
    if not w:
        raise DomainError("signature needs a nonempty word")
    return tuple(1 if a < b else -1 for a, b in zip(w, w[1:]))


def standard_form(w: Word) -> Word:
    """The unique relabeling of ``w`` onto {1, ..., len(w)} with the same relative order."""
    if not w:
        raise DomainError("standard form of the empty word is undefined")
    rank = {letter: k for k, letter in enumerate(sorted(w), start=1)}
    return tuple(rank[letter] for letter in w)


def find_factor(host: Word, needle: Word) -> int | None:
    """1-based start of the leftmost occurrence of ``needle`` as a contiguous factor, or None."""
    if not needle:
        raise DomainError("factor search needs a nonempty word")
    k = len(needle)
    for s in range(len(host) - k + 1):
        if host[s:s + k] == needle:
            return s + 1
    return None


def find_cyclic_factor(host: Word, needle: Word) -> int | None:
    """1-based start of ``needle`` read cyclically around ``host``, or None.

    The host is treated as a cyclic word: matches may wrap past the end.  A
    needle longer than the host never occurs.
    """
    if not needle:
        raise DomainError("factor search needs a nonempty word")
    k, t = len(host), len(needle)
    if t > k:
        return None
    doubled = host + host
    for s in range(k):
        if doubled[s:s + t] == needle:
            return s + 1
    return None


def locate_factor(host: Word, needle: Word, cyclic: bool = False) -> int | None:
    """Factor search in a word (cyclic=False) or around a cyclic word (cyclic=True)."""
    return find_cyclic_factor(host, needle) if cyclic else find_factor(host, needle)


def adjacent_in(host: Word, x: int, y: int, cyclic: bool = False) -> bool:
    """Whether the letters x and y occupy neighboring positions of ``host``."""
    try:
        px, py = host.index(x), host.index(y)
    except ValueError:
        return False
    diff = abs(px - py)
    return diff == 1 or (cyclic and len(host) > 1 and diff == len(host) - 1)


def swap_letters(w: Word, a: int, b: int) -> Word:
    """Exchange the letters ``a`` and ``b`` wherever they occur in ``w``."""
    return tuple(b if x == a else a if x == b else x for x in w)


def format_word(w: Word) -> str:
    """One-line text form: space-separated letters, e.g. ``3 8 2 5 4 9 6 7 1``."""
    return " ".join(str(x) for x in w)


def parse_word(text: str) -> Word:
    """Parse whitespace- or comma-separated letters into a word."""
    parts = text.replace(",", " ").split()
    try:
        letters = [int(part) for part in parts]
    except ValueError:
        raise DomainError(f"cannot parse {text!r} as a word") from None
    return check_word(letters)
