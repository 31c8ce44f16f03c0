"""Words over positive-integer alphabets, permutation patterns and alternation.

A word is a plain ``tuple`` of positive ints. Letters are compared by integer
order; inputs written with named letters (``abcbd``) are mapped a->1, b->2, ...
by :func:`parse_word`.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence

from .graphs import Graph

Word = tuple[int, ...]

__all__ = [
    "Word", "Pattern", "parse_word", "format_word", "as_word", "alphabet",
    "occurrences", "is_k_uniform", "alternates", "naive_alternation_oracle",
    "contains_pattern", "contains_pattern_quadratic", "avoids", "word_to_graph",
    "AvoidanceTracker",
]


def as_word(letters: Iterable[int]) -> Word:
    """Validate and freeze a letter sequence."""
    w = tuple(int(c) for c in letters)
    for c in w:
        if c < 1:
            raise ValueError(f"letters must be positive integers, got {c}")
    return w


def parse_word(text: str) -> Word:
    """Parse ``"32414"``, ``"10 3 10 2"`` or ``"abcbd"``.

    Whitespace-separated input is read as one integer per token; otherwise
    each character is one letter. Lowercase letters map a->1, b->2, ...
    """
    text = text.strip()
    if not text:
        return ()
    if any(ch.isspace() for ch in text):
        tokens = text.split()
    else:
        tokens = list(text)
    letters = []
    for tok in tokens:
        if tok.isdigit():
            letters.append(int(tok))
        elif len(tok) == 1 and "a" <= tok <= "z":
            letters.append(ord(tok) - ord("a") + 1)
        else:
            raise ValueError(f"cannot parse letter {tok!r} in word {text!r}")
    return as_word(letters)


def format_word(w: Sequence[int]) -> str:
    if all(c <= 9 for c in w):
        return "".join(str(c) for c in w)
    return " ".join(str(c) for c in w)


def alphabet(w: Sequence[int]) -> frozenset[int]:
    return frozenset(w)


def occurrences(w: Sequence[int]) -> Counter:
    return Counter(w)


def is_k_uniform(w: Sequence[int], k: int) -> bool:
    if k < 1:
        raise ValueError("k must be positive")
    return all(cnt == k for cnt in Counter(w).values())


class Pattern(tuple):
    """A permutation of ``1..k`` used as a forbidden pattern."""

    def __new__(cls, perm: Iterable[int]):
        perm = tuple(int(v) for v in perm)
        if not perm or sorted(perm) != list(range(1, len(perm) + 1)):
            raise ValueError(f"pattern must be a permutation of 1..k, got {perm}")
        return super().__new__(cls, perm)

    @classmethod
    def parse(cls, text: str) -> "Pattern":
        return cls(parse_word(text))

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Pattern({format_word(self)!r})"


def _check_pair(w: Sequence[int], x: int, y: int) -> None:
    if x == y:
        raise ValueError("alternation is only defined for two distinct letters")
    present = set(w)
    missing = [c for c in (x, y) if c not in present]
    if missing:
        raise ValueError(f"letters {missing} do not occur in the word")


def alternates(w: Sequence[int], x: int, y: int) -> bool:
    """True iff ``x`` and ``y`` alternate in ``w``.

    Works on the two occurrence-position lists: they must interleave
    strictly, with counts differing by at most one.
    """
    _check_pair(w, x, y)
    px = [i for i, c in enumerate(w) if c == x]
    py = [i for i, c in enumerate(w) if c == y]
    if len(px) < len(py) or (len(px) == len(py) and py[0] < px[0]):
        px, py = py, px
    if len(px) - len(py) > 1:
        return False
    # px starts first; merged order must be px[0] < py[0] < px[1] < py[1] < ...
    for i, pos in enumerate(py):
        if not px[i] < pos:
            return False
        if i + 1 < len(px) and not pos < px[i + 1]:
            return False
    return True


def naive_alternation_oracle(w: Sequence[int], x: int, y: int) -> bool:
    _check_pair(w, x, y)
    restricted = [c for c in w if c == x or c == y]
    for left, right in zip(restricted, restricted[1:]):
        if left == right:
            return False
    return True


def _order_type(values: Sequence[int]) -> tuple[int, ...] | None:
    """Rank pattern of distinct values, or None if some value repeats."""
    if len(set(values)) != len(values):
        return None
    ranks = sorted(values)
    return tuple(ranks.index(v) + 1 for v in values)


def contains_pattern(w: Sequence[int], p: Sequence[int]) -> bool:
    """Index search with prefix pruning: extend only order-consistent prefixes."""
    p = Pattern(p)
    k = len(p)
    n = len(w)
    if n < k:
        return False
    chosen: list[int] = []

    def consistent(value: int) -> bool:
        j = len(chosen)
        for i, v in enumerate(chosen):
            if v == value:
                return False
            if (v < value) != (p[i] < p[j]):
                return False
        return True

    def extend(start: int) -> bool:
        j = len(chosen)
        if j == k:
            return True
        for i in range(start, n - (k - j) + 1):
            if consistent(w[i]):
                chosen.append(w[i])
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    return extend(0)


def contains_pattern_quadratic(w: Sequence[int], p: Sequence[int]) -> bool:
    """Reference check for length-3 patterns: try every middle index."""
    p = Pattern(p)
    if len(p) != 3:
        return contains_pattern(w, p)
    n = len(w)
    for j in range(1, n - 1):
        mid = w[j]
        for i in range(j):
            for k in range(j + 1, n):
                if _order_type((w[i], mid, w[k])) == tuple(p):
                    return True
    return False


def avoids(w: Sequence[int], p: Sequence[int]) -> bool:
    return not contains_pattern(w, p)


def alternation_masks(w: Sequence[int], n: int) -> list[int]:
    """For each letter 1..n, bitmask of letters it fails to alternate with.

    Single left-to-right scan: a repeat of ``c`` breaks alternation with
    every letter not seen since the previous ``c``.
    """
    full = (1 << (n + 1)) - 2
    broken = [0] * (n + 1)
    since = [0] * (n + 1)
    seen = [False] * (n + 1)
    for c in w:
        bit = 1 << c
        if seen[c]:
            newly = full & ~since[c] & ~bit & ~broken[c]
            if newly:
                broken[c] |= newly
                m = newly
                while m:
                    low = m & -m
                    broken[low.bit_length() - 1] |= bit
                    m ^= low
        seen[c] = True
        since[c] = 0
        for y in range(1, n + 1):
            since[y] |= bit
    return broken


def word_to_graph(w: Sequence[int]) -> Graph:
    if not w:
        raise ValueError("the empty word represents no graph")
    letters = set(w)
    n = max(letters)
    if letters != set(range(1, n + 1)):
        gaps = sorted(set(range(1, n + 1)) - letters)
        raise ValueError(f"alphabet must be 1..{n}; missing letters {gaps}")
    broken = alternation_masks(w, n)
    edges = []
    for x in range(1, n + 1):
        for y in range(x + 1, n + 1):
            if not broken[x] >> y & 1:
                edges.append((x, y))
    return Graph(n, edges)


class AvoidanceTracker:
    """Incremental pattern-avoidance test for left-to-right word building.

    ``extend(state, c)`` returns the state after appending ``c`` or ``None``
    if ``c`` completes an occurrence of the pattern. States are immutable.

    * 123: state is (min prefix value, min value that tops an increasing
      pair); ``c`` completes 123 iff it exceeds the latter.
    * other length-3 patterns: state is (seen-values mask, forbidden-values
      mask); each new letter forbids the values that would finish the
      pattern with it as middle element.
    * longer patterns: the state is the prefix itself and each extension
      is checked for an occurrence ending at the new letter.
    """

    _INF = 1 << 30

    def __init__(self, pattern: Sequence[int], max_letter: int = 30):
        self.pattern = Pattern(pattern)
        self.max_letter = max_letter
        k = len(self.pattern)
        if tuple(self.pattern) == (1, 2, 3):
            self.kind = "123"
        elif k == 3:
            self.kind = "len3"
        elif k == 1:
            self.kind = "trivial"
        else:
            self.kind = "general"
        if self.kind == "len3":
            self._masks = self._forbid_table(max_letter)

    def _forbid_table(self, m: int) -> list[list[int]]:
        # table[a][b]: values c with (a, b, c) order-isomorphic to the pattern
        p = tuple(self.pattern)
        table = [[0] * (m + 1) for _ in range(m + 1)]
        for a in range(1, m + 1):
            for b in range(1, m + 1):
                if a == b:
                    continue
                mask = 0
                for c in range(1, m + 1):
                    if c != a and c != b and _order_type((a, b, c)) == p:
                        mask |= 1 << c
                table[a][b] = mask
        return table

    def initial(self):
        if self.kind == "123":
            return (self._INF, self._INF)
        if self.kind == "len3":
            return (0, 0)
        return ()

    def extend(self, state, c: int):
        kind = self.kind
        if kind == "123":
            low, mid = state
            if c > mid:
                return None
            if c > low:
                if c < mid:
                    mid = c
            elif c < low:
                low = c
            return (low, mid)
        if kind == "len3":
            seen, forbidden = state
            if forbidden >> c & 1:
                return None
            row = self._masks
            m = seen
            while m:
                lowbit = m & -m
                forbidden |= row[lowbit.bit_length() - 1][c]
                m ^= lowbit
            return (seen | (1 << c), forbidden)
        if kind == "trivial":
            return None
        w = state + (c,)
        if _ends_with_occurrence(w, self.pattern):
            return None
        return w

    def avoids(self, w: Iterable[int]) -> bool:
        state = self.initial()
        for c in w:
            state = self.extend(state, c)
            if state is None:
                return False
        return True


def _ends_with_occurrence(w: Sequence[int], p: Sequence[int]) -> bool:
    """Occurrence of ``p`` whose last index is the last letter of ``w``."""
    k = len(p)
    if len(w) < k:
        return False
    last = w[-1]
    target = tuple(p)
    chosen: list[int] = []

    def consistent(value: int) -> bool:
        j = len(chosen)
        for i, v in enumerate(chosen):
            if v == value or (v < value) != (target[i] < target[j]):
                return False
        # the final letter must also fit
        if value == last or (value < last) != (target[j] < target[k - 1]):
            return False
        return True

    def extend(start: int) -> bool:
        j = len(chosen)
        if j == k - 1:
            return True
        for i in range(start, len(w) - 1 - (k - 1 - j) + 1):
            if consistent(w[i]):
                chosen.append(w[i])
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    return extend(0)
