"""Normalizing 123-avoiding representants to at most two copies per letter."""

from __future__ import annotations

from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass, field

from .graphs import Relabeling
from .words import AvoidanceTracker, Word, word_to_graph

RULES = ("isolated-vertex", "isolated-edge", "pendant-subcase-1", "pendant-subcase-2", "swap")

_T123 = AvoidanceTracker((1, 2, 3))


class ReductionError(ValueError):
    pass


@dataclass(frozen=True)
class Step:
    rule: str
    letter: int
    before: Word
    after: Word
    relabeling: Relabeling

    def to_json(self) -> dict:
        return {
            "rule": self.rule,
            "letter": self.letter,
            "before": list(self.before),
            "after": list(self.after),
            "relabeling": self.relabeling.to_json(),
        }


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[Step, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.steps)

    def to_json(self) -> list:
        return [s.to_json() for s in self.steps]


def swap_adjacent(w: Sequence[int], i: int) -> Word:
    """Exchange positions ``i`` and ``i+1`` (1-based) of a 123-avoiding word.

    Requires an ascent ``w_i < w_{i+1}`` there; the result is again
    123-avoiding. Whether the represented graph survives is the caller's
    concern.
    """
    w = tuple(w)
    if not 1 <= i < len(w):
        raise ValueError(f"position {i} has no right neighbour in a word of length {len(w)}")
    a, b = w[i - 1], w[i]
    if not a < b:
        raise ValueError(f"positions {i},{i + 1} hold {a},{b}; need an ascent")
    if not _T123.avoids(w):
        raise ValueError("word contains 123")
    out = w[: i - 1] + (b, a) + w[i + 1:]
    assert _T123.avoids(out)
    return out


def _compact_to_top(w: Word, top: Sequence[int]) -> tuple[Word, Relabeling]:
    """Relabel so the letters in ``top`` (lowest first) take the largest
    values; all other letters keep their relative order."""
    n = max(w)
    rest = [c for c in range(1, n + 1) if c not in top]
    mapping = {c: i + 1 for i, c in enumerate(rest)}
    for j, c in enumerate(top):
        mapping[c] = len(rest) + j + 1
    r = Relabeling(mapping[c] for c in range(1, n + 1))
    return r.apply_word(w), r


def _positions(w: Sequence[int], c: int) -> list[int]:
    return [i for i, v in enumerate(w) if v == c]


def _pendant_steps(w: Word, x: int, a: int, neighbors_of_a: list[int]) -> list[tuple[str, Word]]:
    """Case x pendant on a, a of degree >= 2, x three times.

    Returns the intermediate words, one per step, as (rule, word).
    """
    px = _positions(w, x)
    pa = _positions(w, a)
    if len(px) != 3:
        raise ReductionError(f"pendant letter {x} occurs {len(px)} times; at most 3 possible")
    if len(pa) != 2 or not (px[0] < pa[0] < px[1] < pa[1] < px[2]):
        raise ReductionError(f"{x} and {a} do not interleave as x a x a x")
    x1, x2, x3 = px
    a1, a2 = pa
    seg3 = w[a1 + 1: x2]
    seg4 = w[x2 + 1: a2]
    if seg3 and seg4:
        raise AssertionError("segments between a1,x2 and x2,a2 both nonempty in a 123-avoiding word")
    others = [b for b in neighbors_of_a if b != x]
    steps: list[tuple[str, Word]] = []
    if seg3:
        bs = [b for b in others if b in seg3]
        if not (a < x and bs and all(b > x for b in bs)):
            raise AssertionError("subcase 1 order a < x < b violated")
        # slide x3 left past the tail segment (all letters there are < a < x)
        cur = w
        pos = x3
        while cur[pos - 1] != a:
            cur = swap_adjacent(cur, pos)  # 1-based pos points at the letter before x
            pos -= 1
            steps.append(("swap", cur))
        cur = cur[:x1] + cur[x1 + 1:]
        steps.append(("pendant-subcase-1", cur))
    elif seg4:
        bs = [b for b in others if b in seg4]
        if not (x < a and bs and all(b < x for b in bs)):
            raise AssertionError("subcase 2 order b < x < a violated")
        cur = w
        pos = x1
        # slide x1 right past the head segment (all letters there are > x)
        while cur[pos + 1] != a:
            cur = swap_adjacent(cur, pos + 1)
            pos += 1
            steps.append(("swap", cur))
        cur = cur[:x3] + cur[x3 + 1:]
        steps.append(("pendant-subcase-2", cur))
    else:
        raise AssertionError(f"no other neighbour of {a} between its copies")
    return steps


def reduce_letter_steps(w: Sequence[int], x: int) -> list[Step]:
    """All elementary steps that bring letter ``x`` down to two copies."""
    w = tuple(w)
    if not _T123.avoids(w):
        raise ReductionError("word contains 123")
    count = w.count(x)
    if count <= 2:
        raise ReductionError(f"letter {x} occurs {count} times; nothing to reduce")
    g = word_to_graph(w)
    n = g.n
    ident = Relabeling.identity(n)
    deg = g.degree(x)
    if deg >= 2:
        raise ReductionError(
            f"letter {x} has degree {deg} but occurs {count} times; "
            "no 123-avoiding representant allows that"
        )
    if deg == 0:
        rest = tuple(c for c in w if c != x)
        rest, r = _compact_to_top(rest + (x,), [x])
        rest = rest[:-1]
        xn = r[x]
        return [Step("isolated-vertex", x, w, (xn, xn) + rest, r)]
    a = g.neighbors(x)[0]
    if g.degree(a) == 1:
        rest = tuple(c for c in w if c != x and c != a)
        relabeled, r = _compact_to_top(rest + (a, x), [a, x])
        rest = relabeled[:-2]
        xn, an = r[x], r[a]
        return [Step("isolated-edge", x, w, (xn, an, xn, an) + rest, r)]
    steps = []
    prev = w
    for rule, cur in _pendant_steps(w, x, a, g.neighbors(a)):
        steps.append(Step(rule, x, prev, cur, ident))
        prev = cur
    return steps


def reduce_letter(w: Sequence[int], x: int) -> tuple[Word, Relabeling]:
    steps = reduce_letter_steps(w, x)
    r = Relabeling.identity(max(w))
    for s in steps:
        r = r.then(s.relabeling)
    return steps[-1].after, r


def normalize(w: Sequence[int]) -> tuple[Word, Relabeling, ReductionTrace]:
    """Reduce until every letter occurs at most twice.

    Letters are handled in decreasing occurrence count, smaller letter first
    on ties. The returned relabeling maps the input's vertices to the
    output's: ``word_to_graph(out) == relabel(word_to_graph(w), r)``.
    """
    w = tuple(w)
    if not _T123.avoids(w):
        raise ReductionError("word contains 123")
    n = max(w) if w else 0
    total = Relabeling.identity(n)
    steps: list[Step] = []
    cur = w
    while True:
        counts = Counter(cur)
        heavy = sorted((c for c in counts if counts[c] > 2), key=lambda c: (-counts[c], c))
        if not heavy:
            break
        new_steps = reduce_letter_steps(cur, heavy[0])
        for s in new_steps:
            total = total.then(s.relabeling)
        steps += new_steps
        cur = new_steps[-1].after
    return cur, total, ReductionTrace(tuple(steps))
