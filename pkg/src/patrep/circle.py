"""Chord diagrams from 2-uniform words and a small circle-graph test."""

from __future__ import annotations

import math
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass

from .graphs import Graph, Relabeling
from .search import Certificate, SearchBounds, find_representant
from .words import Word, is_k_uniform, word_to_graph

MAX_CIRCLE_N = 10


class SaturationError(ValueError):
    def __init__(self, letters):
        self.letters = sorted(letters)
        super().__init__(
            f"doubling singleton letters {self.letters} in place changes the graph; "
            "search for a 2-uniform representant instead"
        )


@dataclass(frozen=True)
class ChordDiagram:
    """Chord v joins circle positions ``endpoints[v] = (p, q)``, 1 <= p < q <= 2n."""

    n: int
    endpoints: dict

    def __post_init__(self):
        used = sorted(p for pair in self.endpoints.values() for p in pair)
        if sorted(self.endpoints) != list(range(1, self.n + 1)):
            raise ValueError("chords must be labeled 1..n")
        if used != list(range(1, 2 * self.n + 1)):
            raise ValueError("endpoints must use every position 1..2n exactly once")
        for v, (p, q) in self.endpoints.items():
            if not p < q:
                raise ValueError(f"chord {v} endpoints must be increasing")

    def crosses(self, u: int, v: int) -> bool:
        p, q = self.endpoints[u]
        inside = sum(1 for e in self.endpoints[v] if p < e < q)
        return inside == 1

    def crossing_graph(self) -> Graph:
        return Graph(self.n, [(u, v) for u in range(1, self.n + 1)
                              for v in range(u + 1, self.n + 1) if self.crosses(u, v)])

    def to_json(self) -> dict:
        return {"n": self.n,
                "endpoints": {str(v): list(self.endpoints[v]) for v in sorted(self.endpoints)}}

    @classmethod
    def from_json(cls, data: dict) -> "ChordDiagram":
        return cls(int(data["n"]), {int(v): tuple(pq) for v, pq in data["endpoints"].items()})

    def _point(self, pos: int, radius: float, cx: float, cy: float) -> tuple[float, float]:
        # position 1 at 12 o'clock, proceeding clockwise
        angle = 2 * math.pi * (pos - 1) / (2 * self.n) - math.pi / 2
        return cx + radius * math.cos(angle), cy + radius * math.sin(angle)

    def to_dot(self, name: str = "chords") -> str:
        lines = [f"graph {name} {{", "  layout=neato;", "  node [shape=point];"]
        for pos in range(1, 2 * self.n + 1):
            x, y = self._point(pos, 3.0, 0.0, 0.0)
            lines.append(f'  p{pos} [pos="{x:.3f},{-y:.3f}!"];')
        for pos in range(1, 2 * self.n + 1):
            nxt = pos % (2 * self.n) + 1
            lines.append(f"  p{pos} -- p{nxt} [style=dotted];")
        for v in sorted(self.endpoints):
            p, q = self.endpoints[v]
            lines.append(f'  p{p} -- p{q} [label="{v}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_svg(self, size: int = 320) -> str:
        c = size / 2
        r = size * 0.4
        parts = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
            f'viewBox="0 0 {size} {size}">',
            f'<circle cx="{c}" cy="{c}" r="{r}" fill="none" stroke="black"/>',
        ]
        for v in sorted(self.endpoints):
            (x1, y1), (x2, y2) = (self._point(p, r, c, c) for p in self.endpoints[v])
            parts.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
                         f'stroke="steelblue" stroke-width="2"/>')
        for v in sorted(self.endpoints):
            for p in self.endpoints[v]:
                x, y = self._point(p, r * 1.12, c, c)
                parts.append(f'<text x="{x:.2f}" y="{y:.2f}" font-size="12" '
                             f'text-anchor="middle" dominant-baseline="middle">{v}</text>')
        parts.append("</svg>")
        return "\n".join(parts) + "\n"


def chords_from_word(w: Sequence[int]) -> ChordDiagram:
    """Position i of the circle carries letter w_i; chord v joins v's two positions."""
    w = tuple(w)
    if not w or not is_k_uniform(w, 2):
        raise ValueError("chord diagrams need a 2-uniform word")
    n = max(w)
    if set(w) != set(range(1, n + 1)):
        raise ValueError("alphabet must be 1..n")
    ends: dict[int, list[int]] = {}
    for i, c in enumerate(w, start=1):
        ends.setdefault(c, []).append(i)
    return ChordDiagram(n, {v: tuple(ps) for v, ps in ends.items()})


def word_from_chords(d: ChordDiagram) -> Word:
    w = [0] * (2 * d.n)
    for v, (p, q) in d.endpoints.items():
        w[p - 1] = v
        w[q - 1] = v
    return tuple(w)


def saturate_to_2uniform(w: Sequence[int]) -> Word:
    """Double each once-occurring letter right after itself, if that keeps the graph."""
    w = tuple(w)
    counts = Counter(w)
    if any(c > 2 for c in counts.values()):
        raise ValueError("saturation needs every letter at most twice")
    singles = {c for c, k in counts.items() if k == 1}
    if not singles:
        return w
    out = []
    for c in w:
        out.append(c)
        if c in singles:
            out.append(c)
    out = tuple(out)
    before, after = word_to_graph(w), word_to_graph(out)
    if before != after:
        changed = {v for e in before.edges ^ after.edges for v in e}
        raise SaturationError(changed & singles)
    return out


def to_two_uniform(w: Sequence[int]) -> Word:
    """A 2-uniform word with the same alternation graph as ``w`` (same labels).

    Tries in-place saturation, then falls back to a pattern-free search.
    """
    try:
        return saturate_to_2uniform(w)
    except SaturationError:
        pass
    g = word_to_graph(w)
    cert = find_representant(g, None, uniformity=2, labeled=True)
    if not cert.is_witness:
        raise ValueError("graph has no 2-uniform representant; not a circle graph")
    return cert.word


def is_circle_graph(g: Graph, *, jobs: int = 1, prunes=None) -> Certificate:
    """Decide whether ``g`` is a circle graph by 2-uniform representant search.

    Without a pattern, relabeling cannot change alternation, so the search
    keeps the labels of ``g``.
    """
    if g.n > MAX_CIRCLE_N:
        raise ValueError(f"circle-graph test limited to n <= {MAX_CIRCLE_N}")
    kwargs = {} if prunes is None else {"prunes": prunes}
    comps = g.components()
    if len(comps) == 1:
        return find_representant(g, None, uniformity=2, labeled=True, jobs=jobs, **kwargs)
    # Diagrams of the components drawn one after another never cross, so the
    # union is a circle graph iff every component is; search them separately.
    bounds = SearchBounds.uniform(g.n, 2, "two-uniform-by-definition")
    subs = []
    word: list[int] = []
    for i, comp in enumerate(comps):
        cert = find_representant(g.induced(comp), None, uniformity=2, labeled=True,
                                 jobs=jobs, **kwargs)
        subs.append(cert)
        if not cert.is_witness:
            return Certificate("exhausted", graph=g, pattern=None, uniformity=2, labeled=True,
                               bounds=bounds, complete=True, tag=bounds.tag,
                               enumerated=sum(c.enumerated for c in subs),
                               survived_avoidance=sum(c.survived_avoidance for c in subs),
                               seconds=sum(c.seconds for c in subs),
                               reason=f"component {i} is not a circle graph", components=subs)
        word += [comp[c - 1] for c in cert.word]
    return Certificate("witness", graph=g, pattern=None, uniformity=2, labeled=True,
                       relabeling=Relabeling.identity(g.n), word=tuple(word),
                       bounds=bounds, complete=True, tag=bounds.tag,
                       enumerated=sum(c.enumerated for c in subs),
                       survived_avoidance=sum(c.survived_avoidance for c in subs),
                       seconds=sum(c.seconds for c in subs),
                       reason="component diagrams placed side by side", components=subs)


def diagram_for(cert: Certificate) -> ChordDiagram:
    if not cert.is_witness:
        raise ValueError("no witness to draw")
    return chords_from_word(cert.word)


__all__ = [
    "ChordDiagram", "SaturationError", "chords_from_word", "word_from_chords",
    "saturate_to_2uniform", "to_two_uniform", "is_circle_graph", "diagram_for",
]
