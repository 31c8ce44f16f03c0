"""Small labeled simple graphs on vertices ``1..n``.

Graphs are immutable and hashable; two graphs compare equal iff they have
the same vertex count and the same labeled edge set.
"""

from __future__ import annotations

import json
import random
from collections.abc import Iterable, Sequence
from itertools import permutations, product
from typing import Optional

MAX_ISO_N = 12


class Graph:
    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge {u}-{v} outside 1..{n}")
            norm.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = frozenset(norm)
        adj = [0] * (n + 1)
        for u, v in norm:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._adj = tuple(adj)

    # -- basic queries --

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def adj_mask(self, v: int) -> int:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return [u for u in self.vertices if self._adj[v] >> u & 1]

    def degree(self, v: int) -> int:
        return bin(self._adj[v]).count("1")

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in self.vertices]

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees(), reverse=True))

    def components(self) -> list[list[int]]:
        seen = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            stack = [s]
            seen.add(s)
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in self.neighbors(v):
                    if u not in seen:
                        seen.add(u)
                        stack.append(u)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def is_tree(self) -> bool:
        return self.is_connected() and len(self.edges) == self.n - 1

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph on ``vertices``, relabeled 1..k in the given order."""
        index = {v: i + 1 for i, v in enumerate(vertices)}
        return Graph(len(vertices), [(index[u], index[v]) for u, v in self.edges
                                     if u in index and v in index])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    # -- dunder --

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        es = ",".join(f"{u}{v}" if self.n <= 9 else f"{u}-{v}" for u, v in self.sorted_edges())
        return f"Graph(n={self.n}, edges={{{es}}})"

    # -- serialization --

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        return cls(int(data["n"]), data.get("edges", []))

    def to_text(self) -> str:
        lines = [f"{self.n} {len(self.edges)}"]
        lines += [f"{u} {v}" for u, v in self.sorted_edges()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Graph":
        """Parse either the ``n m`` + edge-lines format or JSON."""
        stripped = text.strip()
        if stripped.startswith("{"):
            return cls.from_json(json.loads(stripped))
        lines = [ln.split() for ln in stripped.splitlines() if ln.strip()
                 and not ln.lstrip().startswith("#")]
        if not lines or len(lines[0]) != 2:
            raise ValueError("graph text must start with a line 'n m'")
        n, m = int(lines[0][0]), int(lines[0][1])
        edges = []
        for parts in lines[1:]:
            if len(parts) != 2:
                raise ValueError(f"bad edge line {' '.join(parts)!r}")
            edges.append((int(parts[0]), int(parts[1])))
        if len(edges) != m:
            raise ValueError(f"header promises {m} edges, found {len(edges)}")
        return cls(n, edges)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {v};" for v in self.vertices]
        lines += [f"  {u} -- {v};" for u, v in self.sorted_edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"


# -- families --

def empty(n: int) -> Graph:
    return Graph(n)


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def star(m: int, center: Optional[int] = None) -> Graph:
    """K_{1,m}; the center defaults to label m+1."""
    if m < 1:
        raise ValueError("star needs m >= 1 leaves")
    n = m + 1
    center = n if center is None else center
    if not 1 <= center <= n:
        raise ValueError(f"center {center} outside 1..{n}")
    return Graph(n, [(center, v) for v in range(1, n + 1) if v != center])


def wheel(k: int) -> Graph:
    """Cycle C_k plus a hub labeled k+1."""
    rim = cycle(k)
    return Graph(k + 1, list(rim.edges) + [(v, k + 1) for v in range(1, k + 1)])


def random_tree(n: int, seed=None) -> Graph:
    """Uniform labeled tree on 1..n from a random Pruefer sequence."""
    if n < 1:
        raise ValueError("tree needs n >= 1")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, [(1, 2)])
    seq = [rng.randint(1, n) for _ in range(n - 2)]
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(1, n + 1) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, v = [x for x in range(1, n + 1) if degree[x] == 1]
    edges.append((u, v))
    return Graph(n, edges)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return Graph(g1.n + g2.n, list(g1.edges) + [(u + shift, v + shift) for u, v in g2.edges])


def disjoint_union_all(graphs: Iterable[Graph]) -> Graph:
    out = Graph(0)
    for g in graphs:
        out = disjoint_union(out, g)
    return out


# -- relabeling --

class Relabeling(tuple):
    """A permutation of ``1..n``; ``r[v]`` is the new label of vertex ``v``.

    Stored 0-padded so that indexing by vertex works directly.
    """

    def __new__(cls, images: Iterable[int]):
        imgs = tuple(int(x) for x in images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"relabeling must be a permutation of 1..n, got {imgs}")
        return super().__new__(cls, (0,) + imgs)

    def __reduce__(self):
        # the stored tuple carries the padding; rebuild from the images
        return (Relabeling, (self.images,))

    @classmethod
    def identity(cls, n: int) -> "Relabeling":
        return cls(range(1, n + 1))

    @classmethod
    def from_mapping(cls, mapping: dict, n: int) -> "Relabeling":
        return cls(mapping.get(v, v) for v in range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self) - 1

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(self[1:])

    def then(self, other: "Relabeling") -> "Relabeling":
        """Apply ``self`` first, then ``other``."""
        if other.n != self.n:
            raise ValueError("relabelings act on different vertex counts")
        return Relabeling(other[self[v]] for v in range(1, self.n + 1))

    def inverse(self) -> "Relabeling":
        inv = [0] * self.n
        for v in range(1, self.n + 1):
            inv[self[v] - 1] = v
        return Relabeling(inv)

    def apply_word(self, w: Sequence[int]) -> tuple[int, ...]:
        return tuple(self[c] for c in w)

    def to_json(self) -> dict:
        return {str(v): self[v] for v in range(1, self.n + 1)}

    def __repr__(self) -> str:
        return f"Relabeling({list(self.images)})"


def relabel(g: Graph, r: Relabeling) -> Graph:
    if r.n != g.n:
        raise ValueError(f"relabeling over {r.n} vertices applied to graph on {g.n}")
    return Graph(g.n, [(r[u], r[v]) for u, v in g.edges])


# -- isomorphism --

def _refined_colors(g: Graph) -> list[int]:
    """Color refinement starting from degrees; returns a stable color per vertex."""
    colors = [0] + [g.degree(v) for v in g.vertices]
    while True:
        sigs = [None] + [
            (colors[v], tuple(sorted(colors[u] for u in g.neighbors(v))))
            for v in g.vertices
        ]
        palette = {s: i for i, s in enumerate(sorted(set(sigs[1:])))}
        new = [0] + [palette[sigs[v]] for v in g.vertices]
        if len(set(new[1:])) == len(set(colors[1:])):
            return new
        colors = new


def _joint_colors(g1: Graph, g2: Graph) -> tuple[list, list]:
    """Refine both graphs with a shared palette so colors are comparable."""
    c1 = [0] + [g1.degree(v) for v in g1.vertices]
    c2 = [0] + [g2.degree(v) for v in g2.vertices]
    while True:
        s1 = [None] + [(c1[v], tuple(sorted(c1[u] for u in g1.neighbors(v)))) for v in g1.vertices]
        s2 = [None] + [(c2[v], tuple(sorted(c2[u] for u in g2.neighbors(v)))) for v in g2.vertices]
        palette = {s: i for i, s in enumerate(sorted(set(s1[1:]) | set(s2[1:])))}
        n1 = [0] + [palette[s1[v]] for v in g1.vertices]
        n2 = [0] + [palette[s2[v]] for v in g2.vertices]
        stable = len(set(n1[1:]) | set(n2[1:])) == len(set(c1[1:]) | set(c2[1:]))
        c1, c2 = n1, n2
        if stable:
            return c1, c2


def find_isomorphism(g1: Graph, g2: Graph, compat=None) -> Optional[Relabeling]:
    """A relabeling ``r`` with ``relabel(g1, r) == g2``, or None.

    Degree sequence prefilter, then backtracking over color-compatible
    assignments (colors from joint refinement). ``compat(v, u)``, when
    given, must hold for every vertex ``v`` of g1 and its image ``u``.
    """
    if max(g1.n, g2.n) > MAX_ISO_N:
        raise ValueError(f"isomorphism test limited to n <= {MAX_ISO_N}")
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return None
    if g1.degree_sequence() != g2.degree_sequence():
        return None
    n = g1.n
    if n == 0:
        return Relabeling(())
    c1, c2 = _joint_colors(g1, g2)
    if sorted(c1[1:]) != sorted(c2[1:]):
        return None
    # most constrained first: rare colors, then high degree
    freq = {}
    for v in g1.vertices:
        freq[c1[v]] = freq.get(c1[v], 0) + 1
    order = sorted(g1.vertices, key=lambda v: (freq[c1[v]], -g1.degree(v), v))
    image = [0] * (n + 1)
    used = [False] * (n + 1)

    def assign(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for u in g2.vertices:
            if used[u] or c2[u] != c1[v]:
                continue
            if compat is not None and not compat(v, u):
                continue
            ok = True
            for j in range(i):
                pv = order[j]
                if g1.has_edge(v, pv) != g2.has_edge(u, image[pv]):
                    ok = False
                    break
            if ok:
                image[v] = u
                used[u] = True
                if assign(i + 1):
                    return True
                used[u] = False
        return False

    if assign(0):
        return Relabeling(image[1:])
    return None


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    return find_isomorphism(g1, g2) is not None


def is_isomorphic_bruteforce(g1: Graph, g2: Graph) -> bool:
    """All-permutations reference check (small n only)."""
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return False
    for perm in permutations(range(1, g1.n + 1)):
        if relabel(g1, Relabeling(perm)) == g2:
            return True
    return False


def canonical_form(g: Graph) -> str:
    """Isomorphism-invariant key: the lexicographically largest adjacency
    string over all labelings that respect the refined color classes."""
    n = g.n
    if n == 0:
        return "0:"
    colors = _refined_colors(g)
    classes = {}
    for v in g.vertices:
        classes.setdefault(colors[v], []).append(v)
    keys = sorted(classes)
    best = None
    for choice in product(*(permutations(classes[k]) for k in keys)):
        order = [v for block in choice for v in block]
        bits = "".join(
            "1" if g.has_edge(order[i], order[j]) else "0"
            for i in range(n) for j in range(i + 1, n)
        )
        if best is None or bits > best:
            best = bits
    return f"{n}:{best}"


def canonical_graph(g: Graph) -> Graph:
    """The graph encoded by :func:`canonical_form`."""
    n, bits = canonical_form(g).split(":")
    n = int(n)
    edges = []
    it = iter(bits)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if next(it) == "1":
                edges.append((i, j))
    return Graph(n, edges)


def all_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class on exactly ``n`` vertices.

    Grown vertex by vertex: every class on n vertices arises by attaching
    a new vertex to some class on n-1 vertices.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return [Graph(0)]
    level = {canonical_form(Graph(1)): canonical_graph(Graph(1))}
    for k in range(2, n + 1):
        nxt = {}
        for base in level.values():
            for mask in range(1 << (k - 1)):
                edges = list(base.edges) + [(v, k) for v in range(1, k) if mask >> (v - 1) & 1]
                g = Graph(k, edges)
                key = canonical_form(g)
                if key not in nxt:
                    nxt[key] = canonical_graph(g)
        level = nxt
    return [level[k] for k in sorted(level)]
