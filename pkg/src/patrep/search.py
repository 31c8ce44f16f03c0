"""Bounded exhaustive search for pattern-avoiding representants.

The engine enumerates words left to right, trying letters in increasing
order, so the first accepted word is the lexicographically smallest one
(a prefix sorts before its extensions). Three prunes are available and can
be switched off individually:

``avoidance``
    incremental pattern test per appended letter (otherwise checked at leaves).
``alternation``
    non-alternation is monotone in the prefix, so pairs that can no longer
    alternate are known early. Unlabeled searches compare the resulting
    per-letter degree intervals with the target degree sequence; labeled
    searches compare pairs against the target adjacency directly.
``opposite-order``
    for a letter ``x`` placed twice and two of its neighbours ``a, b`` that
    are not adjacent, ``a`` and ``b`` must occur in opposite orders on the
    two sides of ``x`` (labeled searches only; an unlabeled search has no
    target non-edges to consult before the leaf).
"""

from __future__ import annotations

import heapq
import json
import logging
import time
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .graphs import (
    MAX_ISO_N, Graph, Relabeling, all_graphs, canonical_form, disjoint_union_all,
    find_isomorphism, relabel,
)
from .words import (
    AvoidanceTracker, Pattern, Word, avoids, format_word, naive_alternation_oracle,
)

log = logging.getLogger(__name__)

TAGS = (
    "theorem-3.4-global-2",
    "theorem-3.1-degree",
    "corollary-3.2-neighbor",
    "two-uniform-by-definition",
    "k-uniform-by-definition",
    "heuristic-cap",
)
PRUNES = ("avoidance", "alternation", "opposite-order")
DEFAULT_CAP = 3
P123 = Pattern((1, 2, 3))
P132 = Pattern((1, 3, 2))


@dataclass(frozen=True)
class SearchBounds:
    """Per-vertex occurrence caps with the reason each cap is safe."""

    caps: dict
    tags: dict

    def __post_init__(self):
        if set(self.caps) != set(self.tags):
            raise ValueError("caps and tags must cover the same vertices")
        for v, c in self.caps.items():
            if c < 1:
                raise ValueError(f"cap for vertex {v} must be positive")
        for t in self.tags.values():
            if t not in TAGS:
                raise ValueError(f"unknown justification tag {t!r}")

    @classmethod
    def uniform(cls, n: int, cap: int, tag: str) -> "SearchBounds":
        return cls({v: cap for v in range(1, n + 1)}, {v: tag for v in range(1, n + 1)})

    @property
    def complete(self) -> bool:
        return "heuristic-cap" not in self.tags.values()

    @property
    def tag(self) -> str:
        return "+".join(sorted(set(self.tags.values())))

    def to_json(self) -> dict:
        return {str(v): self.caps[v] for v in sorted(self.caps)}


def multiplicity_bound(g: Graph, v: int, pattern: Sequence[int],
                       cap: int = DEFAULT_CAP) -> tuple[int, str]:
    """Largest number of copies of ``v`` any representant needs.

    For a pattern of length k+1: a vertex of degree >= k appears at most k
    times; a vertex with such a neighbour at most k+1 times. For 123 every
    letter can be brought down to two copies, which beats the neighbour bound.
    Everything else falls back to ``cap`` and is marked incomplete.
    """
    k = len(pattern) - 1
    if not 1 <= v <= g.n:
        raise ValueError(f"vertex {v} not in graph")
    if k >= 1 and g.degree(v) >= k:
        return k, "theorem-3.1-degree"
    if tuple(pattern) == P123:
        return 2, "theorem-3.4-global-2"
    if k >= 1 and any(g.degree(u) >= k for u in g.neighbors(v)):
        return k + 1, "corollary-3.2-neighbor"
    return cap, "heuristic-cap"


def bounds_for(g: Graph, pattern: Sequence[int], cap: int = DEFAULT_CAP) -> SearchBounds:
    caps, tags = {}, {}
    for v in g.vertices:
        caps[v], tags[v] = multiplicity_bound(g, v, pattern, cap)
    return SearchBounds(caps, tags)


def oracle_graph(w: Sequence[int]) -> Graph:
    """Alternation graph via the literal pairwise oracle (no shared code with the engine)."""
    n = max(w)
    if set(w) != set(range(1, n + 1)):
        raise ValueError("alphabet must be 1..n")
    return Graph(n, [(x, y) for x in range(1, n + 1) for y in range(x + 1, n + 1)
                     if naive_alternation_oracle(w, x, y)])


@dataclass
class Certificate:
    kind: str  # "witness" | "exhausted"
    graph: Graph
    pattern: Optional[Pattern]
    bounds: Optional[SearchBounds] = None
    uniformity: Optional[int] = None
    labeled: bool = False
    relabeling: Optional[Relabeling] = None
    word: Optional[Word] = None
    enumerated: int = 0
    survived_avoidance: int = 0
    seconds: float = 0.0
    complete: bool = True
    tag: str = ""
    reason: str = ""
    components: list = field(default_factory=list)

    def __post_init__(self):
        if self.kind not in ("witness", "exhausted"):
            raise ValueError(f"bad certificate kind {self.kind!r}")
        if self.kind == "witness":
            self.verify()

    @property
    def is_witness(self) -> bool:
        return self.kind == "witness"

    @property
    def proves_nonexistence(self) -> bool:
        return self.kind == "exhausted" and self.complete

    @property
    def status(self) -> str:
        if self.kind == "witness":
            return "representable"
        return "not-representable" if self.complete else "unknown"

    def verify(self) -> None:
        """Re-check a witness through the brute-force oracle path."""
        w = self.word
        if not w:
            raise ValueError("witness certificate without a word")
        if self.pattern is not None and not avoids(w, self.pattern):
            raise ValueError(f"witness {format_word(w)} contains {self.pattern}")
        if self.uniformity is not None and any(w.count(c) != self.uniformity for c in set(w)):
            raise ValueError("witness violates the requested uniformity")
        if oracle_graph(w) != relabel(self.graph, self.relabeling):
            raise ValueError(f"witness {format_word(w)} does not represent the relabeled graph")

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "status": self.status,
            "pattern": None if self.pattern is None else str(self.pattern),
            "graph": self.graph.to_json(),
            "uniformity": self.uniformity,
            "labeled": self.labeled,
            "bounds": None if self.bounds is None else self.bounds.to_json(),
            "completeness": {"flag": self.complete, "tag": self.tag},
        }
        if self.kind == "witness":
            out["witness"] = {
                "relabeling": self.relabeling.to_json(),
                "word": format_word(self.word),
            }
        else:
            out["exhausted"] = {
                "enumerated": self.enumerated,
                "survived_avoidance": self.survived_avoidance,
                "seconds": round(self.seconds, 6),
            }
        if self.reason:
            out["reason"] = self.reason
        if self.components:
            out["components"] = [c.to_json() for c in self.components]
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _intervals_fit(lo: list[int], hi: list[int], targets: Sequence[int]) -> bool:
    """Can every target value be matched to a distinct interval containing it?"""
    order = sorted(range(len(lo)), key=lo.__getitem__)
    heap: list[int] = []
    j = 0
    for d in targets:  # ascending
        while j < len(order) and lo[order[j]] <= d:
            heapq.heappush(heap, hi[order[j]])
            j += 1
        if not heap:
            return False
        top = heapq.heappop(heap)
        if top < d:
            return False
    return True


def opposite_order_prune(word: Sequence[int], x: int, a: int, b: int) -> bool:
    """False iff ``a`` and ``b`` both sit on each side of some copy of ``x``
    in the same order (with at most two copies each they then alternate, so
    ``ab`` cannot be a non-edge).

    Missing information (``x`` absent, a letter not on both sides) gives True.
    """
    for p, c in enumerate(word):
        if c != x:
            continue
        left, right = word[:p], word[p + 1:]
        if a in left and b in left and a in right and b in right:
            if (left.index(a) < left.index(b)) == (right.index(a) < right.index(b)):
                return False
    return True


class _Engine:
    """One bounded DFS. Picklable so subtrees can run in worker processes."""

    def __init__(self, g: Graph, pattern: Optional[Pattern], caps: dict,
                 uniformity: Optional[int], labeled: bool, prunes: frozenset):
        self.g = g
        self.n = g.n
        self.pattern = pattern
        self.uniformity = uniformity
        self.labeled = labeled
        self.prunes = prunes
        n = self.n
        if uniformity is not None:
            self.vcaps = [0] + [uniformity] * n
        else:
            self.vcaps = [0] + [caps[v] for v in range(1, n + 1)]
        if labeled:
            self.lcap = list(self.vcaps)
        else:
            top = max(self.vcaps[1:])
            self.lcap = [0] + [top] * n
        # how many vertices tolerate at least c copies
        self.cap_room = [sum(1 for v in range(1, n + 1) if self.vcaps[v] >= c)
                         for c in range(max(self.lcap) + 2)]
        self.target_degrees = sorted(g.degrees())
        self.m = len(g.edges)
        self.adj = [g.adj_mask(v) for v in range(n + 1)]
        self.full = (1 << (n + 1)) - 2
        self.use_avoid = pattern is not None and "avoidance" in prunes
        self.use_alt = "alternation" in prunes
        self.use_opp = labeled and "opposite-order" in prunes
        self.tracker = AvoidanceTracker(pattern, max(n, 3)) if pattern is not None else None

    def __getstate__(self):
        d = dict(self.__dict__)
        d.pop("tracker")
        return d

    def __setstate__(self, d):
        self.__dict__.update(d)
        self.tracker = AvoidanceTracker(self.pattern, max(self.n, 3)) if self.pattern is not None else None

    # -- state handling --

    def _reset(self):
        n = self.n
        self.word: list[int] = []
        self.count = [0] * (n + 1)
        self.since = [0] * (n + 1)
        self.first = [-1] * (n + 1)
        self.broken = [0] * (n + 1)
        self.missing = n
        self.complete_mask = 0
        self.enumerated = 0
        self.survived = 0
        self.witness: Optional[tuple] = None
        self.tasks: list = []

    def _feasible(self) -> bool:
        """Unlabeled alternation prune: degree intervals vs target degrees."""
        n = self.n
        broken = self.broken
        cm = self.complete_mask
        full = self.full
        lo = []
        hi = []
        possible = 0
        definite = 0
        for v in range(1, n + 1):
            open_ = full & ~broken[v] & ~(1 << v)
            up = _popcount(open_)
            hi.append(up)
            possible += up
            if cm >> v & 1:
                low = _popcount(open_ & cm)
                definite += low
            else:
                low = 0
            lo.append(low)
        if possible < 2 * self.m or definite > 2 * self.m:
            return False
        return _intervals_fit(lo, hi, self.target_degrees)

    def _push(self, c: int) -> Optional[tuple]:
        """Append ``c``; returns an undo record, or None if a prune rejects it
        (state is left unchanged in that case)."""
        count = self.count
        bit = 1 << c
        newly = 0
        if count[c] > 0:
            newly = self.full & ~self.since[c] & ~bit & ~self.broken[c]
            if newly and self.labeled and self.use_alt and newly & self.adj[c]:
                return None
        k = count[c] + 1
        becomes_complete = k == self.lcap[c]
        if not self.labeled and self.use_alt and k < len(self.cap_room):
            # letters with >= k copies need vertices allowing >= k copies
            heavy = sum(1 for v in range(1, self.n + 1) if count[v] >= k) + 1
            if heavy > self.cap_room[k]:
                return None
        if becomes_complete and self.labeled and self.use_alt:
            # a finished pair that still alternates is a permanent edge
            bad = self.complete_mask & ~(self.broken[c] | newly) & ~self.adj[c] & ~bit
            if bad:
                return None
        if self.use_opp and not self._opposite_ok(c):
            return None
        # commit
        undo = (c, self.broken[c], self.since[:], self.complete_mask, self.first[c], newly)
        if newly:
            self.broken[c] |= newly
            m = newly
            while m:
                low = m & -m
                self.broken[low.bit_length() - 1] |= bit
                m ^= low
        if count[c] == 0:
            self.missing -= 1
            self.first[c] = len(self.word)
        count[c] = k
        self.since[c] = 0
        since = self.since
        for y in range(1, self.n + 1):
            since[y] |= bit
        if becomes_complete:
            self.complete_mask |= bit
        self.word.append(c)
        if not self.labeled and self.use_alt and (newly or becomes_complete):
            if not self._feasible():
                self._pop(undo)
                return None
        return undo

    def _pop(self, undo: tuple) -> None:
        c, broken_c, since, cmask, first_c, newly = undo
        self.word.pop()
        bit = 1 << c
        m = newly
        while m:
            low = m & -m
            self.broken[low.bit_length() - 1] &= ~bit
            m ^= low
        self.broken[c] = broken_c
        self.since = since
        self.complete_mask = cmask
        self.count[c] -= 1
        if self.count[c] == 0:
            self.missing += 1
        self.first[c] = first_c

    def _opposite_ok(self, c: int) -> bool:
        # c is about to land to the right of x's second copy; check every
        # non-neighbour b of c that shares the neighbour x with it
        word = self.word
        g = self.g
        lcap = self.lcap
        if lcap[c] > 2:
            return True
        for x in g.neighbors(c):
            if self.count[x] != 2 or self.count[c] == 0 or lcap[x] > 2:
                continue
            if not self.first[c] < self.first[x]:
                continue
            trial = word + [c]
            for b in g.neighbors(x):
                if b == c or g.has_edge(b, c) or lcap[b] > 2:
                    continue
                if not opposite_order_prune(trial, x, c, b):
                    return False
        return True

    # -- leaves --

    def _leaf(self) -> Optional[tuple]:
        w = tuple(self.word)
        count = self.count
        if self.uniformity is not None and any(
                count[v] != self.uniformity for v in range(1, self.n + 1)):
            return None
        if self.pattern is not None and not self.use_avoid and not self.tracker.avoids(w):
            return None
        broken = self.broken
        edges = [(x, y) for x in range(1, self.n + 1) for y in range(x + 1, self.n + 1)
                 if not broken[x] >> y & 1]
        h = Graph(self.n, edges)
        if self.labeled:
            if h == self.g and all(count[v] <= self.vcaps[v] for v in self.g.vertices):
                return Relabeling.identity(self.n), w
            return None
        vcaps = self.vcaps
        r = find_isomorphism(self.g, h, compat=lambda v, u: count[u] <= vcaps[v])
        if r is None:
            return None
        return r, w

    # -- search --

    def _dfs(self, state, split_at: Optional[int]) -> bool:
        """Returns True to stop (witness found)."""
        if self.missing == 0:
            hit = self._leaf()
            if hit is not None:
                if split_at is not None:
                    self.tasks.append(("leaf", hit))
                else:
                    self.witness = hit
                return True
        if split_at is not None and len(self.word) == split_at:
            self.tasks.append(("task", tuple(self.word)))
            return False
        count = self.count
        lcap = self.lcap
        # every unplaced letter still needs a slot
        remaining = sum(lcap[v] - count[v] for v in range(1, self.n + 1))
        if remaining < self.missing:
            return False
        tracker = self.tracker
        use_avoid = self.use_avoid
        for c in range(1, self.n + 1):
            if count[c] >= lcap[c]:
                continue
            self.enumerated += 1
            if use_avoid:
                ns = tracker.extend(state, c)
                if ns is None:
                    continue
            else:
                ns = state
            self.survived += 1
            undo = self._push(c)
            if undo is None:
                continue
            stop = self._dfs(ns, split_at)
            self._pop(undo)
            if stop:
                return True
        return False

    def _replay(self, prefix: Sequence[int]):
        """Rebuild the state for ``prefix`` without counting; None if pruned."""
        state = self.tracker.initial() if self.use_avoid else None
        for c in prefix:
            if self.use_avoid:
                state = self.tracker.extend(state, c)
                if state is None:
                    return None, False
            if self._push(c) is None:
                return None, False
        return state, True

    def run(self, prefix: Sequence[int] = ()) -> tuple:
        """Search the subtree under ``prefix``; (witness or None, enumerated, survived)."""
        self._reset()
        state, ok = self._replay(prefix)
        if ok:
            self._dfs(state, None)
        return self.witness, self.enumerated, self.survived

    def split(self, depth: int) -> tuple[list, int, int]:
        """Enumerate the top of the tree; returns ordered items and counters.

        Items are ("leaf", hit) for accepted words shorter than ``depth`` and
        ("task", prefix) for subtrees rooted at ``depth``. Stops after the
        first leaf since nothing later can beat it.
        """
        self._reset()
        state = self.tracker.initial() if self.use_avoid else None
        self._dfs(state, depth)
        return self.tasks, self.enumerated, self.survived


def _run_task(args):
    engine, index, prefix = args
    witness, enumerated, survived = engine.run(prefix)
    return index, witness, enumerated, survived


def find_representant(
    g: Graph,
    pattern: Optional[Sequence[int]],
    bounds: Optional[SearchBounds] = None,
    uniformity: Optional[int] = None,
    *,
    labeled: bool = False,
    jobs: int = 1,
    split_depth: Optional[int] = None,
    prunes: Sequence[str] = PRUNES,
    cap: int = DEFAULT_CAP,
) -> Certificate:
    """Search for a word avoiding ``pattern`` that represents ``g``.

    By default the search is over all relabelings of ``g`` (any word whose
    alternation graph is isomorphic to ``g``). ``labeled=True`` fixes the
    labels, which is only meaningful when relabeling cannot matter (no
    pattern) or when the caller wants the fixed-label question.

    ``pattern=None`` searches without an avoidance constraint.
    ``uniformity=k`` demands exactly k copies of every letter and overrides
    ``bounds``. Without either, bounds come from :func:`bounds_for`.
    """
    if g.n > MAX_ISO_N:
        raise ValueError(f"graph too large for exhaustive search (n={g.n} > {MAX_ISO_N})")
    if g.n == 0:
        raise ValueError("empty graph has no representant")
    pat = Pattern(pattern) if pattern is not None else None
    unknown = set(prunes) - set(PRUNES)
    if unknown:
        raise ValueError(f"unknown prunes {sorted(unknown)}")
    if uniformity is not None:
        if uniformity < 1:
            raise ValueError("uniformity must be positive")
        tag = "two-uniform-by-definition" if uniformity == 2 else "k-uniform-by-definition"
        bounds = SearchBounds.uniform(g.n, uniformity, tag)
        complete = True
    else:
        if bounds is None:
            if pat is None:
                bounds = SearchBounds.uniform(g.n, 2, "heuristic-cap")
            else:
                bounds = bounds_for(g, pat, cap)
        if set(bounds.caps) != set(g.vertices):
            raise ValueError("bounds must cover every vertex")
        complete, tag = bounds.complete, bounds.tag
    engine = _Engine(g, pat, bounds.caps, uniformity, labeled, frozenset(prunes))
    t0 = time.perf_counter()
    hit, enumerated, survived = _execute(engine, jobs, split_depth)
    seconds = time.perf_counter() - t0
    common = dict(graph=g, pattern=pat, bounds=bounds, uniformity=uniformity, labeled=labeled,
                  enumerated=enumerated, survived_avoidance=survived, seconds=seconds,
                  complete=complete, tag=tag)
    if hit is not None:
        r, w = hit
        return Certificate("witness", relabeling=r, word=w, **common)
    return Certificate("exhausted", **common)


def _execute(engine: _Engine, jobs: int, split_depth: Optional[int]):
    if jobs <= 1 and split_depth is None:
        return engine.run()
    depth = split_depth if split_depth is not None else min(3, engine.n)
    items, enumerated, survived = engine.split(depth)
    tasks = [(i, item[1]) for i, item in enumerate(items) if item[0] == "task"]
    leaf = next(((i, item[1]) for i, item in enumerate(items) if item[0] == "leaf"), None)
    best = None
    if jobs <= 1:
        for i, prefix in tasks:
            w, e, s = engine.run(prefix)
            enumerated += e
            survived += s
            if w is not None:
                best = (i, w)
                break
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(_run_task, [(engine, i, p) for i, p in tasks], chunksize=1)
            for i, w, e, s in results:
                enumerated += e
                survived += s
                if w is not None:
                    best = (i, w)
                    break
            if best is not None:
                pool.shutdown(wait=False, cancel_futures=True)
    # collection stops at the first short leaf, so every task precedes it
    if best is None and leaf is not None:
        best = leaf
    return (best[1] if best is not None else None), enumerated, survived


# -- composite decisions --

def decide_disjoint_132_123(components: Sequence[Graph], pattern: Sequence[int], *,
                            jobs: int = 1, cap: int = DEFAULT_CAP,
                            prunes: Sequence[str] = PRUNES,
                            cache: Optional[dict] = None) -> Certificate:
    """Representability of a disjoint union from its connected components.

    The union is representable iff every component is and at most one
    component lacks a 2-uniform representant. Isomorphic components share
    one search (``cache`` can carry results across calls).
    """
    pat = Pattern(pattern)
    if pat not in (P123, P132):
        raise ValueError(f"component decision only covers 123 and 132, got {pat}")
    if not components:
        raise ValueError("need at least one component")
    for comp in components:
        if not comp.is_connected():
            raise ValueError(f"component {comp} is not connected")
    cache = {} if cache is None else cache
    union = disjoint_union_all(components)

    def search(comp: Graph, regime: str) -> Certificate:
        key = (canonical_form(comp), str(pat), regime, cap, frozenset(prunes))
        if key not in cache:
            if regime == "2u":
                cache[key] = find_representant(comp, pat, uniformity=2, jobs=jobs, prunes=prunes)
            else:
                cache[key] = find_representant(comp, pat, bounds_for(comp, pat, cap),
                                               jobs=jobs, prunes=prunes)
        cert = cache[key]
        return _transport(cert, comp)

    two_u = [search(c, "2u") for c in components]
    lacking = [i for i, c in enumerate(two_u) if not c.is_witness]
    subs = list(two_u)
    base = dict(graph=union, pattern=pat, labeled=False)
    if len(lacking) >= 2:
        # The union argument restricts a representant to two lacking
        # components and needs every letter there to occur at most twice:
        # always true for 123, and for 132 only where the degree bound gives 2.
        capped = [i for i in lacking
                  if all(multiplicity_bound(components[i], v, pat, cap)[0] <= 2
                         and multiplicity_bound(components[i], v, pat, cap)[1] != "heuristic-cap"
                         for v in components[i].vertices)]
        tag = "theorem-3.4-global-2" if pat == P123 else "theorem-3.1-degree"
        if len(capped) >= 2:
            i, j = capped[:2]
            return Certificate(
                "exhausted", complete=True, tag=tag,
                reason=f"components {i} and {j} have no 2-uniform {pat}-avoiding representant",
                components=subs, **base)
        return Certificate(
            "exhausted", complete=False, tag="heuristic-cap",
            reason=f"components {lacking} have no 2-uniform {pat}-avoiding representant, "
                   "but no proven bound keeps their letters to two copies",
            components=subs, **base)
    parts = []
    for i, comp in enumerate(components):
        cert = two_u[i]
        if i in lacking:
            cert = search(comp, "full")
            subs[i] = cert
            if not cert.is_witness:
                what = "proved" if cert.complete else "not found under a heuristic cap"
                return Certificate(
                    "exhausted", complete=cert.complete, tag=cert.tag,
                    reason=f"component {i} is not {pat}-representable ({what})",
                    components=subs, **base)
        parts.append((cert.word, comp, cert.relabeling))
    from .constructions import compose_disjoint

    r, w = compose_disjoint(parts, pat)
    return Certificate("witness", relabeling=r, word=w, complete=True, tag="composed",
                       reason="components composed block by block", components=subs, **base)


def _transport(cert: Certificate, comp: Graph) -> Certificate:
    """Re-express a cached certificate for an isomorphic component."""
    if cert.graph == comp:
        return cert
    iso = find_isomorphism(comp, cert.graph)
    fields = dict(cert.__dict__)
    fields["graph"] = comp
    if cert.bounds is not None:
        # vertex v of comp plays the role of iso[v] in the cached graph
        fields["bounds"] = SearchBounds({v: cert.bounds.caps[iso[v]] for v in comp.vertices},
                                        {v: cert.bounds.tags[iso[v]] for v in comp.vertices})
    if cert.is_witness:
        fields["relabeling"] = iso.then(cert.relabeling)
    return Certificate(**fields)


# -- atlas --

@dataclass
class AtlasEntry:
    key: str
    graph: Graph
    certificate: Certificate
    minimal: bool = False

    def to_json(self) -> dict:
        out = {"key": self.key, "graph": self.graph.to_json(),
               "status": self.certificate.status}
        if self.certificate.is_witness:
            out["witness"] = {"relabeling": self.certificate.relabeling.to_json(),
                              "word": format_word(self.certificate.word)}
        else:
            out["completeness"] = {"flag": self.certificate.complete,
                                   "tag": self.certificate.tag}
        if self.minimal:
            out["minimal"] = True
        return out


def classify_atlas(max_n: int, pattern: Sequence[int], *, cap: int = DEFAULT_CAP,
                   jobs: int = 1, progress=None) -> list[AtlasEntry]:
    """Classify every graph on 1..max_n vertices (up to isomorphism).

    Non-representable graphs whose one-vertex-deleted subgraphs are all
    representable are flagged ``minimal`` (representability is inherited
    by induced subgraphs, so these are the ones worth reporting).
    """
    pat = Pattern(pattern)
    if max_n > 7:
        raise ValueError("atlas limited to max_n <= 7")
    table: dict[str, AtlasEntry] = {}
    for n in range(1, max_n + 1):
        for g in all_graphs(n):
            cert = find_representant(g, pat, bounds_for(g, pat, cap), jobs=jobs)
            key = canonical_form(g)
            table[key] = AtlasEntry(key, g, cert)
            if progress is not None:
                progress(key, cert)
    for entry in table.values():
        if entry.certificate.status != "not-representable":
            continue
        g = entry.graph
        subs = [g.induced([u for u in g.vertices if u != v]) for v in g.vertices]
        if all(g.n == 1 or table[canonical_form(s)].certificate.status == "representable"
               for s in subs):
            entry.minimal = True
    return list(table.values())


def atlas_summary(entries: Sequence[AtlasEntry]) -> dict:
    counts = {"representable": 0, "not-representable": 0, "unknown": 0}
    for e in entries:
        counts[e.certificate.status] += 1
    return {
        "counts": counts,
        "minimal_non_representable": [e.graph.to_json() for e in entries if e.minimal],
    }
