"""Reproducible experiments behind ``patrep verify-theorem``.

Each function returns a plain dict with at least ``id``, ``passed`` and
``seconds``; certificates are embedded as JSON.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from itertools import combinations

from . import graphs as G
from .circle import chords_from_word, is_circle_graph
from .constructions import (
    P123, P132, complete_word_123, complete_word_123_2uniform, cycle_word_123,
    path_word_123, tree_word_132_2uniform,
)
from .reduction import normalize
from .search import (
    PRUNES, SearchBounds, classify_atlas, decide_disjoint_132_123,
    find_representant,
)
from .words import (
    AvoidanceTracker, alternates, avoids, format_word, is_k_uniform,
    naive_alternation_oracle, word_to_graph,
)

MAX_CONSTRUCTION_N = 12


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        out = fn(*args, **kwargs)
        out["seconds"] = round(time.perf_counter() - t0, 3)
        return out
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


@_timed
def constructions(max_n: int = MAX_CONSTRUCTION_N) -> dict:
    failures = []
    checked = 0
    for n in range(1, max_n + 1):
        cases = [("complete", complete_word_123(n), G.complete(n), None),
                 ("complete2u", complete_word_123_2uniform(n), G.complete(n), 2)]
        if n >= 2:
            cases.append(("path", path_word_123(n), G.path(n), 2))
        if n >= 3:
            cases.append(("cycle", cycle_word_123(n), G.cycle(n), None))
        for family, w, target, uniform in cases:
            checked += 1
            ok = avoids(w, P123) and word_to_graph(w) == target
            if uniform is not None:
                ok = ok and is_k_uniform(w, uniform)
            if family == "path" and n >= 3:
                ok = ok and w[-5:] == (2, 3, 1, 2, 1)
            if family == "cycle":
                ok = ok and w[-4:] == (2, 3, 1, 2)
            if not ok:
                failures.append({"family": family, "n": n, "word": format_word(w)})
    return {"id": "constructions", "checked": checked, "failures": failures,
            "passed": not failures}


@_timed
def trees(max_n: int = MAX_CONSTRUCTION_N, per_n: int = 200, seed: int = 0) -> dict:
    rng = random.Random(seed)
    failures = []
    checked = 0
    for n in range(1, max_n + 1):
        for _ in range(per_n):
            t = G.random_tree(n, rng)
            r, w = tree_word_132_2uniform(t)
            checked += 1
            if not (is_k_uniform(w, 2) and avoids(w, P132)
                    and word_to_graph(w) == G.relabel(t, r)):
                failures.append({"tree": t.to_json(), "word": format_word(w)})
    return {"id": "trees", "checked": checked, "failures": failures, "passed": not failures}


def _two_uniform_words(n: int):
    """All arrangements of the multiset {1,1,2,2,...,n,n}."""
    left = [2] * (n + 1)
    w: list[int] = []

    def rec():
        if len(w) == 2 * n:
            yield tuple(w)
            return
        for c in range(1, n + 1):
            if left[c]:
                left[c] -= 1
                w.append(c)
                yield from rec()
                w.pop()
                left[c] += 1

    yield from rec()


@_timed
def k4_two_uniform_132(prunes=PRUNES) -> dict:
    """K4 has no 2-uniform 132-avoiding representant."""
    k4 = G.complete(4)
    cert = find_representant(k4, P132, uniformity=2, prunes=prunes)
    # independent generate-and-test over every arrangement
    arrangements = 0
    hits = 0
    for w in _two_uniform_words(4):
        arrangements += 1
        if avoids(w, P132) and G.is_isomorphic(word_to_graph(w), k4):
            hits += 1
    passed = cert.proves_nonexistence and arrangements == 2520 and hits == 0
    return {"id": "4.5", "passed": passed, "arrangements": arrangements,
            "brute_force_hits": hits, "certificate": cert.to_json()}


@_timed
def star6_123(jobs: int = 1, prunes=PRUNES, split_depth=None) -> dict:
    """K_{1,6} is not 123-representable (two copies per letter suffice)."""
    star = G.star(6)
    bounds = SearchBounds.uniform(star.n, 2, "theorem-3.4-global-2")
    cert = find_representant(star, P123, bounds, jobs=jobs, prunes=prunes,
                             split_depth=split_depth)
    return {"id": "3.7", "passed": cert.proves_nonexistence, "certificate": cert.to_json()}


@_timed
def k4_union_132(jobs: int = 1, prunes=PRUNES) -> dict:
    """K4 + K4 is a circle graph but not 132-representable."""
    k4 = G.complete(4)
    decision = decide_disjoint_132_123([k4, k4], P132, jobs=jobs, prunes=prunes)
    union = G.disjoint_union(k4, k4)
    circle = is_circle_graph(union, jobs=jobs, prunes=prunes)
    chords_ok = False
    if circle.is_witness:
        chords_ok = chords_from_word(circle.word).crossing_graph() == union
    passed = decision.proves_nonexistence and circle.is_witness and chords_ok
    return {"id": "5.1", "passed": passed, "decision": decision.to_json(),
            "circle": circle.to_json()}


@_timed
def star_k4_k4_union(jobs: int = 1) -> dict:
    """star(6) + K4 + K4: neither 123- nor 132-representable."""
    comps = [G.star(6), G.complete(4), G.complete(4)]
    d123 = decide_disjoint_132_123(comps, P123, jobs=jobs)
    d132 = decide_disjoint_132_123(comps, P132, jobs=jobs)
    passed = d123.proves_nonexistence and d132.proves_nonexistence
    return {"id": "fig7", "passed": passed, "123": d123.to_json(), "132": d132.to_json()}


def _avoiding_words(max_len: int, letters: int, tracker: AvoidanceTracker):
    def rec(prefix, state):
        yield prefix
        if len(prefix) == max_len:
            return
        for c in range(1, letters + 1):
            nxt = tracker.extend(state, c)
            if nxt is not None:
                yield from rec(prefix + (c,), nxt)

    yield from rec((), tracker.initial())


@_timed
def reduction(max_len: int = 9, letters: int = 4) -> dict:
    tracker = AvoidanceTracker(P123)
    checked = 0
    failures = []
    for w in _avoiding_words(max_len, letters, tracker):
        if not w:
            continue
        if max(Counter(w).values()) < 3:
            continue
        # letters skipped by the alphabet are closed up; order is what matters
        rank = {c: i + 1 for i, c in enumerate(sorted(set(w)))}
        w = tuple(rank[c] for c in w)
        checked += 1
        out, _, _ = normalize(w)
        ok = (tracker.avoids(out) and max(Counter(out).values()) <= 2
              and G.is_isomorphic(word_to_graph(out), word_to_graph(w)))
        if not ok:
            failures.append(format_word(w))
    return {"id": "reduction", "checked": checked, "failures": failures,
            "passed": checked > 0 and not failures}


@_timed
def oracle_equivalence(max_len: int = 6, letters: int = 4, chord_len: int = 10) -> dict:
    from itertools import product

    pairs = 0
    mismatches = []
    for length in range(1, max_len + 1):
        for w in product(range(1, letters + 1), repeat=length):
            present = sorted(set(w))
            for x, y in combinations(present, 2):
                pairs += 1
                if alternates(w, x, y) != naive_alternation_oracle(w, x, y):
                    mismatches.append((format_word(w), x, y))
    chord_words = 0
    chord_mismatches = []
    for n in range(1, chord_len // 2 + 1):
        for w in _two_uniform_words(n):
            chord_words += 1
            if chords_from_word(w).crossing_graph() != word_to_graph(w):
                chord_mismatches.append(format_word(w))
    return {"id": "oracles", "pairs": pairs, "chord_words": chord_words,
            "mismatches": mismatches[:10], "chord_mismatches": chord_mismatches[:10],
            "passed": not mismatches and not chord_mismatches}


@_timed
def atlas_smoke() -> dict:
    a123 = classify_atlas(4, P123)
    a132 = classify_atlas(3, P132)
    unknown = [e.key for e in a123 + a132 if e.certificate.status == "unknown"]
    nonrep = [e.key for e in a123 + a132 if e.certificate.status == "not-representable"]
    return {"id": "atlas", "passed": not unknown and not nonrep,
            "123": [e.to_json() for e in a123], "132": [e.to_json() for e in a132]}


EXPERIMENTS = {
    "3.7": star6_123,
    "4.5": k4_two_uniform_132,
    "5.1": k4_union_132,
    "fig7": star_k4_k4_union,
    "constructions": constructions,
}
