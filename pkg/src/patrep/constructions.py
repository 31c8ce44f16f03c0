"""Explicit pattern-avoiding representants for standard graph families."""

from __future__ import annotations

from collections.abc import Sequence
from typing import Optional

from .graphs import Graph, Relabeling, disjoint_union_all, relabel
from .words import Pattern, Word, avoids, is_k_uniform, word_to_graph

P123 = Pattern((1, 2, 3))
P132 = Pattern((1, 3, 2))


def complete_word_123(n: int) -> Word:
    """``n (n-1) ... 1``: every letter once, so all pairs alternate."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return tuple(range(n, 0, -1))


def path_word_123(n: int) -> Word:
    """2-uniform 123-avoiding word for the path 1-2-...-n.

    ``n (n-1) n``, then ``i (i+1)`` for i = n-2 down to 1, then ``1``;
    e.g. n=4 gives 43423121.
    """
    if n < 2:
        raise ValueError("path word needs n >= 2")
    w = [n, n - 1, n]
    for i in range(n - 2, 0, -1):
        w += [i, i + 1]
    w.append(1)
    return tuple(w)


def cycle_word_123(n: int) -> Word:
    """The path word without its first ``n`` and last ``1``; closes the cycle n-1."""
    if n < 3:
        raise ValueError("cycle word needs n >= 3")
    return path_word_123(n)[1:-1]


def complete_word_123_2uniform(n: int) -> Word:
    if n < 1:
        raise ValueError("n must be >= 1")
    return complete_word_123(n) * 2


def _tree_children(t: Graph, root: int) -> dict[int, list[int]]:
    children = {v: [] for v in t.vertices}
    parent = {root: 0}
    stack = [root]
    while stack:
        v = stack.pop()
        for u in t.neighbors(v):
            if u not in parent:
                parent[u] = v
                children[v].append(u)
                stack.append(u)
    for v in children:
        children[v].sort()
    return children


def tree_word_132_2uniform(t: Graph, root: int = 1) -> tuple[Relabeling, Word]:
    """Relabel a tree and return a 2-uniform 132-avoiding word for it.

    Labels are handed out in preorder: a subtree root takes the smallest label
    of its block and its children's subtrees take consecutive, increasing
    blocks. With the root labeled 1 and children ``n_1 < ... < n_r``, a
    subtree gets the word ``w(T_r) ... w(T_1) 1 n_1 ... n_r`` and the whole
    tree gets that word with a final extra ``1``.

    Returns ``(r, w)`` where ``w`` represents ``relabel(t, r)``.
    """
    if not t.is_tree():
        raise ValueError("input graph is not a tree")
    if not 1 <= root <= t.n:
        raise ValueError(f"root {root} outside 1..{t.n}")
    children = _tree_children(t, root)

    label: dict[int, int] = {}
    counter = 0
    stack = [root]
    while stack:
        v = stack.pop()
        counter += 1
        label[v] = counter
        stack.extend(reversed(children[v]))

    def subtree_word(v: int) -> list[int]:
        out: list[int] = []
        for c in reversed(children[v]):
            out += subtree_word(c)
        out.append(label[v])
        out += [label[c] for c in children[v]]
        return out

    # recursion depth is bounded by tree height, <= 12 at desk scale
    w = subtree_word(root) + [label[root]]
    r = Relabeling(label[v] for v in t.vertices)
    return r, tuple(w)


def compose_disjoint(parts: Sequence[tuple], pattern: Sequence[int]) -> tuple[Relabeling, Word]:
    """Combine component representants into one word for their disjoint union.

    ``parts`` holds ``(word, graph)`` or ``(word, graph, relabeling)`` entries,
    where ``word`` represents ``graph`` (after ``relabeling`` when given).
    Component i is moved to the i-th block of labels and the blocks are
    emitted last-to-first, so every later block uses smaller letters.

    Returns ``(r, w)`` where ``w`` represents ``relabel(U, r)`` and ``U`` is
    the disjoint union of the component graphs in input order.
    """
    pattern = Pattern(pattern)
    if not parts:
        raise ValueError("need at least one component")
    words, graphs, relabelings = [], [], []
    for part in parts:
        word, graph = tuple(part[0]), part[1]
        r = part[2] if len(part) > 2 and part[2] is not None else Relabeling.identity(graph.n)
        target = relabel(graph, r)
        if word_to_graph(word) != target:
            raise ValueError("component word does not represent its graph")
        if not avoids(word, pattern):
            raise ValueError(f"component word {word} contains {pattern}")
        words.append(word)
        graphs.append(graph)
        relabelings.append(r)
    loose = [i for i, w in enumerate(words) if not is_k_uniform(w, 2)]
    if len(loose) >= 2:
        raise ValueError(
            f"components {loose} have no 2-uniform representant given; "
            "their composition cannot represent the union"
        )
    offsets = []
    total = 0
    for g in graphs:
        offsets.append(total)
        total += g.n
    out: list[int] = []
    for i in reversed(range(len(words))):
        out += [c + offsets[i] for c in words[i]]
    images = []
    for i, r in enumerate(relabelings):
        images += [r[v] + offsets[i] for v in range(1, graphs[i].n + 1)]
    big_r = Relabeling(images)
    union = disjoint_union_all(graphs)
    result = tuple(out)
    # cheap post-condition, guards against bad inputs slipping through
    if not avoids(result, pattern) or word_to_graph(result) != relabel(union, big_r):
        raise AssertionError("composed word failed verification")
    return big_r, result


def family_graph(family: str, n: int) -> Graph:
    from . import graphs as G

    table = {
        "complete": G.complete,
        "complete2u": G.complete,
        "path": G.path,
        "cycle": G.cycle,
    }
    if family not in table:
        raise ValueError(f"unknown family {family!r}")
    return table[family](n)


def family_word(family: str, n: int) -> Word:
    table = {
        "complete": complete_word_123,
        "complete2u": complete_word_123_2uniform,
        "path": path_word_123,
        "cycle": cycle_word_123,
    }
    if family not in table:
        raise ValueError(f"unknown family {family!r}")
    return table[family](n)


def self_check(word: Word, target: Graph, pattern: Sequence[int],
               uniform: Optional[int] = None) -> dict:
    """Avoidance + graph-equality report for a constructed word."""
    graph_ok = word_to_graph(word) == target
    avoid_ok = avoids(word, pattern)
    report = {"avoids": avoid_ok, "graph_equal": graph_ok}
    if uniform is not None:
        report["uniform"] = is_k_uniform(word, uniform)
    report["pass"] = all(report.values())
    return report
