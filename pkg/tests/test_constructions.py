import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from patrep import graphs as G
from patrep.constructions import (
    P123, P132, complete_word_123, complete_word_123_2uniform, compose_disjoint,
    cycle_word_123, family_graph, family_word, path_word_123, self_check,
    tree_word_132_2uniform,
)
from patrep.words import alternates, avoids, format_word, is_k_uniform, parse_word, word_to_graph


def test_complete_examples():
    assert format_word(complete_word_123(3)) == "321"
    assert format_word(complete_word_123(1)) == "1"
    w = complete_word_123(5)
    assert format_word(w) == "54321" and avoids(w, P123) and word_to_graph(w) == G.complete(5)


def test_path_examples():
    assert format_word(path_word_123(4)) == "43423121"
    assert word_to_graph(path_word_123(4)).sorted_edges() == [(1, 2), (2, 3), (3, 4)]
    assert format_word(path_word_123(2)) == "2121"
    assert format_word(path_word_123(3)) == "323121"


def test_cycle_examples():
    assert format_word(cycle_word_123(3)) == "2312"
    assert word_to_graph(cycle_word_123(3)) == G.complete(3)
    w = cycle_word_123(5)
    assert format_word(w) == "45342312"
    assert w.count(5) == 1 and w.count(1) == 1 and alternates(w, 1, 5)


def test_complete_2uniform_examples():
    assert format_word(complete_word_123_2uniform(2)) == "2121"
    assert format_word(complete_word_123_2uniform(4)) == "43214321"


@pytest.mark.parametrize("n", range(1, 13))
def test_families_up_to_12(n):
    for family in ("complete", "complete2u", "path", "cycle"):
        if (family == "path" and n < 2) or (family == "cycle" and n < 3):
            continue
        w = family_word(family, n)
        assert avoids(w, P123)
        assert word_to_graph(w) == family_graph(family, n)
        if family in ("path", "complete2u"):
            assert is_k_uniform(w, 2)
    if n >= 3:
        assert path_word_123(n)[-5:] == (2, 3, 1, 2, 1)
        assert cycle_word_123(n)[-4:] == (2, 3, 1, 2)


def test_tree_examples():
    r, w = tree_word_132_2uniform(G.star(2, center=1), root=1)
    assert format_word(w) == "321231"
    assert G.relabel(G.star(2, center=1), r).sorted_edges() == [(1, 2), (1, 3)]
    assert word_to_graph(w).sorted_edges() == [(1, 2), (1, 3)]
    r, w = tree_word_132_2uniform(G.Graph(1, []))
    assert w == (1, 1)


def test_tree_rejects_non_trees():
    with pytest.raises(ValueError):
        tree_word_132_2uniform(G.cycle(4))


@settings(max_examples=150)
@given(st.integers(1, 12), st.integers(0, 10**6), st.data())
def test_random_trees(n, seed, data):
    t = G.random_tree(n, random.Random(seed))
    root = data.draw(st.integers(1, n))
    r, w = tree_word_132_2uniform(t, root=root)
    assert is_k_uniform(w, 2) and avoids(w, P132)
    assert word_to_graph(w) == G.relabel(t, r)


def test_compose_examples():
    k2 = G.complete(2)
    _, w = compose_disjoint([(parse_word("2121"), k2), (parse_word("2121"), k2)], P123)
    assert format_word(w) == "43432121"
    assert word_to_graph(w) == G.disjoint_union(k2, k2)
    _, w = compose_disjoint([(parse_word("2121"), k2)], P132)
    assert format_word(w) == "2121"
    _, w = compose_disjoint([(parse_word("321"), G.complete(3)), (parse_word("2121"), k2)], P123)
    assert format_word(w) == "5454321"
    assert avoids(w, P123) and word_to_graph(w) == G.disjoint_union(G.complete(3), k2)


def test_compose_refuses_two_non_uniform():
    k3 = G.complete(3)
    with pytest.raises(ValueError):
        compose_disjoint([(parse_word("321"), k3), (parse_word("321"), k3)], P123)


@settings(max_examples=60)
@given(st.lists(st.integers(1, 5), min_size=1, max_size=4), st.data())
def test_compose_blocks(sizes, data):
    parts = []
    for i, n in enumerate(sizes):
        if i == 0 and data.draw(st.booleans()):
            parts.append((complete_word_123(n), G.complete(n)))
        else:
            parts.append((complete_word_123_2uniform(n), G.complete(n)))
    r, w = compose_disjoint(parts, P123)
    assert avoids(w, P123)
    offsets = [0]
    for n in sizes:
        offsets.append(offsets[-1] + n)
    block = {v: i for i in range(len(sizes)) for v in range(offsets[i] + 1, offsets[i + 1] + 1)}
    for x, y in combinations(range(1, offsets[-1] + 1), 2):
        if block[x] != block[y]:
            assert not alternates(w, x, y)
    for i, (wi, _) in enumerate(parts):
        lo = offsets[i]
        restricted = tuple(c - lo for c in w if block[c] == i)
        assert restricted == wi


def test_self_check_report():
    rep = self_check(path_word_123(4), G.path(4), P123, uniform=2)
    assert rep["pass"]
    assert not self_check((1, 2, 3), G.complete(3), P123)["pass"]
