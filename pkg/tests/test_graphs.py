import random
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from patrep import graphs as G


def graphs_on(max_n):
    @st.composite
    def build(draw):
        n = draw(st.integers(1, max_n))
        pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
        keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
        return G.Graph(n, [e for e, k in zip(pairs, keep) if k])
    return build()


def perms(n):
    return st.permutations(list(range(1, n + 1))).map(G.Relabeling)


def test_families():
    s = G.star(6)
    assert s.n == 7 and s.degree(7) == 6
    assert sorted(s.degrees()) == [1] * 6 + [6]
    assert G.path(1) == G.Graph(1, [])
    assert G.cycle(3) == G.complete(3)
    assert G.path(4).sorted_edges() == [(1, 2), (2, 3), (3, 4)]
    assert G.wheel(5).n == 6 and G.wheel(5).degree(6) == 5
    assert len(G.complete(5).edges) == 10


def test_disjoint_union():
    u = G.disjoint_union(G.complete(4), G.complete(4))
    assert u.n == 8 and len(u.edges) == 12 and len(u.components()) == 2
    g = G.path(3)
    assert G.disjoint_union(g, G.empty(0)) == g
    assert G.disjoint_union(G.complete(1), G.complete(1)) == G.empty(2)


def test_relabel_examples():
    g = G.path(3)
    assert G.relabel(g, G.Relabeling.identity(3)) == g
    swapped = G.relabel(g, G.Relabeling((3, 2, 1)))
    assert swapped.sorted_edges() == [(1, 2), (2, 3)]
    assert G.is_isomorphic(swapped, g)


def test_isomorphism_examples():
    s = G.star(6)
    assert G.is_isomorphic(s, G.relabel(s, G.Relabeling((7, 1, 2, 3, 4, 5, 6))))
    assert not G.is_isomorphic(G.path(4), G.star(3))
    assert not G.is_isomorphic(G.cycle(6), G.disjoint_union(G.cycle(3), G.cycle(3)))


def test_find_isomorphism_returns_mapping():
    rng = random.Random(1)
    for _ in range(50):
        g = G.random_tree(8, rng)
        images = list(range(1, 9))
        rng.shuffle(images)
        h = G.relabel(g, G.Relabeling(images))
        r = G.find_isomorphism(g, h)
        assert r is not None and G.relabel(g, r) == h


def test_isomorphism_matches_bruteforce_small():
    rng = random.Random(7)
    for n in range(1, 7):
        pool = G.all_graphs(n) if n <= 5 else [g for g in G.all_graphs(n) if rng.random() < 0.3]
        for g1 in pool:
            images = list(range(1, n + 1))
            rng.shuffle(images)
            h = G.relabel(g1, G.Relabeling(images))
            assert G.is_isomorphic(g1, h)
            other = pool[rng.randrange(len(pool))]
            assert G.is_isomorphic(g1, other) == G.is_isomorphic_bruteforce(g1, other)


def test_all_graphs_counts():
    assert [len(G.all_graphs(n)) for n in range(0, 6)] == [1, 1, 2, 4, 11, 34]


def test_canonical_form_invariant():
    for g in G.all_graphs(4):
        for p in permutations(range(1, 5)):
            assert G.canonical_form(G.relabel(g, G.Relabeling(p))) == G.canonical_form(g)


def test_text_and_json_roundtrip():
    g = G.wheel(4)
    assert G.Graph.from_json(g.to_json()) == g
    assert G.Graph.from_text(g.to_text()) == g
    assert G.Graph.from_text("# comment\n3 2\n1 2\n2 3\n") == G.path(3)
    with pytest.raises(ValueError):
        G.Graph(2, [(1, 1)])
    with pytest.raises(ValueError):
        G.Graph(2, [(1, 3)])


def test_relabeling_algebra():
    r = G.Relabeling((2, 3, 1))
    assert r.then(r.inverse()) == G.Relabeling.identity(3)
    assert r.apply_word((1, 2, 3)) == (2, 3, 1)
    with pytest.raises(ValueError):
        G.Relabeling((1, 1, 2))


@given(st.data())
def test_relabel_is_group_action(data):
    g = data.draw(graphs_on(7))
    r1 = data.draw(perms(g.n))
    r2 = data.draw(perms(g.n))
    assert G.relabel(G.relabel(g, r1), r2) == G.relabel(g, r1.then(r2))


@given(st.data())
def test_isomorphism_reflexive_symmetric(data):
    g = data.draw(graphs_on(7))
    h = data.draw(graphs_on(7))
    assert G.is_isomorphic(g, g)
    assert G.is_isomorphic(g, h) == G.is_isomorphic(h, g)


@given(st.lists(graphs_on(5), min_size=1, max_size=4))
def test_union_component_count(parts):
    u = G.disjoint_union_all(parts)
    assert len(u.components()) == sum(len(p.components()) for p in parts)
    assert u.n == sum(p.n for p in parts)


def test_relabeling_pickles():
    import pickle

    r = G.Relabeling((2, 3, 1))
    assert pickle.loads(pickle.dumps(r)) == r
