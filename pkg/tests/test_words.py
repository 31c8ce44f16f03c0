from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from patrep.words import (
    AvoidanceTracker, Pattern, alternates, alternation_masks, avoids, contains_pattern,
    contains_pattern_quadratic, format_word, is_k_uniform, naive_alternation_oracle,
    parse_word, word_to_graph,
)

P123 = Pattern((1, 2, 3))
P132 = Pattern((1, 3, 2))

words = st.lists(st.integers(1, 5), max_size=12).map(tuple)
patterns = st.permutations([1, 2, 3]) | st.permutations([1, 2, 3, 4]) | st.just([1, 2]) | st.just([1])


def test_parse_and_format():
    assert parse_word("32414") == (3, 2, 4, 1, 4)
    assert parse_word("abcbd") == (1, 2, 3, 2, 4)
    assert parse_word("10 2 11") == (10, 2, 11)
    assert format_word((1, 2, 3)) == "123"
    assert format_word((10, 2)) == "10 2"
    assert parse_word(format_word((10, 2, 11))) == (10, 2, 11)
    with pytest.raises(ValueError):
        parse_word("1X2")
    with pytest.raises(ValueError):
        parse_word("102")


def test_uniformity_examples():
    assert is_k_uniform(parse_word("12432143"), 2)
    assert not is_k_uniform(parse_word("1232342"), 2)
    assert is_k_uniform((), 3)


def test_alternation_examples():
    w = parse_word("abcbd")
    assert alternates(w, 1, 3)
    assert not alternates(w, 2, 4)
    assert alternates((3, 1, 2), 1, 2)
    assert alternates(parse_word("1212"), 1, 2)
    pairs = {(x, y) for x, y in combinations(range(1, 5), 2) if alternates(w, x, y)}
    assert pairs == {(1, 3), (1, 4), (2, 3), (3, 4)}


def test_alternation_requires_present_letters():
    with pytest.raises(ValueError):
        alternates((1, 2), 1, 3)
    with pytest.raises(ValueError):
        alternates((1, 2), 1, 1)


def test_containment_examples():
    assert contains_pattern(parse_word("31247"), P123)
    assert not contains_pattern(parse_word("7546231"), P123)
    assert contains_pattern(parse_word("7534621"), P123)
    assert not contains_pattern((1, 2), P123)
    assert not contains_pattern((1, 2, 2), P123)


def test_avoidance_examples():
    assert avoids(parse_word("7546231"), P123)
    assert avoids(parse_word("32414"), P123)
    assert avoids((), P123) and avoids((), P132)


def test_word_to_graph_examples():
    assert word_to_graph(parse_word("32414")).sorted_edges() == [(1, 2), (1, 3), (1, 4), (2, 3)]
    assert word_to_graph(parse_word("abcbd")).sorted_edges() == [(1, 3), (1, 4), (2, 3), (3, 4)]
    g = word_to_graph((1, 1))
    assert g.n == 1 and not g.edges
    with pytest.raises(ValueError):
        word_to_graph(())
    with pytest.raises(ValueError):
        word_to_graph((1, 3))


def test_pattern_validation():
    assert Pattern.parse("132") == (1, 3, 2)
    with pytest.raises(ValueError):
        Pattern((1, 1, 2))
    with pytest.raises(ValueError):
        Pattern((2, 3))


def test_alternation_matches_oracle_exhaustively():
    for length in range(1, 7):
        for w in product(range(1, 5), repeat=length):
            for x, y in combinations(sorted(set(w)), 2):
                assert alternates(w, x, y) == naive_alternation_oracle(w, x, y), (w, x, y)


def test_alternation_masks_match_pairwise():
    for length in range(1, 6):
        for w in product(range(1, 4), repeat=length):
            masks = alternation_masks(w, 3)
            for x, y in combinations(sorted(set(w)), 2):
                assert (not masks[x] >> y & 1) == alternates(w, x, y)


@given(words, st.integers(1, 5), st.integers(1, 5))
def test_alternation_symmetric(w, x, y):
    if x == y or x not in w or y not in w:
        return
    assert alternates(w, x, y) == alternates(w, y, x)


@given(words, patterns, st.data())
def test_avoidance_closed_under_subwords(w, p, data):
    if not avoids(w, p):
        return
    keep = data.draw(st.lists(st.booleans(), min_size=len(w), max_size=len(w)))
    sub = tuple(c for c, k in zip(w, keep) if k)
    assert avoids(sub, p)


@given(st.integers(0, 20))
def test_decreasing_words_avoid_123_and_132(n):
    w = tuple(range(n, 0, -1))
    assert avoids(w, P123) and avoids(w, P132)


@given(words, patterns)
def test_containment_algorithms_agree(w, p):
    assert contains_pattern(w, p) == contains_pattern_quadratic(w, p)


@settings(max_examples=300)
@given(words, patterns)
def test_tracker_agrees_with_containment(w, p):
    t = AvoidanceTracker(p)
    assert t.avoids(w) == avoids(w, p)
    state = t.initial()
    for i, c in enumerate(w):
        state = t.extend(state, c)
        if state is None:
            assert contains_pattern(w[: i + 1], p)
            break
        assert avoids(w[: i + 1], p)


@given(words)
def test_graph_has_no_loops_and_depends_on_pairs(w):
    if not w or set(w) != set(range(1, max(w) + 1)):
        return
    g = word_to_graph(w)
    assert all(u != v for u, v in g.sorted_edges())
    for x, y in combinations(range(1, g.n + 1), 2):
        restricted = tuple(c for c in w if c in (x, y))
        assert g.has_edge(x, y) == alternates(restricted, x, y)
