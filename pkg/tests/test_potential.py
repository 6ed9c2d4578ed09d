import pytest
from hypothesis import given, settings, strategies as st

from sigmagraph.core.graph import SimpleGraph
from sigmagraph.core.pattern import Complete, Cycle, Union, parse_pattern
from sigmagraph.core.sequence import DegreeSequence, enumerate_graphical
from sigmagraph.errors import PreconditionError, SequenceError
from sigmagraph.search.containment import contains
from sigmagraph.search.potential import (
    is_forcibly, is_potentially, is_potentially_clique_top, top_placements,
)
from sigmagraph.search.realization import realizations

TWO_K2 = Union((Complete(2), Complete(2)))


@pytest.mark.parametrize("terms, pattern, found", [
    ((2, 2, 2), Complete(3), True),
    ((3, 1, 1, 1), TWO_K2, False),
    ((2, 2, 2, 2), Complete(3), False),
    ((3, 3, 2, 2, 2), Complete(3), True),
    ((3, 3, 2, 2), Cycle(4), True),
    ((3, 2, 2, 1), Cycle(4), False),
])
def test_is_potentially_examples(terms, pattern, found):
    seq = DegreeSequence(terms)
    witness = is_potentially(seq, pattern)
    assert (witness is not None) is found
    if witness is not None:
        graph = pattern.build()
        assert witness.is_valid(seq, graph)
        assert witness.in_normal_form(seq)


@pytest.mark.parametrize("terms, r, expected", [
    ((3, 3, 3, 3), 3, True),
    ((2, 2, 2, 2), 2, False),
    ((2, 2, 2), 2, True),
    ((4, 3, 3, 3, 3), 3, False),
    ((3, 3, 3, 1, 1, 1), 2, True),
])
def test_clique_top_examples(terms, r, expected):
    assert is_potentially_clique_top(DegreeSequence(terms), r) is expected


def test_clique_top_against_realizations():
    for seq in enumerate_graphical(6):
        for r in range(1, 5):
            expected = any(graph.induced_edge_count(range(r + 1)) == r * (r + 1) // 2
                           for graph in realizations(seq))
            assert is_potentially_clique_top(seq, r) == expected, (seq, r)


def test_refusals():
    with pytest.raises(SequenceError):
        is_potentially(DegreeSequence((3, 3, 1, 1)), Complete(2))
    with pytest.raises(PreconditionError):
        is_potentially(DegreeSequence((1, 1)), Complete(3))
    with pytest.raises(PreconditionError):
        is_potentially_clique_top(DegreeSequence((1, 1)), 2)


def test_top_placements_skip_equal_degree_duplicates():
    seq = DegreeSequence((3, 3, 3, 3, 2, 2))
    placements = list(top_placements(seq, Complete(4).build()))
    assert len(placements) == 1
    mixed = DegreeSequence((4, 3, 3, 2, 2, 2))
    assert len(list(top_placements(mixed, parse_pattern("P2").build()))) == 3


@pytest.mark.slow
@pytest.mark.parametrize("n", [4, 5, 6])
def test_pruned_search_agrees_with_exhaustive(n, patterns4):
    for seq in enumerate_graphical(n):
        for pattern in patterns4:
            pruned = is_potentially(seq, pattern)
            exhaustive = is_potentially(seq, pattern, exhaustive=True)
            assert (pruned is None) == (exhaustive is None), (seq, pattern.sorted_edges())
            if exhaustive is not None:
                assert exhaustive.is_valid(seq, pattern)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=4, max_value=7), st.data())
def test_witness_is_valid_on_random_sequences(n, data):
    sequences = list(enumerate_graphical(n))
    seq = data.draw(st.sampled_from(sequences))
    pattern = data.draw(st.sampled_from([Complete(3), Cycle(4), TWO_K2, parse_pattern("Z4"),
                                         parse_pattern("M(4,K2)")]))
    witness = is_potentially(seq, pattern)
    if witness is not None:
        assert witness.is_valid(seq, pattern.build())


def test_is_forcibly():
    assert is_forcibly(DegreeSequence((2, 2, 2)), Complete(3))
    # K_{2,3} realizes (3,3,2,2,2) without a triangle
    assert not is_forcibly(DegreeSequence((3, 3, 2, 2, 2)), Complete(3))
    star = DegreeSequence((3, 1, 1, 1))
    assert not is_forcibly(star, TWO_K2)
    # (2,2,2,2,2) only has 5-cycles: potentially and forcibly C5, never K3
    five = DegreeSequence((2,) * 5)
    assert is_forcibly(five, Cycle(5))
    assert not is_forcibly(five, Complete(3))
    assert all(contains(graph, Cycle(5).build()) for graph in realizations(five))


def test_graph_patterns_are_accepted():
    path = SimpleGraph(3, frozenset({(0, 1), (1, 2)}))
    assert is_potentially(DegreeSequence((2, 1, 1)), path) is not None
