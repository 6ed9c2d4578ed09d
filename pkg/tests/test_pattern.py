import pytest
from hypothesis import given, settings, strategies as st

from sigmagraph.core.graph import degree_sequence
from sigmagraph.core.pattern import (
    Complete, CompleteMinus, Cycle, Friendship, GenFriendship, GraphPattern, Join, Path, SingleVertex,
    Union, Z4, build, parse_pattern,
)
from sigmagraph.errors import ParseError, PatternError

from test_graph import graphs


@pytest.mark.parametrize("spec, vertices, edges", [
    (Z4(), 4, 4),
    (Union((Complete(3), Path(3))), 7, 6),
    (CompleteMinus(7, Union((Complete(3), Path(3)))), 7, 15),
    (Friendship(2), 5, 6),
    (Cycle(5), 5, 5),
    (Path(2), 3, 2),
    (Join(Complete(1), Union((Complete(2), SingleVertex()))), 4, 4),
    (GenFriendship(4, 2, 3), 8, 16),
])
def test_build_sizes(spec, vertices, edges):
    graph = build(spec)
    assert (graph.n, graph.edge_count) == (vertices, edges)


def test_build_degrees():
    assert degree_sequence(build(Z4())).terms == (3, 2, 2, 1)
    assert max(build(Friendship(2)).degrees) == 4


@pytest.mark.parametrize("text, expected", [
    ("K4", Complete(4)),
    ("c 5", Cycle(5)),
    ("2K2", Union((Complete(2), Complete(2)))),
    ("U(K3,P3)", Union((Complete(3), Path(3)))),
    ("M(7, U(K3, P3))", CompleteMinus(7, Union((Complete(3), Path(3))))),
    ("J(K1,U(K2,V))", Join(Complete(1), Union((Complete(2), SingleVertex())))),
    ("z4", Z4()),
    ("F2", Friendship(2)),
    ("F(4,2,3)", GenFriendship(4, 2, 3)),
])
def test_parse_pattern(text, expected):
    assert parse_pattern(text) == expected


@pytest.mark.parametrize("text", ["U(K3,P3)", "M(7,U(K3,P3))", "J(K1,U(K2,V))", "F(4,2,3)", "C4", "Z4"])
def test_str_round_trips(text):
    spec = parse_pattern(text)
    assert parse_pattern(str(spec)) == spec


@pytest.mark.parametrize("text", ["", "Q3", "K", "U(K3", "U(K3,P3))", "J(K1)", "Z5", "0K2"])
def test_parse_rejects_malformed_text(text):
    with pytest.raises(ParseError):
        parse_pattern(text)


@pytest.mark.parametrize("text", ["C2", "K0", "P0", "M(3,K4)", "F(2,3,1)"])
def test_ill_formed_families(text):
    with pytest.raises(PatternError):
        parse_pattern(text)


@pytest.mark.parametrize("k", range(1, 13))
def test_family_degree_sequences(k):
    assert degree_sequence(build(Complete(k))).terms == (k - 1,) * k
    assert degree_sequence(build(Path(k))).terms == (2,) * (k - 1) + (1, 1)
    if k >= 3:
        assert degree_sequence(build(Cycle(k))).terms == (2,) * k


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7), st.integers(min_value=0, max_value=3))
def test_complete_minus_edge_count(inner, extra):
    m = inner.n + extra
    built = build(CompleteMinus(m, GraphPattern(inner)))
    assert built.n == m
    assert built.edge_count == m * (m - 1) // 2 - inner.edge_count
    assert not any(built.has_edge(u, v) for u, v in inner.edges)
