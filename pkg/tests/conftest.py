import random
from itertools import combinations, combinations_with_replacement, product

import networkx as nx
import pytest

from sigmagraph.core.graph import SimpleGraph
from sigmagraph.core.sequence import DegreeSequence, is_graphical
from sigmagraph.extremal.rules import SufficientRule, sufficient_condition


def nonincreasing_sequences(n):
    """Every nonincreasing sequence of length n with 0 <= d_i <= n-1."""
    for terms in combinations_with_replacement(range(n - 1, -1, -1), n):
        yield DegreeSequence(terms)


def labeled_graphs(n):
    """Every labeled simple graph on n vertices."""
    pairs = list(combinations(range(n), 2))
    for bits in product((False, True), repeat=len(pairs)):
        yield SimpleGraph(n, frozenset(pair for pair, on in zip(pairs, bits) if on))


def four_vertex_patterns():
    """The 11 graphs on four vertices, one per isomorphism class."""
    return [SimpleGraph.from_networkx(g) for g in nx.graph_atlas_g() if g.number_of_nodes() == 4]


def sorted_by_degree(graph):
    """Relabeling so that vertex i carries the i-th largest degree."""
    order = sorted(range(graph.n), key=lambda v: (-graph.degree(v), v))
    position = {v: i for i, v in enumerate(order)}
    return graph.relabel([position[v] for v in range(graph.n)])


def sample_rule_sequences(rule, n, count, seed, low, high):
    """
    Rejection sampling of graphical sequences that pass a rule's hypotheses.
    - **low**, **high**: Per-position bounds for the raw draws (lists of length n).
    """
    rng = random.Random(seed)
    found = []
    while len(found) < count:
        seq = DegreeSequence.of(rng.randint(a, b) for a, b in zip(low, high))
        if is_graphical(seq) and sufficient_condition(seq, rule):
            found.append(seq)
    return found


@pytest.fixture(scope="session")
def patterns4():
    return four_vertex_patterns()


@pytest.fixture(scope="session")
def l31_samples():
    # r=6, n=14: d_1..d_3 >= 11, 10, 9, d_4 >= 5, d_7 >= 4, sum >= 86
    low = [11, 10, 9, 5, 4, 4, 4] + [0] * 7
    high = [13] * 14
    return sample_rule_sequences(SufficientRule("L3_1", 6), 14, 200, seed=2024, low=low, high=high)
