"""
Potentially H-graphic sequences: does some realization of π contain H?

The default search places H on the k highest-degree vertices (always possible
when any realization contains H) and completes the remaining degrees around
it. The exhaustive mode walks every realization instead; both must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Union as TypingUnion

from ..core.graph import SimpleGraph
from ..core.pattern import PatternSpec
from ..core.sequence import DegreeSequence, is_graphical
from ..errors import PreconditionError, SequenceError
from .containment import Embedding, contains, pattern_order
from .realization import DEFAULT_REALIZATION_LIMIT, complete_realization, realizations

PatternLike = TypingUnion[SimpleGraph, PatternSpec]


@dataclass(frozen=True)
class PotentialWitness:
    """
    A realization of π together with an embedding of H into it.
    - **realization**: Graph with vertex i of degree d_i.
    - **embedding**: Where each pattern vertex sits in the realization.
    """
    realization: SimpleGraph
    embedding: Embedding

    def is_valid(self, seq: DegreeSequence, pattern: SimpleGraph) -> bool:
        """Checking the per-vertex degrees and that every pattern edge is present."""
        return (self.realization.degrees == seq.terms
                and self.embedding.is_valid(self.realization, pattern))

    def in_normal_form(self, seq: DegreeSequence) -> bool:
        """True when the embedded vertices carry exactly the top-k degrees of π."""
        k = len(self.embedding.mapping)
        carried = sorted((seq.terms[v] for v in self.embedding.mapping), reverse=True)
        return carried == list(seq.terms[:k])


def as_graph(pattern: PatternLike) -> SimpleGraph:
    return pattern.build() if isinstance(pattern, PatternSpec) else pattern


def _check_inputs(seq: DegreeSequence, pattern: SimpleGraph) -> None:
    if not is_graphical(seq):
        raise SequenceError(f"{seq} is not graphical")
    if pattern.n > seq.n:
        raise PreconditionError(f"pattern has {pattern.n} vertices but the sequence only {seq.n} terms")


def top_placements(seq: DegreeSequence, pattern: SimpleGraph):
    """
    Yielding maps pattern vertex -> position 0..k-1 of π, one per distinct
    assignment of top-k degrees (equal-degree positions are interchangeable).
    """
    k = pattern.n
    order = pattern_order(pattern)
    position = [-1] * k
    taken = [False] * k

    def assign(depth):
        if depth == k:
            yield tuple(position)
            return
        u = order[depth]
        tried = set()
        for p in range(k):
            degree = seq.terms[p]
            if taken[p] or degree in tried or degree < pattern.degree(u):
                continue
            tried.add(degree)
            taken[p] = True
            position[u] = p
            yield from assign(depth + 1)
            taken[p] = False
        position[u] = -1

    yield from assign(0)


def is_potentially(seq: DegreeSequence, pattern: PatternLike, exhaustive: bool = False,
                   limit: int = DEFAULT_REALIZATION_LIMIT,
                   accept_cost: bool = False) -> Optional[PotentialWitness]:
    """
    Deciding whether some realization of π contains H.
    - **seq**: A graphical sequence π.
    - **pattern**: H, as a SimpleGraph or a PatternSpec.
    - **exhaustive**: Debug mode; enumerate all realizations instead of placing H on top degrees.
    - **limit**, **accept_cost**: Realization-enumeration limit for the exhaustive mode.
    - **returns**: A PotentialWitness, or None if π is not potentially H-graphic.
    """
    graph = as_graph(pattern)
    _check_inputs(seq, graph)

    if exhaustive:
        for realization in realizations(seq, limit=limit, accept_cost=accept_cost):
            embedding = contains(realization, graph)
            if embedding is not None:
                witness = PotentialWitness(realization, embedding)
                assert witness.is_valid(seq, graph)
                return witness
        return None

    for placement in top_placements(seq, graph):
        fixed = frozenset(tuple(sorted((placement[u], placement[v]))) for u, v in graph.edges)
        realization = complete_realization(seq.terms, fixed, graph.n)
        if realization is not None:
            witness = PotentialWitness(realization, Embedding(placement))
            assert witness.is_valid(seq, graph) and witness.in_normal_form(seq)
            return witness
    return None


def is_potentially_clique_top(seq: DegreeSequence, r: int) -> bool:
    """
    Deciding whether π is potentially A_{r+1}-graphic: some realization has its
    r+1 largest-degree vertices inducing a clique.
    - **raises**: SequenceError if π is not graphical, PreconditionError if n < r+1.
    """
    if not is_graphical(seq):
        raise SequenceError(f"{seq} is not graphical")
    if r < 0 or seq.n < r + 1:
        raise PreconditionError(f"need n >= r+1, got n={seq.n}, r={r}")
    clique = frozenset(combinations(range(r + 1), 2))
    return complete_realization(seq.terms, clique, r + 1) is not None


def is_forcibly(seq: DegreeSequence, pattern: PatternLike, limit: int = DEFAULT_REALIZATION_LIMIT,
                accept_cost: bool = False) -> bool:
    """Deciding whether every realization of π contains H."""
    graph = as_graph(pattern)
    _check_inputs(seq, graph)
    return all(contains(realization, graph) is not None
               for realization in realizations(seq, limit=limit, accept_cost=accept_cost))
