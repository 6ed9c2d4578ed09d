"""
Realizations with fixed vertex degrees: vertex i always carries degree d_i.

`realizations` enumerates every labeled realization. `complete_realization`
is the kernel behind the potential search: given edges already placed among
the first k vertices, it looks for one realization that keeps them.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Optional

from ..core.graph import SimpleGraph
from ..core.sequence import DegreeSequence, is_graphical, is_graphical_terms
from ..errors import SearchLimitError, SequenceError

DEFAULT_REALIZATION_LIMIT = 10


def check_limit(n: int, limit: int, accept_cost: bool, what: str) -> None:
    """Refusing an exhaustive search on n vertices above the limit unless the cost is accepted."""
    if n > limit and not accept_cost:
        raise SearchLimitError(f"{what} on n={n} vertices exceeds the limit of {limit}; "
                               f"pass accept_cost=True to run it anyway")


def realizations(seq: DegreeSequence, limit: int = DEFAULT_REALIZATION_LIMIT,
                 accept_cost: bool = False) -> Iterator[SimpleGraph]:
    """
    Yielding every labeled realization of the sequence, vertex i having degree d_i.
    Vertices are processed in order; each picks its remaining neighbors among later
    vertices, and a choice is kept only if the later residual demands stay graphical.
    - **seq**: A graphical sequence.
    - **limit**: Largest n enumerated without accept_cost.
    - **accept_cost**: Lift the limit.
    - **raises**: SequenceError if seq is not graphical, SearchLimitError above the limit.
    """
    if not is_graphical(seq):
        raise SequenceError(f"{seq} is not graphical")
    check_limit(seq.n, limit, accept_cost, "realization enumeration")
    yield from _extend(0, list(seq.terms), [], seq.n)


def _extend(vertex: int, residual: list, edges: list, n: int) -> Iterator[SimpleGraph]:
    while vertex < n and residual[vertex] == 0:
        vertex += 1
    if vertex == n:
        yield SimpleGraph(n, frozenset(edges))
        return

    need = residual[vertex]
    candidates = [u for u in range(vertex + 1, n) if residual[u] > 0]
    residual[vertex] = 0
    for chosen in combinations(candidates, need):
        for u in chosen:
            residual[u] -= 1
        # Later vertices only need a graph among themselves, so this test is exact
        if is_graphical_terms(residual[vertex + 1:]):
            edges.extend((vertex, u) for u in chosen)
            yield from _extend(vertex + 1, residual, edges, n)
            del edges[len(edges) - need:]
        for u in chosen:
            residual[u] += 1
    residual[vertex] = need


def havel_hakimi(vertices: list, residual: dict) -> Optional[list]:
    """
    Realizing residual demands on the given vertices, which must have no edges yet.
    - **vertices**: Vertex labels to connect among themselves.
    - **residual**: Demand per vertex label.
    - **returns**: The edge list, or None if the demands are not graphical.
    """
    demand = {v: residual[v] for v in vertices if residual[v] > 0}
    edges = []
    while demand:
        v = min(demand, key=lambda u: (-demand[u], u))
        need = demand.pop(v)
        partners = sorted(demand, key=lambda u: (-demand[u], u))[:need]
        if len(partners) < need:
            return None
        for u in partners:
            edges.append((v, u))
            demand[u] -= 1
            if demand[u] == 0:
                del demand[u]
    return edges


class _Completion:
    """Backtracking over the neighbor choices of the fixed vertices 0..k-1."""

    def __init__(self, degrees: tuple, fixed_edges: frozenset, fixed_count: int):
        self.n = len(degrees)
        self.k = fixed_count
        self.fixed_edges = fixed_edges
        self.residual = list(degrees)
        for u, v in fixed_edges:
            self.residual[u] -= 1
            self.residual[v] -= 1
        self.added = []

    def run(self) -> Optional[SimpleGraph]:
        if min(self.residual, default=0) < 0 or not is_graphical_terms(self.residual):
            return None
        if not self._place(0):
            return None
        return SimpleGraph(self.n, frozenset(self.fixed_edges) | frozenset(self.added))

    def _place(self, i: int) -> bool:
        if i == self.k:
            # Only free vertices remain, and nothing constrains them
            free = list(range(self.k, self.n))
            tail = havel_hakimi(free, {v: self.residual[v] for v in free})
            if tail is None:
                return False
            self.added.extend(tail)
            return True

        need = self.residual[i]
        fixed_partners = [j for j in range(i + 1, self.k)
                          if self.residual[j] > 0 and (i, j) not in self.fixed_edges]

        # Free vertices with equal residual demand are interchangeable
        groups = {}
        for j in range(self.k, self.n):
            if self.residual[j] > 0:
                groups.setdefault(self.residual[j], []).append(j)
        ordered_groups = [groups[value] for value in sorted(groups, reverse=True)]
        free_total = sum(len(group) for group in ordered_groups)

        self.residual[i] = 0
        for size in range(min(need, len(fixed_partners)), -1, -1):
            if need - size > free_total:
                break
            for chosen in combinations(fixed_partners, size):
                for counts in _count_vectors(need - size, [len(g) for g in ordered_groups]):
                    partners = list(chosen)
                    for group, count in zip(ordered_groups, counts):
                        partners.extend(group[:count])
                    if self._try(i, partners):
                        return True
        self.residual[i] = need
        return False

    def _try(self, i: int, partners: list) -> bool:
        for j in partners:
            self.residual[j] -= 1
        mark = len(self.added)
        if is_graphical_terms(self.residual[i + 1:]):
            self.added.extend((i, j) for j in partners)
            if self._place(i + 1):
                return True
            del self.added[mark:]
        for j in partners:
            self.residual[j] += 1
        return False


def _count_vectors(total: int, sizes: list) -> Iterator[tuple]:
    """Distributing total picks over groups of the given sizes, greediest first."""
    if not sizes:
        if total == 0:
            yield ()
        return
    rest = sum(sizes[1:])
    for count in range(min(total, sizes[0]), max(0, total - rest) - 1, -1):
        for tail in _count_vectors(total - count, sizes[1:]):
            yield (count,) + tail


def complete_realization(degrees: tuple, fixed_edges: frozenset, fixed_count: int) -> Optional[SimpleGraph]:
    """
    Finding a realization that contains prescribed edges among the first vertices.
    - **degrees**: Degree of each vertex (vertex i has degrees[i]).
    - **fixed_edges**: Edges (u, v), u < v < fixed_count, that must be present.
    - **fixed_count**: Number k of leading vertices the fixed edges live on.
    - **returns**: A realization containing every fixed edge, or None if none exists.
    """
    return _Completion(tuple(degrees), frozenset(fixed_edges), fixed_count).run()
