"""Breadth-first search over 2-switches for a realization missing the edge v_r v_{r+1}."""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Optional

from ..core.graph import SimpleGraph, two_switch
from ..core.sequence import DegreeSequence
from ..errors import PreconditionError, SearchBudgetError

DEFAULT_SWITCH_BUDGET = 1_000_000


def _switches(graph: SimpleGraph):
    """Yielding every graph one valid 2-switch away, in a fixed order."""
    for (a, b), (c, d) in combinations(graph.sorted_edges(), 2):
        for x, y in ((c, d), (d, c)):
            if len({a, b, x, y}) < 4 or graph.has_edge(a, x) or graph.has_edge(b, y):
                continue
            yield two_switch(graph, (a, b), (x, y))


def edge_excluded_realization(seq: DegreeSequence, r: int, graph: SimpleGraph,
                              budget: int = DEFAULT_SWITCH_BUDGET) -> Optional[SimpleGraph]:
    """
    Finding a realization with the same per-vertex degrees that avoids the edge v_r v_{r+1}.
    - **seq**: π, with vertex i of the graph carrying d_{i+1}.
    - **r**: The index r; the top r+1 vertices are 0..r.
    - **graph**: A realization G whose top r+1 vertices miss at least one edge.
    - **budget**: Maximum number of visited realizations.
    - **returns**: The nearest such realization (G itself if the edge is already absent),
      or None if the whole 2-switch class was searched without success.
    - **raises**: PreconditionError on a degree mismatch, r out of range or a complete top block;
      SearchBudgetError when the visited-state budget runs out.
    """
    if graph.n != seq.n or graph.degrees != seq.terms:
        raise PreconditionError(f"graph degrees {graph.degrees} do not match {seq} vertex by vertex")
    if not 1 <= r <= seq.n - 1:
        raise PreconditionError(f"r={r} needs 1 <= r <= n-1 = {seq.n - 1}")
    top = range(r + 1)
    if graph.induced_edge_count(top) > (r + 1) * r // 2 - 1:
        raise PreconditionError(f"the top {r + 1} vertices induce a complete graph")

    target = (r - 1, r)
    if not graph.has_edge(*target):
        return graph

    visited = {graph.edges}
    queue = deque([graph])
    while queue:
        current = queue.popleft()
        for neighbor in _switches(current):
            if neighbor.edges in visited:
                continue
            if not neighbor.has_edge(*target):
                return neighbor
            visited.add(neighbor.edges)
            if len(visited) > budget:
                raise SearchBudgetError(f"2-switch search visited more than {budget} realizations", len(visited))
            queue.append(neighbor)
    return None
