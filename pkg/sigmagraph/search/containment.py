"""
Subgraph (not induced) containment by backtracking over bitmask neighborhoods.

Pattern vertices are placed by decreasing degree; each host candidate must be
unused, have at least the pattern vertex's degree, and be adjacent to the
images of all already-placed pattern neighbors. Host candidates are tried by
decreasing host degree, so hub vertices are exhausted first. Only one host
vertex per twin class is tried at each node, and a host vertex must keep as
many free neighbors as the pattern vertex has neighbors still unplaced.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..core.graph import SimpleGraph
from ..core.pattern import Complete, Cycle, Path, Union, Z4
from ..errors import PreconditionError, SearchBudgetError
from ..utils import console

DEFAULT_CONTAINMENT_BUDGET = 100_000_000


@dataclass(frozen=True)
class Embedding:
    """
    An injective map from pattern vertices to host vertices.
    - **mapping**: mapping[p] is the host vertex carrying pattern vertex p.
    """
    mapping: tuple

    def is_valid(self, host: SimpleGraph, pattern: SimpleGraph) -> bool:
        """Checking injectivity and that every pattern edge lands on a host edge."""
        if len(self.mapping) != pattern.n or len(set(self.mapping)) != pattern.n:
            return False
        if any(not 0 <= v < host.n for v in self.mapping):
            return False
        return all(host.has_edge(self.mapping[u], self.mapping[v]) for u, v in pattern.edges)


def pattern_order(pattern: SimpleGraph) -> list:
    """
    Ordering pattern vertices by decreasing degree; ties go to the vertex with
    more already-ordered neighbors, then to the lower label.
    """
    remaining = set(range(pattern.n))
    placed = 0
    order = []
    while remaining:
        best = max(remaining, key=lambda v: (pattern.degree(v),
                                             (pattern.adjacency[v] & placed).bit_count(), -v))
        order.append(best)
        remaining.discard(best)
        placed |= 1 << best
    return order


def twin_classes(graph: SimpleGraph) -> list:
    """
    Labeling each vertex with the smallest vertex of its twin class.
    v and w are twins when N(v) - {w} = N(w) - {v}; adjacent and non-adjacent
    twins never mix, so the relation is an equivalence.
    """
    adjacency = graph.adjacency
    twin = list(range(graph.n))
    for v in range(graph.n):
        for w in range(v):
            if twin[w] == w and adjacency[v] & ~(1 << w) == adjacency[w] & ~(1 << v):
                twin[v] = w
                break
    return twin


class ContainmentSearch:
    """
    One containment query with its node counter.
    - **host**: The graph searched in.
    - **pattern**: The graph searched for.
    - **budget**: Maximum number of search nodes before SearchBudgetError.
    - **progress**: Show a progress bar over the top-level branches on stderr.
    """

    def __init__(self, host: SimpleGraph, pattern: SimpleGraph, budget: int = DEFAULT_CONTAINMENT_BUDGET,
                 progress: bool = False):
        self.host = host
        self.pattern = pattern
        self.budget = budget
        self.progress = progress
        self.nodes = 0

        self.order = pattern_order(pattern)
        self.host_order = sorted(range(host.n), key=lambda v: (-host.degree(v), v))
        self.twin = twin_classes(host)

        # Earlier-placed pattern neighbors, later-placed neighbor count and the degree filter per depth
        self.back = []
        self.ahead = []
        self.eligible = []
        for depth, u in enumerate(self.order):
            self.back.append([w for w in self.order[:depth] if pattern.has_edge(u, w)])
            self.ahead.append(sum(1 for w in self.order[depth + 1:] if pattern.has_edge(u, w)))
            mask = 0
            for v in range(host.n):
                if host.degree(v) >= pattern.degree(u):
                    mask |= 1 << v
            self.eligible.append(mask)

    def _degrees_dominated(self) -> bool:
        wanted = sorted(self.pattern.degrees, reverse=True)
        offered = sorted(self.host.degrees, reverse=True)
        return all(w <= o for w, o in zip(wanted, offered))

    def run(self) -> Optional[Embedding]:
        """
        Searching for the first embedding in the deterministic order.
        - **returns**: An Embedding, or None when the pattern does not occur.
        - **raises**: SearchBudgetError when the node budget runs out.
        """
        if self.pattern.n > self.host.n or self.pattern.edge_count > self.host.edge_count:
            return None
        if not self._degrees_dominated():
            return None
        mapping = [-1] * self.pattern.n
        if self._extend(0, mapping, 0):
            return Embedding(tuple(mapping))
        return None

    def _candidates(self, depth: int, mapping: list, used: int):
        """
        Host vertices for the pattern vertex at this depth, one per twin class.
        Unused twins are swapped by a host automorphism that fixes the partial map.
        """
        adjacency = self.host.adjacency
        allowed = self.eligible[depth] & ~used
        for w in self.back[depth]:
            allowed &= adjacency[mapping[w]]
        ahead = self.ahead[depth]
        tried = set()
        for v in self.host_order:
            if not allowed >> v & 1 or self.twin[v] in tried:
                continue
            # v must keep enough free neighbors for the pattern neighbors still to come
            if (adjacency[v] & ~used).bit_count() < ahead:
                continue
            tried.add(self.twin[v])
            yield v

    def _extend(self, depth: int, mapping: list, used: int) -> bool:
        if depth == len(self.order):
            return True
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetError(f"containment search exceeded {self.budget} nodes", self.nodes)

        candidates = self._candidates(depth, mapping, used)
        if depth == 0 and self.progress:
            candidates = console.progress(list(candidates), desc="containment", enabled=True)

        u = self.order[depth]
        for v in candidates:
            mapping[u] = v
            if self._extend(depth + 1, mapping, used | 1 << v):
                return True
        mapping[u] = -1
        return False


def contains(host: SimpleGraph, pattern: SimpleGraph, budget: int = DEFAULT_CONTAINMENT_BUDGET) -> Optional[Embedding]:
    """
    Looking for the pattern as a (not necessarily induced) subgraph of the host.
    - **host**: The graph G.
    - **pattern**: The graph H.
    - **budget**: Search-node budget.
    - **returns**: The first Embedding in search order, or None.
    """
    return ContainmentSearch(host, pattern, budget).run()


# --- Theorem hypotheses on U ---

K3_UNION_P3 = Union((Complete(3), Path(3)))


def u_hypothesis_violations(u: SimpleGraph, r: int) -> list:
    """
    Listing which hypotheses on U fail: k vertices with 7 <= k <= r+1, j >= 6
    edges, containing K_3 ∪ P_3, and containing neither C_4 nor Z_4.
    - **raises**: PreconditionError if r < 6.
    """
    if r < 6:
        raise PreconditionError(f"r={r}: the hypotheses on U are stated for r >= 6")
    problems = []
    if not 7 <= u.n <= r + 1:
        problems.append(f"U has {u.n} vertices, needs 7 <= k <= {r + 1}")
    if u.edge_count < 6:
        problems.append(f"U has {u.edge_count} edges, needs j >= 6")
    if contains(u, K3_UNION_P3.build()) is None:
        problems.append("U does not contain K3 ∪ P3")
    if contains(u, Cycle(4).build()) is not None:
        problems.append("U contains C4")
    if contains(u, Z4().build()) is not None:
        problems.append("U contains Z4")
    return problems


def validate_U(u: SimpleGraph, r: int) -> bool:
    """True iff U satisfies every hypothesis placed on it alongside r."""
    return not u_hypothesis_violations(u, r)
