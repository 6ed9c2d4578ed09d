"""
Labeled simple graphs on vertices 0..n-1.

Adjacency is kept as one integer bitmask per vertex so that the searches can
intersect neighborhoods with a single `&`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations, product
from typing import Iterable, Sequence

import networkx as nx

from ..errors import GraphError, ParseError, SwitchRejection, TwoSwitchError
from .sequence import DegreeSequence

CANONICAL_FORM_LIMIT = 10


def _edge(u: int, v: int) -> tuple:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    """
    An undirected simple graph.
    - **n**: Vertex count; vertices are 0..n-1.
    - **edges**: Unordered vertex pairs, stored as (low, high) tuples.
    """
    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 0:
            raise GraphError(f"vertex count {self.n!r} must be a nonnegative integer")
        raw = list(self.edges)
        normalized = set()
        for pair in raw:
            u, v = pair
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {u}-{v} has an endpoint outside 0..{self.n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            normalized.add(_edge(u, v))
        if len(normalized) != len(raw):
            raise GraphError("repeated edge")
        object.__setattr__(self, "edges", frozenset(normalized))

    # --- Constructors ---

    @classmethod
    def empty(cls, n: int) -> "SimpleGraph":
        return cls(n, frozenset())

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        return cls(n, frozenset(combinations(range(n), 2)))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "SimpleGraph":
        """Converting a networkx graph; nodes are relabeled 0..n-1 in sorted order."""
        order = sorted(graph.nodes())
        index = {node: i for i, node in enumerate(order)}
        return cls(len(order), frozenset(_edge(index[u], index[v]) for u, v in graph.edges()))

    @classmethod
    def parse(cls, text: str) -> "SimpleGraph":
        """
        Parsing the graph text format: a line "n m", then m lines "u v" (0-based).
        - **raises**: ParseError on a malformed header, a wrong edge count or an invalid edge.
        """
        lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
        if not lines:
            raise ParseError("empty graph text")
        header = lines[0].split()
        if len(header) != 2 or not all(token.isdigit() for token in header):
            raise ParseError(f"graph header {lines[0]!r} must be 'n m'")
        n, m = int(header[0]), int(header[1])
        if len(lines) - 1 != m:
            raise ParseError(f"header announces {m} edges but {len(lines) - 1} follow")
        edges = []
        for line in lines[1:]:
            tokens = line.split()
            if len(tokens) != 2 or not all(token.isdigit() for token in tokens):
                raise ParseError(f"edge line {line!r} must be 'u v'")
            edges.append((int(tokens[0]), int(tokens[1])))
        try:
            return cls(n, edges)
        except GraphError as e:
            raise ParseError(str(e)) from e

    # --- Structure ---

    @cached_property
    def adjacency(self) -> tuple:
        """Neighborhood bitmasks: bit v of adjacency[u] is set iff uv is an edge."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def degrees(self) -> tuple:
        """Degree of each vertex, indexed by vertex (not sorted)."""
        return tuple(mask.bit_count() for mask in self.adjacency)

    @property
    def edge_count(self) -> int:
        """ε(G)."""
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and _edge(u, v) in self.edges

    def neighbors(self, v: int) -> tuple:
        mask = self.adjacency[v]
        return tuple(u for u in range(self.n) if mask >> u & 1)

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def induced_edge_count(self, vertices: Iterable[int]) -> int:
        """ε(G[v_1, ..., v_k]) without relabeling."""
        chosen = 0
        for v in vertices:
            chosen |= 1 << v
        return sum((self.adjacency[v] & chosen).bit_count() for v in range(self.n)
                   if chosen >> v & 1) // 2

    def induced(self, vertices: Sequence[int]) -> "SimpleGraph":
        """
        Extracting G[v_1, ..., v_k], relabeled so vertices[i] becomes i.
        - **vertices**: Distinct host vertices, in the order they should be labeled.
        """
        position = {v: i for i, v in enumerate(vertices)}
        if len(position) != len(vertices):
            raise GraphError("induced subgraph vertices must be distinct")
        kept = [_edge(position[u], position[v]) for u, v in self.edges
                if u in position and v in position]
        return SimpleGraph(len(vertices), frozenset(kept))

    def with_edges(self, added: Iterable = (), removed: Iterable = ()) -> "SimpleGraph":
        edges = set(self.edges)
        edges.difference_update(_edge(u, v) for u, v in removed)
        edges.update(_edge(u, v) for u, v in added)
        return SimpleGraph(self.n, frozenset(edges))

    def relabel(self, mapping: Sequence[int], n: int = None) -> "SimpleGraph":
        """Moving vertex v to mapping[v] inside a graph on n (default self.n) vertices."""
        return SimpleGraph(self.n if n is None else n,
                           frozenset(_edge(mapping[u], mapping[v]) for u, v in self.edges))

    def to_text(self) -> str:
        lines = [f"{self.n} {self.edge_count}"]
        lines.extend(f"{u} {v}" for u, v in self.sorted_edges())
        return "\n".join(lines)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    def __str__(self):
        return self.to_text()


# --- Graph operations ---

def disjoint_union(graphs: Sequence[SimpleGraph]) -> SimpleGraph:
    """Placing the graphs side by side on consecutive vertex ranges."""
    offset = 0
    edges = []
    for graph in graphs:
        edges.extend((u + offset, v + offset) for u, v in graph.edges)
        offset += graph.n
    return SimpleGraph(offset, frozenset(edges))


def join(left: SimpleGraph, right: SimpleGraph) -> SimpleGraph:
    """The join G + H: disjoint union plus every edge between the two sides."""
    union = disjoint_union([left, right])
    cross = product(range(left.n), range(left.n, left.n + right.n))
    return union.with_edges(added=cross)


def degree_sequence(graph: SimpleGraph) -> DegreeSequence:
    """The nonincreasing degree multiset of the graph."""
    return DegreeSequence.of(graph.degrees)


def two_switch(graph: SimpleGraph, ab: tuple, cd: tuple) -> SimpleGraph:
    """
    Replacing edges ab, cd by ac, bd; every vertex keeps its degree.
    - **graph**: The host graph.
    - **ab**, **cd**: Oriented edges (a, b) and (c, d) of the graph.
    - **returns**: G - {ab, cd} + {ac, bd}.
    - **raises**: TwoSwitchError with the reason code of the violated precondition.
    """
    a, b = ab
    c, d = cd
    if len({a, b, c, d}) != 4:
        raise TwoSwitchError(SwitchRejection.REPEATED_VERTEX, f"vertices {a},{b},{c},{d} are not distinct")
    for u, v in (ab, cd):
        if not graph.has_edge(u, v):
            raise TwoSwitchError(SwitchRejection.MISSING_EDGE, f"{u}-{v} is not an edge")
    for u, v in ((a, c), (b, d)):
        if graph.has_edge(u, v):
            raise TwoSwitchError(SwitchRejection.EXISTING_EDGE, f"{u}-{v} is already an edge")
    return graph.with_edges(added=[(a, c), (b, d)], removed=[ab, cd])


def canonical_form(graph: SimpleGraph) -> SimpleGraph:
    """
    A canonical relabeling: isomorphic graphs map to the same SimpleGraph.
    Minimizes the edge bitmask over vertex orders that list vertices by
    nonincreasing degree, so only permutations inside degree classes are tried.
    - **raises**: GraphError above CANONICAL_FORM_LIMIT vertices.
    """
    n = graph.n
    if n > CANONICAL_FORM_LIMIT:
        raise GraphError(f"canonical form is limited to {CANONICAL_FORM_LIMIT} vertices, got {n}")

    classes = {}
    for v in range(n):
        classes.setdefault(graph.degree(v), []).append(v)
    groups = [classes[degree] for degree in sorted(classes, reverse=True)]

    best_mask, best_order = None, None
    for arrangement in product(*(permutations(group) for group in groups)):
        order = [v for group in arrangement for v in group]
        position = {v: i for i, v in enumerate(order)}
        mask = 0
        for u, v in graph.edges:
            i, j = sorted((position[u], position[v]))
            mask |= 1 << (i * n + j)
        if best_mask is None or mask < best_mask:
            best_mask, best_order = mask, order

    position = {v: i for i, v in enumerate(best_order or [])}
    return graph.relabel([position[v] for v in range(n)])
