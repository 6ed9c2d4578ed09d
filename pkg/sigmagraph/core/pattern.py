"""
Pattern specifications: expression trees naming the graph families H that the
potential and sigma searches look for, plus their text grammar.

Text grammar (whitespace-insensitive, case-insensitive):

    pattern := [count] atom
    atom    := K<k> | C<k> | P<k> | Z4 | V | F<k> | F(t,r,k)
             | U(pattern, pattern, ...) | J(pattern, pattern) | M(m, pattern)

`P<k>` is the path with k edges on k+1 vertices. `2K2` is shorthand for U(K2,K2).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..errors import ParseError, PatternError
from .graph import SimpleGraph, disjoint_union, join


class PatternSpec:
    """Base class of every pattern node."""

    def build(self) -> SimpleGraph:
        raise NotImplementedError

    @property
    def vertex_count(self) -> int:
        return self.build().n


@dataclass(frozen=True)
class Complete(PatternSpec):
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise PatternError(f"K{self.k}: a complete graph needs k >= 1")

    def build(self):
        return SimpleGraph.complete(self.k)

    def __str__(self):
        return f"K{self.k}"


@dataclass(frozen=True)
class Cycle(PatternSpec):
    k: int

    def __post_init__(self):
        if self.k < 3:
            raise PatternError(f"C{self.k}: a cycle needs k >= 3")

    def build(self):
        return SimpleGraph(self.k, frozenset((i, (i + 1) % self.k) for i in range(self.k)))

    def __str__(self):
        return f"C{self.k}"


@dataclass(frozen=True)
class Path(PatternSpec):
    """The path with k edges on k+1 vertices (P_k)."""
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise PatternError(f"P{self.k}: a path needs k >= 1 edges")

    def build(self):
        return SimpleGraph(self.k + 1, frozenset((i, i + 1) for i in range(self.k)))

    def __str__(self):
        return f"P{self.k}"


@dataclass(frozen=True)
class Union(PatternSpec):
    parts: tuple

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise PatternError("a union needs at least one part")
        object.__setattr__(self, "parts", parts)

    def build(self):
        return disjoint_union([part.build() for part in self.parts])

    def __str__(self):
        return "U(" + ",".join(str(part) for part in self.parts) + ")"


@dataclass(frozen=True)
class Join(PatternSpec):
    left: PatternSpec
    right: PatternSpec

    def build(self):
        return join(self.left.build(), self.right.build())

    def __str__(self):
        return f"J({self.left},{self.right})"


@dataclass(frozen=True)
class CompleteMinus(PatternSpec):
    """K_m - H, with H placed on vertices 0..|V(H)|-1 of K_m."""
    m: int
    inner: PatternSpec

    def __post_init__(self):
        if self.m < 1:
            raise PatternError(f"M({self.m}, ...): m must be at least 1")
        if self.inner.vertex_count > self.m:
            raise PatternError(f"{self.inner} has {self.inner.vertex_count} vertices and does not fit in K{self.m}")

    def build(self):
        removed = self.inner.build().edges
        return SimpleGraph(self.m, frozenset(e for e in combinations(range(self.m), 2) if e not in removed))

    def __str__(self):
        return f"M({self.m},{self.inner})"


@dataclass(frozen=True)
class GenFriendship(PatternSpec):
    """F_{t,r,k}: k copies of K_t sharing a common set of r vertices."""
    t: int
    r: int
    k: int

    def __post_init__(self):
        if self.t < 1 or self.k < 1 or not 0 <= self.r <= self.t:
            raise PatternError(f"F({self.t},{self.r},{self.k}): need t >= 1, k >= 1, 0 <= r <= t")

    def build(self):
        private = self.t - self.r
        edges = set()
        for copy in range(self.k):
            members = list(range(self.r))
            start = self.r + copy * private
            members.extend(range(start, start + private))
            edges.update(combinations(members, 2))
        return SimpleGraph(self.r + self.k * private, frozenset(edges))

    def __str__(self):
        return f"F({self.t},{self.r},{self.k})"


@dataclass(frozen=True)
class Friendship(PatternSpec):
    """F_k: k triangles sharing one vertex."""
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise PatternError(f"F{self.k}: need k >= 1 triangles")

    def build(self):
        return GenFriendship(3, 1, self.k).build()

    def __str__(self):
        return f"F{self.k}"


@dataclass(frozen=True)
class Z4(PatternSpec):
    """K_4 - P_2: a triangle with a pendant edge."""

    def build(self):
        return CompleteMinus(4, Path(2)).build()

    def __str__(self):
        return "Z4"


@dataclass(frozen=True)
class SingleVertex(PatternSpec):

    def build(self):
        return SimpleGraph.empty(1)

    def __str__(self):
        return "V"


@dataclass(frozen=True)
class GraphPattern(PatternSpec):
    """An explicit labeled graph used as a pattern node (no text form of its own)."""
    graph: SimpleGraph

    def build(self):
        return self.graph

    def __str__(self):
        return f"G({self.graph.n}:{','.join(f'{u}-{v}' for u, v in self.graph.sorted_edges())})"


def build(spec: PatternSpec) -> SimpleGraph:
    """
    Building the labeled graph named by a pattern.
    - **spec**: Any PatternSpec node.
    - **returns**: The SimpleGraph; unions use consecutive vertex ranges.
    """
    if not isinstance(spec, PatternSpec):
        raise PatternError(f"{spec!r} is not a pattern specification")
    return spec.build()


# --- Text grammar ---

class _PatternParser:
    """Recursive-descent parser over the whitespace-free, upper-cased text."""

    def __init__(self, text: str):
        self.original = text
        self.text = "".join(text.split()).upper()
        self.pos = 0

    def fail(self, reason: str):
        raise ParseError(f"{reason} at position {self.pos} in pattern {self.original!r}")

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str):
        if self.peek() != char:
            self.fail(f"expected {char!r}")
        self.pos += 1

    def number(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected a number")
        return int(self.text[start:self.pos])

    def parse(self) -> PatternSpec:
        spec = self.pattern()
        if self.pos != len(self.text):
            self.fail("unexpected trailing text")
        return spec

    def pattern(self) -> PatternSpec:
        count = self.number() if self.peek().isdigit() else 1
        if count < 1:
            self.fail("a multiplier must be at least 1")
        atom = self.atom()
        return atom if count == 1 else Union((atom,) * count)

    def arguments(self) -> list:
        self.expect("(")
        items = [self.pattern()]
        while self.peek() == ",":
            self.pos += 1
            items.append(self.pattern())
        self.expect(")")
        return items

    def atom(self) -> PatternSpec:
        head = self.peek()
        if not head:
            self.fail("unexpected end")
        self.pos += 1
        if head == "K":
            return Complete(self.number())
        if head == "C":
            return Cycle(self.number())
        if head == "P":
            return Path(self.number())
        if head == "V":
            return SingleVertex()
        if head == "Z":
            if self.number() != 4:
                self.fail("only Z4 is defined")
            return Z4()
        if head == "F":
            if self.peek() != "(":
                return Friendship(self.number())
            self.expect("(")
            t = self.number()
            self.expect(",")
            r = self.number()
            self.expect(",")
            k = self.number()
            self.expect(")")
            return GenFriendship(t, r, k)
        if head == "U":
            return Union(tuple(self.arguments()))
        if head == "J":
            items = self.arguments()
            if len(items) != 2:
                self.fail("a join takes exactly two patterns")
            return Join(items[0], items[1])
        if head == "M":
            self.expect("(")
            m = self.number()
            self.expect(",")
            inner = self.pattern()
            self.expect(")")
            return CompleteMinus(m, inner)
        self.pos -= 1
        self.fail(f"unknown constructor {head!r}")


def parse_pattern(text: str) -> PatternSpec:
    """
    Parsing the pattern grammar, e.g. "M(7, U(K3,P3))".
    - **raises**: ParseError on malformed syntax, PatternError on an ill-formed family (e.g. C2).
    """
    return _PatternParser(text).parse()
