"""
The extremal realization behind the lower bound on σ(K_{r+1} - U, n).

For n - r even it is K_{r-3} + ((n-r)/2 K_2 ∪ P_2); for n - r odd one K_2 is
traded for an isolated vertex inside the joined part. Its degree sequence is
not potentially K_{r+1} - U-graphic, so σ + 2 is a lower bound.
"""

from __future__ import annotations

from ..core.graph import SimpleGraph, degree_sequence
from ..core.pattern import Complete, Join, Path, SingleVertex, Union
from ..core.sequence import DegreeSequence
from ..errors import PreconditionError


def _check(r: int, n: int) -> None:
    if r < 4:
        raise PreconditionError(f"the extremal construction needs r >= 4, got r={r}")
    if n < r + 1:
        raise PreconditionError(f"the extremal construction needs n >= r+1 = {r + 1}, got n={n}")


def extremal_pattern(r: int, n: int) -> Join:
    """The construction as a pattern expression, branching on the parity of n - r."""
    _check(r, n)
    gap = n - r
    if gap % 2 == 0:
        parts = (Complete(2),) * (gap // 2) + (Path(2),)
    else:
        parts = (Complete(2),) * ((gap - 1) // 2) + (Path(2), SingleVertex())
    return Join(Complete(r - 3), Union(parts))


def extremal_construction(r: int, n: int) -> SimpleGraph:
    """
    Building the extremal graph on n vertices.
    - **r**: Clique parameter, at least 4.
    - **n**: Vertex count, at least r+1.
    - **returns**: The graph; the r-3 dominating vertices are 0..r-4.
    - **raises**: PreconditionError outside the range.
    """
    graph = extremal_pattern(r, n).build()
    assert graph.n == n
    return graph


def extremal_sequence(r: int, n: int) -> DegreeSequence:
    """
    The degree template of the construction, written directly in x^y notation:
    ((n-1)^{r-3}, r-1, (r-2)^{n-r+2}) for n - r even and
    ((n-1)^{r-3}, r-1, (r-2)^{n-r+1}, r-3) for n - r odd.
    """
    _check(r, n)
    if (n - r) % 2 == 0:
        return DegreeSequence.power((n - 1, r - 3), (r - 1, 1), (r - 2, n - r + 2))
    return DegreeSequence.power((n - 1, r - 3), (r - 1, 1), (r - 2, n - r + 1), (r - 3, 1))


def construction_bound(r: int, n: int) -> int:
    """σ(extremal_sequence(r, n)) + 2, a lower bound on σ(K_{r+1} - U, n) for every n >= r+1."""
    return extremal_sequence(r, n).sigma + 2


def construction_matches_template(r: int, n: int) -> bool:
    return degree_sequence(extremal_construction(r, n)) == extremal_sequence(r, n)
