"""
Brute-force σ(H, n): the least even l such that every graphical n-term
sequence with degree sum at least l is potentially H-graphic.

Graphical sequences are grouped by degree sum and swept from the top level
down. The first level holding a sequence that is not potentially H-graphic
gives the maximum M, so σ(H, n) = M + 2 and every lower level is skipped.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Optional

from ..core.graph import SimpleGraph
from ..core.sequence import DegreeSequence, enumerate_graphical
from ..errors import PreconditionError
from ..search.potential import PatternLike, as_graph, is_forcibly, is_potentially
from ..search.realization import check_limit
from ..utils import console

DEFAULT_BRUTEFORCE_LIMIT = 8


@dataclass(frozen=True)
class SigmaResult:
    """
    The outcome of one brute-force sweep.
    - **value**: σ(H, n), always even.
    - **certificate**: A maximum-σ graphical sequence that fails the property, or None
      when every swept sequence has it.
    - **allow_zeros**: Whether sequences with zero terms were swept.
    - **checked**: Number of sequences whose property was evaluated.
    """
    value: int
    certificate: Optional[DegreeSequence]
    allow_zeros: bool = True
    checked: int = 0

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "certificate": None if self.certificate is None else str(self.certificate),
            "certificate_sigma": None if self.certificate is None else self.certificate.sigma,
            "allow_zeros": self.allow_zeros,
            "checked": self.checked,
        }


def _levels(n: int, allow_zeros: bool) -> list:
    """Graphical sequences grouped by σ, highest σ first, enumeration order kept inside a level."""
    grouped = defaultdict(list)
    for seq in enumerate_graphical(n, positive=not allow_zeros):
        grouped[seq.sigma].append(seq)
    return [(sigma, grouped[sigma]) for sigma in sorted(grouped, reverse=True)]


def _potentially(seq: DegreeSequence, graph: SimpleGraph) -> bool:
    return is_potentially(seq, graph) is not None


def _forcibly(seq: DegreeSequence, graph: SimpleGraph) -> bool:
    return is_forcibly(seq, graph, accept_cost=True)


def _sweep(graph: SimpleGraph, n: int, allow_zeros: bool, check, threads: int,
           progress: bool, desc: str) -> SigmaResult:
    levels = _levels(n, allow_zeros)
    if not levels:
        raise PreconditionError(f"no graphical sequence of length {n} in this mode")

    checked = 0
    pool = Pool(processes=threads) if threads > 1 else None
    try:
        for sigma, level in console.progress(levels, total=len(levels), desc=desc, enabled=progress):
            if pool is not None and len(level) > 1:
                verdicts = pool.starmap(check, [(seq, graph) for seq in level])
            else:
                verdicts = []
                for seq in level:
                    verdicts.append(check(seq, graph))
                    if not verdicts[-1]:
                        break
            checked += len(verdicts)
            if not all(verdicts):
                # First failure in enumeration order is the reported certificate
                certificate = level[verdicts.index(False)]
                return SigmaResult(sigma + 2, certificate, allow_zeros, checked)
    finally:
        if pool is not None:
            pool.close()
            pool.join()

    # Every sequence has the property: the least degree sum swept is the threshold
    lowest = levels[-1][0]
    return SigmaResult(lowest, None, allow_zeros, checked)


def _prepare(pattern: PatternLike, n: int, limit: int, accept_cost: bool, what: str) -> SimpleGraph:
    graph = as_graph(pattern)
    if graph.n > n:
        raise PreconditionError(f"pattern has {graph.n} vertices, more than n={n}")
    check_limit(n, limit, accept_cost, what)
    return graph


def sigma_bruteforce(pattern: PatternLike, n: int, allow_zeros: bool = True, *,
                     limit: int = DEFAULT_BRUTEFORCE_LIMIT, accept_cost: bool = False,
                     threads: int = 1, progress: bool = False) -> SigmaResult:
    """
    Computing σ(H, n) by sweeping every graphical sequence of length n.
    - **pattern**: H, as a SimpleGraph or a PatternSpec.
    - **n**: Sequence length.
    - **allow_zeros**: Include sequences with zero terms.
    - **limit**, **accept_cost**: Largest n swept without accept_cost.
    - **threads**: Worker processes used inside a degree-sum level.
    - **progress**: Show a progress bar over the levels on stderr.
    - **returns**: SigmaResult with value = σ(certificate) + 2.
    - **raises**: SearchLimitError above the limit, PreconditionError if H has more than n vertices.
    """
    graph = _prepare(pattern, n, limit, accept_cost, "brute-force sigma")
    return _sweep(graph, n, allow_zeros, _potentially, threads, progress, f"sigma n={n}")


def sigma_forcible_bruteforce(pattern: PatternLike, n: int, allow_zeros: bool = True, *,
                              limit: int = DEFAULT_BRUTEFORCE_LIMIT, accept_cost: bool = False,
                              threads: int = 1, progress: bool = False) -> SigmaResult:
    """
    The forcible counterpart of sigma_bruteforce: the least even l such that every
    graphical sequence with σ >= l has H in all of its realizations.
    """
    graph = _prepare(pattern, n, limit, accept_cost, "brute-force forcible sigma")
    return _sweep(graph, n, allow_zeros, _forcibly, threads, progress, f"forcible n={n}")
