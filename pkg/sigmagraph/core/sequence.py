"""
Degree sequences: the nonincreasing integer lists every other module consumes.

Houses graphicality (the Erdős–Gallai inequalities), laying off a term, the
recursive test built on laying off, and the ordered enumeration of all
graphical sequences of a given length.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Optional, Sequence

from ..errors import ParseError, SequenceError
from ..utils import console

_TERM = re.compile(r"^\d+$")


@dataclass(frozen=True)
class DegreeSequence:
    """
    A nonincreasing sequence of nonnegative integers (d_1, ..., d_n).
    - **terms**: The degrees, largest first.
    """
    terms: tuple

    def __post_init__(self):
        terms = tuple(self.terms)
        for value in terms:
            if isinstance(value, bool) or not isinstance(value, int):
                raise SequenceError(f"degree {value!r} is not an integer")
            if value < 0:
                raise SequenceError(f"degree {value} is negative")
        if any(a < b for a, b in zip(terms, terms[1:])):
            raise SequenceError(f"sequence {terms} is not nonincreasing")
        object.__setattr__(self, "terms", terms)

    # --- Constructors ---

    @classmethod
    def of(cls, values: Iterable[int]) -> "DegreeSequence":
        """Building a sequence from degrees in any order (sorted nonincreasing)."""
        return cls(tuple(sorted(values, reverse=True)))

    @classmethod
    def power(cls, *groups) -> "DegreeSequence":
        """
        Building a sequence in x^y notation.
        - **groups**: (value, count) pairs, e.g. power((47, 3), (5, 1), (4, 44)).
        """
        values = []
        for value, count in groups:
            if count < 0:
                raise SequenceError(f"repeat count {count} is negative")
            values.extend([value] * count)
        return cls.of(values)

    @classmethod
    def parse(cls, text: str) -> "DegreeSequence":
        """
        Parsing the comma-separated text format, e.g. "5,4,4,3,3,3".
        Unsorted input is accepted, sorted nonincreasing and reported with a warning.
        - **text**: The sequence text.
        - **returns**: The parsed DegreeSequence.
        - **raises**: ParseError on empty text, non-integers or negative terms.
        """
        stripped = text.strip()
        if not stripped:
            raise ParseError("empty degree sequence")
        values = []
        for token in stripped.split(","):
            token = token.strip()
            if not _TERM.match(token):
                raise ParseError(f"invalid degree {token!r} in {text!r}")
            values.append(int(token))
        ordered = sorted(values, reverse=True)
        if ordered != values:
            console.warning(f"input {console.highlight(stripped)} was not nonincreasing; sorted it")
        return cls(tuple(ordered))

    # --- Accessors ---

    @property
    def n(self) -> int:
        return len(self.terms)

    @property
    def sigma(self) -> int:
        """The degree sum σ(π)."""
        return sum(self.terms)

    @property
    def has_zero(self) -> bool:
        return bool(self.terms) and self.terms[-1] == 0

    def d(self, i: int) -> int:
        """
        Reading d_i with the 1-based indexing used in hypotheses.
        - **i**: Index in 1..n.
        - **raises**: SequenceError if i is out of range.
        """
        if not 1 <= i <= self.n:
            raise SequenceError(f"index d_{i} outside 1..{self.n}")
        return self.terms[i - 1]

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __getitem__(self, index):
        return self.terms[index]

    def __str__(self):
        return ",".join(str(value) for value in self.terms)


def _erdos_gallai(terms: Sequence[int]) -> bool:
    # terms must already be nonincreasing with even sum
    n = len(terms)
    prefix = 0
    for t in range(1, n + 1):
        prefix += terms[t - 1]
        tail = sum(min(t, value) for value in terms[t:])
        if prefix > t * (t - 1) + tail:
            return False
    return True


def is_graphical(seq: DegreeSequence) -> bool:
    """
    Deciding graphicality with the Erdős–Gallai inequalities.
    Odd degree sums are rejected before the inequality loop. The loop runs to
    t = n, which the other inequalities imply for n >= 2 and which rejects (2).
    - **seq**: The sequence to test.
    - **returns**: True iff some simple graph has this degree sequence.
    """
    if seq.sigma % 2:
        return False
    return _erdos_gallai(seq.terms)


def is_graphical_terms(values: Iterable[int]) -> bool:
    """
    Deciding graphicality of raw degrees in any order, negatives allowed (and rejected).
    Used by the searches to prune residual demands.
    """
    terms = sorted(values, reverse=True)
    if terms and terms[-1] < 0:
        return False
    if sum(terms) % 2:
        return False
    return _erdos_gallai(terms)


def residual_terms(terms: Sequence[int], k: int) -> tuple:
    """
    Laying off d_k from raw terms, keeping negative entries.
    - **terms**: Nonincreasing degrees.
    - **k**: 1-based position of the term to lay off.
    - **returns**: The n-1 residual terms, sorted nonincreasing (may contain negatives).
    - **raises**: SequenceError if k is out of range or d_k leaves too few other terms.
    """
    n = len(terms)
    if not 1 <= k <= n:
        raise SequenceError(f"layoff position k={k} outside 1..{n}")
    dk = terms[k - 1]
    if dk > n - 1:
        raise SequenceError(f"d_{k}={dk} needs {dk} other vertices but only {n - 1} remain")

    if dk >= k:
        # Reducing the first d_k + 1 entries, skipping position k itself
        reduced = [value - 1 for value in terms[:k - 1]]
        reduced += [value - 1 for value in terms[k:dk + 1]]
        reduced += list(terms[dk + 1:])
    else:
        # Reducing the first d_k entries, then dropping position k
        reduced = [value - 1 for value in terms[:dk]]
        reduced += list(terms[dk:k - 1])
        reduced += list(terms[k:])

    # Stable re-sort; equal degrees carry no identity
    return tuple(sorted(reduced, reverse=True))


def layoff(seq: DegreeSequence, k: int) -> DegreeSequence:
    """
    Producing the residual sequence π'_k obtained by laying off d_k.
    - **seq**: The sequence π.
    - **k**: Position 1..n of the term to lay off.
    - **returns**: π'_k, of length n-1 and degree sum σ(π) - 2 d_k.
    - **raises**: SequenceError if k is out of range or the residual leaves NS_{n-1}.
    """
    residual = residual_terms(seq.terms, k)
    if residual and residual[-1] < 0:
        raise SequenceError(f"laying off d_{k} from {seq} produces a negative term")
    return DegreeSequence(residual)


def is_graphical_recursive(seq: DegreeSequence) -> bool:
    """
    Deciding graphicality by repeatedly laying off the last term (k = n).
    Must agree with is_graphical everywhere.
    """
    terms = seq.terms
    while terms:
        if terms[-1] < 0:
            return False
        if not any(terms):
            return True
        k = len(terms)
        if terms[k - 1] > k - 1:
            return False
        terms = residual_terms(terms, k)
    return True


def enumerate_graphical(n: int, sigma_min: int = 0, sigma_max: Optional[int] = None, *,
                        positive: bool = False,
                        first_term: Optional[int] = None) -> Iterator[DegreeSequence]:
    """
    Yielding every graphical sequence of length n with sigma_min <= σ <= sigma_max,
    in lexicographically decreasing order, each exactly once.
    - **n**: Sequence length, at least 1.
    - **sigma_min**, **sigma_max**: Inclusive degree-sum window (default the full 0..n(n-1)).
    - **positive**: Skip sequences containing a zero term.
    - **first_term**: Only yield sequences with d_1 equal to this value.
    """
    if n < 1:
        raise SequenceError(f"sequence length n={n} must be at least 1")
    top = n * (n - 1)
    if sigma_max is None:
        sigma_max = top
    if not 0 <= sigma_min <= sigma_max <= top:
        raise SequenceError(f"degree-sum window [{sigma_min}, {sigma_max}] outside [0, {top}]")

    lowest = 1 if positive else 0
    if first_term is None:
        candidates = combinations_with_replacement(range(n - 1, lowest - 1, -1), n)
    else:
        if not lowest <= first_term <= n - 1:
            return
        candidates = ((first_term,) + rest for rest in
                      combinations_with_replacement(range(first_term, lowest - 1, -1), n - 1))

    for terms in candidates:
        total = sum(terms)
        if total % 2 or not sigma_min <= total <= sigma_max:
            continue
        if _erdos_gallai(terms):
            yield DegreeSequence(terms)
