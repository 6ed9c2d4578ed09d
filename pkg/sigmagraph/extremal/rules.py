"""
Sufficient conditions for potential graphicity: each rule checks the
hypotheses of one published sufficient condition literally. The conclusions
are confirmed by search in the test suite, never assumed by the predicates.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from ..core.pattern import Complete, CompleteMinus, Path, PatternSpec, Union
from ..core.sequence import DegreeSequence, is_graphical
from ..errors import RuleRangeError, SequenceError
from ..search.potential import is_potentially, is_potentially_clique_top
from .formulas import theorem_core


class RuleTag(str, Enum):
    T2_1 = "T2_1"
    T2_2 = "T2_2"
    T2_3 = "T2_3"
    T2_4 = "T2_4"
    L2_2 = "L2_2"
    L2_4 = "L2_4"
    L2_5 = "L2_5"
    L3_1 = "L3_1"


@dataclass(frozen=True)
class SufficientRule:
    """
    One hypothesis set.
    - **tag**: Which theorem or lemma.
    - **r**: The clique-size parameter.
    - **alternate**: T2_4 only; read d_{r-1} >= r as d_{r+1} >= r.
    """
    tag: RuleTag
    r: int
    alternate: bool = False

    def __post_init__(self):
        tag = self.tag if isinstance(self.tag, RuleTag) else str(self.tag).upper()
        try:
            object.__setattr__(self, "tag", RuleTag(tag))
        except ValueError:
            raise RuleRangeError(f"unknown rule tag {self.tag!r}") from None
        if self.alternate and self.tag is not RuleTag.T2_4:
            raise RuleRangeError("the alternate reading only exists for T2_4")


@dataclass(frozen=True)
class RuleConclusion:
    """What a rule guarantees: a clique on the top r+1 vertices, or containment of a pattern."""
    clique_top: bool
    size: int
    pattern: Optional[PatternSpec] = None

    def __str__(self):
        return f"A{self.size}" if self.clique_top else str(self.pattern)


# Smallest r each rule's indices make sense for
_MIN_R = {
    RuleTag.T2_1: 1, RuleTag.T2_2: 1, RuleTag.T2_3: 1, RuleTag.T2_4: 2,
    RuleTag.L2_2: 2, RuleTag.L2_4: 5, RuleTag.L2_5: 3, RuleTag.L3_1: 4,
}

# Smallest n as a function of r
_MIN_N = {
    RuleTag.T2_1: lambda r: r + 1, RuleTag.T2_2: lambda r: 2 * r + 2,
    RuleTag.T2_3: lambda r: r + 1, RuleTag.T2_4: lambda r: 2 * r + 2,
    RuleTag.L2_2: lambda r: 2 * r, RuleTag.L2_4: lambda r: 2 * r + 2,
    RuleTag.L2_5: lambda r: 2 * r, RuleTag.L3_1: lambda r: 2 * r + 2,
}


def _staircase(seq: DegreeSequence, r: int, upto: int) -> bool:
    """d_i >= 2r - i for i = 1..upto."""
    return all(seq.d(i) >= 2 * r - i for i in range(1, upto + 1))


def sigma_bound(rule: SufficientRule, n: int) -> Optional[int]:
    """
    The degree-sum lower bound a rule carries, branching on the parity of n - r.
    - **returns**: The bound for L2_4 and L3_1, None for rules without one.
    """
    r = rule.r
    core = theorem_core(r, n)
    odd = (n - r) % 2 == 1
    if rule.tag is RuleTag.L2_4:
        return core - 1 if odd else core - 2
    if rule.tag is RuleTag.L3_1:
        return core - 1 if odd else core
    return None


def check_range(seq: DegreeSequence, rule: SufficientRule) -> None:
    """Refusing parameters outside the range the rule is stated for."""
    r, n = rule.r, seq.n
    if r < _MIN_R[rule.tag]:
        raise RuleRangeError(f"{rule.tag.value} is stated for r >= {_MIN_R[rule.tag]}, got r={r}")
    least = _MIN_N[rule.tag](r)
    if n < least:
        raise RuleRangeError(f"{rule.tag.value} with r={r} needs n >= {least}, got n={n}")


def sufficient_condition(seq: DegreeSequence, rule: SufficientRule) -> bool:
    """
    Checking whether π satisfies every hypothesis of the rule.
    - **seq**: A graphical sequence π.
    - **rule**: The tag and r.
    - **returns**: True iff all hypotheses hold (the conclusion is not evaluated).
    - **raises**: SequenceError if π is not graphical; RuleRangeError if r or n is outside the rule's range.
    """
    if not is_graphical(seq):
        raise SequenceError(f"{seq} is not graphical")
    check_range(seq, rule)
    r, d = rule.r, seq.d
    tag = rule.tag

    if tag is RuleTag.T2_1:
        return d(r + 1) >= r and _staircase(seq, r, r - 1)
    if tag is RuleTag.T2_2:
        return d(r + 1) >= r and d(2 * r + 2) >= r - 1
    if tag is RuleTag.T2_3:
        return d(r + 1) >= r - 1 and _staircase(seq, r, r - 1)
    if tag is RuleTag.T2_4:
        anchor = d(r + 1) if rule.alternate else d(r - 1)
        return anchor >= r and d(2 * r + 2) >= r - 1
    if tag is RuleTag.L2_2:
        return d(r - 1) >= r and d(r + 1) >= r - 1 and _staircase(seq, r, r - 2)
    if tag is RuleTag.L2_4:
        return (d(r - 4) >= r and seq.sigma >= sigma_bound(rule, seq.n)
                and d(2 * r + 2) >= r - 1)
    if tag is RuleTag.L2_5:
        # d_{r+1+2}, not d_{r+2}
        return (d(r - 2) >= r + 1 and d(r + 1) >= r and d(r) - 1 >= d(r + 3)
                and _staircase(seq, r, r - 3))
    # L3_1
    return (d(r - 2) >= r - 1 and d(r + 1) >= r - 2
            and seq.sigma >= sigma_bound(rule, seq.n) and _staircase(seq, r, r - 3))


def rule_conclusion(rule: SufficientRule) -> RuleConclusion:
    """
    The potential property a rule concludes.
    - **raises**: RuleRangeError when the concluded pattern does not fit in K_{r+1}.
    """
    r = rule.r
    if rule.tag in (RuleTag.T2_1, RuleTag.T2_2, RuleTag.L2_5):
        return RuleConclusion(True, r + 1)
    if rule.tag in (RuleTag.T2_3, RuleTag.T2_4, RuleTag.L2_2):
        return RuleConclusion(False, r + 1, CompleteMinus(r + 1, Complete(2)))
    removed = Union((Path(2), Complete(2))) if rule.tag is RuleTag.L2_4 else Union((Complete(3), Path(3)))
    if removed.vertex_count > r + 1:
        raise RuleRangeError(f"{removed} does not fit in K{r + 1}")
    return RuleConclusion(False, r + 1, CompleteMinus(r + 1, removed))


def conclusion_holds(seq: DegreeSequence, rule: SufficientRule) -> bool:
    """Checking the rule's conclusion on π by search."""
    conclusion = rule_conclusion(rule)
    if conclusion.clique_top:
        return is_potentially_clique_top(seq, rule.r)
    return is_potentially(seq, conclusion.pattern) is not None
