import pytest

from sigmagraph.core.pattern import CompleteMinus, Complete, Path, Union
from sigmagraph.core.sequence import DegreeSequence, enumerate_graphical
from sigmagraph.errors import RuleRangeError, SequenceError
from sigmagraph.extremal.rules import (
    RuleTag, SufficientRule, conclusion_holds, rule_conclusion, sigma_bound, sufficient_condition,
)


def seq(*terms):
    return DegreeSequence(terms)


@pytest.mark.parametrize("terms, tag, r, expected", [
    ((5, 4, 4, 3, 3, 3), "T2_1", 3, True),
    ((3, 3, 3, 3, 3, 3), "T2_1", 3, False),
    ((7, 7, 6, 6, 5, 5, 5, 5), "T2_2", 3, True),
    ((3, 3, 3, 3, 3, 3, 3, 3), "T2_2", 3, True),
    ((5, 4, 3, 2, 2, 2), "T2_3", 3, True),
    ((4, 4, 3, 3, 2, 2, 2, 2), "T2_4", 3, True),
    ((4, 4, 3, 3, 2, 2, 2, 2), "L2_2", 3, False),
    ((5, 3, 2, 2, 2, 2), "L2_2", 3, True),
    ((4, 4, 4, 3, 3, 2), "L2_5", 3, True),
    ((4, 4, 3, 3, 3, 3), "L2_5", 3, False),
])
def test_sufficient_condition_examples(terms, tag, r, expected):
    assert sufficient_condition(DegreeSequence(terms), SufficientRule(tag, r)) is expected


@pytest.mark.parametrize("terms, tag, r", [
    ((3, 3, 3, 3), "T2_2", 3),
    ((5, 5, 5, 5, 5, 5), "L3_1", 3),
    ((4, 4, 4, 4, 4, 4, 4, 4, 4, 4), "L2_4", 4),
    ((2, 2, 2), "T2_1", 3),
])
def test_out_of_range_is_a_refusal(terms, tag, r):
    with pytest.raises(RuleRangeError):
        sufficient_condition(DegreeSequence(terms), SufficientRule(tag, r))


def test_non_graphical_input_is_refused():
    with pytest.raises(SequenceError):
        sufficient_condition(seq(3, 3, 1, 1), SufficientRule("T2_1", 2))


def test_rule_construction():
    assert SufficientRule("t2_4", 3).tag is RuleTag.T2_4
    with pytest.raises(RuleRangeError):
        SufficientRule("T9_9", 3)
    with pytest.raises(RuleRangeError):
        SufficientRule("T2_1", 3, alternate=True)


def test_t2_4_alternate_reading():
    candidate = seq(4, 3, 3, 3, 3, 3, 3, 2)
    assert sufficient_condition(candidate, SufficientRule("T2_4", 3))
    lowered = seq(3, 2, 2, 2, 2, 2, 2, 1)
    assert not sufficient_condition(lowered, SufficientRule("T2_4", 3))
    assert not sufficient_condition(lowered, SufficientRule("T2_4", 3, alternate=True))
    assert sufficient_condition(seq(4, 4, 2, 2, 2, 2, 2, 2), SufficientRule("T2_4", 3))
    assert not sufficient_condition(seq(4, 4, 2, 2, 2, 2, 2, 2), SufficientRule("T2_4", 3, alternate=True))


def test_sigma_bounds_branch_on_parity():
    # core for r=6: 5(2n-6) - 3(n-6)
    assert sigma_bound(SufficientRule("L3_1", 6), 14) == 86
    assert sigma_bound(SufficientRule("L3_1", 6), 15) == 92
    assert sigma_bound(SufficientRule("L2_4", 6), 14) == 84
    assert sigma_bound(SufficientRule("L2_4", 6), 15) == 92
    assert sigma_bound(SufficientRule("T2_1", 6), 14) is None


def test_rule_conclusions():
    assert rule_conclusion(SufficientRule("T2_2", 3)).clique_top
    assert rule_conclusion(SufficientRule("T2_4", 3)).pattern == CompleteMinus(4, Complete(2))
    assert rule_conclusion(SufficientRule("L2_4", 5)).pattern == CompleteMinus(6, Union((Path(2), Complete(2))))
    assert rule_conclusion(SufficientRule("L3_1", 6)).pattern == CompleteMinus(7, Union((Complete(3), Path(3))))
    with pytest.raises(RuleRangeError):
        rule_conclusion(SufficientRule("L3_1", 5))


@pytest.mark.slow
@pytest.mark.parametrize("tag", ["T2_1", "T2_2", "T2_3", "T2_4", "L2_2"])
def test_soundness_exhaustive_n8_r3(tag):
    rule = SufficientRule(tag, 3)
    passing = 0
    for candidate in enumerate_graphical(8):
        if sufficient_condition(candidate, rule):
            passing += 1
            assert conclusion_holds(candidate, rule), candidate
    assert passing > 0


@pytest.mark.slow
def test_l3_1_sampled_soundness(l31_samples):
    rule = SufficientRule("L3_1", 6)
    assert len(l31_samples) == 200
    for candidate in l31_samples:
        assert conclusion_holds(candidate, rule), candidate
