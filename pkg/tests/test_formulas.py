import re

import pytest

from sigmagraph.errors import FormulaRangeError
from sigmagraph.extremal.formulas import (
    FAMILY_NAMES, FormulaFamily, FormulaTag, closed_form_sigma, forcible_k3_sigma, theorem_core,
)


@pytest.mark.parametrize("tag, param, n, expected", [
    (FormulaTag.THM1_1, 6, 48, 324),
    (FormulaTag.THM1_1, 6, 49, 330),
    (FormulaTag.THM1_1, 7, 53, 456),
    (FormulaTag.C4, None, 4, 10),
    (FormulaTag.C4, None, 7, 20),
    (FormulaTag.P_MATCHING, 2, 4, 8),
    (FormulaTag.P_MATCHING, 3, 6, 22),
    (FormulaTag.EJL_LOWER, 3, 6, 12),
    (FormulaTag.TURAN_K3, None, 5, 6),
])
def test_closed_form_examples(tag, param, n, expected):
    assert closed_form_sigma(FormulaFamily(tag, param), n) == expected


@pytest.mark.parametrize("tag, param, n, bound", [
    (FormulaTag.THM1_1, 5, 100, "r >= 6"),
    (FormulaTag.THM1_1, 6, 47, "n >= 5r+18"),
    (FormulaTag.C4, None, 3, "n >= 4"),
    (FormulaTag.P_MATCHING, 1, 8, "p >= 2"),
    (FormulaTag.P_MATCHING, 3, 5, "n >= 2p"),
    (FormulaTag.EJL_LOWER, 2, 8, "k >= 3"),
])
def test_refusals_name_the_bound(tag, param, n, bound):
    with pytest.raises(FormulaRangeError, match=re.escape(bound)):
        closed_form_sigma(FormulaFamily(tag, param), n)


def test_missing_parameter():
    with pytest.raises(FormulaRangeError):
        FormulaFamily(FormulaTag.THM1_1)
    assert FormulaFamily("C4").tag is FormulaTag.C4


@pytest.mark.parametrize("r", range(6, 11))
def test_theorem_value_is_monotone_and_even(r):
    family = FormulaFamily(FormulaTag.THM1_1, r)
    values = [closed_form_sigma(family, n) for n in range(5 * r + 18, 5 * r + 40)]
    assert values == sorted(values)
    assert all(value % 2 == 0 for value in values)


def test_odd_branch_subtracts_one():
    assert closed_form_sigma(FormulaFamily(FormulaTag.THM1_1, 6), 49) == theorem_core(6, 49) - 1
    assert closed_form_sigma(FormulaFamily(FormulaTag.THM1_1, 6), 50) == theorem_core(6, 50)


def test_forcible_triangle_threshold():
    assert [forcible_k3_sigma(n) for n in range(3, 8)] == [6, 10, 14, 20, 26]


def test_family_names_cover_every_tag():
    assert {tag for tag, _ in FAMILY_NAMES.values()} == set(FormulaTag)
