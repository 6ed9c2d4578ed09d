"""
Closed-form σ(H, n) values.

THM1_1 covers σ(K_{r+1} - U, n) for every admissible U (the K_3 ∪ P_3 value
bounds all of them). The other families are the small-pattern values used to
cross-check the brute-force oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from ..errors import FormulaRangeError


class FormulaTag(str, Enum):
    THM1_1 = "THM1_1"
    EJL_LOWER = "EJL_LOWER"
    P_MATCHING = "P_MATCHING"
    C4 = "C4"
    TURAN_K3 = "TURAN_K3"


# CLI names for each family and the parameter it takes
FAMILY_NAMES = {
    "thm11": (FormulaTag.THM1_1, "r"),
    "ejl": (FormulaTag.EJL_LOWER, "k"),
    "matching": (FormulaTag.P_MATCHING, "p"),
    "c4": (FormulaTag.C4, None),
    "turan-k3": (FormulaTag.TURAN_K3, None),
}


@dataclass(frozen=True)
class FormulaFamily:
    """
    A closed-form family and its single parameter.
    - **tag**: Which formula.
    - **param**: r for THM1_1, k for EJL_LOWER, p for P_MATCHING, unused otherwise.
    """
    tag: FormulaTag
    param: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "tag", FormulaTag(self.tag))
        needs_param = self.tag in (FormulaTag.THM1_1, FormulaTag.EJL_LOWER, FormulaTag.P_MATCHING)
        if needs_param and self.param is None:
            raise FormulaRangeError(f"{self.tag.value} needs a parameter")


def _require(condition: bool, bound: str) -> None:
    if not condition:
        raise FormulaRangeError(f"outside the validity range: requires {bound}")


def theorem_core(r: int, n: int) -> int:
    """(r-1)(2n-r) - 3(n-r), the common core of every threshold on K_{r+1} - U."""
    return (r - 1) * (2 * n - r) - 3 * (n - r)


def theorem_value(r: int, n: int) -> int:
    """The threshold for K_{r+1} - U: the core minus 1 when n - r is odd, the core itself when even."""
    core = theorem_core(r, n)
    return core - 1 if (n - r) % 2 else core


def closed_form_sigma(family: FormulaFamily, n: int) -> int:
    """
    Evaluating a closed form inside its stated validity range.
    - **family**: The formula and its parameter.
    - **n**: Sequence length.
    - **returns**: The exact integer (for TURAN_K3 the edge count ex(n, K_3), not a σ value).
    - **raises**: FormulaRangeError naming the violated bound.
    """
    tag, param = family.tag, family.param
    if tag is FormulaTag.THM1_1:
        _require(param >= 6, "r >= 6")
        _require(n >= 5 * param + 18, f"n >= 5r+18 = {5 * param + 18}")
        return theorem_value(param, n)
    if tag is FormulaTag.EJL_LOWER:
        _require(param >= 3, "k >= 3")
        _require(n >= param, f"n >= k = {param}")
        return (param - 2) * (2 * n - param + 1) + 2
    if tag is FormulaTag.P_MATCHING:
        _require(param >= 2, "p >= 2")
        _require(n >= 2 * param, f"n >= 2p = {2 * param}")
        return (param - 1) * (2 * n - 2) + 2
    if tag is FormulaTag.C4:
        _require(n >= 4, "n >= 4")
        return 2 * ((3 * n - 1) // 2)
    _require(n >= 1, "n >= 1")
    return n * n // 4


def forcible_k3_sigma(n: int) -> int:
    """2 ex(n, K_3) + 2: the least even σ forcing every realization to contain a triangle."""
    return 2 * closed_form_sigma(FormulaFamily(FormulaTag.TURAN_K3), n) + 2
