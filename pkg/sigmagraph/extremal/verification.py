"""
Theorem-level verification: for a given r, n and U, checks that the extremal
construction certifies the closed-form threshold for K_{r+1} - U.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from ..core.graph import SimpleGraph, degree_sequence
from ..core.pattern import CompleteMinus, GraphPattern
from ..errors import PreconditionError
from ..search.containment import DEFAULT_CONTAINMENT_BUDGET, ContainmentSearch, u_hypothesis_violations
from ..utils import console
from .construction import extremal_construction, extremal_sequence
from .formulas import FormulaFamily, FormulaTag, closed_form_sigma, theorem_core


@dataclass
class CheckItem:
    """
    One pass/fail line of a report.
    - **name**: Stable key of the check.
    - **passed**: Verdict.
    - **values**: The numbers the verdict was based on.
    - **seconds**: Wall time spent on the check.
    """
    name: str
    passed: bool
    values: dict = field(default_factory=dict)
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "values": self.values,
                "seconds": round(self.seconds, 6)}


@dataclass
class Report:
    """The outcome of verify_theorem: one CheckItem per claim plus the inputs."""
    r: int
    n: int
    pattern: str
    items: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    def item(self, name: str) -> CheckItem:
        for candidate in self.items:
            if candidate.name == name:
                return candidate
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "n": self.n,
            "pattern": self.pattern,
            "passed": self.passed,
            "items": [item.to_dict() for item in self.items],
            "seconds": round(sum(item.seconds for item in self.items), 6),
        }

    def to_text(self) -> str:
        lines = [f"verify r={self.r} n={self.n} pattern={self.pattern}"]
        for item in self.items:
            verdict = "PASS" if item.passed else "FAIL"
            details = " ".join(f"{key}={value}" for key, value in item.values.items())
            lines.append(f"  [{verdict}] {item.name}: {details} ({item.seconds:.3f}s)")
        lines.append("result: " + ("all checks passed" if self.passed else "some checks failed"))
        return "\n".join(lines)


def _timed(name: str, check) -> CheckItem:
    start = time.perf_counter()
    passed, values = check()
    return CheckItem(name, passed, values, time.perf_counter() - start)


def verify_theorem(r: int, n: int, u: SimpleGraph, *, budget: int = DEFAULT_CONTAINMENT_BUDGET,
                   progress: bool = False, label: str = None) -> Report:
    """
    Checking the lower-bound half of the threshold for K_{r+1} - U at (r, n).
    - **r**: Clique parameter, at least 6.
    - **n**: Sequence length, at least 5r+18.
    - **u**: The removed graph U; must satisfy every hypothesis placed on it.
    - **budget**: Node budget of the non-containment search.
    - **progress**: Progress bars on stderr, one step per check plus the
      top-level branches of the non-containment search.
    - **label**: Pattern text shown in the report (defaults to the edge list of U).
    - **returns**: A Report with items template, formula, non_containment and parity.
    - **raises**: PreconditionError when U or n is out of range; SearchBudgetError when
      the non-containment search runs out of budget.
    """
    problems = u_hypothesis_violations(u, r)
    if problems:
        raise PreconditionError("U is not admissible: " + "; ".join(problems))
    if n < 5 * r + 18:
        raise PreconditionError(f"n={n} is below 5r+18 = {5 * r + 18}")

    removed = GraphPattern(u)
    report = Report(r, n, label or str(removed))
    graph = extremal_construction(r, n)
    template = extremal_sequence(r, n)
    formula = closed_form_sigma(FormulaFamily(FormulaTag.THM1_1, r), n)
    odd = (n - r) % 2 == 1

    def template_check():
        built = degree_sequence(graph)
        return built == template, {"template_sigma": template.sigma, "construction_sigma": built.sigma}

    def formula_check():
        return template.sigma == formula - 2, {"certificate_sigma": template.sigma, "formula": formula}

    def containment_check():
        pattern = CompleteMinus(r + 1, removed).build()
        search = ContainmentSearch(graph, pattern, budget, progress=progress)
        found = search.run()
        return found is None, {"contains": found is not None, "nodes": search.nodes}

    def parity_check():
        expected = theorem_core(r, n) - (1 if odd else 0)
        return formula == expected, {"n_minus_r": n - r, "branch": "odd" if odd else "even"}

    checks = [("template", template_check), ("formula", formula_check),
              ("non_containment", containment_check), ("parity", parity_check)]
    for name, check in console.progress(checks, total=len(checks), desc=f"verify r={r} n={n}",
                                        enabled=progress):
        report.items.append(_timed(name, check))
    return report
