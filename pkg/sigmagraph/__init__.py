"""
sigmagraph: graphical degree sequences, potentially H-graphic sequences and
the degree-sum threshold σ(H, n).
"""

from .core.graph import SimpleGraph, canonical_form, degree_sequence, disjoint_union, join, two_switch
from .core.pattern import (
    Complete, CompleteMinus, Cycle, Friendship, GenFriendship, GraphPattern, Join, Path,
    PatternSpec, SingleVertex, Union, Z4, build, parse_pattern,
)
from .core.sequence import (
    DegreeSequence, enumerate_graphical, is_graphical, is_graphical_recursive, layoff,
)
from .errors import (
    ConfigError, FormulaRangeError, GraphError, ParseError, PatternError, PreconditionError,
    RuleRangeError, SearchBudgetError, SearchLimitError, SequenceError, SigmaGraphError,
    SwitchRejection, TwoSwitchError,
)
from .extremal.construction import construction_bound, extremal_construction, extremal_sequence
from .extremal.formulas import FormulaFamily, FormulaTag, closed_form_sigma
from .extremal.rules import RuleTag, SufficientRule, conclusion_holds, rule_conclusion, sufficient_condition
from .extremal.sigma import SigmaResult, sigma_bruteforce, sigma_forcible_bruteforce
from .extremal.verification import Report, verify_theorem
from .search.containment import Embedding, contains, validate_U
from .search.potential import PotentialWitness, is_forcibly, is_potentially, is_potentially_clique_top
from .search.realization import realizations
from .search.switching import edge_excluded_realization

__version__ = "1.0.0"
