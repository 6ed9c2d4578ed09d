import sys
import json

from ..core.graph import SimpleGraph, degree_sequence
from ..core.pattern import parse_pattern
from ..core.sequence import DegreeSequence, is_graphical, layoff
from ..errors import GraphError, ParseError, SequenceError
from ..extremal.construction import construction_bound, extremal_construction, extremal_sequence
from ..extremal.formulas import FAMILY_NAMES, FormulaFamily, closed_form_sigma
from ..extremal.rules import RuleTag, SufficientRule, conclusion_holds, rule_conclusion, sufficient_condition
from ..extremal.sigma import sigma_bruteforce, sigma_forcible_bruteforce
from ..extremal.verification import verify_theorem
from ..search.potential import is_potentially, is_potentially_clique_top
from ..search.realization import complete_realization, realizations
from ..search.switching import edge_excluded_realization
from ..utils.config_manager import SearchConfig
from ..utils.report_manager import CommandResult


def graph_document(graph: SimpleGraph) -> dict:
    return {"n": graph.n, "edges": [list(edge) for edge in graph.sorted_edges()]}


def _flag(value: bool) -> str:
    return "true" if value else "false"


def read_graph(source: str) -> SimpleGraph:
    """
    Reading a graph in text form ("n m" then edge lines) or as a JSON document.
    - **source**: A file path, or '-' for stdin.
    - **raises**: ParseError on unreadable or malformed input.
    """
    try:
        if source == "-":
            text = sys.stdin.read()
        else:
            with open(source, 'r') as f:
                text = f.read()
    except OSError as e:
        raise ParseError(f"cannot read graph {source!r}: {e.strerror}") from e

    if not text.lstrip().startswith("{"):
        return SimpleGraph.parse(text)
    try:
        document = json.loads(text)
        return SimpleGraph(int(document["n"]), frozenset(tuple(edge) for edge in document["edges"]))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        raise ParseError(f"graph document in {source!r} is malformed") from e
    except GraphError as e:
        raise ParseError(str(e)) from e


class CommandController:
    """
    Maps each subcommand onto one library operation.
    Every handler returns a CommandResult; domain refusals propagate as exceptions.
    """
    def __init__(self, config: SearchConfig, accept_cost: bool = False):
        """
        Initializing the controller with the search configuration
        - **config**: Limits and budgets for the searches
        - **accept_cost**: Lift the exhaustive-search limits
        """
        self.config = config
        self.accept_cost = accept_cost
        self.handlers = {
            "graphical": self.graphical,
            "layoff": self.layoff,
            "realize": self.realize,
            "potential": self.potential,
            "clique-top": self.clique_top,
            "rule": self.rule,
            "sigma-formula": self.sigma_formula,
            "sigma-brute": self.sigma_brute,
            "extremal": self.extremal,
            "verify": self.verify,
            "degrees": self.degrees,
            "exclude-edge": self.exclude_edge,
        }

    def dispatch(self, command: str, args) -> CommandResult:
        """
        Running one subcommand
        - **command**: The subcommand name
        - **args**: The parsed argparse namespace
        """
        handler = self.handlers.get(command)
        if handler is None:
            raise ParseError(f"unknown subcommand {command!r}")
        return handler(args)

    # --- Sequences ---

    def graphical(self, args) -> CommandResult:
        seq = DegreeSequence.parse(args.sequence)
        verdict = is_graphical(seq)
        return CommandResult(_flag(verdict), {"sequence": str(seq), "graphical": verdict})

    def layoff(self, args) -> CommandResult:
        seq = DegreeSequence.parse(args.sequence)
        residual = layoff(seq, args.k)
        return CommandResult(str(residual), {
            "sequence": str(seq), "k": args.k, "residual": str(residual),
            "graphical": is_graphical(seq), "residual_graphical": is_graphical(residual),
        })

    def realize(self, args) -> CommandResult:
        seq = DegreeSequence.parse(args.sequence)
        if not is_graphical(seq):
            raise SequenceError(f"{seq} is not graphical")
        if args.all:
            graphs = list(realizations(seq, limit=self.config.realization_limit, accept_cost=self.accept_cost))
        else:
            graphs = [complete_realization(seq.terms, frozenset(), 0)]
        text = "\n\n".join(graph.to_text() for graph in graphs)
        return CommandResult(text, {
            "sequence": str(seq), "count": len(graphs),
            "realizations": [graph_document(graph) for graph in graphs],
        })

    # --- Potential properties ---

    def potential(self, args) -> CommandResult:
        seq = DegreeSequence.parse(args.sequence)
        spec = parse_pattern(args.pattern)
        witness = is_potentially(seq, spec, exhaustive=args.exhaustive,
                                 limit=self.config.realization_limit, accept_cost=self.accept_cost)
        document = {"sequence": str(seq), "pattern": str(spec), "potentially": witness is not None,
                    "embedding": None, "realization": None}
        if witness is not None:
            document["embedding"] = list(witness.embedding.mapping)
            document["realization"] = graph_document(witness.realization)
        return CommandResult(_flag(witness is not None), document)

    def clique_top(self, args) -> CommandResult:
        seq = DegreeSequence.parse(args.sequence)
        verdict = is_potentially_clique_top(seq, args.r)
        return CommandResult(_flag(verdict), {"sequence": str(seq), "r": args.r, "clique_top": verdict})

    def rule(self, args) -> CommandResult:
        seq = DegreeSequence.parse(args.sequence)
        if args.tag.upper() not in RuleTag.__members__:
            raise ParseError(f"unknown rule tag {args.tag!r}; expected one of {', '.join(RuleTag.__members__)}")
        rule = SufficientRule(args.tag, args.r, alternate=args.alternate)
        verdict = sufficient_condition(seq, rule)
        document = {"sequence": str(seq), "tag": rule.tag.value, "r": rule.r,
                    "alternate": rule.alternate, "hypotheses": verdict}
        lines = [_flag(verdict)]
        if args.check_conclusion:
            conclusion = rule_conclusion(rule)
            holds = conclusion_holds(seq, rule)
            document.update(conclusion=str(conclusion), conclusion_holds=holds)
            lines.append(f"conclusion {conclusion}: {_flag(holds)}")
        return CommandResult("\n".join(lines), document)

    # --- Sigma ---

    def sigma_formula(self, args) -> CommandResult:
        if args.family not in FAMILY_NAMES:
            raise ParseError(f"unknown formula family {args.family!r}; expected one of {', '.join(FAMILY_NAMES)}")
        tag, key = FAMILY_NAMES[args.family]
        *params, n_text = args.values
        if not n_text.isdigit():
            raise ParseError(f"n must be a nonnegative integer, got {n_text!r}")

        values = {}
        for item in params:
            name, sep, raw = item.partition("=")
            if not sep or not raw.isdigit():
                raise ParseError(f"parameter {item!r} must look like key=value")
            values[name] = int(raw)
        expected = {key} if key else set()
        if set(values) != expected:
            wanted = f"{key}=<int>" if key else "no parameters"
            raise ParseError(f"family {args.family} takes {wanted}, got {' '.join(params) or 'none'}")

        family = FormulaFamily(tag, values.get(key))
        value = closed_form_sigma(family, int(n_text))
        return CommandResult(str(value), {"family": tag.value, "param": family.param,
                                          "n": int(n_text), "value": value})

    def sigma_brute(self, args) -> CommandResult:
        spec = parse_pattern(args.pattern)
        oracle = sigma_forcible_bruteforce if args.forcible else sigma_bruteforce
        result = oracle(spec, args.n, allow_zeros=not args.no_zeros,
                        limit=self.config.bruteforce_limit, accept_cost=self.accept_cost,
                        threads=self.config.threads, progress=self.config.progress)
        document = {"pattern": str(spec), "n": args.n, "forcible": args.forcible, **result.to_dict()}
        if result.certificate is None:
            certificate = "certificate: none"
        else:
            certificate = f"certificate: {result.certificate} (sigma={result.certificate.sigma})"
        return CommandResult(f"{result.value}\n{certificate}", document)

    def extremal(self, args) -> CommandResult:
        seq = extremal_sequence(args.r, args.n)
        document = {"r": args.r, "n": args.n, "sequence": str(seq), "sigma": seq.sigma,
                    "bound": construction_bound(args.r, args.n)}
        if args.graph:
            graph = extremal_construction(args.r, args.n)
            document["graph"] = graph_document(graph)
            return CommandResult(graph.to_text(), document)
        return CommandResult(str(seq), document)

    def verify(self, args) -> CommandResult:
        spec = parse_pattern(args.pattern)
        report = verify_theorem(args.r, args.n, spec.build(), budget=self.config.containment_budget,
                                progress=self.config.progress, label=str(spec))
        return CommandResult(report.to_text(), report.to_dict(), 0 if report.passed else 1)

    # --- Graphs ---

    def degrees(self, args) -> CommandResult:
        graph = read_graph(args.graph)
        seq = degree_sequence(graph)
        return CommandResult(str(seq), {"n": graph.n, "sequence": str(seq), "graphical": True})

    def exclude_edge(self, args) -> CommandResult:
        graph = read_graph(args.graph)
        seq = DegreeSequence(graph.degrees)
        found = edge_excluded_realization(seq, args.r, graph, budget=self.config.switch_budget)
        document = {"r": args.r, "sequence": str(seq), "found": found is not None,
                    "graph": None if found is None else graph_document(found)}
        return CommandResult("none" if found is None else found.to_text(), document)
