import os
import json
import argparse
from dataclasses import dataclass, fields, replace
from pathlib import Path

from colorama import Fore

from ..errors import ConfigError
from . import console

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parents[2] / "config" / "search_config.json"

# Environment variable -> SearchConfig field
ENVIRONMENT = {
    "SIGMAGRAPH_REALIZATION_LIMIT": "realization_limit",
    "SIGMAGRAPH_BRUTEFORCE_LIMIT": "bruteforce_limit",
    "SIGMAGRAPH_SWITCH_BUDGET": "switch_budget",
    "SIGMAGRAPH_CONTAINMENT_BUDGET": "containment_budget",
    "SIGMAGRAPH_THREADS": "threads",
}


@dataclass(frozen=True)
class SearchConfig:
    """
    Limits and budgets shared by every search.
    - **realization_limit**: Largest n for exhaustive realization enumeration.
    - **bruteforce_limit**: Largest n for the brute-force σ oracle.
    - **switch_budget**: Visited-state budget of the 2-switch search.
    - **containment_budget**: Node budget of the containment search.
    - **threads**: Worker processes for the brute-force sweep.
    - **progress**: Progress bars on stderr.
    """
    realization_limit: int = 10
    bruteforce_limit: int = 8
    switch_budget: int = 1_000_000
    containment_budget: int = 100_000_000
    threads: int = 1
    progress: bool = True

    def __post_init__(self):
        for item in fields(self):
            value = getattr(self, item.name)
            if item.name == "progress":
                if not isinstance(value, bool):
                    raise ConfigError(f"'progress' must be true or false, got {value!r}")
            elif isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ConfigError(f"'{item.name}' must be a positive integer, got {value!r}")


class ConfigManager:
    """
    Manages the command line and the search configuration for sigmagraph.
    Settings are layered: defaults, then the JSON file, then environment
    variables, then command-line flags.
    """
    def __init__(self, argv=None):
        """
        Parsing the arguments and building the SearchConfig
        - **argv**: Argument list without the program name (defaults to sys.argv[1:])
        - **raises**: SystemExit on usage errors (argparse), ConfigError on invalid settings
        """
        self.parser = self._build_parser()
        self.args = self.parser.parse_args(argv)
        if not getattr(self.args, "command", None):
            self.parser.print_usage()
            raise SystemExit(2)

        self.config_path = self._resolve_config_path()
        settings = self._load_config() if self.config_path else {}
        config = SearchConfig(**settings)
        config = replace(config, **self._load_environment())
        self.config = replace(config, **self._flag_overrides())

    @property
    def command(self) -> str:
        return self.args.command

    def _build_parser(self) -> argparse.ArgumentParser:
        """Building the parser: one subcommand per library operation, shared flags on each"""
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument('--json', action='store_true', help='Print a JSON document instead of text')
        common.add_argument('--config', '-c', type=str, help='Path to a JSON search configuration file')
        common.add_argument('--threads', type=int, help='Worker processes for brute-force sweeps')
        common.add_argument('--no-progress', action='store_true', help='Disable progress bars')
        common.add_argument('--realization-limit', type=int, help='Largest n for realization enumeration')
        common.add_argument('--bruteforce-limit', type=int, help='Largest n for the brute-force sigma oracle')
        common.add_argument('--containment-budget', type=int, help='Node budget of the containment search')
        common.add_argument('--switch-budget', type=int, help='State budget of the 2-switch search')
        common.add_argument('--accept-cost', action='store_true', help='Run exhaustive searches above the limits')
        common.add_argument('--save', type=str, help='Also write the JSON document to this file')

        parser = argparse.ArgumentParser(
            prog='sigmagraph',
            description='Graphical degree sequences, potentially H-graphic sequences and sigma(H, n)',
            formatter_class=argparse.ArgumentDefaultsHelpFormatter
        )
        sub = parser.add_subparsers(dest='command', metavar='<command>')

        def command(name, help_text):
            return sub.add_parser(name, parents=[common], help=help_text, description=help_text)

        p = command('graphical', 'Decide whether a sequence is graphical')
        p.add_argument('sequence', help='Comma-separated degrees, e.g. 3,3,2,2')

        p = command('layoff', 'Lay off the k-th term of a sequence')
        p.add_argument('sequence')
        p.add_argument('k', type=int, help='1-based position of the laid-off term')

        p = command('realize', 'Print a realization of a graphical sequence')
        p.add_argument('sequence')
        p.add_argument('--all', action='store_true', help='Enumerate every labeled realization')

        p = command('potential', 'Decide whether some realization contains a pattern')
        p.add_argument('sequence')
        p.add_argument('pattern', help='Pattern text, e.g. "M(7,U(K3,P3))"')
        p.add_argument('--exhaustive', action='store_true', help='Walk every realization instead of the top-degree search')

        p = command('clique-top', 'Decide potential A_{r+1}-graphicity')
        p.add_argument('sequence')
        p.add_argument('r', type=int)

        p = command('rule', 'Check the hypotheses of a sufficient condition')
        p.add_argument('sequence')
        p.add_argument('tag', help='T2_1, T2_2, T2_3, T2_4, L2_2, L2_4, L2_5 or L3_1')
        p.add_argument('r', type=int)
        p.add_argument('--alternate', action='store_true', help='T2_4 only: read d_{r-1} >= r as d_{r+1} >= r')
        p.add_argument('--check-conclusion', action='store_true', help='Also confirm the conclusion by search')

        p = command('sigma-formula', 'Evaluate a closed-form sigma value')
        p.add_argument('family', help='thm11, ejl, matching, c4 or turan-k3')
        p.add_argument('values', nargs='+', help='key=value parameters followed by n')

        p = command('sigma-brute', 'Compute sigma(H, n) by exhaustive sweep')
        p.add_argument('pattern')
        p.add_argument('n', type=int)
        p.add_argument('--no-zeros', action='store_true', help='Skip sequences with zero terms')
        p.add_argument('--forcible', action='store_true', help='Require H in every realization instead')

        p = command('extremal', 'Print the extremal sequence (or graph) for r and n')
        p.add_argument('r', type=int)
        p.add_argument('n', type=int)
        p.add_argument('--graph', action='store_true', help='Print the construction instead of its sequence')

        p = command('verify', 'Verify the lower-bound certificate for K_{r+1} - U')
        p.add_argument('r', type=int)
        p.add_argument('n', type=int)
        p.add_argument('pattern', help='U as pattern text, e.g. "U(K3,P3)"')

        p = command('degrees', 'Print the degree sequence of a graph file')
        p.add_argument('graph', help="Graph file in text or JSON form, '-' for stdin")

        p = command('exclude-edge', 'Find a realization missing the edge v_r v_{r+1} by 2-switches')
        p.add_argument('r', type=int)
        p.add_argument('graph', help="Graph file in text or JSON form, '-' for stdin")

        return parser

    def _resolve_config_path(self):
        """Picking the configuration file: --config, then SIGMAGRAPH_CONFIG, then the bundled default"""
        explicit = self.args.config or os.environ.get("SIGMAGRAPH_CONFIG")
        if explicit:
            if not os.path.exists(explicit):
                raise ConfigError(f"configuration file {console.highlight(repr(explicit))} not found")
            return explicit
        return str(DEFAULT_CONFIG_PATH) if DEFAULT_CONFIG_PATH.exists() else None

    def _load_config(self) -> dict:
        """Loading the settings object from the JSON configuration file"""
        try:
            with open(self.config_path, 'r') as f:
                settings = json.load(f)
        except json.JSONDecodeError:
            raise ConfigError(f"configuration file {console.highlight(repr(self.config_path))} is not valid JSON")

        if not isinstance(settings, dict):
            raise ConfigError("invalid configuration format: expected a JSON object")
        known = {item.name for item in fields(SearchConfig)}
        unknown = sorted(set(settings) - known)
        if unknown:
            raise ConfigError(f"unknown configuration keys {Fore.YELLOW}{', '.join(unknown)}{Fore.RESET}")

        if self.args.config:
            console.info(f"Configuration loaded from {console.highlight(repr(self.config_path))}")
        return settings

    @staticmethod
    def _load_environment() -> dict:
        """Reading the SIGMAGRAPH_* overrides"""
        settings = {}
        for variable, name in ENVIRONMENT.items():
            raw = os.environ.get(variable)
            if raw is None or not raw.strip():
                continue
            try:
                settings[name] = int(raw)
            except ValueError:
                raise ConfigError(f"{variable}={raw!r} is not an integer")
        return settings

    def _flag_overrides(self) -> dict:
        """Collecting the settings given as flags"""
        overrides = {}
        for name in ("realization_limit", "bruteforce_limit", "switch_budget", "containment_budget", "threads"):
            value = getattr(self.args, name)
            if value is not None:
                overrides[name] = value
        if self.args.no_progress:
            overrides["progress"] = False
        return overrides

    def get_search_config(self) -> SearchConfig:
        return self.config

    def wants_json(self) -> bool:
        return self.args.json

    def get_save_path(self):
        return self.args.save
