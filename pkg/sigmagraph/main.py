import sys

# Local imports
from .controllers.command_controller import CommandController
from .errors import ParseError, SigmaGraphError
from .utils import console
from .utils.config_manager import ConfigManager
from .utils.report_manager import ReportManager


def run(argv=None) -> int:
    """
    Running one command line
    - **argv**: Argument list without the program name (defaults to sys.argv[1:])
    - **int**: Exit code; 0 on success, 1 on a domain refusal, 2 on malformed input
    """
    try:
        config_manager = ConfigManager(argv)
    except SystemExit as e:
        # argparse exits 0 for --help and 2 for usage errors
        return 0 if e.code in (0, None) else 2
    except SigmaGraphError as e:
        console.error(str(e))
        return 1

    controller = CommandController(config_manager.get_search_config(), accept_cost=config_manager.args.accept_cost)
    report_manager = ReportManager(as_json=config_manager.wants_json())

    try:
        result = controller.dispatch(config_manager.command, config_manager.args)
    except ParseError as e:
        console.error(str(e))
        return 2
    except SigmaGraphError as e:
        console.error(str(e))
        return 1
    except KeyboardInterrupt:
        console.warning("Interrupted by user")
        return 1

    report_manager.emit(result)
    if config_manager.get_save_path():
        report_manager.save(result, config_manager.get_save_path())
    return result.exit_code


def main():
    """Main entry point for the program"""
    sys.exit(run())


if __name__ == "__main__":
    main()
