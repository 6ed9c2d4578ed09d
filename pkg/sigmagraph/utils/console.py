import sys

import colorama
from colorama import Fore
from tqdm import tqdm

# Initializing colorama for cross-platform colored terminal output
colorama.init(autoreset=True)

BAR_FORMAT = '{l_bar}{bar}| {n_fmt}/{total_fmt} ({elapsed}<{remaining})'


def info(message: str) -> None:
    """
    Printing a diagnostic line to stderr.
    - **message**: The text to print, already colored if needed.
    """
    print(f"  - {message}", file=sys.stderr)


def warning(message: str) -> None:
    """Printing a yellow warning line to stderr."""
    print(f"  - {Fore.YELLOW}Warning:{Fore.RESET} {message}", file=sys.stderr)


def error(message: str) -> None:
    """Printing a red error line to stderr."""
    print(f"  - {Fore.RED}Error:{Fore.RESET} {message}", file=sys.stderr)


def highlight(value, color=Fore.CYAN) -> str:
    """
    Wrapping a value in a color for embedding into a message.
    - **value**: Anything printable.
    - **color**: A colorama foreground color (cyan for paths and values, magenta for counts).
    """
    return f"{color}{value}{Fore.RESET}"


def progress(iterable, total=None, desc=None, enabled=True):
    """
    Iterating with an optional progress bar on stderr.
    - **iterable**: The iterable to loop over.
    - **total**: Number of items, if the iterable has no len().
    - **desc**: Label shown left of the bar.
    - **enabled**: When False the iterable is returned unchanged.
    """
    if not enabled:
        return iterable
    return tqdm(iterable, total=total, desc=desc, ncols=80, leave=False,
                file=sys.stderr, bar_format=BAR_FORMAT)
