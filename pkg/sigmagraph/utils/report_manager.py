import os
import json
from dataclasses import dataclass, field

from . import console


@dataclass
class CommandResult:
    """
    What one subcommand produced.
    - **text**: The plain-text rendering for stdout.
    - **document**: The machine-readable rendering (printed with --json).
    - **exit_code**: 0 on success; 1 when a verification reports a failed check.
    """
    text: str
    document: dict = field(default_factory=dict)
    exit_code: int = 0


class ReportManager:
    """
    Manages how results leave the program: text or JSON on stdout, and
    optional JSON files on disk. Diagnostics never go through here.
    """
    def __init__(self, as_json: bool = False):
        """
        Initializing the report manager
        - **as_json**: Print JSON documents instead of text
        """
        self.as_json = as_json

    def render(self, result: CommandResult) -> str:
        """
        Rendering a result the way it will be printed
        - **result**: The CommandResult to render
        - **str**: The JSON document or the text form
        """
        if self.as_json:
            return json.dumps(result.document, indent=2, sort_keys=True)
        return result.text

    def emit(self, result: CommandResult) -> None:
        """Printing a result on stdout"""
        print(self.render(result))

    def save(self, result: CommandResult, path: str) -> str:
        """
        Saving the JSON document of a result
        - **result**: The CommandResult to save
        - **path**: Destination file; missing parent directories are created
        - **str**: The path written
        """
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, 'w') as f:
            json.dump(result.document, f, indent=2, sort_keys=True)
            f.write("\n")
        console.info(f"Report saved to: {console.highlight(repr(path))}")
        return path
