"""Script language and command-line driver."""

from .execute import Result, execute
from .script import Script, ScriptError, parse_script

__all__ = ["Result", "Script", "ScriptError", "execute", "parse_script"]
