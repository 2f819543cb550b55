"""Expression language and command-line interface over the engines."""

from .evaluate import Config, Session
from .main import main
from .syntax import parse, parse_program

__all__ = ["Config", "Session", "main", "parse", "parse_program"]
