"""Classification calculus for circle actions on closed Alexandrov 3-spaces."""

__version__ = "0.1.0"
