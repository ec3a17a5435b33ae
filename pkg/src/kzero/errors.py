"""Shared exception bases.

Two failure families matter to callers (and to the command line tool, which
maps them to distinct exit codes): input that could not be parsed, and input
that parsed fine but violates a documented precondition of an operation.
"""


class InputSyntaxError(ValueError):
    """Raised when a polynomial, permutation, or data file cannot be parsed."""


class PreconditionError(ValueError):
    """Raised when an operation's documented precondition is violated."""
