"""Exception hierarchy shared by every subsystem.

The split mirrors how callers must react: bad inputs are caller bugs,
capacity errors mean a configured enumeration budget was exceeded, gate
errors mean a bound formula was evaluated outside its stated domain, and
falsification errors mean a theorem-backed verdict failed and must never
be swallowed.
"""


class ArtinLabError(Exception):
    """Base class for all library errors."""


class InputError(ArtinLabError):
    """Malformed input: non-bijective permutation, group mismatch, etc."""


class CapacityError(ArtinLabError):
    """A computation exceeded its configured enumeration budget."""


class GateError(ArtinLabError):
    """A bound formula was requested outside its domain gate.

    The message names the violated gate; gates are never silently clamped.
    """


class FalsificationError(ArtinLabError):
    """A theorem-backed verdict came out false.

    Carries a structured report; the CLI maps this to exit code 2.
    """

    def __init__(self, message: str, report: dict | None = None):
        super().__init__(message)
        self.report = report or {}
