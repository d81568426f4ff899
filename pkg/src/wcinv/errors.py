"""Exception types shared across the package.

Two of these are not failures in the usual sense: ``CounterexampleFound``
and ``TheoremCounterexample`` are the detection channel of the verification
sweeps.  They carry enough cell data to reproduce the offending case from
the command line.
"""

from __future__ import annotations

from typing import Any


class WcinvError(Exception):
    """Base class for all package errors."""


class OverflowLimitError(WcinvError):
    """An exact integer result left the signed 127-bit working range.

    Iterated lcm grows multiplicatively; a silently wrapped value would
    corrupt every downstream inequality, so the overflow is detected and
    raised instead.
    """


class EmptySubsetError(WcinvError, ValueError):
    """A subset gcd was requested for the empty index set."""


class IndexOutOfRangeError(WcinvError, IndexError):
    """An index subset refers to a position outside the weight sequence."""


class WrongArityError(WcinvError, ValueError):
    """A coin-system operation was called with an unsupported generator count."""


class SequenceTooShortError(WcinvError, ValueError):
    """The operation requires a weight sequence with at least four entries."""


class SplitOutOfRangeError(WcinvError, ValueError):
    """The split position s lies outside [-1, n]."""


class HypothesesViolatedError(WcinvError, ValueError):
    """The divisibility hypotheses of the certificate machinery fail for (a, h)."""


class SplitImpossibleError(WcinvError):
    """No d1/d2 side assignment exists for some weight not dividing h."""

    def __init__(self, index: int, weight: int) -> None:
        super().__init__(
            f"weight a_{index}={weight} divides neither degree (and not h); "
            "the instance is outside the divisibility hypotheses"
        )
        self.index = index
        self.weight = weight


class PreconditionViolatedError(WcinvError):
    """A witness-search precondition fails; ``check`` names which one."""

    def __init__(self, check: str, detail: str) -> None:
        super().__init__(f"precondition '{check}' violated: {detail}")
        self.check = check
        self.detail = detail


class CounterexampleFound(WcinvError):
    """Exhaustive certificate search failed on a cell.

    This is the verifier's detection channel, not a panic: a genuine
    occurrence would falsify the certificate-existence claim.  The payload
    holds the full cell (weights, s, h, profile, lhs) for the report.
    """

    def __init__(self, payload: dict[str, Any]) -> None:
        super().__init__(f"no certificate for cell {payload.get('weights')}, "
                         f"s={payload.get('s')}, h={payload.get('h')}")
        self.payload = payload


class TheoremCounterexample(WcinvError):
    """The witness pipeline and the exhaustive oracle both failed on an instance.

    A genuine occurrence would falsify the effective-nonvanishing statement
    on its arithmetic shadow; the payload carries the full diagnostic.
    """

    def __init__(self, payload: dict[str, Any]) -> None:
        super().__init__("no section witness found; diagnostic attached")
        self.payload = payload
