"""Exception hierarchy shared by all modules.

Two broad families matter for callers (and for the CLI exit codes):

* ``InputError`` — the caller handed us something malformed or out of
  bounds.  These map to exit code 2 on the command line.
* ``VerificationError`` — two independent computations of the same
  quantity disagreed, or a requested identity check failed.  Exit code 1.
"""

from __future__ import annotations


class LamanChiralError(Exception):
    """Base class for every error raised by this package."""


class InputError(LamanChiralError):
    """Malformed or out-of-range input."""


class VerificationError(LamanChiralError):
    """An internal cross-check or a requested verification failed."""


class DisconnectedGraph(InputError):
    pass


class TooFewVertices(InputError):
    pass


class MissingVertex(InputError):
    pass


class MissingEdge(InputError):
    pass


class DuplicateVertex(InputError):
    pass


class DuplicateEdge(InputError):
    pass


class SelfLoop(InputError):
    pass


class MissingParentEdge(InputError):
    pass


class NotTypeIPrime(LamanChiralError):
    """The graph admits no construction of the requested kind."""


class TruncationTooLarge(InputError):
    pass


class NonpositiveOrder(InputError):
    pass
