"""Error types shared by every package

Each error carries a stable `kind` string, which is what the executables put
in the error object they print, and the exit code the executables use for
it.
"""

from typing import Optional, Sequence, Tuple


class StructError(Exception):
    """Base class of all errors raised on purpose by this project"""
    kind: str = "error"
    exit_code: int = 1

    def to_dict(self) -> dict:
        return {'error': self.kind, 'message': str(self)}


class InputError(StructError, ValueError):
    """Malformed input: a bad file, a bad field, an element out of range"""
    kind = "input"
    exit_code = 2
    field: Optional[str]
    line: Optional[int]

    def __init__(self, message: str,
                 field: Optional[str] = None,
                 line: Optional[int] = None):
        """
        Arguments
          message: what is wrong
          field: path of the offending field, e.g. `entries[0].count`
          line: line number in the input file, if known
        """
        super().__init__(message)
        self.field = field
        self.line = line

    def to_dict(self) -> dict:
        d = super().to_dict()
        d['field'] = self.field
        d['line'] = self.line
        return d


class ResourceError(StructError):
    """A size cap or a search bound was exceeded"""
    kind = "resource"
    exit_code = 2


class PreconditionError(StructError):
    """The arguments are well-formed but an operation's precondition fails"""
    kind = "precondition"
    exit_code = 2


class UnsupportedError(StructError):
    """The input lies outside what an operation can decide"""
    kind = "unsupported"
    exit_code = 2


class NoIsomorphismError(StructError):
    """Two finite structures turned out not to be isomorphic

    The pairs matched before the search got stuck are kept so the failure can
    be replayed.
    """
    kind = "no-isomorphism"
    exit_code = 3
    prefix: Tuple[Tuple[int, int], ...]

    def __init__(self, message: str,
                 prefix: Sequence[Tuple[int, int]] = ()):
        super().__init__(message)
        self.prefix = tuple(prefix)

    def to_dict(self) -> dict:
        d = super().to_dict()
        d['prefix'] = [list(p) for p in self.prefix]
        return d


class DisagreementError(StructError):
    """Two procedures that must agree gave different answers

    Raised when a decider disagrees with the exhaustive oracle, when a
    construction breaks one of its stage invariants or when a limit gets a
    verdict other than the predicted one.
    """
    kind = "disagreement"
    exit_code = 4
