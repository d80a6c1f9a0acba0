"""Counts that may be infinite"""

from functools import total_ordering
from typing import Optional, Union

from structutils import InputError


@total_ordering
class ExtCount:
    """A natural number or omega

    n + omega = omega, and every natural number is below omega. Compares and
    hashes equal to the plain int when finite.
    """
    __slots__ = ('value',)
    value: Optional[int]

    def __init__(self, value: Optional[int]):
        if value is not None and (isinstance(value, bool) or value < 0):
            raise ValueError("count must be a natural number or omega")
        object.__setattr__(self, 'value', value)

    def __setattr__(self, name, value):
        raise AttributeError("ExtCount is immutable")

    @staticmethod
    def of(x: Union['ExtCount', int, str, None]) -> 'ExtCount':
        if isinstance(x, ExtCount):
            return x
        if x is None or x == "omega":
            return OMEGA
        return ExtCount(int(x))

    @staticmethod
    def parse(x, field: str, minimum: int = 0) -> 'ExtCount':
        """Read a count from a JSON value

        Arguments
          x: an integer or the string "omega"
          field: field path reported on error
          minimum: least finite value accepted
        """
        if x == "omega":
            return OMEGA
        if isinstance(x, bool) or not isinstance(x, int) or x < minimum:
            raise InputError(
                f"count must be an integer >= {minimum} or \"omega\", got {x!r}",
                field=field)
        return ExtCount(x)

    @property
    def is_omega(self) -> bool:
        return self.value is None

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def __add__(self, other) -> 'ExtCount':
        other = ExtCount.of(other)
        if self.is_omega or other.is_omega:
            return OMEGA
        return ExtCount(self.value + other.value)

    __radd__ = __add__

    def __mul__(self, other) -> 'ExtCount':
        other = ExtCount.of(other)
        if self == 0 or other == 0:
            return ExtCount(0)
        if self.is_omega or other.is_omega:
            return OMEGA
        return ExtCount(self.value * other.value)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other
        if isinstance(other, ExtCount):
            return self.value == other.value
        return NotImplemented

    def __lt__(self, other) -> bool:
        other = ExtCount.of(other)
        if self.is_omega:
            return False
        return other.is_omega or self.value < other.value

    def __hash__(self) -> int:
        return hash(self.value) if self.is_finite else hash("omega")

    def __int__(self) -> int:
        if self.is_omega:
            raise ValueError("omega has no integer value")
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return "omega" if self.is_omega else str(self.value)

    def to_json(self) -> Union[int, str]:
        return "omega" if self.is_omega else self.value

    def sort_key(self):
        return (1, 0) if self.is_omega else (0, self.value)


OMEGA = ExtCount(None)
