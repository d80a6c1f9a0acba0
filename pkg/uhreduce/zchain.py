"""A computably homogeneous injection structure with infinitely many zeta
orbits

On the odd numbers f(4i + 1) = 4i + 5, f(4i + 7) = 4i + 3 and f(3) = 1:
starting from 1 the orbit runs up through 1, 5, 9, ... and backwards
through 3, 7, 11, .... Every positive integer is 2^k o with o odd, and
f(2^k o) = 2^k f(o), so each k gives one more copy of the odd chain.
"""

from typing import List, Tuple

from structutils import FiniteStructure, InputError, injection_from_images


def _positive(x, what: str):
    if isinstance(x, bool) or not isinstance(x, int) or x < 1:
        raise InputError(f"expected {what} >= 1, got {x!r}")


def zchain_successor(x: int) -> int:
    _positive(x, "an odd number")
    if x % 2 == 0:
        raise InputError(f"expected an odd number >= 1, got {x!r}")
    if x % 4 == 1:
        return x + 4
    if x == 3:
        return 1
    return x - 4


def two_power_split(m: int) -> Tuple[int, int]:
    """(k, o) with m = 2^k o and o odd"""
    _positive(m, "a number")
    k = (m & -m).bit_length() - 1
    return k, m >> k


def zchain_image(m: int) -> int:
    """f(m) for any positive integer m"""
    k, o = two_power_split(m)
    return zchain_successor(o) << k


def zchain_orbit(back: int, forth: int, k: int = 0) -> List[int]:
    """The orbit of 2^k from `back` steps before it to `forth` steps after"""
    before = [3 + 4 * j for j in range(back)][::-1]
    after = [1 + 4 * j for j in range(forth + 1)]
    return [x << k for x in before + after]


def build_odd_zchain(n: int) -> FiniteStructure:
    """The numbers 1, ..., n with f, as a finite prefix

    Element j stands for j + 1; images above n are undefined.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InputError("n must be >= 1", field="n")
    images = []
    for m in range(1, n + 1):
        y = zchain_image(m)
        images.append(y - 1 if y <= n else None)
    return injection_from_images(images).with_labels(
        [str(m) for m in range(1, n + 1)])
