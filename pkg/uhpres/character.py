"""Characters of equivalence structures and orbit spectra of injections"""

from dataclasses import dataclass
from typing import Dict, Tuple, Union

from structutils import InputError
from .extcount import ExtCount, OMEGA

Count = Union[ExtCount, int, str]


def _merged(entries) -> Tuple[Tuple[ExtCount, ExtCount], ...]:
    acc: Dict[ExtCount, ExtCount] = {}
    for size, count in entries:
        size, count = ExtCount.of(size), ExtCount.of(count)
        if count == 0:
            continue
        acc[size] = acc.get(size, ExtCount(0)) + count
    return tuple(sorted(acc.items(), key=lambda e: e[0].sort_key()))


@dataclass(frozen=True)
class EqCharacter:
    """How many classes of each size an equivalence structure has

    entries maps a class size (possibly omega) to a class count (possibly
    omega). unbounded_tail records that, besides the entries, infinitely many
    distinct finite sizes occur; nothing more is known about those classes.
    """
    entries: Tuple[Tuple[ExtCount, ExtCount], ...] = ()
    unbounded_tail: bool = False

    @staticmethod
    def of(mapping: Dict[Count, Count] = None,
           unbounded_tail: bool = False) -> 'EqCharacter':
        """Build a character from a dict size -> count"""
        mapping = mapping or {}
        for size in mapping:
            if ExtCount.of(size) == 0:
                raise InputError("class size must be >= 1")
        return EqCharacter(_merged(mapping.items()), unbounded_tail)

    def as_dict(self) -> Dict[ExtCount, ExtCount]:
        return dict(self.entries)

    @property
    def sizes(self) -> Tuple[ExtCount, ...]:
        return tuple(size for size, _ in self.entries)

    def total_classes(self) -> ExtCount:
        total = OMEGA if self.unbounded_tail else ExtCount(0)
        for _, count in self.entries:
            total = total + count
        return total

    def to_json(self) -> dict:
        return {
            'entries': [[s.to_json(), c.to_json()] for s, c in self.entries],
            'unbounded_tail': self.unbounded_tail
        }


@dataclass(frozen=True)
class InjSpectrum:
    """The orbit types of an injection structure

    cycles maps a finite cycle length to the number of such cycles. omega
    orbits have a first element and no last one; zeta orbits are two-way
    infinite. unbounded_cycle_tail records that infinitely many distinct cycle
    lengths occur beyond the listed ones.
    """
    cycles: Tuple[Tuple[int, ExtCount], ...] = ()
    omega_orbits: ExtCount = ExtCount(0)
    zeta_orbits: ExtCount = ExtCount(0)
    unbounded_cycle_tail: bool = False

    @staticmethod
    def of(cycles: Dict[int, Count] = None,
           omega: Count = 0, zeta: Count = 0,
           unbounded_cycle_tail: bool = False) -> 'InjSpectrum':
        """Build a spectrum from a dict cycle length -> count and orbit counts"""
        cycles = cycles or {}
        for size in cycles:
            if isinstance(size, bool) or not isinstance(size, int) or size < 1:
                raise InputError("cycle length must be a finite integer >= 1")
        merged = tuple((int(s), c) for s, c in _merged(cycles.items()))
        return InjSpectrum(merged, ExtCount.of(omega), ExtCount.of(zeta),
                           unbounded_cycle_tail)

    def as_dict(self) -> Dict[int, ExtCount]:
        return dict(self.cycles)

    def to_json(self) -> dict:
        return {
            'cycles': [[s, c.to_json()] for s, c in self.cycles],
            'omega': self.omega_orbits.to_json(),
            'zeta': self.zeta_orbits.to_json(),
            'unbounded_cycle_tail': self.unbounded_cycle_tail
        }
