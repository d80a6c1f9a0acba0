"""Enumeration schedules of a computably enumerable set

A schedule lists the finitely many events seen so far: (element, stage) means
the element enters W at that stage, so W_s is the set of elements whose stage
is at most s. Stage 0 is empty, at most one element enters per stage, and an
element entering at stage s is below s.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Tuple

from structutils import InputError

Event = Tuple[int, int]


def pair_code(x: int, y: int) -> int:
    """The Cantor code of the pair (x, y); least codes break ties"""
    return (x + y) * (x + y + 1) // 2 + y


@dataclass(frozen=True)
class Schedule:
    """The events of an enumeration, sorted by stage"""
    events: Tuple[Event, ...] = ()
    _by_stage: Dict[int, int] = field(default_factory=dict, init=False,
                                      repr=False, compare=False)
    _by_element: Dict[int, int] = field(default_factory=dict, init=False,
                                        repr=False, compare=False)

    def __post_init__(self):
        for i, (x, s) in enumerate(self.events):
            for v in (x, s):
                if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                    raise InputError(f"expected naturals, got {[x, s]}",
                                     field=f"events[{i}]")
        events = tuple(sorted(((x, s) for x, s in self.events),
                              key=lambda ev: ev[1]))
        object.__setattr__(self, 'events', events)
        for i, (x, s) in enumerate(events):
            fld = f"events[{i}]"
            if s == 0:
                raise InputError("nothing enters at stage 0", field=fld)
            if x >= s:
                raise InputError(
                    f"element {x} cannot enter before stage {x + 1}",
                    field=fld)
            if s in self._by_stage:
                raise InputError(f"two elements enter at stage {s}",
                                 field=fld)
            if x in self._by_element:
                raise InputError(f"element {x} enters twice", field=fld)
            self._by_stage[s] = x
            self._by_element[x] = s

    @staticmethod
    def of(*events: Event) -> 'Schedule':
        return Schedule(tuple(events))

    @staticmethod
    def parse(obj: Any, fld: str = "events") -> 'Schedule':
        """Read a schedule from a JSON array of [element, stage] pairs,
        or an object holding one under "events"
        """
        if isinstance(obj, dict):
            obj = obj.get('events', [])
        if not isinstance(obj, list):
            raise InputError("a schedule is a list of [element, stage]",
                             field=fld)
        events: List[Event] = []
        for i, ev in enumerate(obj):
            if not isinstance(ev, list) or len(ev) != 2:
                raise InputError("expected [element, stage]",
                                 field=f"{fld}[{i}]")
            events.append((ev[0], ev[1]))
        return Schedule(tuple(events))

    @property
    def elements(self) -> FrozenSet[int]:
        return frozenset(self._by_element)

    @property
    def last_stage(self) -> int:
        return self.events[-1][1] if self.events else 0

    def entering(self, stage: int) -> Optional[int]:
        """The element entering at this stage, if any"""
        return self._by_stage.get(stage)

    def stage_of(self, x: int) -> Optional[int]:
        """The stage at which x enters, if it does"""
        return self._by_element.get(x)

    def members(self, stage: int) -> FrozenSet[int]:
        """W_s: the elements entered by the given stage"""
        return frozenset(x for x, s in self.events if s <= stage)

    def restricted(self, stage: int) -> 'Schedule':
        return Schedule(tuple(ev for ev in self.events if ev[1] <= stage))

    def to_json(self) -> List[List[int]]:
        return [[x, s] for x, s in self.events]


def schedules_from(objs: Iterable[Any]) -> List[Schedule]:
    """One schedule per JSON entry, for constructions over several sets"""
    return [Schedule.parse(o, f"schedules[{i}]") for i, o in enumerate(objs)]
