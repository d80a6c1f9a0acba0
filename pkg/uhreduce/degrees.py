"""An injection structure whose orbits code c.e. sets

For every e up to e_max, the orbit of 2^e is built so that i enters W_e
exactly when 2^e 3^(i+1) joins that orbit. Elements are the numbers
2^e 3^a 5^j and 2^e 3^a 7^j (5^0 = 7^0): column a = 0 is the main orbit of
2^e, column a = i + 1 an auxiliary orbit standing by for i.

At stage 0 only f(2^e) = 2^e 7 is defined. At stage s + 1, auxiliary orbit
s + 1 appears with the shape of stage s, 5^s -> ... -> 5^0 -> 7 -> ... -> 7^(s+1);
every auxiliary orbit still waiting grows by one at each end; the main orbit
grows by 5^(s+1) -> 5^s at the front and, at the back, by the whole auxiliary
orbit of the entering i, if any, then by the pair 3^(i+1) 5^(s+1) ->
3^(i+1) 7^(s+2) for every i in W_(e,s+1), then by 7^(s+2).
"""

from dataclasses import dataclass, field
from itertools import count
from typing import Dict, Iterator, List, Optional, Sequence

from structutils import InputError, injection_from_images
from .schedule import Schedule
from .snapshots import Kind, StageSnapshot


def element(e: int, a: int, base: int, j: int) -> int:
    """The number 2^e 3^a base^j"""
    return (2 ** e) * (3 ** a) * (base ** j)


def element_label(x: int) -> str:
    """e.g. 2^1.3^2.7^3; the 5 or 7 factor is left out when its exponent
    is 0"""
    exps = []
    for p in (2, 3, 5, 7):
        k = 0
        while x % p == 0:
            x //= p
            k += 1
        exps.append(k)
    e, a, five, seven = exps
    name = f"2^{e}.3^{a}"
    if five:
        name += f".5^{five}"
    elif seven:
        name += f".7^{seven}"
    return name


@dataclass
class _Segment:
    """A finite piece of an orbit from init to final"""
    init: int
    final: int


@dataclass
class _Orbits:
    """The state for one e"""
    e: int
    w: Schedule
    images: Dict[int, int] = field(default_factory=dict)
    main: Optional[_Segment] = None
    waiting: Dict[int, _Segment] = field(default_factory=dict)

    def start(self):
        one = element(self.e, 0, 5, 0)
        seven = element(self.e, 0, 7, 1)
        self.images[one] = seven
        self.main = _Segment(one, seven)

    def _new_auxiliary(self, a: int, s: int):
        """Auxiliary orbit a in its stage s shape"""
        e = self.e
        for j in range(s, 0, -1):
            self.images[element(e, a, 5, j)] = element(e, a, 5, j - 1)
        for j in range(0, s + 1):
            self.images[element(e, a, 7, j)] = element(e, a, 7, j + 1)
        self.waiting[a] = _Segment(element(e, a, 5, s), element(e, a, 7, s + 1))

    def step(self, s: int):
        """Stage s + 1"""
        e, f = self.e, self.images
        self._new_auxiliary(s + 1, s)
        entering = self.w.entering(s + 1)
        for a, seg in self.waiting.items():
            if entering is not None and a == entering + 1:
                continue
            front = element(e, a, 5, s + 1)
            f[front] = seg.init
            back = element(e, a, 7, s + 2)
            f[seg.final] = back
            self.waiting[a] = _Segment(front, back)
        front = element(e, 0, 5, s + 1)
        f[front] = self.main.init
        cur = self.main.final
        if entering is not None:
            seg = self.waiting.pop(entering + 1)
            f[cur] = seg.init
            cur = seg.final
        for i in sorted(self.w.members(s + 1)):
            x = element(e, i + 1, 5, s + 1)
            y = element(e, i + 1, 7, s + 2)
            f[cur], f[x] = x, y
            cur = y
        back = element(e, 0, 7, s + 2)
        f[cur] = back
        self.main = _Segment(front, back)

    def elements(self) -> List[int]:
        return sorted(set(self.images) | set(self.images.values()))

    def orbit_of_root(self) -> List[int]:
        """The orbit fragment through 2^e, from its first to its last element"""
        back = {y: x for x, y in self.images.items()}
        x = self.main.init
        out = [x]
        while x in self.images:
            x = self.images[x]
            out.append(x)
        if out[0] in back:
            raise InputError("the main orbit has no first element")
        return out


def _check_schedules(e_max: int, w_per_e: Sequence[Schedule]):
    if e_max < 0:
        raise InputError("e_max must be >= 0", field="e_max")
    if len(w_per_e) != e_max + 1:
        raise InputError(f"expected {e_max + 1} schedules, got {len(w_per_e)}",
                         field="schedules")


def _degrees_snapshot(s: int, states: Sequence[_Orbits]) -> StageSnapshot:
    elements = sorted(x for st in states for x in st.elements())
    index = {x: k for k, x in enumerate(elements)}
    images = {x: y for st in states for x, y in st.images.items()}
    frozen = tuple(index.get(images.get(x)) if x in images else None
                   for x in elements)
    labels = tuple(element_label(x) for x in elements)
    metadata = {
        'size': len(elements),
        'orbits': [st.orbit_of_root() for st in states],
        'waiting': [sorted(st.waiting) for st in states],
    }
    return StageSnapshot(
        Kind.INJ_DEGREES, s, metadata,
        lambda: injection_from_images(frozen).with_labels(labels))


def iter_inj_degrees(e_max: int, w_per_e: Sequence[Schedule],
                     stages: Optional[int] = None) -> Iterator[StageSnapshot]:
    """Snapshots after stage 0, 1, ..., up to `stages` when given

    Arguments
      e_max: the largest e
      w_per_e: the enumeration of W_e for e = 0..e_max
      stages: last stage to run
    """
    _check_schedules(e_max, w_per_e)
    if stages is not None and stages < 0:
        raise InputError("stages must be >= 0", field="stages")
    states = [_Orbits(e, w) for e, w in enumerate(w_per_e)]
    for st in states:
        st.start()
    for s in count():
        yield _degrees_snapshot(s, states)
        if stages is not None and s >= stages:
            return
        for st in states:
            st.step(s)


def build_inj_degrees(e_max: int, w_per_e: Sequence[Schedule],
                      stages: int) -> StageSnapshot:
    snap = None
    for snap in iter_inj_degrees(e_max, w_per_e, stages):
        pass
    return snap


def check_inj_degrees(snap: StageSnapshot,
                      w_per_e: Sequence[Schedule]) -> List[str]:
    """Violations of: i is in W_(e,s) iff 2^e 3^(i+1) lies in the orbit of 2^e

    Only i < s are checked; 3^(i+1) first exists at stage i + 1.
    """
    if snap.kind != Kind.INJ_DEGREES:
        raise InputError(f"snapshot is of kind {snap.kind.value}, "
                         f"not {Kind.INJ_DEGREES.value}", field="kind")
    s = snap.stage
    out = []
    for e, (w, orbit) in enumerate(zip(w_per_e, snap.metadata['orbits'])):
        members = set(orbit)
        if element(e, 0, 5, 0) not in members:
            out.append(f"2^{e} is not in its own orbit")
        inside = w.members(s)
        for i in range(s):
            there = element(e, i + 1, 5, 0) in members
            if there != (i in inside):
                out.append(f"e={e}: 3^{i + 1} {'is' if there else 'is not'} "
                           f"in the orbit but {i} "
                           f"{'is not' if there else 'is'} in W")
    return out
