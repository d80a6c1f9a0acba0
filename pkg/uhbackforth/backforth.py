"""Back-and-forth construction of isomorphisms

Pairs are chosen alternately: at even steps the least unmatched element of A
is matched with the least unmatched element of B that keeps the map
extendable, at odd steps the least unmatched element of B with the least
fitting element of A. After 2n steps the first n elements of each side are
matched.

Finite structures are decided exactly: a candidate is taken only when the
map with it still extends to an isomorphism. Presented structures are
materialized and a candidate must agree with the matched pairs on the
relations, on the element kinds and on the pairwise links the
materialization supplies (block, class size, orbit type and offset, subtree
type along the path to the root, component type). Those agree exactly when
the map extends to an isomorphism of the infinite structures, so the
construction never gets stuck; the prefix grows by doubling while no
candidate is in sight.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from structutils import (
    DEFAULT_MAX_PREFIX,
    Family,
    FiniteStructure,
    InputError,
    NoIsomorphismError,
    PreconditionError,
    ResourceError,
    stamp,
    tree_parents
)
from uhoracle import find_isomorphism, is_isomorphism, pair_table
from uhpres import (
    GraphPres,
    Materialized,
    NestedEqPres,
    Presentation,
    TreePres,
    class_tree,
    materialize,
    pres_isomorphic,
    present,
    presented_size
)
from .stages import closure_depth, stage_iso

Pair = Tuple[int, int]


@dataclass
class IsoSchedule:
    """Matched pairs in the order they were chosen

    verified[k] tells whether the first k + 1 pairs passed the stage check.
    For finite inputs, isomorphism is the total map, verified edge by edge.
    """
    pairs: List[Pair] = field(default_factory=list)
    labels: List[Tuple[str, str]] = field(default_factory=list)
    verified: List[bool] = field(default_factory=list)
    isomorphism: Optional[Tuple[int, ...]] = None

    def __len__(self) -> int:
        return len(self.pairs)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.pairs)

    def to_dict(self) -> dict:
        d = {
            'pairs': [list(p) for p in self.pairs],
            'labels': [list(p) for p in self.labels],
            'verified': list(self.verified)
        }
        if self.isomorphism is not None:
            d['isomorphism'] = list(self.isomorphism)
        return stamp(d)


def _same_language(s1: FiniteStructure, s2: FiniteStructure):
    if s1.family != s2.family:
        raise InputError(
            f"cannot compare {s1.family.value} with {s2.family.value}")
    if (len(s1.relations), len(s1.functions), len(s1.constants)) != \
       (len(s2.relations), len(s2.functions), len(s2.constants)):
        raise InputError("structures of different languages")


def _least_unused(size: int, used: Dict[int, int]) -> int:
    return next(x for x in range(size) if x not in used)


def _finite_schedule(s1: FiniteStructure, s2: FiniteStructure) -> IsoSchedule:
    _same_language(s1, s2)
    if s1.size != s2.size:
        raise NoIsomorphismError(
            f"structures have {s1.size} and {s2.size} elements")
    depth = closure_depth(s1)
    fwd: Dict[int, int] = {}
    bwd: Dict[int, int] = {}
    sched = IsoSchedule()
    while len(sched) < s1.size:
        forth = len(sched) % 2 == 0
        if forth:
            a = _least_unused(s1.size, fwd)
            trials = [(a, b) for b in s2.universe if b not in bwd]
        else:
            b = _least_unused(s2.size, bwd)
            trials = [(a, b) for a in s1.universe if a not in fwd]
        found = None
        for pair in trials:
            trial = sched.pairs + [pair]
            if stage_iso(s1, [x for x, _ in trial], s2, [y for _, y in trial],
                         depth) and find_isomorphism(s1, s2, trial) is not None:
                found = pair
                break
        if found is None:
            side, x = ("A", a) if forth else ("B", b)
            raise NoIsomorphismError(f"no match for element {x} of {side}",
                                     prefix=sched.pairs)
        a, b = found
        fwd[a], bwd[b] = b, a
        sched.pairs.append(found)
        sched.labels.append((s1.label(a), s2.label(b)))
        sched.verified.append(True)
    perm = tuple(fwd[x] for x in s1.universe)
    if not is_isomorphism(s1, s2, perm):
        raise NoIsomorphismError("the total map is not an isomorphism",
                                 prefix=sched.pairs)
    sched.isomorphism = perm
    return sched


class _Side:
    """One materialized side of a symbolic construction"""

    def __init__(self, p: Presentation, family: Optional[Family]):
        self.p = p
        self.family = family
        self.m: Optional[Materialized] = None
        self.parents: List[Optional[int]] = []
        self.table = ()

    def grow(self, n: int):
        self.m = materialize(self.p, n, self.family)
        self.table = pair_table(self.m.structure)
        if isinstance(self.p, TreePres):
            self.parents = tree_parents(self.m.structure)

    @property
    def size(self) -> int:
        return self.m.size

    def path(self, x: int) -> List[int]:
        """x and its ancestors, nearest first"""
        out = [x]
        while self.parents[out[-1]] is not None:
            out.append(self.parents[out[-1]])
        return out


def _tree_ok(sa: _Side, sb: _Side, pairs: Sequence[Pair], a: int, b: int) -> bool:
    """The map stays a type-preserving map of ancestor-closed sets"""
    fwd: Dict[int, int] = {}
    bwd: Dict[int, int] = {}
    for x, y in pairs:
        for u, v in zip(sa.path(x), sb.path(y)):
            fwd[u], bwd[v] = v, u
    pa, pb = sa.path(a), sb.path(b)
    if len(pa) != len(pb):
        return False
    for u, v in zip(pa, pb):
        if sa.m.kind(u) != sb.m.kind(v) or \
           fwd.get(u, v) != v or bwd.get(v, u) != u:
            return False
    return True


def _graph_ok(ma: Materialized, mb: Materialized,
              pairs: Sequence[Pair], a: int, b: int) -> bool:
    """The map inside a finite component extends to the whole component"""
    (ia, va), (ib, vb) = ma.keys[a], mb.keys[b]
    ta, tb = ma.templates[ia], mb.templates[ib]
    if ta is None or tb is None:
        return ta is tb
    inside = [(ma.keys[x][1], mb.keys[y][1]) for x, y in pairs
              if ma.keys[x][0] == ia]
    return find_isomorphism(ta, tb, inside + [(va, vb)]) is not None


def _compatible(sa: _Side, sb: _Side, pairs: Sequence[Pair],
                a: int, b: int) -> bool:
    ma, mb = sa.m, sb.m
    if ma.kind(a) != mb.kind(b):
        return False
    ta, tb = sa.table, sb.table
    for x, y in pairs:
        if ta[a][x] != tb[b][y] or ta[x][a] != tb[y][b]:
            return False
        if ma.link(a, x) != mb.link(b, y) or ma.link(x, a) != mb.link(y, b):
            return False
    if isinstance(sa.p, TreePres):
        return _tree_ok(sa, sb, pairs, a, b)
    if isinstance(sa.p, GraphPres):
        return _graph_ok(ma, mb, pairs, a, b)
    return True


def _symbolic(x, family: Optional[Family]):
    """A presentation and its family from a presentation or structure"""
    if isinstance(x, FiniteStructure):
        family = x.family
        x = present(x)
    if isinstance(x, NestedEqPres) and x.structure is not None:
        x = NestedEqPres(x.arity, tree=class_tree(x.structure))
    return x, family


def _symbolic_schedule(a, b, n: Optional[int], family: Optional[Family],
                       max_prefix: int) -> IsoSchedule:
    pa, fam_a = _symbolic(a, family)
    pb, fam_b = _symbolic(b, family)
    if fam_a is not None and fam_b is not None and fam_a != fam_b:
        raise InputError(f"cannot compare {fam_a.value} with {fam_b.value}")
    fam = fam_a or fam_b
    if not pres_isomorphic(pa, pb):
        raise PreconditionError("the presentations are not isomorphic")
    total = presented_size(pa)
    if n is None:
        if not total.is_finite:
            raise InputError("a length is needed for an infinite structure",
                             field="n")
        n = total.value
    if n < 0:
        raise InputError("length must be >= 0", field="n")
    if total.is_finite:
        n = min(n, total.value)
        size = total.value
    else:
        size = min(max(8, 2 * n), max_prefix)
    sa, sb = _Side(pa, fam), _Side(pb, fam)
    sa.grow(size)
    sb.grow(size)
    fwd: Dict[int, int] = {}
    bwd: Dict[int, int] = {}
    sched = IsoSchedule()
    while len(sched) < n:
        forth = len(sched) % 2 == 0
        src, dst, used_src, used_dst = (sa, sb, fwd, bwd) if forth \
            else (sb, sa, bwd, fwd)
        x = _least_unused(src.size, used_src)
        y = None
        for cand in range(dst.size):
            if cand in used_dst:
                continue
            ok = _compatible(sa, sb, sched.pairs, x, cand) if forth \
                else _compatible(sa, sb, sched.pairs, cand, x)
            if ok:
                y = cand
                break
        if y is None:
            if total.is_finite or size >= max_prefix:
                raise ResourceError(
                    f"no match for {src.m.structure.label(x)} within the "
                    f"first {size} elements")
            size = min(2 * size, max_prefix)
            sa.grow(size)
            sb.grow(size)
            continue
        pair = (x, y) if forth else (y, x)
        fwd[pair[0]], bwd[pair[1]] = pair[1], pair[0]
        sched.pairs.append(pair)
        sched.labels.append((sa.m.structure.label(pair[0]),
                             sb.m.structure.label(pair[1])))
        sched.verified.append(stage_iso(
            sa.m.structure, [u for u, _ in sched.pairs],
            sb.m.structure, [v for _, v in sched.pairs], 0))
    return sched


def back_and_forth(a: Union[FiniteStructure, Presentation],
                   b: Union[FiniteStructure, Presentation],
                   n: Optional[int] = None,
                   family: Optional[Family] = None,
                   max_prefix: int = DEFAULT_MAX_PREFIX) -> IsoSchedule:
    """Build an isomorphism from A to B by back and forth

    Arguments
      a, b: two finite structures, or two presentations (a finite structure
            may stand for its own presentation)
      n: number of pairs to build; a finite pair of structures is always
         matched completely
      family: tree-po or tree-pred, when the presentations are trees
      max_prefix: the largest prefix materialized while looking for a match
    Returns
      the schedule; for two finite structures, with the verified total
      isomorphism
    """
    if isinstance(a, FiniteStructure) and isinstance(b, FiniteStructure):
        return _finite_schedule(a, b)
    return _symbolic_schedule(a, b, n, family, max_prefix)
