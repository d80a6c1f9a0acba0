"""Linear orders

A normalized presentation of a weakly ultrahomogeneous order alternates
finite blocks L_0, ..., L_n with copies of eta. Its special points are the
points of the finite blocks, named a1, a2, ... from left to right.
"""

from itertools import product
from typing import Iterable, List, Sequence, Set, Tuple, Union

from structutils import (
    DEFAULT_MAX_SETS,
    Family,
    InputError,
    PreconditionError,
    ResourceError
)
from uhpres import (
    ETA,
    FIN,
    B_ETA,
    LinOrderPres,
    fin,
    normalize_linear,
    point_name,
    special_points
)
from .report import (
    NA,
    ConditionResult,
    ExceptionalCheckTrace,
    ExceptionalSet,
    Report
)

Coord = Tuple[int, int]


def _has_successivity_blocks(p: LinOrderPres) -> bool:
    return any(b.kind not in (FIN, ETA) for b in p.blocks)


def _required(p: LinOrderPres, i: int) -> Tuple[bool, bool]:
    """Whether the first and the last point of finite block i must be in S"""
    before = i > 0 and p.blocks[i - 1].kind == ETA
    after = i + 1 < len(p.blocks) and p.blocks[i + 1].kind == ETA
    return before, after


def parse_point(p: LinOrderPres, x: Union[str, Sequence[int]]) -> Coord:
    """Read a point of a normalized order: a name a<j>, "i:pos" or [i, pos]

    Points outside finite blocks keep their block index and position, which
    is only checked to be an integer.
    """
    sp = special_points(p)
    if isinstance(x, str):
        name = x.strip()
        if name.startswith("a") and name[1:].isdigit():
            j = int(name[1:])
            if not 1 <= j <= len(sp):
                raise InputError(f"no special point {name}", field="S")
            return sp[j - 1]
        parts = name.split(":")
        if len(parts) != 2:
            raise InputError(f"cannot read point '{name}'", field="S")
        try:
            x = (int(parts[0]), int(parts[1]))
        except ValueError:
            raise InputError(f"cannot read point '{name}'", field="S")
    i, pos = x
    if not 0 <= i < len(p.blocks):
        raise InputError(f"block {i} out of range", field="S")
    b = p.blocks[i]
    if b.kind == FIN and not 1 <= pos <= b.k:
        raise InputError(f"position {pos} out of range in block {i}",
                         field="S")
    return (i, pos)


def _special_members(p: LinOrderPres, S: Iterable) -> Set[Coord]:
    coords = {parse_point(p, x) for x in S}
    return {c for c in coords if p.blocks[c[0]].kind == FIN}


def is_exceptional_linear(p: LinOrderPres, S: Iterable) -> ExceptionalCheckTrace:
    """Decide if a set of points is exceptional

    Arguments
      p: a presentation, normalized here
      S: points as names a<j>, "i:pos" strings or (block, position) pairs of
         the normalized presentation; points outside finite blocks are
         ignored
    Returns
      the trace of the conditions: (i) no successor pair outside S,
      (ii) S holds the last point of a finite block followed by eta and the
      first point of one preceded by eta
    """
    p = normalize_linear(p)
    members = _special_members(p, S)
    conds: List[ConditionResult] = []
    if _has_successivity_blocks(p):
        conds.append(ConditionResult(
            "finitely many successivities", False,
            detail="the order has an omega, omega* or zeta block"))
        return ExceptionalCheckTrace(False, conds)
    sp = special_points(p)
    pair = next(((a, b) for a, b in zip(sp, sp[1:])
                 if a[0] == b[0] and a not in members and b not in members),
                None)
    if pair is not None:
        conds.append(ConditionResult(
            "no successor pair outside S", False,
            tuple(point_name(p, c) for c in pair)))
        return ExceptionalCheckTrace(False, conds)
    conds.append(ConditionResult("no successor pair outside S", True))
    for i, b in enumerate(p.blocks):
        if b.kind != FIN:
            continue
        first, last = _required(p, i)
        for need, pos in ((first, 1), (last, b.k)):
            if need and (i, pos) not in members:
                conds.append(ConditionResult(
                    "block ends next to eta are in S", False,
                    (point_name(p, (i, pos)),)))
                return ExceptionalCheckTrace(False, conds)
    conds.append(ConditionResult("block ends next to eta are in S", True))
    return ExceptionalCheckTrace(True, conds)


def _block_minimal_sets(k: int, first: bool, last: bool) -> List[Tuple[int, ...]]:
    """Minimal subsets of 1..k meeting every successor pair and the required
    ends

    A member is removable iff it is not required and both its neighbours in
    range are members, so a set is minimal iff no member is removable.
    """
    required = {pos for need, pos in ((first, 1), (last, k)) if need}
    found: List[Tuple[int, ...]] = []

    def removable(chosen: List[bool], pos: int) -> bool:
        if not chosen[pos - 1] or pos in required:
            return False
        left = pos == 1 or chosen[pos - 2]
        right = pos == k or chosen[pos]
        return left and right

    def walk(chosen: List[bool]):
        pos = len(chosen)
        if pos >= 1 and not chosen[-1] and pos in required:
            return
        if pos >= 2 and not chosen[-1] and not chosen[-2]:
            return
        # the membership of pos + 1 is known, so pos - 1 is settled
        if pos >= 2 and removable(chosen, pos - 1):
            return
        if pos == k:
            if k >= 1 and removable(chosen, k):
                return
            found.append(tuple(q for q in range(1, k + 1) if chosen[q - 1]))
            return
        walk(chosen + [False])
        walk(chosen + [True])

    walk([])
    return found


def minimal_exceptional_linear(p: LinOrderPres,
                               max_sets: int = DEFAULT_MAX_SETS
                               ) -> List[Tuple[Coord, ...]]:
    """All minimal exceptional sets, by (size, coordinates)

    The conditions are local to each finite block, so the minimal sets are
    the products of per-block minimal sets.
    """
    p = normalize_linear(p)
    if _has_successivity_blocks(p):
        raise PreconditionError("the order is not weakly ultrahomogeneous")
    per_block = []
    total = 1
    for i, b in enumerate(p.blocks):
        if b.kind != FIN:
            continue
        sets = _block_minimal_sets(b.k, *_required(p, i))
        per_block.append([tuple((i, q) for q in s) for s in sets])
        total *= len(sets)
        if total > max_sets:
            raise ResourceError(
                f"more than {max_sets} minimal exceptional sets")
    result = [sum(choice, ()) for choice in product(*per_block)]
    return sorted(result, key=lambda s: (len(s), s))


def definable_closure_linear(p: LinOrderPres, S: Iterable) -> List[str]:
    """D(S) for an exceptional S: S together with every special point

    Members of S outside finite blocks are kept as "i:pos".
    """
    p = normalize_linear(p)
    S = list(S)
    if not is_exceptional_linear(p, S):
        raise PreconditionError("S is not exceptional")
    coords = {parse_point(p, x) for x in S} | set(special_points(p))
    return [_name(p, c) for c in sorted(coords)]


def _name(p: LinOrderPres, c: Coord) -> str:
    if p.blocks[c[0]].kind == FIN:
        return point_name(p, c)
    return f"{c[0]}:{c[1]}"


def analyze_linear(p: LinOrderPres, max_sets: int = DEFAULT_MAX_SETS) -> Report:
    """Decide the homogeneity notions of a linear order

    Argument
      p: a presentation, normalized here
    Returns
      the report; delta2 does not apply to linear orders
    """
    p = normalize_linear(p)
    uh = p.blocks in ((), (fin(1),), (B_ETA,))
    wuh = not _has_successivity_blocks(p)
    r = Report(Family.ORDER, uh, wuh, wuh, NA)
    r.cite('lin-uh', 'lin-wuh', 'lin-cc')
    r.extra['normalized'] = p.to_json()['blocks']
    if not wuh:
        r.notes.append("omega, omega* and zeta blocks have infinitely many "
                       "successivities")
        return r
    sp = special_points(p)
    r.special = [point_name(p, c) for c in sp]
    r.extra['coordinates'] = {point_name(p, c): f"{c[0]}:{c[1]}" for c in sp}
    sets = minimal_exceptional_linear(p, max_sets)
    r.minimal_exceptional = [
        ExceptionalSet(tuple(point_name(p, c) for c in s)) for s in sets]
    r.definable_closure = ExceptionalSet(
        tuple(r.special), "the special points")
    r.cite('lin-exc', 'lin-dcl')
    return r
