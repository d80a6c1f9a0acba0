"""Trees under the order

Nodes are named by address: "root", or "i.c/i.c/..." where each step picks
child slot i and copy c. The root is a constant of the language, so it is in
every substructure and is added to every candidate exceptional set.

Exceptional sets are checked on a finite model: the internal nodes, the
members of K, and for each parent one generic leaf among its leaves outside
K. Leaves with the same parent are swapped by automorphisms, so one stands
for all of them.
"""

from functools import lru_cache
from itertools import combinations, count, product
from typing import Iterable, List, Optional, Set, Tuple, Union

from structutils import (
    DEFAULT_MAX_SETS,
    Family,
    PreconditionError,
    ResourceError
)
from uhpres import (
    ExtCount,
    OMEGA,
    TreePres,
    address_label,
    as_address,
    height,
    is_ancestor,
    node_at,
    parse_address
)
from .finitetype import type_conditions
from .report import (
    NA,
    ConditionResult,
    ExceptionalCheckTrace,
    ExceptionalSet,
    Report
)

Address = Tuple[Tuple[int, int], ...]


@lru_cache(maxsize=None)
def internal_count(t: TreePres) -> ExtCount:
    """Number of nodes of rank >= 1, possibly omega"""
    if t.is_leaf:
        return ExtCount(0)
    if t.unbounded_tail:
        return OMEGA
    total = ExtCount(1)
    for c, m in t.children:
        total = total + m * internal_count(c)
    return total


def internal_nodes(t: TreePres, prefix: Address = ()) -> List[Address]:
    """Addresses of the nodes of rank >= 1, which must be finitely many"""
    if t.is_leaf:
        return []
    out = [prefix]
    for i, (c, m) in enumerate(t.children):
        if not c.is_leaf:
            for copy in range(m.value):
                out.extend(internal_nodes(c, prefix + ((i, copy),)))
    return out


def _leaf_slot(t: TreePres) -> Optional[Tuple[int, ExtCount]]:
    return next(((i, m) for i, (c, m) in enumerate(t.children) if c.is_leaf),
                None)


def resolve_nodes(t: TreePres, K: Iterable[Union[str, Iterable]]) -> Set[Address]:
    """Addresses of the given nodes, checked against the tree"""
    out = set()
    for x in K:
        a = parse_address(x) if isinstance(x, str) else as_address(x)
        node_at(t, a)
        out.add(a)
    return out


def _at_or_above(a: Address, b: Address) -> bool:
    """a is b or an ancestor of b"""
    return b[:len(a)] == a


def _check_wuh(t: TreePres):
    if internal_count(t).is_omega:
        raise PreconditionError(
            "the tree has infinitely many nodes of rank >= 1")


def _model(t: TreePres, k: Set[Address]) -> List[Address]:
    inner = internal_nodes(t)
    model = set(inner) | k
    for p in inner:
        ls = _leaf_slot(node_at(t, p))
        if ls is None:
            continue
        idx, m = ls
        taken = {a[-1][1] for a in k
                 if len(a) == len(p) + 1 and a[:-1] == p and a[-1][0] == idx}
        if m.is_omega or len(taken) < m.value:
            free = next(c for c in count() if c not in taken)
            model.add(p + ((idx, free),))
    return sorted(model, key=lambda a: (len(a), a))


def _labels(addrs: Iterable[Address]) -> List[str]:
    return [address_label(a) for a in sorted(addrs, key=lambda a: (len(a), a))]


def _record(trace: ExceptionalCheckTrace, k: Set[Address], *nodes: Address):
    for a in nodes:
        name = address_label(a)
        trace.lower[name] = _labels(z for z in k if is_ancestor(z, a))
        trace.upper[name] = _labels(z for z in k if _at_or_above(a, z))


def _evaluate(t: TreePres, k: Set[Address]) -> ExceptionalCheckTrace:
    inner = internal_nodes(t)
    model = _model(t, k)
    trace = ExceptionalCheckTrace(False)
    cover = "every node of rank >= 1 is at or below a member"
    for a in inner:
        if not any(_at_or_above(a, y) for y in k):
            trace.conditions.append(ConditionResult(cover, False, (address_label(a),)))
            _record(trace, k, a)
            return trace
    trace.conditions.append(ConditionResult(cover, True))

    separate = "every pair a < b with b outside is split by a member"
    for b in model:
        if b in k:
            continue
        for a in model:
            if is_ancestor(a, b) and not any(
                    _at_or_above(a, z) and not _at_or_above(b, z) for z in k):
                trace.conditions.append(ConditionResult(
                    separate, False, (address_label(a), address_label(b))))
                _record(trace, k, a, b)
                return trace
    trace.conditions.append(ConditionResult(separate, True))

    # two outside leaves under different parents can only be told apart by
    # the members below them
    siblings = "outside leaves under different parents have different members below"
    leaves = [b for b in model if b not in k and node_at(t, b).is_leaf]
    for b1, b2 in combinations(leaves, 2):
        if b1[:-1] != b2[:-1] and \
           {z for z in k if is_ancestor(z, b1)} == {z for z in k if is_ancestor(z, b2)}:
            trace.conditions.append(ConditionResult(
                siblings, False, (address_label(b1), address_label(b2))))
            _record(trace, k, b1, b2)
            return trace
    trace.conditions.append(ConditionResult(siblings, True))
    trace.holds = True
    return trace


def is_exceptional_tree_po(t: TreePres, K: Iterable) -> ExceptionalCheckTrace:
    """Decide if a finite set of nodes is exceptional

    Arguments
      t: a weakly ultrahomogeneous tree
      K: node addresses, as labels or (slot, copy) sequences
    Returns
      the trace of the conditions, evaluated on K with the root
    """
    _check_wuh(t)
    k = resolve_nodes(t, K) | {()}
    return _evaluate(t, k)


def canonical_exceptional_tree_po(t: TreePres) -> List[Address]:
    """The nodes of rank >= 1 other than the root"""
    _check_wuh(t)
    return [a for a in internal_nodes(t) if a]


def minimal_exceptional_tree_po(t: TreePres,
                                max_sets: int = DEFAULT_MAX_SETS
                                ) -> List[List[Address]]:
    """The minimal exceptional sets, root left out, by (size, addresses)

    Candidates are the internal nodes other than the root and the leaves; of
    the leaves under one parent only the first few copies are tried, since
    any choice of that many is equivalent.
    """
    _check_wuh(t)
    units = []
    for p in internal_nodes(t):
        if p:
            units.append([[], [p]])
        ls = _leaf_slot(node_at(t, p))
        if ls is not None:
            idx, m = ls
            top = 1 if m.is_omega else m.value
            units.append([[p + ((idx, c),) for c in range(j)]
                          for j in range(top + 1)])
    total = 1
    for u in units:
        total *= len(u)
        if total > max_sets:
            raise ResourceError(
                f"more than {max_sets} candidate sets to search")
    candidates = sorted(
        (sorted(sum(choice, []), key=lambda a: (len(a), a))
         for choice in product(*units)),
        key=lambda s: (len(s), [(len(a), a) for a in s]))
    found: List[List[Address]] = []
    for cand in candidates:
        cs = set(cand)
        if any(set(f) <= cs for f in found):
            continue
        if _evaluate(t, cs | {()}).holds:
            found.append(cand)
    return found


def analyze_tree_po(t: TreePres, max_sets: int = DEFAULT_MAX_SETS) -> Report:
    """Decide the homogeneity notions of a tree under the order

    Argument
      t: a tree presentation of finite height
    Returns
      the report; cc is finite type, delta2 does not apply
    """
    uh = height(t) <= 1
    wuh = internal_count(t).is_finite
    conds = type_conditions(t)
    sft, ft = (c.holds for c in conds)
    r = Report(Family.TREE_PO, uh, wuh, ft, NA)
    r.cite('po-uh', 'po-wuh', 'po-ft')
    r.extra['rank'] = height(t)
    r.extra['strongly_finite_type'] = sft
    r.extra['finite_type'] = ft
    r.extra['type_conditions'] = [c.to_dict() for c in conds]
    if not wuh:
        r.notes.append("infinitely many nodes of rank >= 1")
        return r
    canon = canonical_exceptional_tree_po(t)
    r.special = _labels(canon)
    r.extra['canonical_exceptional'] = ExceptionalSet(
        tuple(r.special), "the nodes of rank >= 1 other than the root")
    try:
        sets = minimal_exceptional_tree_po(t, max_sets)
        r.minimal_exceptional = [ExceptionalSet(tuple(_labels(s))) for s in sets]
    except ResourceError as e:
        r.notes.append(f"minimal exceptional sets not enumerated: {e}")
    r.cite('po-exc')
    return r
