"""Trees with the predecessor function

A tree is ultrahomogeneous iff all nodes of one height have the same number
of successors; that number at height n is beta(n). A finite subtree S
containing the root is exceptional iff T_S[x] is ultrahomogeneous for every
x in S, where T_S[x] is the chain below x, x itself and the full subtrees
over the successors of x outside S.
"""

from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Set, Tuple

from structutils import Family
from uhpres import (
    ExtCount,
    TreePres,
    address_label,
    as_address,
    height,
    node,
    node_at,
    successor_count
)
from .finitetype import is_finite_type
from .report import (
    NA,
    BranchingProfile,
    ConditionResult,
    ExceptionalCheckTrace,
    ExceptionalSet,
    Report,
    RootedView,
    agree
)
from .treepo import resolve_nodes

Address = Tuple[Tuple[int, int], ...]
Profile = Tuple[ExtCount, ...]
# excluded child slots: (slot, copies, plan of each copy)
Plan = Tuple[Tuple[int, int, 'Plan'], ...]


@lru_cache(maxsize=None)
def profile(t: TreePres) -> Optional[Profile]:
    """beta of the subtree if it is level-uniform, else None

    A leaf has the empty profile. A tail brings stars of every size, which
    never share a successor count.
    """
    if t.unbounded_tail:
        return None
    if t.is_leaf:
        return ()
    below = {profile(c) for c, _ in t.children}
    if None in below or len(below) != 1:
        return None
    return (successor_count(t),) + below.pop()


def branching_profile(t: TreePres) -> Optional[BranchingProfile]:
    p = profile(t)
    return None if p is None else BranchingProfile(p)


@lru_cache(maxsize=None)
def exclusion_plan(t: TreePres) -> Optional[Plan]:
    """Which children to put into S so that the rest is level-uniform

    The kept children must all be level-uniform with one common profile.
    Child types occurring infinitely often are always kept; every excluded
    copy must admit a plan itself. Among the feasible profiles the one
    excluding the fewest children wins, ties going to the least profile.
    Returns None if no plan exists.
    """
    if t.unbounded_tail:
        return None
    omega = {profile(c) for c, m in t.children if m.is_omega}
    if None in omega or len(omega) > 1:
        return None
    if omega:
        targets: List[Optional[Profile]] = [omega.pop()]
    else:
        uniform = {profile(c) for c, _ in t.children} - {None}
        targets = sorted(uniform) + [None]
    best: Optional[Tuple[int, Plan]] = None
    for target in targets:
        excluded = []
        cost = 0
        for i, (c, m) in enumerate(t.children):
            if target is not None and profile(c) == target:
                continue
            sub = exclusion_plan(c) if m.is_finite else None
            if sub is None:
                break
            excluded.append((i, m.value, sub))
            cost += m.value
        else:
            if best is None or cost < best[0]:
                best = (cost, tuple(excluded))
    return None if best is None else best[1]


def plan_nodes(plan: Plan, prefix: Address = ()) -> List[Address]:
    """The nodes of S a plan puts below `prefix`, prefix itself excluded"""
    out = []
    for i, copies, sub in plan:
        for c in range(copies):
            a = prefix + ((i, c),)
            out.append(a)
            out.extend(plan_nodes(sub, a))
    return out


def canonical_exceptional_tree_pred(t: TreePres) -> Optional[List[Address]]:
    """The canonical minimal exceptional subtree with the root, or None"""
    plan = exclusion_plan(t)
    if plan is None:
        return None
    return [()] + sorted(plan_nodes(plan), key=lambda a: (len(a), a))


def rooted_view(t: TreePres, U: Iterable, a) -> RootedView:
    """T_U[a] as a tree presentation

    Arguments
      t: the tree
      U: a finite subtree, as addresses
      a: the address of a node
    Returns
      the chain below a, a, and the full subtrees over the children of a
      outside U; a tail of a is kept whole
    """
    a = as_address(a)
    x = node_at(t, a)
    U = {as_address(u) for u in U}
    kids = []
    for i, (c, m) in enumerate(x.children):
        taken = sum(1 for u in U
                    if len(u) == len(a) + 1 and u[:-1] == a and u[-1][0] == i)
        rest = m if m.is_omega else ExtCount(max(0, m.value - taken))
        if rest:
            kids.append((c, rest))
    view = TreePres(tuple(kids), x.unbounded_tail)
    for _ in a:
        view = node((view, 1))
    return RootedView(view, a)


def _closure(S: Set[Address]) -> Set[Address]:
    return {a[:i] for a in S for i in range(len(a) + 1)} | {()}


def is_exceptional_tree_pred(t: TreePres, S: Iterable) -> ExceptionalCheckTrace:
    """Decide if a finite set of nodes is exceptional

    The set is first closed under predecessors, which fixing it fixes anyway.
    """
    s = _closure(resolve_nodes(t, S))
    trace = ExceptionalCheckTrace(True)
    for a in sorted(s, key=lambda a: (len(a), a)):
        ok = profile(rooted_view(t, s, a).tree) is not None
        trace.conditions.append(ConditionResult(
            f"T_S[{address_label(a)}] is ultrahomogeneous", ok,
            () if ok else (address_label(a),)))
        if not ok:
            trace.holds = False
            return trace
    return trace


def _omega_keys(counts: Dict) -> int:
    return sum(1 for m in counts.values() if m.is_omega)


def _by_successors(t: TreePres) -> Dict[ExtCount, ExtCount]:
    out: Dict[ExtCount, ExtCount] = {}
    for c, m in t.children:
        k = successor_count(c)
        out[k] = out.get(k, ExtCount(0)) + m
    return out


def height2_wuh(t: TreePres) -> bool:
    """All but finitely many nodes of height 1 have equal successor counts"""
    return not t.unbounded_tail and _omega_keys(_by_successors(t)) <= 1


def height3_wuh(t: TreePres) -> bool:
    """Each node of height 1 has all but finitely many successors with equal
    successor counts, and all but finitely many nodes of height 1 have h
    successors each with k successors"""
    if t.unbounded_tail:
        return False
    shapes: Dict[Tuple, ExtCount] = {}
    for c, m in t.children:
        if c.unbounded_tail or _omega_keys(_by_successors(c)) > 1:
            return False
        ks = {successor_count(d) for d, _ in c.children}
        shape = (successor_count(c), ks.pop()) if len(ks) == 1 else \
            ((ExtCount(0), None) if not ks else ("mixed", id(c)))
        shapes[shape] = shapes.get(shape, ExtCount(0)) + m
    omega = [s for s, m in shapes.items() if m.is_omega]
    return len(omega) <= 1 and all(s[0] != "mixed" for s in omega)


def closed_form_wuh(t: TreePres) -> Optional[bool]:
    """The closed form for heights up to 3, None above"""
    h = height(t)
    if h <= 2:
        return height2_wuh(t)
    if h == 3:
        return height3_wuh(t)
    return None


def analyze_tree_pred(t: TreePres) -> Report:
    """Decide the homogeneity notions of a tree with predecessor

    Argument
      t: a tree presentation of finite height
    Returns
      the report, with beta when the tree is ultrahomogeneous
    """
    beta = branching_profile(t)
    S = canonical_exceptional_tree_pred(t)
    wuh = S is not None
    ft = is_finite_type(t)
    r = Report(Family.TREE_PRED, beta is not None, wuh,
               True if wuh or ft else None, NA)
    r.cite('pred-uh', 'pred-wuh')
    r.extra['finite_type'] = ft
    if beta is not None:
        r.extra['beta'] = beta
    closed = closed_form_wuh(t)
    if closed is not None:
        agree("wuh", closed, wuh)
        r.extra['closed_form_wuh'] = closed
        r.cite('pred-h2' if height(t) <= 2 else 'pred-h3')
    if wuh:
        r.minimal_exceptional = [ExceptionalSet(
            tuple(address_label(a) for a in S[1:]),
            "with the root, a subtree S with every T_S[x] ultrahomogeneous")]
        r.special = [address_label(a) for a in S]
        r.extra['views_uh'] = all(
            profile(rooted_view(t, S, a).tree) is not None for a in S)
        r.cite('lf-wuh')
    else:
        r.notes.append("no finite subtree leaves every T_S[x] ultrahomogeneous")
        if ft:
            r.notes.append("of finite type under the order, hence computably "
                           "categorical")
            r.cite('pred-po', 'po-ft')
        else:
            r.notes.append("computable categoricity not decided")
    return r
