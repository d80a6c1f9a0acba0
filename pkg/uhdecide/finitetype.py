"""Strongly finite type and finite type of trees under the order

A node a is of strongly finite type if its successors have finitely many
isomorphism types and, whenever T[x] embeds into a non-isomorphic T[y] for
successors x and y, the type of T[y] occurs finitely often among them. It is
of finite type if its successors have finitely many types, every type
occurring infinitely often is of strongly finite type, and whenever T[x]
embeds into a non-isomorphic T[y], the type of T[x] or that of T[y] occurs
finitely often. A tree has either property if all its nodes do.

Embeddings map the root to the root and children to children, so the test
is an injective matching of child multisets, done as a max-flow problem.
"""

import networkx as nx

from functools import lru_cache
from typing import Callable, List, Optional, Sequence, Tuple

from uhpres import (
    ExtCount,
    OMEGA,
    TreePres,
    address_label,
    height,
    successor_count
)
from .report import ConditionResult

Address = Tuple[Tuple[int, int], ...]
# (supply, indices of the sinks it may use)
Source = Tuple[ExtCount, List]


def _saturates(sources: Sequence[Source], sinks: dict) -> bool:
    """Can every supply be routed into the sinks within their capacities

    An omega count is replaced by a number above every finite count, and an
    omega sink by enough room for every omega source at once, which keeps the
    answer of the finite problem equal to that of the infinite one.
    """
    finite = sum(m.value for m, _ in sources if m.is_finite) + \
        sum(m.value for m in sinks.values() if m.is_finite)
    big = finite + 1
    n_omega = sum(1 for m, _ in sources if m.is_omega)
    g = nx.DiGraph()
    g.add_nodes_from(("src", "sink"))
    demand = 0
    for i, (m, targets) in enumerate(sources):
        supply = m.value if m.is_finite else big
        demand += supply
        g.add_edge("src", ("s", i), capacity=supply)
        for j in targets:
            g.add_edge(("s", i), ("t", j))
    for j, m in sinks.items():
        g.add_edge(("t", j), "sink",
                   capacity=m.value if m.is_finite else big * (n_omega + 1))
    if demand == 0:
        return True
    return nx.maximum_flow_value(g, "src", "sink") == demand


def _fits_tail_star(c: TreePres) -> bool:
    """c embeds into a star of some finite size"""
    return height(c) <= 1 and successor_count(c).is_finite


@lru_cache(maxsize=None)
def embeds(s: TreePres, t: TreePres) -> bool:
    """Decide if the tree s embeds into the tree t, root to root

    Stars of a tail are taken one each; a tail of s needs a sink with
    infinitely many successors for all its stars.
    """
    if s.is_leaf:
        return True
    if t.is_leaf:
        return False
    sinks = {j: m for j, (_, m) in enumerate(t.children)}
    if t.unbounded_tail:
        sinks["tail"] = OMEGA
    sources: List[Source] = []
    for c, m in s.children:
        targets = [j for j, (d, _) in enumerate(t.children) if embeds(c, d)]
        if t.unbounded_tail and _fits_tail_star(c):
            targets.append("tail")
        sources.append((m, targets))
    if s.unbounded_tail:
        targets = [j for j, (d, _) in enumerate(t.children)
                   if successor_count(d).is_omega]
        if t.unbounded_tail:
            targets.append("tail")
        sources.append((OMEGA, targets))
    return _saturates(sources, sinks)


def _embedding_pairs(a: TreePres):
    """(x, mult x, y, mult y) for distinct child types with T[x] into T[y]"""
    for i, (x, mx) in enumerate(a.children):
        for j, (y, my) in enumerate(a.children):
            if i != j and embeds(x, y):
                yield x, mx, y, my


def sft_node_failure(a: TreePres) -> Optional[str]:
    """Why the node a is not of strongly finite type, or None"""
    if a.unbounded_tail:
        return "infinitely many isomorphism types among the successors"
    for x, _, y, my in _embedding_pairs(a):
        if my.is_omega:
            return f"{x!r} embeds into {y!r}, which occurs infinitely often"
    return None


def ft_node_failure(a: TreePres) -> Optional[str]:
    """Why the node a is not of finite type, or None"""
    if a.unbounded_tail:
        return "infinitely many isomorphism types among the successors"
    for c, m in a.children:
        if m.is_omega and not is_strongly_finite_type(c):
            return f"{c!r} occurs infinitely often and is not of strongly " \
                   f"finite type"
    for x, mx, y, my in _embedding_pairs(a):
        if mx.is_omega and my.is_omega:
            return f"{x!r} embeds into {y!r} and both occur infinitely often"
    return None


def first_failure(t: TreePres, check: Callable[[TreePres], Optional[str]]
                  ) -> Optional[Tuple[Address, str]]:
    """The first node, by address, failing a node check

    One copy of every child type is visited, as all copies are isomorphic.
    """
    stack: List[Tuple[Address, TreePres]] = [((), t)]
    while stack:
        addr, a = stack.pop(0)
        reason = check(a)
        if reason is not None:
            return addr, reason
        stack.extend((addr + ((i, 0),), c) for i, (c, _) in enumerate(a.children))
    return None


@lru_cache(maxsize=None)
def is_strongly_finite_type(t: TreePres) -> bool:
    return first_failure(t, sft_node_failure) is None


@lru_cache(maxsize=None)
def is_finite_type(t: TreePres) -> bool:
    return first_failure(t, ft_node_failure) is None


def type_conditions(t: TreePres) -> List[ConditionResult]:
    """Both verdicts with the first failing node as witness"""
    out = []
    for name, check in (("strongly finite type", sft_node_failure),
                        ("finite type", ft_node_failure)):
        failure = first_failure(t, check)
        if failure is None:
            out.append(ConditionResult(name, True))
        else:
            addr, reason = failure
            out.append(ConditionResult(name, False, (address_label(addr),),
                                       reason))
    return out
