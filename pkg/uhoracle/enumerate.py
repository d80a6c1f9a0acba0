"""One representative per isomorphism class of small finite structures"""

from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from structutils import (
    DEFAULT_CAP,
    HARD_CAP,
    Family,
    FiniteStructure,
    InputError,
    ResourceError,
    UnsupportedError,
    chain,
    equivalence_from_classes,
    graph_from_edges,
    injection_from_images,
    nested_from_partitions,
    tree_from_parents
)
from .search import canonical_certificate

# a rooted tree as the sorted tuple of its children
Tree = Tuple['Tree', ...]

DEFAULT_NESTED_ARITY: int = 2


def partitions(n: int, largest: Optional[int] = None) -> List[Tuple[int, ...]]:
    """Integer partitions of n in decreasing lexicographic order"""
    largest = n if largest is None else largest
    if n == 0:
        return [()]
    return [(k,) + rest
            for k in range(min(n, largest), 0, -1)
            for rest in partitions(n - k, k)]


@lru_cache(maxsize=None)
def rooted_trees(n: int) -> Tuple[Tree, ...]:
    """All rooted trees with n nodes, children sorted in decreasing order"""
    if n == 1:
        return ((),)
    result = []

    def extend(remaining: int, bound: Tuple[int, int], acc: List[Tree]):
        if remaining == 0:
            result.append(tuple(acc))
            return
        for size in range(min(remaining, bound[0]), 0, -1):
            subs = rooted_trees(size)
            top = bound[1] if size == bound[0] else len(subs) - 1
            for idx in range(top, -1, -1):
                extend(remaining - size, (size, idx), acc + [subs[idx]])

    extend(n - 1, (n - 1, len(rooted_trees(n - 1)) - 1), [])
    return tuple(result)


@lru_cache(maxsize=None)
def leveled_trees(depth: int, leaves: int) -> Tuple[Tree, ...]:
    """Rooted trees whose leaves all sit at the given depth"""
    if depth == 0:
        return ((),) if leaves == 1 else ()
    result = []
    for parts in partitions(leaves):
        # children of equal leaf count are chosen with non-increasing index
        groups: Dict[int, int] = {}
        for p in parts:
            groups[p] = groups.get(p, 0) + 1
        choices: List[List[Tuple[Tree, ...]]] = []
        for size, count in sorted(groups.items(), reverse=True):
            subs = leveled_trees(depth - 1, size)
            choices.append(_multisets(subs, count))
        combos: List[Tuple[Tree, ...]] = [()]
        for options in choices:
            combos = [c + o for c in combos for o in options]
        result.extend(combos)
    return tuple(result)


def _multisets(items: Tuple[Tree, ...], count: int,
               start: int = 0) -> List[Tuple[Tree, ...]]:
    if count == 0:
        return [()]
    return [(items[i],) + rest
            for i in range(start, len(items))
            for rest in _multisets(items, count - 1, i)]


def tree_parents_of(tree: Tree) -> List[Optional[int]]:
    """Breadth-first numbering of a tree, as a parent table"""
    parents: List[Optional[int]] = [None]
    queue = [(tree, 0)]
    while queue:
        node, me = queue.pop(0)
        for child in node:
            parents.append(me)
            queue.append((child, len(parents) - 1))
    return parents


def nested_structure(tree: Tree, arity: int,
                     family: Family = Family.NESTED_EQ) -> FiniteStructure:
    """The nested n-equivalence structure whose class tree is `tree`

    The leaves of the tree, at depth arity + 1, are the elements; two elements
    are E_i-equivalent iff they share their ancestor at depth i.
    """
    leaves: List[Tuple[int, ...]] = []

    def walk(node: Tree, path: Tuple[int, ...]):
        if not node:
            leaves.append(path)
        for i, child in enumerate(node):
            walk(child, path + (i,))

    walk(tree, ())
    if any(len(p) != arity + 1 for p in leaves):
        raise InputError("class tree leaves must all sit at depth arity + 1")
    parts = []
    for depth in range(1, arity + 1):
        groups: Dict[Tuple[int, ...], List[int]] = {}
        for x, p in enumerate(leaves):
            groups.setdefault(p[:depth], []).append(x)
        parts.append(list(groups.values()))
    return nested_from_partitions(parts, len(leaves), family)


def _graphs(n: int) -> List[FiniteStructure]:
    """Graphs on n vertices by vertex augmentation, one per certificate"""
    if n == 1:
        return [graph_from_edges(1, [])]
    found: Dict[Tuple, FiniteStructure] = {}
    for g in _graphs(n - 1):
        edges = [(u, v) for u, v in g.relations[0] if u < v]
        for mask in range(1 << (n - 1)):
            new = edges + [(u, n - 1) for u in range(n - 1) if mask >> u & 1]
            h = graph_from_edges(n, new)
            cert = canonical_certificate(h)
            if cert not in found:
                found[cert] = h
    return [found[c] for c in sorted(found, key=lambda c: (
        sum(bin(x).count("1") for x in c[-1]), c))]


def _cycle_images(parts: Tuple[int, ...]) -> List[int]:
    images = []
    start = 0
    for k in parts:
        images.extend(start + (i + 1) % k for i in range(k))
        start += k
    return images


def _classes(parts: Tuple[int, ...]) -> List[List[int]]:
    classes = []
    start = 0
    for k in parts:
        classes.append(list(range(start, start + k)))
        start += k
    return classes


def enumerate_structures(family: Family, n: int,
                         cap: int = DEFAULT_CAP,
                         arity: Optional[int] = None) -> List[FiniteStructure]:
    """One structure per isomorphism class with exactly n elements

    Arguments
      family: the family to enumerate
      n: number of elements
      cap: largest n accepted, at most the hard cap
      arity: number of relations, for nested-eq
    Returns
      the representatives in a fixed canonical order
    """
    if cap > HARD_CAP:
        raise ResourceError(f"cap {cap} is above the hard limit {HARD_CAP}")
    if n < 1:
        raise InputError("n must be >= 1", field="n")
    if n > cap:
        raise ResourceError(f"size {n} is above the cap {cap}")
    if family == Family.ORDER:
        return [chain(n)]
    if family == Family.EQUIVALENCE:
        return [equivalence_from_classes(_classes(p)) for p in partitions(n)]
    if family == Family.INJECTION:
        return [injection_from_images(_cycle_images(p)) for p in partitions(n)]
    if family == Family.GRAPH:
        return _graphs(n)
    if family in (Family.TREE_PO, Family.TREE_PRED):
        return [tree_from_parents(tree_parents_of(t), family)
                for t in rooted_trees(n)]
    if family == Family.NESTED_EQ:
        if arity is None:
            raise InputError("nested-eq needs an arity", field="arity")
        if arity < 1:
            raise InputError("arity must be >= 1", field="arity")
        return [nested_structure(t, arity)
                for t in leveled_trees(arity + 1, n)]
    raise UnsupportedError(f"no enumeration for family {family.value}")
