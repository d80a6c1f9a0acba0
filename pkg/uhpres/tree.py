"""Trees of finite height with counted children

A node lists its child types with multiplicities. Children are merged and
sorted by their canonical key when a node is built, so two presentations
describe isomorphic trees iff they are equal.

A node may also carry an unbounded tail: besides the listed children it has
infinitely many stars of unbounded finite size, nothing more being known.
The tail is realized as one star with k leaves for each k = 1, 2, 3, ...
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from structutils import InputError
from .extcount import ExtCount, OMEGA

Address = Tuple[Tuple[int, int], ...]


@lru_cache(maxsize=None)
def tree_key(t: 'TreePres') -> Tuple:
    """Canonical key: equal keys iff isomorphic trees"""
    return (int(t.unbounded_tail),
            tuple((tree_key(c), m.sort_key()) for c, m in t.children))


@dataclass(frozen=True)
class TreePres:
    """A node of a tree presentation"""
    children: Tuple[Tuple['TreePres', ExtCount], ...] = ()
    unbounded_tail: bool = False

    def __post_init__(self):
        acc = {}
        for child, mult in self.children:
            if not isinstance(child, TreePres):
                raise InputError("a child must be a tree node")
            mult = ExtCount.of(mult)
            if mult == 0:
                raise InputError("multiplicity must be >= 1")
            k = tree_key(child)
            if k in acc:
                acc[k] = (child, acc[k][1] + mult)
            else:
                acc[k] = (child, mult)
        merged = tuple(acc[k] for k in sorted(acc))
        object.__setattr__(self, 'children', merged)

    @property
    def is_leaf(self) -> bool:
        return not self.children and not self.unbounded_tail

    @property
    def key(self) -> Tuple:
        return tree_key(self)

    def to_json(self) -> Union[list, dict]:
        kids = [[c.to_json(), m.to_json()] for c, m in self.children]
        if self.unbounded_tail:
            return {'children': kids, 'unbounded_tail': True}
        return kids

    def __repr__(self) -> str:
        inner = ", ".join(f"{c!r}x{m!r}" for c, m in self.children)
        tail = ", ~" if self.unbounded_tail else ""
        return f"T[{inner}{tail}]"


LEAF = TreePres()


def node(*children: Tuple[TreePres, Union[ExtCount, int, str]],
         unbounded_tail: bool = False) -> TreePres:
    """Build a node from (child, multiplicity) pairs"""
    return TreePres(tuple((c, ExtCount.of(m)) for c, m in children),
                    unbounded_tail)


def star(k: Union[ExtCount, int, str]) -> TreePres:
    """A node with k leaf children"""
    return node((LEAF, k))


@lru_cache(maxsize=None)
def height(t: TreePres) -> int:
    """Distance from the node to its deepest leaf"""
    h = 2 if t.unbounded_tail else 0
    for c, _ in t.children:
        h = max(h, 1 + height(c))
    return h


@lru_cache(maxsize=None)
def node_count(t: TreePres) -> ExtCount:
    """Number of nodes of the subtree, possibly omega"""
    if t.unbounded_tail:
        return OMEGA
    total = ExtCount(1)
    for c, m in t.children:
        total = total + m * node_count(c)
    return total


@lru_cache(maxsize=None)
def leaf_count(t: TreePres) -> ExtCount:
    """Number of leaves of the subtree, possibly omega"""
    if t.is_leaf:
        return ExtCount(1)
    if t.unbounded_tail:
        return OMEGA
    total = ExtCount(0)
    for c, m in t.children:
        total = total + m * leaf_count(c)
    return total


def child_slots(t: TreePres) -> Iterator[Tuple[int, TreePres, ExtCount]]:
    """Child types with their slot index, tail stars included

    The tail star with k leaves has slot index len(children) + k - 1 and
    multiplicity 1. The iterator is infinite when the node has a tail.
    """
    for i, (c, m) in enumerate(t.children):
        yield i, c, m
    if t.unbounded_tail:
        k = 1
        while True:
            yield len(t.children) + k - 1, star(k), ExtCount(1)
            k += 1


def slot(t: TreePres, index: int) -> Tuple[TreePres, ExtCount]:
    """The child type at a slot index"""
    if index < 0:
        raise InputError(f"child index {index} out of range")
    if index < len(t.children):
        return t.children[index]
    if t.unbounded_tail:
        return star(index - len(t.children) + 1), ExtCount(1)
    raise InputError(f"child index {index} out of range")


def node_at(t: TreePres, address: Sequence[Sequence[int]]) -> TreePres:
    """The subtree at an address of (child index, copy) steps"""
    cur = t
    for step, (index, copy) in enumerate(address):
        child, mult = slot(cur, index)
        if copy < 0 or (mult.is_finite and copy >= mult.value):
            raise InputError(f"copy {copy} out of range at step {step}")
        cur = child
    return cur


def as_address(a: Sequence[Sequence[int]]) -> Address:
    return tuple((int(i), int(c)) for i, c in a)


def is_ancestor(a: Address, b: Address) -> bool:
    """a is a proper ancestor of b"""
    return len(a) < len(b) and b[:len(a)] == a


def level_counts(t: TreePres) -> List[List[Tuple[TreePres, ExtCount]]]:
    """For each depth, the distinct node types there with their numbers"""
    levels: List[List[Tuple[TreePres, ExtCount]]] = []
    frontier = [(t, ExtCount(1))]
    while frontier:
        merged = {}
        for n, m in frontier:
            k = tree_key(n)
            merged[k] = (n, merged[k][1] + m) if k in merged else (n, m)
        levels.append([merged[k] for k in sorted(merged)])
        nxt = []
        for n, m in levels[-1]:
            for c, cm in n.children:
                nxt.append((c, m * cm))
            if n.unbounded_tail:
                # stars of every size: their leaves are infinitely many
                nxt.append((star(1), m * OMEGA))
        frontier = nxt
    return levels


def successor_count(t: TreePres) -> ExtCount:
    """Number of immediate successors of the node"""
    if t.unbounded_tail:
        return OMEGA
    total = ExtCount(0)
    for _, m in t.children:
        total = total + m
    return total


def truncate(t: TreePres, bound: int) -> TreePres:
    """A finite tree keeping at most `bound` copies of every child type

    Tail stars up to size `bound` are kept as ordinary children.
    """
    kids: List[Tuple[TreePres, ExtCount]] = []
    for c, m in t.children:
        keep = m if m.is_finite and m.value <= bound else ExtCount(bound)
        kids.append((truncate(c, bound), keep))
    if t.unbounded_tail:
        kids.extend((star(k), ExtCount(1)) for k in range(1, bound + 1))
    return TreePres(tuple(kids))


def from_parents(parents: Sequence[Optional[int]]) -> TreePres:
    """The presentation of a finite tree given by its parent table"""
    n = len(parents)
    kids: List[List[int]] = [[] for _ in range(n)]
    root = None
    for x, p in enumerate(parents):
        if p is None:
            root = x
        else:
            kids[p].append(x)
    if root is None:
        raise InputError("a tree needs a root")

    def build(x: int) -> TreePres:
        return node(*((build(c), 1) for c in kids[x]))

    return build(root)


def address_map(parents: Sequence[Optional[int]]) -> Dict[int, Address]:
    """The address in from_parents(parents) of every node of a finite tree

    Copies of one child type are numbered in the order of their node ids.
    """
    n = len(parents)
    kids: List[List[int]] = [[] for _ in range(n)]
    root = None
    for x, p in enumerate(parents):
        if p is None:
            root = x
        else:
            kids[p].append(x)
    if root is None:
        raise InputError("a tree needs a root")
    sub: Dict[int, TreePres] = {}

    def build(x: int) -> TreePres:
        sub[x] = node(*((build(c), 1) for c in kids[x]))
        return sub[x]

    build(root)
    out: Dict[int, Address] = {root: ()}
    stack = [root]
    while stack:
        x = stack.pop()
        keys = [tree_key(c) for c, _ in sub[x].children]
        copies: Dict[int, int] = {}
        for c in sorted(kids[x]):
            idx = keys.index(tree_key(sub[c]))
            out[c] = out[x] + ((idx, copies.get(idx, 0)),)
            copies[idx] = copies.get(idx, 0) + 1
            stack.append(c)
    return out


def parse_address(label: str) -> Address:
    """Read an address written as "root" or "i.c/i.c/..." """
    label = label.strip()
    if label in ("", "root"):
        return ()
    try:
        return tuple((int(i), int(c)) for i, c in
                     (step.split(".") for step in label.split("/")))
    except ValueError:
        raise InputError(f"cannot read node address '{label}'")
