"""Explicit finite structures

A finite structure lives on the universe 0..n-1. Binary relations are stored
as frozensets of pairs, unary functions as tuples of images. A function value
may be None only in structures that are finite prefixes of an infinite one
(materializations and generator snapshots); the oracle refuses those.
"""

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    List,
    Optional,
    Sequence,
    Tuple
)

from .errors import InputError

Pair = Tuple[int, int]
Relation = FrozenSet[Pair]
Function = Tuple[Optional[int], ...]


class Family(Enum):
    """The families of structures this project knows about"""
    ORDER = "order"
    EQUIVALENCE = "equivalence"
    INJECTION = "injection"
    GRAPH = "graph"
    TREE_PO = "tree-po"
    TREE_PRED = "tree-pred"
    NESTED_EQ = "nested-eq"
    # n-equivalence structures that need not be nested
    N_EQ = "n-eq"

    @staticmethod
    def parse(name: str, field: Optional[str] = "family") -> 'Family':
        """Parse a family name

        Argument
          name: the family name as written in files and on the command line
          field: field path reported on error
        Returns
          the family
        """
        for fam in Family:
            if fam.value == name:
                return fam
        raise InputError(f"unknown family '{name}'", field=field)

    @property
    def functional(self) -> bool:
        """True if the language of the family has function symbols"""
        return self in (Family.INJECTION, Family.TREE_PRED)


@dataclass(frozen=True)
class FiniteStructure:
    """A finite structure of one of the families"""
    family: Family
    size: int
    relations: Tuple[Relation, ...] = ()
    functions: Tuple[Function, ...] = ()
    constants: Tuple[int, ...] = ()
    # display names only, ignored by equality
    labels: Tuple[str, ...] = field(default=(), compare=False)

    @property
    def universe(self) -> range:
        return range(self.size)

    @property
    def arity(self) -> int:
        """The number of equivalence relations of an n-equivalence structure"""
        return len(self.relations)

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    def is_complete(self) -> bool:
        """True if every function is total on the universe"""
        return all(v is not None for fn in self.functions for v in fn)

    def check_element(self, x: int, field: Optional[str] = None) -> int:
        if not isinstance(x, int) or isinstance(x, bool) or \
           not 0 <= x < self.size:
            raise InputError(f"element {x} is not in the universe 0..{self.size - 1}",
                             field=field)
        return x

    def relabel(self, perm: Sequence[int]) -> 'FiniteStructure':
        """Rename every element x to perm[x]

        Argument
          perm: a permutation of the universe
        Returns
          an isomorphic copy of this structure
        """
        if sorted(perm) != list(self.universe):
            raise InputError("relabeling is not a permutation of the universe")
        rels = tuple(frozenset((perm[u], perm[v]) for u, v in rel)
                     for rel in self.relations)
        fns = []
        for fn in self.functions:
            img: List[Optional[int]] = [None] * self.size
            for u, v in enumerate(fn):
                img[perm[u]] = None if v is None else perm[v]
            fns.append(tuple(img))
        labels = ()
        if self.labels:
            lbl = [""] * self.size
            for u, name in enumerate(self.labels):
                lbl[perm[u]] = name
            labels = tuple(lbl)
        return FiniteStructure(self.family, self.size, rels, tuple(fns),
                               tuple(perm[c] for c in self.constants), labels)

    def induced(self, elements: Iterable[int]) -> 'FiniteStructure':
        """The substructure on a set of elements, renumbered in increasing order

        Function values leaving the set become undefined.
        """
        elems = sorted(set(elements))
        index = {x: i for i, x in enumerate(elems)}
        rels = tuple(frozenset((index[u], index[v]) for u, v in rel
                               if u in index and v in index)
                     for rel in self.relations)
        fns = tuple(tuple(index.get(fn[x]) if fn[x] is not None else None
                          for x in elems)
                    for fn in self.functions)
        labels = tuple(self.label(x) for x in elems) if self.labels else ()
        consts = tuple(index[c] for c in self.constants if c in index)
        return FiniteStructure(self.family, len(elems), rels, fns, consts,
                               labels)

    def with_labels(self, labels: Sequence[str]) -> 'FiniteStructure':
        return FiniteStructure(self.family, self.size, self.relations,
                               self.functions, self.constants, tuple(labels))

    def validate(self, allow_partial: bool = False) -> 'FiniteStructure':
        """Check the invariants of the family

        Argument
          allow_partial: if true, undefined function values are accepted
        Returns
          the structure itself
        """
        validate_structure(self, allow_partial)
        return self

    def to_dict(self) -> dict:
        d = {
            'size': self.size,
            'relations': [sorted([u, v] for u, v in rel)
                          for rel in self.relations],
            'functions': [list(fn) for fn in self.functions],
            'constants': list(self.constants),
        }
        if self.labels:
            d['labels'] = list(self.labels)
        return d


def _expect(cond: bool, msg: str):
    if not cond:
        raise InputError(msg, field="structure")


def _is_equivalence(rel: Relation, n: int) -> bool:
    if any((x, x) not in rel for x in range(n)):
        return False
    if any((v, u) not in rel for u, v in rel):
        return False
    classes = classes_of(rel, n)
    return all((u, v) in rel for cls in classes for u in cls for v in cls) and \
        len(rel) == sum(len(c) ** 2 for c in classes)


def classes_of(rel: Relation, n: int) -> List[Tuple[int, ...]]:
    """The classes of an equivalence relation, ordered by least element"""
    seen = set()
    classes = []
    for x in range(n):
        if x in seen:
            continue
        cls = tuple(sorted({x} | {v for u, v in rel if u == x}))
        seen.update(cls)
        classes.append(cls)
    return classes


def validate_structure(s: FiniteStructure, allow_partial: bool = False):
    """Raise InputError if s breaks an invariant of its family"""
    n = s.size
    _expect(n >= 0, "size must be >= 0")
    for rel in s.relations:
        for u, v in rel:
            _expect(0 <= u < n and 0 <= v < n,
                    f"relation pair ({u}, {v}) leaves the universe")
    for fn in s.functions:
        _expect(len(fn) == n, "function table must have one entry per element")
        for v in fn:
            _expect(v is None or 0 <= v < n,
                    f"function value {v} leaves the universe")
            _expect(allow_partial or v is not None,
                    "function must be total on the universe")
    fam = s.family
    if fam == Family.ORDER:
        _expect(len(s.relations) == 1 and not s.functions,
                "an order has exactly one relation")
        lt = s.relations[0]
        _expect(all(u != v for u, v in lt), "order must be irreflexive")
        for u, v in combinations(range(n), 2):
            _expect(((u, v) in lt) != ((v, u) in lt),
                    f"elements {u} and {v} are not comparable")
        _expect(all((u, w) in lt for u, v in lt for x, w in lt if v == x),
                "order must be transitive")
    elif fam in (Family.EQUIVALENCE, Family.NESTED_EQ, Family.N_EQ):
        _expect(len(s.relations) >= 1 and not s.functions,
                "an equivalence structure has at least one relation")
        _expect(fam != Family.EQUIVALENCE or len(s.relations) == 1,
                "an equivalence structure has exactly one relation")
        for i, rel in enumerate(s.relations):
            _expect(_is_equivalence(rel, n),
                    f"relation E{i + 1} is not an equivalence relation")
        if fam == Family.NESTED_EQ:
            for i in range(1, len(s.relations)):
                _expect(s.relations[i] <= s.relations[i - 1],
                        f"E{i + 1} is not contained in E{i}")
    elif fam == Family.INJECTION:
        _expect(len(s.functions) == 1 and not s.relations,
                "an injection structure has exactly one function")
        vals = [v for v in s.functions[0] if v is not None]
        _expect(len(vals) == len(set(vals)), "function is not injective")
    elif fam == Family.GRAPH:
        _expect(len(s.relations) == 1 and not s.functions,
                "a graph has exactly one relation")
        adj = s.relations[0]
        _expect(all(u != v for u, v in adj), "adjacency must be irreflexive")
        _expect(all((v, u) in adj for u, v in adj),
                "adjacency must be symmetric")
    elif fam == Family.TREE_PO:
        _expect(len(s.relations) == 1 and not s.functions,
                "a tree has exactly one relation")
        lt = s.relations[0]
        _expect(n >= 1, "a tree has a root")
        _expect(all(u != v for u, v in lt), "tree order must be irreflexive")
        _expect(all((u, w) in lt for u, v in lt for x, w in lt if v == x),
                "tree order must be transitive")
        roots = [r for r in range(n)
                 if all((r, x) in lt for x in range(n) if x != r)]
        _expect(len(roots) == 1, "tree order needs a unique least element")
        _expect(s.constants == (roots[0],), "the root must be the constant")
        for a in range(n):
            below = [x for x in range(n) if (x, a) in lt]
            for u, v in combinations(below, 2):
                _expect((u, v) in lt or (v, u) in lt,
                        f"the elements below {a} are not a chain")
    elif fam == Family.TREE_PRED:
        _expect(len(s.functions) == 1 and not s.relations,
                "a tree has exactly one function")
        f = s.functions[0]
        roots = [r for r in range(n) if f[r] == r]
        _expect(len(roots) == 1, "tree needs a unique root with f(root) = root")
        for a in range(n):
            x, steps = a, 0
            while x is not None and x != roots[0] and steps <= n:
                x, steps = f[x], steps + 1
            _expect(x is None or x == roots[0],
                    f"element {a} does not reach the root")


def chain(n: int) -> FiniteStructure:
    """The n-element order 0 < 1 < ... < n-1"""
    return FiniteStructure(Family.ORDER, n,
                           (frozenset(combinations(range(n), 2)),))


def order_from_sequence(seq: Sequence[int], n: Optional[int] = None) -> FiniteStructure:
    """The order on 0..n-1 listing its elements from least to greatest"""
    n = len(seq) if n is None else n
    lt = frozenset((seq[i], seq[j]) for i, j in combinations(range(len(seq)), 2))
    return FiniteStructure(Family.ORDER, n, (lt,))


def _equivalence(classes: Iterable[Iterable[int]]) -> Relation:
    return frozenset((u, v) for cls in classes for u in cls for v in cls)


def equivalence_from_classes(classes: Sequence[Sequence[int]],
                             n: Optional[int] = None) -> FiniteStructure:
    """The equivalence structure with the given classes"""
    n = sum(len(c) for c in classes) if n is None else n
    return FiniteStructure(Family.EQUIVALENCE, n, (_equivalence(classes),))


def nested_from_partitions(partitions: Sequence[Sequence[Sequence[int]]],
                           n: int, family: Family = Family.NESTED_EQ
                           ) -> FiniteStructure:
    """The n-equivalence structure whose i-th relation has the i-th partition"""
    return FiniteStructure(family, n,
                           tuple(_equivalence(p) for p in partitions))


def injection_from_images(images: Sequence[Optional[int]]) -> FiniteStructure:
    return FiniteStructure(Family.INJECTION, len(images),
                           functions=(tuple(images),))


def graph_from_edges(n: int, edges: Iterable[Pair]) -> FiniteStructure:
    adj = frozenset(p for u, v in edges for p in ((u, v), (v, u)))
    return FiniteStructure(Family.GRAPH, n, (adj,))


def ancestors(parents: Sequence[Optional[int]], x: int) -> List[int]:
    """The strict ancestors of x, nearest first"""
    result = []
    p = parents[x]
    while p is not None and p != x:
        result.append(p)
        x, p = p, parents[p]
    return result


def tree_from_parents(parents: Sequence[Optional[int]],
                      family: Family) -> FiniteStructure:
    """A tree from its parent table; the root's parent is None

    Argument
      parents: parent of each node
      family: tree-po or tree-pred
    Returns
      the tree as a finite structure of that family
    """
    n = len(parents)
    roots = [x for x in range(n) if parents[x] is None]
    if len(roots) != 1:
        raise InputError("a tree needs exactly one root")
    root = roots[0]
    if family == Family.TREE_PO:
        lt = frozenset((a, x) for x in range(n) for a in ancestors(parents, x))
        return FiniteStructure(family, n, (lt,), constants=(root,))
    if family == Family.TREE_PRED:
        f = tuple(root if p is None else p for p in parents)
        return FiniteStructure(family, n, functions=(f,))
    raise InputError(f"family {family.value} is not a tree family")


def tree_parents(s: FiniteStructure) -> List[Optional[int]]:
    """The parent table of a tree-po or tree-pred structure (root: None)"""
    if s.family == Family.TREE_PRED:
        f = s.functions[0]
        return [None if f[x] == x else f[x] for x in s.universe]
    if s.family == Family.TREE_PO:
        lt = s.relations[0]
        below: Dict[int, List[int]] = {x: [] for x in s.universe}
        for u, v in lt:
            below[v].append(u)
        # the parent is the ancestor with the most ancestors itself
        return [max(below[x], key=lambda a: len(below[a])) if below[x] else None
                for x in s.universe]
    raise InputError(f"family {s.family.value} is not a tree family")


@dataclass(frozen=True)
class PartialMap:
    """A finite injective map between elements, with a set of fixed points"""
    pairs: Tuple[Pair, ...]
    fixed: FrozenSet[int] = frozenset()

    def __post_init__(self):
        src = [a for a, _ in self.pairs]
        dst = [b for _, b in self.pairs]
        if len(set(src)) != len(src):
            raise InputError("partial map has repeated source elements")
        if len(set(dst)) != len(dst):
            raise InputError("partial map has repeated target elements")
        as_dict = dict(self.pairs)
        for x in self.fixed:
            if as_dict.get(x, x) != x:
                raise InputError(f"partial map moves fixed element {x}")

    @property
    def domain(self) -> Tuple[int, ...]:
        return tuple(a for a, _ in self.pairs)

    @property
    def image(self) -> Tuple[int, ...]:
        return tuple(b for _, b in self.pairs)

    def as_dict(self) -> Dict[int, int]:
        d = dict(self.pairs)
        for x in self.fixed:
            d.setdefault(x, x)
        return d

    def to_dict(self) -> dict:
        return {
            'pairs': [list(p) for p in self.pairs],
            'fixed': sorted(self.fixed)
        }
