"""Presentations of explicit finite structures"""

from collections import Counter
from typing import List

from structutils import (
    Family,
    FiniteStructure,
    UnsupportedError,
    classes_of,
    tree_parents
)
from .character import EqCharacter, InjSpectrum
from .graph import finite_graph_pres
from .linear import LinOrderPres
from .nested import NestedEqPres
from .tree import LEAF, TreePres, from_parents, node


def cycle_type(s: FiniteStructure) -> List[int]:
    """Cycle lengths of a finite injection, by least element"""
    f = s.functions[0]
    seen = set()
    lengths = []
    for x in s.universe:
        if x in seen:
            continue
        k, y = 0, x
        while y not in seen:
            seen.add(y)
            y = f[y]
            k += 1
        lengths.append(k)
    return lengths


def class_tree(s: FiniteStructure) -> TreePres:
    """The tree of classes of a finite nested n-equivalence structure

    The root is the whole universe, nodes at depth i are the E_i classes
    ordered by inclusion and the elements are the leaves at depth n + 1.
    """
    n = s.arity
    classes = [classes_of(rel, s.size) for rel in s.relations]

    def build(depth: int, members: frozenset) -> TreePres:
        if depth == n:
            return node(*((LEAF, 1) for _ in members))
        kids = [frozenset(c) for c in classes[depth] if c[0] in members]
        return node(*((build(depth + 1, k), 1) for k in kids))

    return build(0, frozenset(s.universe))


def present(s: FiniteStructure):
    """The presentation of a finite structure

    Argument
      s: a complete finite structure
    Returns
      a presentation of the family of s describing s up to isomorphism
    """
    s.validate()
    fam = s.family
    if fam == Family.ORDER:
        return LinOrderPres.of(s.size) if s.size else LinOrderPres()
    if fam == Family.EQUIVALENCE:
        sizes = Counter(len(c) for c in classes_of(s.relations[0], s.size))
        return EqCharacter.of(dict(sizes))
    if fam == Family.INJECTION:
        return InjSpectrum.of(dict(Counter(cycle_type(s))))
    if fam == Family.GRAPH:
        return finite_graph_pres(s)
    if fam in (Family.TREE_PO, Family.TREE_PRED):
        return from_parents(tree_parents(s))
    if fam == Family.NESTED_EQ:
        return NestedEqPres(s.arity, tree=class_tree(s))
    raise UnsupportedError(f"family {fam.value} has no presentation")

