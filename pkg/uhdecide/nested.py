"""Nested n-equivalence structures through their tree of classes

T_A has the classes [a]_i for i = 0..n+1 as nodes, with E_0 = A x A at the
root and E_{n+1} = equality at the leaves; [a]_i is the predecessor of
[a]_{i+1}. A is (weakly) ultrahomogeneous iff T_A is with predecessor.
"""

from typing import Dict, List, Optional, Tuple

from structutils import (
    Family,
    FiniteStructure,
    InputError,
    classes_of,
    tree_from_parents
)
from uhpres import (
    EqCharacter,
    ExtCount,
    NestedEqPres,
    TreePres,
    address_label,
    class_tree,
    leaf_count,
    level_counts
)
from .equivalence import analyze_equivalence
from .finitetype import is_finite_type
from .report import NA, ExceptionalSet, Report, agree
from .treepred import analyze_tree_pred, canonical_exceptional_tree_pred


def check_nested(a: FiniteStructure):
    """Raise InputError unless every E_{i+1} is contained in E_i"""
    if a.family not in (Family.NESTED_EQ, Family.N_EQ):
        raise InputError(f"expected an n-equivalence structure, got "
                         f"{a.family.value}", field="family")
    for i in range(1, len(a.relations)):
        if not a.relations[i] <= a.relations[i - 1]:
            raise InputError(f"E{i + 1} is not contained in E{i}",
                             field=f"relations[{i}]")


def build_TA(a: FiniteStructure) -> Tuple[FiniteStructure, Dict[int, int]]:
    """The tree of classes of a finite nested structure

    Argument
      a: a nested n-equivalence structure
    Returns
      T_A as a tree-pred structure whose nodes are labelled [x]_i by the
      least member x, and the map from each element to its leaf
    """
    check_nested(a)
    a.validate()
    n = len(a.relations)
    nodes: List[Tuple[int, frozenset]] = [(0, frozenset(a.universe))]
    parents: List[Optional[int]] = [None]
    level = [0]
    for i in range(1, n + 2):
        if i <= n:
            parts = [frozenset(c) for c in classes_of(a.relations[i - 1], a.size)]
        else:
            parts = [frozenset((x,)) for x in a.universe]
        nxt = []
        for part in sorted(parts, key=min):
            parent = next(p for p in level if part <= nodes[p][1])
            nodes.append((i, part))
            parents.append(parent)
            nxt.append(len(nodes) - 1)
        level = nxt
    labels = [f"[{min(m)}]_{i}" if m else "A" for i, m in nodes]
    tree = tree_from_parents(parents, Family.TREE_PRED).with_labels(labels)
    leaf_of = {min(nodes[x][1]): x for x in level}
    return tree, leaf_of


def _character(pairs) -> EqCharacter:
    acc: Dict[ExtCount, ExtCount] = {}
    for size, m in pairs:
        acc[size] = acc.get(size, ExtCount(0)) + m
    return EqCharacter.of(acc)


def two_relation_wuh(t: TreePres) -> bool:
    """The closed form for two relations

    E_1 is weakly ultrahomogeneous, E_2 restricted to each E_1 class is, and
    all but finitely many restrictions are ultrahomogeneous with h classes
    of size k, for one h and k.
    """
    e1 = _character((leaf_count(c), m) for c, m in t.children)
    if not analyze_equivalence(e1).wuh:
        return False
    shapes: Dict[Tuple, ExtCount] = {}
    for c, m in t.children:
        restriction = _character((leaf_count(d), dm) for d, dm in c.children)
        if not analyze_equivalence(restriction).wuh:
            return False
        if analyze_equivalence(restriction).uh:
            size = restriction.entries[0][0]
            shape = (restriction.total_classes(), size)
        else:
            shape = ("not uh", id(c))
        shapes[shape] = shapes.get(shape, ExtCount(0)) + m
    omega = [s for s, m in shapes.items() if m.is_omega]
    return len(omega) <= 1 and all(s[0] != "not uh" for s in omega)


def finite_classes_uh(t: TreePres, arity: int) -> Optional[bool]:
    """With all classes finite, whether every (A, E_i) is ultrahomogeneous

    None if some E_1 class is infinite.
    """
    levels = level_counts(t)
    if len(levels) <= arity:
        return None
    if any(leaf_count(c).is_omega for c, _ in levels[1]):
        return None
    return all(len({leaf_count(c) for c, _ in levels[i]}) == 1
               for i in range(1, arity + 1))


def _representatives(t: TreePres, S) -> List[str]:
    """One element below each maximal node of S other than the root"""
    maximal = [a for a in S if a and not any(
        len(b) > len(a) and b[:len(a)] == a for b in S)]
    reps = []
    for a in maximal:
        x = t
        for i, _ in a:
            x = x.children[i][0]
        while not x.is_leaf:
            a = a + ((0, 0),)
            x = x.children[0][0]
        reps.append(address_label(a))
    return reps


def analyze_nested(p: NestedEqPres) -> Report:
    """Decide the homogeneity notions of a nested equivalence structure

    Argument
      p: the presentation, symbolic or finite
    Returns
      the report, with the verdicts of T_A under predecessor
    """
    t = p.tree if p.tree is not None else class_tree(p.structure)
    tr = analyze_tree_pred(t)
    r = Report(Family.NESTED_EQ, tr.uh, tr.wuh, is_finite_type(t), NA)
    r.cite('nest-uh', 'nest-wuh')
    r.extra['tree'] = t
    if p.arity == 2:
        closed = two_relation_wuh(t)
        agree("wuh", closed, tr.wuh, "the class tree")
        r.extra['closed_form_wuh'] = closed
        r.cite('nest-n2')
    shortcut = finite_classes_uh(t, p.arity)
    if shortcut is not None:
        agree("uh", shortcut, tr.uh, "the class tree")
        r.extra['each_relation_uh'] = shortcut
        r.cite('nest-fin')
    if tr.wuh:
        S = canonical_exceptional_tree_pred(t)
        r.minimal_exceptional = [ExceptionalSet(
            tuple(_representatives(t, S)),
            "one element below each maximal class of the exceptional subtree")]
        r.special = tr.special
        r.cite('lf-wuh')
    return r
