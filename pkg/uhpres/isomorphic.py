"""Isomorphism of presented structures"""

from structutils import FiniteStructure, InputError
from .character import EqCharacter, InjSpectrum
from .graph import GraphPres
from .linear import LinOrderPres, normalize_linear
from .nested import NestedEqPres
from .present import class_tree, present
from .tree import TreePres, tree_key


def _symbolic(p):
    if isinstance(p, FiniteStructure):
        p = present(p)
    if isinstance(p, NestedEqPres) and p.structure is not None:
        p = NestedEqPres(p.arity, tree=class_tree(p.structure))
    return p


def pres_isomorphic(a, b) -> bool:
    """Decide if two presentations describe isomorphic structures

    Arguments
      a, b: presentations of the same family, or finite structures
    Returns
      true iff the canonical forms agree
    """
    if isinstance(a, FiniteStructure) and isinstance(b, FiniteStructure) and \
       a.family != b.family:
        raise InputError(
            f"cannot compare {a.family.value} with {b.family.value}")
    a, b = _symbolic(a), _symbolic(b)
    if type(a) is not type(b):
        raise InputError(
            f"cannot compare {type(a).__name__} with {type(b).__name__}")
    if isinstance(a, LinOrderPres):
        return normalize_linear(a) == normalize_linear(b)
    if isinstance(a, (EqCharacter, InjSpectrum)):
        return a == b
    if isinstance(a, GraphPres):
        if a.catalog_tag is not None or b.catalog_tag is not None:
            return a.catalog_tag == b.catalog_tag
        ca, cb = a.canonical(), b.canonical()
        return ca.bulk == cb.bulk and \
            [(k, m) for k, _, m in ca.component_types()] == \
            [(k, m) for k, _, m in cb.component_types()]
    if isinstance(a, TreePres):
        return tree_key(a) == tree_key(b)
    if isinstance(a, NestedEqPres):
        return a.arity == b.arity and tree_key(a.tree) == tree_key(b.tree)
    raise InputError(f"not a presentation: {type(a).__name__}")
