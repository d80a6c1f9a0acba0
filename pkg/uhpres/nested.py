"""Nested n-equivalence structures by their tree of classes"""

from dataclasses import dataclass
from typing import Optional

from structutils import Family, FiniteStructure, InputError
from .tree import TreePres, height


def _leaf_depths_ok(t: TreePres, depth: int) -> bool:
    """Every leaf of t sits exactly `depth` levels below it"""
    if t.unbounded_tail:
        return False
    if depth == 0:
        return t.is_leaf
    return bool(t.children) and all(_leaf_depths_ok(c, depth - 1)
                                    for c, _ in t.children)


@dataclass(frozen=True)
class NestedEqPres:
    """A nested n-equivalence structure

    Either symbolic, as the tree whose root is the whole universe, whose
    nodes at depth i are the E_i classes and whose leaves at depth n + 1 are
    the elements; or an explicit finite structure.
    """
    arity: int
    tree: Optional[TreePres] = None
    structure: Optional[FiniteStructure] = None

    def __post_init__(self):
        if isinstance(self.arity, bool) or not isinstance(self.arity, int) or \
           self.arity < 1:
            raise InputError("arity must be >= 1", field="arity")
        if (self.tree is None) == (self.structure is None):
            raise InputError("give exactly one of a class tree or a structure")
        if self.tree is not None:
            if height(self.tree) != self.arity + 1 or \
               not _leaf_depths_ok(self.tree, self.arity + 1):
                raise InputError(
                    f"every leaf of the class tree must sit at depth {self.arity + 1}",
                    field="tree")
        else:
            s = self.structure
            if s.family != Family.NESTED_EQ:
                raise InputError("structure must be nested-eq", field="family")
            if s.arity != self.arity:
                raise InputError(
                    f"structure has {s.arity} relations, expected {self.arity}",
                    field="arity")
            s.validate()

    @property
    def is_symbolic(self) -> bool:
        return self.tree is not None

    def to_json(self) -> dict:
        if self.tree is not None:
            return {'arity': self.arity, 'tree': self.tree.to_json()}
        return {'arity': self.arity, 'structure': self.structure.to_dict()}
