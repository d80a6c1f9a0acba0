"""Construction kinds and the stage snapshots they produce"""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Callable, Optional

from structutils import Family, FiniteStructure, InputError, stamp


class Kind(Enum):
    """The stage-based constructions"""
    LIN_INF = "LIN_INF"
    LIN_COF = "LIN_COF"
    EQ_INF = "EQ_INF"
    EQ_COF = "EQ_COF"
    INJ_INF = "INJ_INF"
    INJ_COF = "INJ_COF"
    TREE_ORD_CHAIN = "TREE_ORD_CHAIN"
    TREE_ORD_UH = "TREE_ORD_UH"
    TREE_ORD_WUH = "TREE_ORD_WUH"
    TREE_PRED_UH = "TREE_PRED_UH"
    TREE_PRED_WUH = "TREE_PRED_WUH"
    # not reductions: special structures with a construction of their own
    INJ_DEGREES = "INJ_DEGREES"
    ODD_ZCHAIN = "ODD_ZCHAIN"

    @staticmethod
    def parse(name: str, field: Optional[str] = "kind") -> 'Kind':
        try:
            return Kind(name.upper())
        except (ValueError, AttributeError):
            known = ", ".join(k.value for k in Kind)
            raise InputError(f"unknown kind '{name}', expected one of {known}",
                             field=field)

    @property
    def is_reduction(self) -> bool:
        return self not in (Kind.INJ_DEGREES, Kind.ODD_ZCHAIN)

    @property
    def family(self) -> Family:
        return _FAMILIES[self]

    @property
    def tree_output(self) -> bool:
        """False for the construction whose limit may fail to be a tree"""
        return self != Kind.TREE_ORD_CHAIN


_FAMILIES = {
    Kind.LIN_INF: Family.ORDER,
    Kind.LIN_COF: Family.ORDER,
    Kind.EQ_INF: Family.EQUIVALENCE,
    Kind.EQ_COF: Family.EQUIVALENCE,
    Kind.INJ_INF: Family.INJECTION,
    Kind.INJ_COF: Family.INJECTION,
    Kind.TREE_ORD_CHAIN: Family.TREE_PO,
    Kind.TREE_ORD_UH: Family.TREE_PO,
    Kind.TREE_ORD_WUH: Family.TREE_PO,
    Kind.TREE_PRED_UH: Family.TREE_PRED,
    Kind.TREE_PRED_WUH: Family.TREE_PRED,
    Kind.INJ_DEGREES: Family.INJECTION,
    Kind.ODD_ZCHAIN: Family.INJECTION,
}

REDUCTIONS = tuple(k for k in Kind if k.is_reduction)


@dataclass
class StageSnapshot:
    """The finite object a construction holds after some stage

    metadata is the construction's own state (the order as a sequence, the
    classes, the chain of an orbit, parent tables, ...); the structure is
    built from it on first access.
    """
    kind: Kind
    stage: int
    metadata: dict
    builder: Callable[[], FiniteStructure] = field(repr=False, compare=False)

    @cached_property
    def structure(self) -> FiniteStructure:
        return self.builder()

    @property
    def size(self) -> int:
        return self.metadata['size']

    def to_dict(self) -> dict:
        return stamp({
            'kind': self.kind.value,
            'stage': self.stage,
            'family': self.kind.family.value,
            'structure': self.structure.to_dict(),
            'metadata': self.metadata
        })
