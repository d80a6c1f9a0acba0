"""Linear orders as finite sums of blocks

A presentation is a sequence of blocks, each a finite chain Fin(k), a copy of
omega, omega*, zeta (the integers) or eta (the rationals). The order is the
ordered sum of its blocks.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from structutils import InputError

FIN = "fin"
OMEGA = "omega"
OMEGA_STAR = "omega*"
ZETA = "zeta"
ETA = "eta"

KINDS = (FIN, OMEGA, OMEGA_STAR, ZETA, ETA)


@dataclass(frozen=True)
class Block:
    """One summand of a linear order"""
    kind: str
    k: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InputError(f"unknown block '{self.kind}'")
        if self.kind == FIN and self.k < 1:
            raise InputError("a finite block needs k >= 1")

    @property
    def has_min(self) -> bool:
        return self.kind in (FIN, OMEGA)

    @property
    def has_max(self) -> bool:
        return self.kind in (FIN, OMEGA_STAR)

    def to_json(self) -> Union[int, str]:
        return self.k if self.kind == FIN else self.kind

    @staticmethod
    def parse(x, field: str) -> 'Block':
        if isinstance(x, int) and not isinstance(x, bool):
            if x < 1:
                raise InputError(f"finite block must be >= 1, got {x}", field=field)
            return Block(FIN, x)
        if x in (OMEGA, OMEGA_STAR, ZETA, ETA):
            return Block(x)
        raise InputError(f"unknown block {x!r}", field=field)

    def __repr__(self) -> str:
        return f"Fin {self.k}" if self.kind == FIN else self.kind.upper()


def fin(k: int) -> Block:
    return Block(FIN, k)


B_OMEGA = Block(OMEGA)
B_OMEGA_STAR = Block(OMEGA_STAR)
B_ZETA = Block(ZETA)
B_ETA = Block(ETA)


@dataclass(frozen=True)
class LinOrderPres:
    """A linear order as a sequence of blocks"""
    blocks: Tuple[Block, ...] = ()

    @staticmethod
    def of(*blocks: Union[Block, int, str]) -> 'LinOrderPres':
        """Build a presentation from blocks, ints (finite) or block names"""
        return LinOrderPres(tuple(
            b if isinstance(b, Block) else Block.parse(b, "blocks")
            for b in blocks))

    @property
    def is_finite(self) -> bool:
        return all(b.kind == FIN for b in self.blocks)

    def to_json(self) -> dict:
        return {'blocks': [b.to_json() for b in self.blocks]}


def _rewrite_at(blocks: Sequence[Block], i: int) -> Optional[Tuple[int, Block]]:
    """The rule applying at position i: (length of the window, replacement)"""
    a = blocks[i]
    b = blocks[i + 1] if i + 1 < len(blocks) else None
    c = blocks[i + 2] if i + 2 < len(blocks) else None
    if b is None:
        return None
    if a.kind == FIN and b.kind == FIN:
        return (2, fin(a.k + b.k))
    if a.kind == ETA and b.kind == ETA:
        return (2, B_ETA)
    if a.kind == ETA and b == fin(1) and c is not None and c.kind == ETA:
        return (3, B_ETA)
    if a.kind == FIN and b.kind == OMEGA:
        return (2, B_OMEGA)
    if a.kind == OMEGA_STAR and b.kind == FIN:
        return (2, B_OMEGA_STAR)
    if a.kind == OMEGA_STAR and b.kind == OMEGA:
        return (2, B_ZETA)
    return None


def applicable_rewrites(p: LinOrderPres) -> List[LinOrderPres]:
    """Every presentation one rewrite step away from p"""
    result = []
    for i in range(len(p.blocks)):
        rule = _rewrite_at(p.blocks, i)
        if rule is not None:
            width, rep = rule
            result.append(LinOrderPres(p.blocks[:i] + (rep,) + p.blocks[i + width:]))
    return result


def normalize_linear(p: LinOrderPres) -> LinOrderPres:
    """Apply the block rewrite rules until none applies

    Fin j, Fin k -> Fin (j+k); eta, eta -> eta; eta, Fin 1, eta -> eta;
    Fin k, omega -> omega; omega*, Fin k -> omega*; omega*, omega -> zeta.
    The rules are confluent, so the result does not depend on the order in
    which they are applied.
    """
    blocks = list(p.blocks)
    i = 0
    while i < len(blocks):
        rule = _rewrite_at(blocks, i)
        if rule is None:
            i += 1
            continue
        width, rep = rule
        blocks[i:i + width] = [rep]
        # a rewrite can enable one starting up to two blocks earlier
        i = max(0, i - 2)
    return LinOrderPres(tuple(blocks))


def special_points(p: LinOrderPres) -> List[Tuple[int, int]]:
    """Coordinates (block index, 1-based position) of the points of Fin blocks

    In a normalized weakly ultrahomogeneous order these are the successivities
    and endpoints, named a1, a2, ... from left to right.
    """
    return [(i, pos) for i, b in enumerate(p.blocks) if b.kind == FIN
            for pos in range(1, b.k + 1)]


def point_name(p: LinOrderPres, coord: Tuple[int, int]) -> str:
    """The name a<j> of a special point"""
    return f"a{special_points(p).index(tuple(coord)) + 1}"
