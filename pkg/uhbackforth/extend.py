"""Extending partial isomorphisms to automorphisms"""

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from structutils import FiniteStructure, InputError, PartialMap
from uhoracle import find_isomorphism
from .stages import closure_depth, iter_terms, preserves


@dataclass(frozen=True)
class Extension:
    """An automorphism extending a map, or how far the map got

    On failure, level is the number of leading pairs of the map (in the
    order given) that still extend to an automorphism; the next pair is the
    obstruction.
    """
    automorphism: Optional[Tuple[int, ...]]
    level: int

    @property
    def found(self) -> bool:
        return self.automorphism is not None

    def to_dict(self) -> dict:
        return {
            'found': self.found,
            'automorphism': None if self.automorphism is None
            else list(self.automorphism),
            'level': self.level
        }


def close_map(s: FiniteStructure, m: PartialMap) -> Dict[int, int]:
    """The map induced on generated substructures, t[ā] -> t[b̄]

    Raises
      InputError if m is not an isomorphism of generated substructures
    """
    pairs = sorted(m.as_dict().items())
    xs = [a for a, _ in pairs]
    ys = [b for _, b in pairs]
    for a, b in pairs:
        s.check_element(a, field="pairs")
        s.check_element(b, field="pairs")
    depth = closure_depth(s)
    fwd: Dict[int, int] = {}
    bwd: Dict[int, int] = {}
    for (_, u), (_, v) in zip(iter_terms(s, xs, depth),
                              iter_terms(s, ys, depth)):
        if (u is None) != (v is None):
            raise InputError("map is not a partial isomorphism")
        if u is None:
            continue
        if fwd.setdefault(u, v) != v or bwd.setdefault(v, u) != u:
            raise InputError("map is not a partial isomorphism")
    if not preserves(s, s, list(fwd.items())):
        raise InputError("map is not a partial isomorphism")
    return fwd


def extend_to_automorphism(s: FiniteStructure, m: PartialMap) -> Extension:
    """Find an automorphism of s extending m

    Arguments
      s: a finite structure with total functions
      m: an isomorphism between generated substructures of s
    Returns
      the least extending automorphism in search order, or the obstruction
      level
    """
    closed = close_map(s, m)
    aut = find_isomorphism(s, s, sorted(closed.items()))
    if aut is not None:
        return Extension(aut, len(m.as_dict()))
    given = dict(m.pairs)
    pairs = list(m.pairs) + [(x, x) for x in sorted(m.fixed) if x not in given]
    level = 0
    while level < len(pairs):
        sub = close_map(s, PartialMap(tuple(pairs[:level + 1])))
        if find_isomorphism(s, s, sorted(sub.items())) is None:
            break
        level += 1
    return Extension(None, level)
