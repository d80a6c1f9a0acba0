"""Brute-force ground truth for (weak) ultrahomogeneity

All checks run over the closed subsets X of a finite structure: the sets
closed under its functions and containing its constants, which are exactly
the universes of its generated substructures. An isomorphism between two
generated substructures is the same thing as an embedding of X, so a
structure is ultrahomogeneous iff every embedding of every closed X is the
restriction of an automorphism. Closed sets are visited by (size, elements);
within one automorphism orbit of closed sets only the first is examined, and
embeddings are tried in lexicographic order, so the reported counterexample
is the first one in that order.
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from structutils import (
    DEFAULT_CAP,
    FiniteStructure,
    PartialMap,
    PreconditionError,
    ResourceError
)
from .search import automorphisms, embeddings, isomorphisms, Perm


@dataclass(frozen=True)
class OracleVerdict:
    """A yes/no answer with the counterexample found on no"""
    holds: bool
    witness: Optional[PartialMap] = None

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        return {
            'holds': self.holds,
            'witness': None if self.witness is None else self.witness.to_dict()
        }


@dataclass(frozen=True)
class DefinableClosureResult:
    """D(S) of a finite structure with a moving automorphism per outsider"""
    base: FrozenSet[int]
    closure: FrozenSet[int]
    witness: Dict[int, Perm] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            'base': sorted(self.base),
            'closure': sorted(self.closure),
            'witness': {str(x): list(p) for x, p in sorted(self.witness.items())}
        }


def _check_size(s: FiniteStructure, cap: int):
    if s.size > cap:
        raise ResourceError(f"structure has {s.size} elements, above the cap {cap}")
    if not s.is_complete():
        raise PreconditionError("the oracle needs total functions")


def _check_elements(s: FiniteStructure, t: Iterable[int]) -> List[int]:
    return [s.check_element(x, field="elements") for x in t]


def generated_substructure(s: FiniteStructure, t: Iterable[int]) -> FrozenSet[int]:
    """The universe of the substructure generated by some elements

    Arguments
      s: a finite structure
      t: generating elements
    Returns
      the closure of t and the constants of s under all functions of s
    """
    closed: Set[int] = set(_check_elements(s, t)) | set(s.constants)
    todo = list(closed)
    while todo:
        x = todo.pop()
        for fn in s.functions:
            y = fn[x]
            if y is not None and y not in closed:
                closed.add(y)
                todo.append(y)
    return frozenset(closed)


def _key(xs: Iterable[int]) -> Tuple[int, Tuple[int, ...]]:
    ordered = tuple(sorted(xs))
    return (len(ordered), ordered)


def closed_sets(s: FiniteStructure, base: Iterable[int] = ()) -> List[FrozenSet[int]]:
    """All closed sets containing `base`, ordered by (size, elements)"""
    start = generated_substructure(s, base)
    if not s.functions:
        rest = [x for x in s.universe if x not in start]
        found = [start | frozenset(x for i, x in enumerate(rest) if mask >> i & 1)
                 for mask in range(1 << len(rest))]
    else:
        seen = {start}
        todo = [start]
        while todo:
            cur = todo.pop()
            for x in s.universe:
                if x not in cur:
                    nxt = cur | generated_substructure(s, [x])
                    if nxt not in seen:
                        seen.add(nxt)
                        todo.append(nxt)
        found = list(seen)
    return sorted(found, key=_key)


def _first_failure(s: FiniteStructure, fixed: FrozenSet[int]) -> Optional[PartialMap]:
    auts = list(automorphisms(s, fixed))
    seen: Set[FrozenSet[int]] = set()
    for closed in closed_sets(s, fixed):
        if closed in seen:
            continue
        seen.update(frozenset(sigma[x] for x in closed) for sigma in auts)
        dom = sorted(closed)
        restrictions = {tuple(sigma[x] for x in dom) for sigma in auts}
        for img in embeddings(s, dom, fixed):
            if img not in restrictions:
                return PartialMap(tuple(zip(dom, img)), fixed)
    return None


def is_uh_bruteforce(s: FiniteStructure, cap: int = DEFAULT_CAP) -> OracleVerdict:
    """Decide ultrahomogeneity of a finite structure by exhaustive search

    Arguments
      s: a finite structure with total functions
      cap: largest size accepted
    Returns
      the verdict, with a non-extendible isomorphism of generated
      substructures when it is negative
    """
    return is_exceptional_bruteforce(s, (), cap)


def is_exceptional_bruteforce(s: FiniteStructure, S: Iterable[int],
                              cap: int = DEFAULT_CAP) -> OracleVerdict:
    """Decide if every isomorphism fixing S pointwise extends to an automorphism

    Only isomorphisms between generated substructures containing S count,
    since a map fixing S pointwise is defined on S.
    """
    _check_size(s, cap)
    fixed = frozenset(_check_elements(s, S))
    witness = _first_failure(s, fixed)
    return OracleVerdict(witness is None, witness)


def minimal_exceptional_sets_bruteforce(s: FiniteStructure,
                                        cap: int = DEFAULT_CAP
                                        ) -> List[FrozenSet[int]]:
    """All minimal exceptional sets, by (size, elements)

    Exceptional sets are closed upwards, so a set all of whose subsets one
    element smaller fail is minimal as soon as it is exceptional; supersets of
    a minimal set found earlier are skipped.
    """
    _check_size(s, cap)
    found: List[FrozenSet[int]] = []
    for mask in sorted(range(1 << s.size),
                       key=lambda m: _key(x for x in s.universe if m >> x & 1)):
        S = frozenset(x for x in s.universe if mask >> x & 1)
        if any(m <= S for m in found):
            continue
        if _first_failure(s, S) is None:
            found.append(S)
    return found


def definable_closure_bruteforce(s: FiniteStructure, S: Iterable[int],
                                 cap: int = DEFAULT_CAP) -> DefinableClosureResult:
    """The elements fixed by every automorphism fixing S pointwise

    On a finite structure this is the set of elements first-order definable
    with parameters from S.
    """
    _check_size(s, cap)
    base = frozenset(_check_elements(s, S))
    witness: Dict[int, Perm] = {}
    for sigma in automorphisms(s, base):
        for x in s.universe:
            if sigma[x] != x and x not in witness:
                witness[x] = sigma
    closure = frozenset(x for x in s.universe if x not in witness)
    return DefinableClosureResult(base, closure, witness)


def extension_of(s: FiniteStructure, m: PartialMap) -> Optional[Perm]:
    """An automorphism extending a partial map, or None"""
    return next(automorphisms_extending(s, m), None)


def automorphisms_extending(s: FiniteStructure, m: PartialMap):
    """Enumerate the automorphisms extending a partial map"""
    pairs = sorted(m.as_dict().items())
    return isomorphisms(s, s, pairs)
