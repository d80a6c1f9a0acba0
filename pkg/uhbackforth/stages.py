"""Stages of generated substructures

A term of height s over x̄ is a generator x_i or a constant with at most s
function symbols applied to it. A_s[x̄] is the set of values of those terms.
For relational structures A_s[x̄] = A_0[x̄] is the tuple itself (plus the
constants); for unary functions the stages grow along forward orbits and
settle after at most |A| steps.
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple

from structutils import FiniteStructure, InputError

# a term: where it starts, ('x', i) or ('c', j), and the functions applied
Term = Tuple[Tuple[str, int], Tuple[int, ...]]


@dataclass(frozen=True)
class TermStage:
    """A_s[x̄]: the values of the terms of height at most s"""
    base: Tuple[int, ...]
    stage: int
    elements: FrozenSet[int]

    def to_dict(self) -> dict:
        return {
            'base': list(self.base),
            'stage': self.stage,
            'elements': sorted(self.elements)
        }


def iter_terms(s: FiniteStructure, xs: Sequence[int],
           stage: int) -> Iterator[Tuple[Term, Optional[int]]]:
    """Every term of height <= stage with its value, None if undefined

    Terms are produced by height, then by start, then by function word, so
    two structures of one language list the same terms in the same order.
    """
    level: List[Tuple[Term, Optional[int]]] = \
        [((('x', i), ()), x) for i, x in enumerate(xs)] + \
        [((('c', j), ()), c) for j, c in enumerate(s.constants)]
    yield from level
    for _ in range(stage):
        nxt = []
        for (start, word), v in level:
            for k, fn in enumerate(s.functions):
                nxt.append(((start, word + (k,)),
                            None if v is None else fn[v]))
        yield from nxt
        level = nxt


def _check_tuple(s: FiniteStructure, xs: Sequence[int], name: str):
    for x in xs:
        s.check_element(x, field=name)


def term_stage(s: FiniteStructure, xs: Sequence[int], stage: int) -> TermStage:
    """Compute A_s[x̄]

    Arguments
      s: a finite structure, possibly with partial functions
      xs: the generators
      stage: the height bound s >= 0
    Returns
      the stage with its elements; undefined terms contribute nothing
    """
    if stage < 0:
        raise InputError("stage must be >= 0", field="stage")
    _check_tuple(s, xs, "x")
    elems = frozenset(v for _, v in iter_terms(s, xs, stage) if v is not None)
    return TermStage(tuple(xs), stage, elems)


def closure_depth(s: FiniteStructure) -> int:
    """A stage at which A_s[x̄] is the generated substructure for every x̄"""
    return s.size if s.functions else 0


def preserves(s1: FiniteStructure, s2: FiniteStructure,
              pairs: Sequence[Tuple[int, int]]) -> bool:
    """True if the pairs respect every relation, function and constant"""
    for r1, r2 in zip(s1.relations, s2.relations):
        for a, b in pairs:
            for x, y in pairs:
                if ((a, x) in r1) != ((b, y) in r2):
                    return False
    for f1, f2 in zip(s1.functions, s2.functions):
        for a, b in pairs:
            for x, y in pairs:
                if (f1[a] == x) != (f2[b] == y):
                    return False
    for c1, c2 in zip(s1.constants, s2.constants):
        for a, b in pairs:
            if (a == c1) != (b == c2):
                return False
    return True


def stage_iso(s1: FiniteStructure, xs: Sequence[int],
              s2: FiniteStructure, ys: Sequence[int], stage: int) -> bool:
    """Decide A_s[x̄] ≅ A_s[ȳ] via t[x̄] -> t[ȳ]

    Arguments
      s1, s2: finite structures of one language
      xs, ys: tuples of the same length
      stage: the height bound s >= 0
    Returns
      true iff the correspondence of height-<=s terms is a well-defined
      bijection that preserves every relation, function and constant; from
      closure_depth on, this is isomorphism of generated substructures
    """
    if len(xs) != len(ys):
        raise InputError(f"tuples of lengths {len(xs)} and {len(ys)}",
                         field="y")
    if s1.family != s2.family or \
       len(s1.relations) != len(s2.relations) or \
       len(s1.functions) != len(s2.functions) or \
       len(s1.constants) != len(s2.constants):
        raise InputError(f"cannot compare {s1.family.value} with {s2.family.value}")
    if stage < 0:
        raise InputError("stage must be >= 0", field="stage")
    _check_tuple(s1, xs, "x")
    _check_tuple(s2, ys, "y")
    fwd, bwd = {}, {}
    for (_, u), (_, v) in zip(iter_terms(s1, xs, stage),
                              iter_terms(s2, ys, stage)):
        if (u is None) != (v is None):
            return False
        if u is None:
            continue
        if fwd.setdefault(u, v) != v or bwd.setdefault(v, u) != u:
            return False
    return preserves(s1, s2, list(fwd.items()))
