"""Equivalence structures

Classes are named like the materialized prefix does: entries are taken
largest size first, and copy c of entry j is the class "j.c", whose
elements are "j.c:0", "j.c:1", ...
"""

from typing import List, Optional, Tuple

from structutils import Family
from uhpres import EqCharacter, ExtCount
from .report import ExceptionalSet, Report

Entry = Tuple[int, ExtCount, ExtCount]


def _entries(c: EqCharacter) -> List[Entry]:
    """(materialization index, size, count), largest size first"""
    ordered = sorted(c.entries, key=lambda e: e[0].sort_key(), reverse=True)
    return [(j, size, cnt) for j, (size, cnt) in enumerate(ordered)]


def main_sizes(c: EqCharacter) -> List[ExtCount]:
    """The sizes whose classes may all stay outside a minimal exceptional set

    The size with infinitely many classes when there is one, otherwise every
    size.
    """
    omega = [size for size, cnt in c.entries if cnt.is_omega]
    if omega:
        return omega
    return [size for size, _ in c.entries]


def exceptional_classes(c: EqCharacter, main: ExtCount) -> List[Tuple[str, ExtCount]]:
    """Names and sizes of the classes of every size other than `main`"""
    return [(f"{j}.{copy}", size) for j, size, cnt in _entries(c)
            if size != main for copy in range(cnt.value)]


def _exceptional_set(c: EqCharacter, main: ExtCount) -> ExceptionalSet:
    reps = tuple(f"{name}:0" for name, _ in exceptional_classes(c, main))
    return ExceptionalSet(
        reps, f"one element from each class of size other than {main!r}")


def definable_closure_equivalence(c: EqCharacter,
                                  main: Optional[ExtCount] = None
                                  ) -> ExceptionalSet:
    """D(S) for the minimal exceptional set leaving out the classes of size `main`

    S plus every element of an exceptional class of size at most 2, plus the
    element of the main classes when they are a single class of size 1.
    """
    if main is None:
        main = main_sizes(c)[0]
    elems = list(_exceptional_set(c, main).elements)
    for name, size in exceptional_classes(c, main):
        if size.is_finite and size.value == 2:
            elems.append(f"{name}:1")
    for j, size, cnt in _entries(c):
        if size == main and size == 1 and cnt == 1:
            elems.append(f"{j}.0:0")
    return ExceptionalSet(tuple(elems),
                          "S with the classes of size at most 2 it meets")


def analyze_equivalence(c: EqCharacter) -> Report:
    """Decide the homogeneity notions of an equivalence structure

    Argument
      c: the character
    Returns
      the report
    """
    omega_entries = [size for size, cnt in c.entries if cnt.is_omega]
    uh = len(c.entries) <= 1 and not c.unbounded_tail
    wuh = not c.unbounded_tail and len(omega_entries) <= 1
    infinite_classes = next((cnt for size, cnt in c.entries if size.is_omega),
                            ExtCount(0))
    delta2 = infinite_classes.is_finite or not c.unbounded_tail
    r = Report(Family.EQUIVALENCE, uh, wuh, wuh, delta2)
    r.cite('eq-uh', 'eq-wuh', 'eq-cc', 'eq-d2')
    if c.unbounded_tail:
        r.notes.append("infinitely many distinct class sizes")
    if not wuh:
        return r
    if not c.entries:
        r.minimal_exceptional = [ExceptionalSet()]
        return r
    mains = main_sizes(c)
    r.minimal_exceptional = [_exceptional_set(c, m) for m in mains]
    r.special = [name for name, _ in exceptional_classes(c, mains[0])]
    r.definable_closure = definable_closure_equivalence(c, mains[0])
    r.extra['main_size'] = mains[0]
    r.cite('eq-dcl')
    return r
