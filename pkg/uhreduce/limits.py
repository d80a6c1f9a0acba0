"""The limits of the reductions, given the answer the index set asks for

Whether W is infinite or cofinite cannot be computed, so it is an input: a
tail flag says what W looks like beyond the listed events. `finite` means W
is exactly the listed elements, `infinite` that W is infinite and
co-infinite, `cofinite` that W holds every number above the largest listed
one. Tail elements enter after the listed events.

The limit is returned exactly when the flag and the listed events determine
it; otherwise a stand-in with the same verdicts is returned and
`limit_is_exact` says so.
"""

from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

from structutils import InputError, RunConfig, UnsupportedError, stamp
from uhdecide import analyze
from uhpres import (
    B_ETA,
    B_ZETA,
    LEAF,
    OMEGA,
    Document,
    EqCharacter,
    InjSpectrum,
    LinOrderPres,
    Presentation,
    TreePres,
    dump_presentation,
    node,
    star
)
from .schedule import Schedule
from .snapshots import Kind

FINITE = "finite"
INFINITE = "infinite"
COFINITE = "cofinite"
TAILS = (FINITE, INFINITE, COFINITE)


def check_tail(tail: str) -> str:
    if tail not in TAILS:
        raise InputError(f"unknown tail '{tail}', expected one of "
                         + ", ".join(TAILS), field="limit")
    return tail


def missing(w: Schedule) -> int:
    """|F| for a cofinite W: the numbers up to the largest listed one that
    never enter"""
    top = max(w.elements, default=-1)
    return top + 1 - len(w.elements)


@dataclass(frozen=True)
class Limit:
    pres: Presentation
    exact: bool


def _lin(w: Schedule, tail: str, cofinite: bool) -> Limit:
    if not cofinite:
        if tail == FINITE:
            return Limit(LinOrderPres.of(B_ZETA), True)
        return Limit(LinOrderPres.of(B_ETA), True)
    if tail == FINITE:
        return Limit(LinOrderPres.of(B_ZETA), True)
    if tail == COFINITE:
        # finitely many successivities, where they sit is not known
        return Limit(LinOrderPres.of(B_ETA, 2, B_ETA), False)
    return Limit(LinOrderPres.of(B_ZETA), False)


def _eq_inf(w: Schedule, tail: str) -> Limit:
    if tail == FINITE:
        return Limit(EqCharacter.of({2: len(w.elements) + 1, 1: OMEGA}), True)
    return Limit(EqCharacter.of({2: OMEGA}), True)


def _eq_cof(w: Schedule, tail: str) -> Limit:
    if tail == COFINITE:
        k = missing(w)
        return Limit(EqCharacter.of({2: OMEGA, 1: k} if k else {2: OMEGA}),
                     True)
    return Limit(EqCharacter.of({2: OMEGA, 1: OMEGA}), True)


def _inj_inf(w: Schedule, tail: str) -> Limit:
    if tail == FINITE:
        return Limit(InjSpectrum.of(omega=1), True)
    return Limit(InjSpectrum.of(zeta=1), True)


def _inj_cof(w: Schedule, tail: str) -> Limit:
    if tail == COFINITE:
        return Limit(InjSpectrum.of(omega=missing(w), zeta=OMEGA), True)
    if tail == FINITE:
        return Limit(InjSpectrum.of(omega=OMEGA, zeta=len(w.elements)), True)
    return Limit(InjSpectrum.of(omega=OMEGA, zeta=OMEGA), True)


def _tree_ord_chain(w: Schedule, tail: str) -> Limit:
    raise UnsupportedError(
        "the limit of TREE_ORD_CHAIN need not be a tree and has no "
        "presentation")


def _tree_ord_uh(w: Schedule, tail: str) -> Limit:
    if tail == FINITE and not w.events:
        return Limit(star(OMEGA), True)
    first = w.events[0][1] if w.events else 1
    kids = [(star(OMEGA), 1)]
    if first > 2:
        kids.append((LEAF, first - 2))
    return Limit(node(*kids), bool(w.events))


def _tree_ord_wuh(w: Schedule, tail: str) -> Limit:
    if tail == FINITE:
        k = len(w.elements)
        kids = [(star(1), k)] if k else []
        return Limit(node(*kids, (LEAF, OMEGA)), True)
    return Limit(node((star(1), OMEGA), (LEAF, OMEGA)), False)


def _tree_pred_uh(w: Schedule, tail: str) -> Limit:
    if tail == FINITE:
        k = len(w.elements)
        return Limit(node((star(OMEGA), 1), (star(k) if k else LEAF, 1)), True)
    return Limit(node((star(OMEGA), 2)), True)


def _tree_pred_wuh(w: Schedule, tail: str) -> Limit:
    if tail != COFINITE:
        # successor counts n + k_n grow without bound
        return Limit(TreePres((), unbounded_tail=True), False)
    inside = w.elements
    top = max(inside, default=-1)
    kids = [(star(OMEGA), OMEGA)]
    for n in range(top):
        if all(k in inside for k in range(n + 1, top + 1)):
            continue
        run = 0
        while n + 1 + run in inside:
            run += 1
        c = n + run
        kids.append((star(c) if c else LEAF, 1))
    return Limit(node(*kids), True)


_LIMITS: Dict[Kind, Callable[[Schedule, str], Limit]] = {
    Kind.LIN_INF: lambda w, t: _lin(w, t, False),
    Kind.LIN_COF: lambda w, t: _lin(w, t, True),
    Kind.EQ_INF: _eq_inf,
    Kind.EQ_COF: _eq_cof,
    Kind.INJ_INF: _inj_inf,
    Kind.INJ_COF: _inj_cof,
    Kind.TREE_ORD_CHAIN: _tree_ord_chain,
    Kind.TREE_ORD_UH: _tree_ord_uh,
    Kind.TREE_ORD_WUH: _tree_ord_wuh,
    Kind.TREE_PRED_UH: _tree_pred_uh,
    Kind.TREE_PRED_WUH: _tree_pred_wuh,
}


def _limit(kind, w: Schedule, tail: str) -> Tuple[Kind, Limit]:
    kind = Kind.parse(kind) if isinstance(kind, str) else kind
    if not kind.is_reduction:
        raise InputError(f"{kind.value} is not a reduction", field="kind")
    return kind, _LIMITS[kind](w, check_tail(tail))


def limit_presentation(kind, w: Schedule, tail: str) -> Presentation:
    """The presentation of the limit structure

    Arguments
      kind: a reduction kind or its name
      w: the listed events of W
      tail: finite, infinite or cofinite
    Returns
      the limit, or a stand-in with the same verdicts
    """
    return _limit(kind, w, tail)[1].pres


def limit_is_exact(kind, w: Schedule, tail: str) -> bool:
    return _limit(kind, w, tail)[1].exact


def limit_document(kind, w: Schedule, tail: str) -> Document:
    """The limit as a presentation file's content, ready for the deciders"""
    kind, lim = _limit(kind, w, tail)
    return Document(kind.family, lim.pres)


def predicted_verdict(kind, w: Schedule, tail: str) -> Tuple[str, bool]:
    """The property the limit has exactly when W is in the index set

    Returns
      (property, value): property is uh or wuh, or tree for the chain
      construction
    """
    kind = Kind.parse(kind) if isinstance(kind, str) else kind
    tail = check_tail(tail)
    if kind == Kind.TREE_ORD_CHAIN:
        return 'tree', tail != COFINITE
    if kind == Kind.TREE_ORD_UH:
        return 'uh', tail == FINITE and not w.events
    if kind == Kind.TREE_ORD_WUH:
        return 'wuh', tail == FINITE
    if kind in (Kind.LIN_INF, Kind.EQ_INF, Kind.INJ_INF, Kind.TREE_PRED_UH):
        return 'uh', tail != FINITE
    if kind in (Kind.LIN_COF, Kind.EQ_COF, Kind.INJ_COF, Kind.TREE_PRED_WUH):
        return 'wuh', tail == COFINITE
    raise InputError(f"{kind.value} is not a reduction", field="kind")


@dataclass
class LoopCheck:
    """The verdict of the deciders on a limit against the prediction"""
    kind: Kind
    tail: str
    document: Document
    exact: bool
    prop: str
    predicted: bool
    decided: Optional[bool]

    @property
    def agrees(self) -> bool:
        return self.decided == self.predicted

    def to_dict(self) -> dict:
        return stamp({
            'kind': self.kind.value,
            'tail': self.tail,
            'presentation': dump_presentation(self.document),
            'exact': self.exact,
            'property': self.prop,
            'predicted': self.predicted,
            'decided': self.decided,
            'agrees': self.agrees
        })


def close_loop(kind, w: Schedule, tail: str,
               config: RunConfig = RunConfig()) -> LoopCheck:
    """Run the family decider on the limit of a reduction

    Arguments
      kind: a reduction kind with a tree limit
      w: the listed events of W
      tail: finite, infinite or cofinite
      config: caps and search bounds of the deciders
    Returns
      the prediction next to the decided verdict
    """
    kind = Kind.parse(kind) if isinstance(kind, str) else kind
    doc = limit_document(kind, w, tail)
    prop, predicted = predicted_verdict(kind, w, tail)
    report = analyze(doc, config)
    return LoopCheck(kind, tail, doc, limit_is_exact(kind, w, tail), prop,
                     predicted, getattr(report, prop))
