"""Verdicts and the data that comes with them

A verdict is True, False, None (not decided here, see the notes) or "n/a"
(the notion does not apply to the family).
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple, Union

from structutils import DisagreementError, Family, stamp
from uhpres import ExtCount, TreePres

NA = "n/a"

Verdict = Union[bool, None, str]

# theorem anchors, keyed by the short name used in the deciders
CITES = {
    'lin-uh': "linear orders: eta is the unique ultrahomogeneous countable linear ordering",
    'lin-wuh': "linear orders: weakly ultrahomogeneous iff finitely many successivities",
    'lin-cc': "linear orders: computably categorical iff weakly ultrahomogeneous",
    'lin-exc': "linear orders: exceptional iff no successor pair outside and block ends inside",
    'lin-dcl': "linear orders: D(M) is the set of special points",
    'eq-uh': "equivalence structures: ultrahomogeneous iff all classes have the same size",
    'eq-wuh': "equivalence structures: weakly ultrahomogeneous iff all but finitely many classes share a size",
    'eq-cc': "equivalence structures: computably categorical iff weakly ultrahomogeneous",
    'eq-d2': "equivalence structures: Delta02 categorical iff finitely many infinite classes or bounded character",
    'eq-dcl': "equivalence structures: D(S) adds the exceptional classes of size at most 2",
    'inj-uh': "injection structures: ultrahomogeneous iff no omega-orbits",
    'inj-wuh': "injection structures: weakly ultrahomogeneous iff finitely many omega-orbits",
    'inj-cc': "injection structures: computably categorical iff finitely many infinite orbits",
    'inj-d2': "injection structures: Delta02 categorical iff finitely many orbits of type omega or of type zeta",
    'inj-dcl': "injection structures: D(S) is the union of the omega-orbits",
    'lf-wuh': "every locally finite weakly ultrahomogeneous structure is computably categorical",
    'gr-fin': "finite ultrahomogeneous graphs: mK_n, complements, C5, the 3x3 rook's graph",
    'gr-uh': "countable ultrahomogeneous graphs: mK_n, complements, the random graph, generic K_n-free graphs",
    'gr-lf': "locally finite graphs: weakly ultrahomogeneous iff H plus mK_n with H finite",
    'gr-lemma': "graphs: at most one component not finitely dominated",
    'po-uh': "trees under the order: ultrahomogeneous iff rank at most 1",
    'po-wuh': "trees under the order: weakly ultrahomogeneous iff the nodes of rank >= 1 are finite",
    'po-exc': "trees under the order: exceptional sets by the ancestor conditions",
    'po-ft': "trees under the order: finite type implies computably categorical",
    'pred-uh': "trees with predecessor: ultrahomogeneous iff nodes of equal height have equal successor counts",
    'pred-wuh': "trees with predecessor: weakly ultrahomogeneous iff T_S[x] is ultrahomogeneous for a finite S",
    'pred-h2': "trees with predecessor of height <= 2: all but finitely many height-1 nodes agree",
    'pred-h3': "trees with predecessor of height 3: the h and k conditions",
    'pred-po': "a tree (weakly) ultrahomogeneous under the order is so with predecessor",
    'nest-uh': "nested equivalence: ultrahomogeneous iff every E_i class splits into k_i classes",
    'nest-wuh': "nested equivalence: weakly ultrahomogeneous iff T_A is, with predecessor",
    'nest-n2': "nested equivalence with two relations: the closed-form corollary",
    'nest-fin': "nested equivalence with finite classes: each (A, E_i) is ultrahomogeneous",
    'oracle': "finite structures: exhaustive search over generated substructures",
}


def _json(x: Any) -> Any:
    if isinstance(x, ExtCount):
        return x.to_json()
    if isinstance(x, TreePres):
        return x.to_json()
    if isinstance(x, dict):
        return {str(k): _json(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_json(v) for v in x]
    if hasattr(x, 'to_dict'):
        return x.to_dict()
    return x


def agree(what: str, closed: Verdict, general: Verdict,
          by: str = "the recursion"):
    """Raise DisagreementError unless a closed form matches the general
    procedure"""
    if closed != general:
        raise DisagreementError(
            f"closed form says {what}={closed}, {by} says {what}={general}")


@dataclass(frozen=True)
class ExceptionalSet:
    """An exceptional set, by element labels and in words

    Labels are those of the materialized presentation, so the set can be
    bound to concrete elements of any long enough prefix.
    """
    elements: Tuple[str, ...] = ()
    description: str = ""

    def to_dict(self) -> dict:
        return {'elements': list(self.elements),
                'description': self.description}


@dataclass(frozen=True)
class ConditionResult:
    """One condition of a characterization, with a witness when it fails"""
    name: str
    holds: bool
    witness: Tuple[str, ...] = ()
    detail: str = ""

    def to_dict(self) -> dict:
        return {'name': self.name, 'holds': self.holds,
                'witness': list(self.witness), 'detail': self.detail}


@dataclass
class ExceptionalCheckTrace:
    """The outcome of an exceptional-set check

    Conditions are evaluated in order and the check stops at the first one
    that fails. For trees, lower[a] and upper[a] are the members of the set
    below and above-or-equal a node.
    """
    holds: bool
    conditions: List[ConditionResult] = field(default_factory=list)
    lower: Dict[str, List[str]] = field(default_factory=dict)
    upper: Dict[str, List[str]] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds

    @property
    def failed(self) -> Optional[ConditionResult]:
        return next((c for c in self.conditions if not c.holds), None)

    def to_dict(self) -> dict:
        return stamp({
            'holds': self.holds,
            'conditions': [c.to_dict() for c in self.conditions],
            'lower': self.lower,
            'upper': self.upper
        })


@dataclass(frozen=True)
class RootedView:
    """T_U[a]: the chain below a, a itself and full subtrees over the
    children of a outside U"""
    tree: TreePres
    address: Tuple[Tuple[int, int], ...]

    @property
    def depth(self) -> int:
        return len(self.address)

    def to_dict(self) -> dict:
        return {'address': [list(s) for s in self.address],
                'tree': self.tree.to_json()}


@dataclass(frozen=True)
class BranchingProfile:
    """beta(n): the successor count shared by every node of height n"""
    beta: Tuple[ExtCount, ...]

    def __getitem__(self, n: int) -> ExtCount:
        return self.beta[n]

    def __len__(self) -> int:
        return len(self.beta)

    def to_dict(self) -> dict:
        return {'beta': [b.to_json() for b in self.beta]}


@dataclass
class Report:
    """What the deciders know about one structure"""
    family: Family
    uh: Verdict
    wuh: Verdict
    cc: Verdict = None
    delta2: Verdict = None
    minimal_exceptional: List[ExceptionalSet] = field(default_factory=list)
    # special points, exceptional classes or omega-orbit representatives
    special: List[str] = field(default_factory=list)
    definable_closure: Optional[ExceptionalSet] = None
    citations: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    extra: Dict[str, Any] = field(default_factory=dict)

    def cite(self, *names: str) -> 'Report':
        for n in names:
            if CITES[n] not in self.citations:
                self.citations.append(CITES[n])
        return self

    def implications_hold(self) -> bool:
        """uh => wuh, and wuh => cc => delta2 where both sides are decided"""
        if self.uh is True and self.wuh is False:
            return False
        if self.wuh is True and self.cc is False:
            return False
        if self.cc is True and self.delta2 is False:
            return False
        return True

    def to_dict(self) -> dict:
        return stamp({
            'family': self.family.value,
            'uh': self.uh,
            'wuh': self.wuh,
            'cc': self.cc,
            'delta2': self.delta2,
            'minimal_exceptional': [e.to_dict() for e in self.minimal_exceptional],
            'special': list(self.special),
            'definable_closure': None if self.definable_closure is None
            else self.definable_closure.to_dict(),
            'citations': list(self.citations),
            'notes': list(self.notes),
            'extra': _json(self.extra)
        })

    def to_text(self) -> str:
        """A short human-readable summary"""
        def v(x: Verdict) -> str:
            return "unknown" if x is None else str(x).lower()

        lines = [f"family: {self.family.value}",
                 f"uh: {v(self.uh)}  wuh: {v(self.wuh)}  "
                 f"cc: {v(self.cc)}  delta2: {v(self.delta2)}"]
        for e in self.minimal_exceptional:
            elems = "{" + ", ".join(e.elements) + "}"
            lines.append(f"minimal exceptional: {elems} {e.description}".rstrip())
        if self.special:
            lines.append("special: " + ", ".join(self.special))
        if self.definable_closure is not None:
            lines.append("D(S): {" + ", ".join(self.definable_closure.elements)
                         + "}")
        lines.extend(f"note: {n}" for n in self.notes)
        return "\n".join(lines)
