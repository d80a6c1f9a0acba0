"""Dispatch a presentation file to its family decider"""

from collections import Counter
from typing import Iterable, List, Sequence

from structutils import (
    Family,
    FiniteStructure,
    InputError,
    RunConfig,
    UnsupportedError,
    classes_of
)
from uhoracle import (
    is_exceptional_bruteforce,
    is_uh_bruteforce,
    minimal_exceptional_sets_bruteforce
)
from uhpres import Document, EqCharacter, NestedEqPres
from .equivalence import analyze_equivalence
from .graph import analyze_graph
from .injection import analyze_injection
from .linear import analyze_linear, is_exceptional_linear
from .nested import analyze_nested
from .report import (
    NA,
    ConditionResult,
    ExceptionalCheckTrace,
    ExceptionalSet,
    Report
)
from .treepo import analyze_tree_po, is_exceptional_tree_po
from .treepred import analyze_tree_pred, is_exceptional_tree_pred


def _oracle_sets(s: FiniteStructure, cap: int) -> List[ExceptionalSet]:
    return [ExceptionalSet(tuple(s.label(x) for x in sorted(m)))
            for m in minimal_exceptional_sets_bruteforce(s, cap)]


def _analyze_n_eq(s: FiniteStructure, config: RunConfig) -> Report:
    verdict = is_uh_bruteforce(s, config.cap)
    r = Report(Family.N_EQ, verdict.holds, True, True, NA)
    r.minimal_exceptional = _oracle_sets(s, config.cap)
    if verdict.witness is not None:
        r.extra['witness'] = verdict.witness
    # each relation on its own must be ultrahomogeneous for A to be
    each = []
    for rel in s.relations:
        sizes = Counter(len(c) for c in classes_of(rel, s.size))
        each.append(bool(analyze_equivalence(EqCharacter.of(dict(sizes))).uh))
    r.extra['relations_uh'] = each
    r.notes.append("finite structure decided by exhaustive search")
    return r.cite('oracle')


def analyze(doc: Document, config: RunConfig = RunConfig()) -> Report:
    """Run the decider of the document's family

    Arguments
      doc: a presentation file's content
      config: caps and search bounds
    Returns
      the report; for a finite structure within the cap, the exhaustive
      verdict is added under extra.oracle
    """
    fam = doc.family
    if fam == Family.N_EQ:
        return _analyze_n_eq(doc.structure, config)
    p = doc.pres
    if fam == Family.ORDER:
        r = analyze_linear(p, config.max_sets)
    elif fam == Family.EQUIVALENCE:
        r = analyze_equivalence(p)
    elif fam == Family.INJECTION:
        r = analyze_injection(p)
    elif fam == Family.GRAPH:
        r = analyze_graph(p, necessary_only=True)
    elif fam == Family.TREE_PO:
        r = analyze_tree_po(p, config.max_sets)
    elif fam == Family.TREE_PRED:
        r = analyze_tree_pred(p)
    elif fam == Family.NESTED_EQ:
        r = analyze_nested(p if isinstance(p, NestedEqPres) else
                           NestedEqPres(doc.structure.arity,
                                        structure=doc.structure))
    else:
        raise UnsupportedError(f"no decider for family {fam.value}")
    s = doc.structure
    if s is not None and s.size <= config.cap:
        r.extra['oracle'] = {
            'uh': is_uh_bruteforce(s, config.cap).holds,
            'minimal_exceptional': [list(e.elements)
                                    for e in _oracle_sets(s, config.cap)]
        }
        if not r.minimal_exceptional and r.wuh:
            r.minimal_exceptional = _oracle_sets(s, config.cap)
            r.cite('oracle')
    return r


def parse_set(text: str) -> List[str]:
    """Split a comma-separated list of element names"""
    return [x.strip() for x in text.split(",") if x.strip()]


def _elements(s: FiniteStructure, names: Sequence[str]) -> List[int]:
    index = {name: x for x, name in enumerate(s.labels)}
    out = []
    for name in names:
        if name in index:
            out.append(index[name])
        elif name.isdigit():
            out.append(s.check_element(int(name), "S"))
        else:
            raise InputError(f"no element named '{name}'", field="S")
    return out


def check_exceptional(doc: Document, S: Iterable[str],
                      config: RunConfig = RunConfig()) -> ExceptionalCheckTrace:
    """Decide if a set of elements is exceptional

    Finite structures are checked by exhaustive search; orders and trees
    given symbolically by their characterizations.
    """
    S = list(S)
    if doc.structure is not None:
        s = doc.structure
        verdict = is_exceptional_bruteforce(s, _elements(s, S), config.cap)
        witness = () if verdict.witness is None else tuple(
            f"{s.label(a)}->{s.label(b)}" for a, b in verdict.witness.pairs)
        return ExceptionalCheckTrace(verdict.holds, [ConditionResult(
            "every isomorphism fixing S extends", verdict.holds, witness)])
    if doc.family == Family.ORDER:
        return is_exceptional_linear(doc.pres, S)
    if doc.family == Family.TREE_PO:
        return is_exceptional_tree_po(doc.pres, S)
    if doc.family == Family.TREE_PRED:
        return is_exceptional_tree_pred(doc.pres, S)
    raise UnsupportedError(
        f"exceptional-set checks for {doc.family.value} need a finite structure")
