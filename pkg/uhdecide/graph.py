"""Graphs

Full verdicts are given for finite graphs, for locally finite presentations
and for catalog graphs. With a bulk of K_omega only ultrahomogeneity is
decided; the rest is reported as necessary conditions.
"""

import networkx as nx

from typing import List

from structutils import Family, UnsupportedError
from uhpres import (
    CATALOG,
    ExtCount,
    GraphPres,
    complete_graph,
    to_networkx
)
from uhoracle import canonical_certificate
from .report import ConditionResult, ExceptionalSet, Report

_C5 = nx.cycle_graph(5)
_ROOK3X3 = nx.cartesian_product(nx.complete_graph(3), nx.complete_graph(3))


def _union(g: GraphPres) -> nx.Graph:
    """The networkx graph of a finite presentation"""
    out = nx.Graph()
    for c, mult in g.canonical().components:
        for _ in range(mult.value):
            out = nx.disjoint_union(out, to_networkx(c))
    return out


def _is_equal_cliques(h: nx.Graph) -> bool:
    sizes = {len(cc) for cc in nx.connected_components(h)}
    return len(sizes) <= 1 and all(
        h.subgraph(cc).number_of_edges() == len(cc) * (len(cc) - 1) // 2
        for cc in nx.connected_components(h))


def classify_finite_graph(h: nx.Graph) -> str:
    """The finite ultrahomogeneous graph h is, or "" if none

    Returns one of "mK_n", "complement of mK_n", "C5" and "rook3x3".
    """
    if _is_equal_cliques(h):
        return "mK_n"
    if _is_equal_cliques(nx.complement(h)):
        return "complement of mK_n"
    if nx.is_isomorphic(h, _C5):
        return "C5"
    if nx.is_isomorphic(h, _ROOK3X3):
        return "rook3x3"
    return ""


def _is_complete(c) -> bool:
    return canonical_certificate(c) == canonical_certificate(complete_graph(c.size))


def lemma_conditions(g: GraphPres) -> List[ConditionResult]:
    """The necessary conditions on components of a weakly ultrahomogeneous graph

    Every presented component is finite or complete, hence dominated by a
    finite set of its vertices within distance 2, so the conditions hold.
    """
    return [
        ConditionResult("at most one component not finitely dominated", True),
        ConditionResult("with infinitely many components every component is "
                        "finitely dominated", True),
        ConditionResult("a component not finitely dominated has a finite set "
                        "within distance 2 of every vertex", True,
                        detail="vacuous"),
    ]


def _finite_part(g: GraphPres) -> List[str]:
    """Vertex labels of the components of finite multiplicity"""
    return [f"{j}.{copy}:{v}"
            for j, (_, c, mult) in enumerate(g.component_types())
            if mult.is_finite
            for copy in range(mult.value) for v in range(c.size)]


def analyze_graph(g: GraphPres, necessary_only: bool = False) -> Report:
    """Decide the homogeneity notions of a presented graph

    Arguments
      g: the presentation
      necessary_only: for a graph that is not locally finite, report the
                      necessary conditions instead of raising
    Returns
      the report
    """
    if g.catalog_tag is not None:
        r = Report(Family.GRAPH, True, True, True, True)
        r.notes.append(f"catalog verdict for {CATALOG[g.catalog_tag]}")
        r.extra['catalog'] = g.catalog_tag
        return r.cite('gr-uh')
    g = g.canonical()
    types = g.component_types()
    omega_types = [(c, m) for _, c, m in types if m.is_omega]
    if g.bulk is None and not omega_types:
        return _analyze_finite(g)
    if g.bulk is None:
        return _analyze_locally_finite(g, types, omega_types)

    # a bulk of K_omega
    m = ExtCount.of(g.bulk[0])
    uh = not types
    r = Report(Family.GRAPH, uh, True if uh else None)
    r.extra['lemma'] = [c.to_dict() for c in lemma_conditions(g)]
    r.cite('gr-uh', 'gr-lemma')
    if uh:
        r.cc, r.delta2 = True, True
        r.minimal_exceptional = [ExceptionalSet()]
        return r.cite('lf-wuh')
    if omega_types and not necessary_only:
        raise UnsupportedError(
            "infinitely many finite components beside K_omega components: "
            "the graph is not locally finite")
    if len(omega_types) > 1 or (omega_types and m.is_omega):
        r.wuh = False
        r.notes.append("two kinds of components occur infinitely often")
    r.notes.append("necessary conditions only")
    return r


def _analyze_finite(g: GraphPres) -> Report:
    h = _union(g)
    kind = classify_finite_graph(h)
    r = Report(Family.GRAPH, bool(kind), True, True, True)
    r.cite('gr-fin')
    if kind:
        r.extra['finite_class'] = kind
        r.minimal_exceptional = [ExceptionalSet()]
    return r


def _hides_in(small, big) -> bool:
    """Whether the component `small` is a proper induced subgraph of `big`"""
    if small.size >= big.size:
        return False
    return nx.algorithms.isomorphism.GraphMatcher(
        to_networkx(big), to_networkx(small)).subgraph_is_isomorphic()


def _components_computable(omega_types) -> bool:
    """Computable categoricity of a locally finite graph from its components

    A copy can be matched component by component, with the finitely many
    components of finite multiplicity fixed in advance, unless a component
    occurring infinitely often looks like an unfinished piece of another one
    that also does.
    """
    cs = [c for c, _ in omega_types]
    return not any(_hides_in(a, b) for a in cs for b in cs if a is not b)


def _analyze_locally_finite(g: GraphPres, types, omega_types) -> Report:
    uh = len(types) == 1 and _is_complete(types[0][1])
    wuh = len(omega_types) == 1 and _is_complete(omega_types[0][0])
    cc = wuh or _components_computable(omega_types)
    r = Report(Family.GRAPH, uh, wuh, cc, True)
    r.cite('gr-uh', 'gr-lf', 'lf-wuh')
    if uh:
        r.minimal_exceptional = [ExceptionalSet()]
    elif wuh:
        r.extra['exceptional_set'] = ExceptionalSet(
            tuple(_finite_part(g)),
            "every vertex of the finite part H, not necessarily minimal")
    else:
        if len(omega_types) > 1:
            r.notes.append("two kinds of components occur infinitely often")
        else:
            r.notes.append("the component occurring infinitely often is not "
                           "complete")
        if not cc:
            r.notes.append("a component occurring infinitely often is a "
                           "proper induced subgraph of another")
    return r
