"""Graphs as disjoint unions of connected components"""

import networkx as nx

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from structutils import Family, FiniteStructure, InputError, graph_from_edges
from uhoracle import canonical_certificate
from .extcount import ExtCount, OMEGA

# the countable ultrahomogeneous graphs with no finite presentation here
CATALOG = {
    'random': "the random graph",
    'kn-free': "the generic K_n-free graph",
    'complement-kn-free': "the complement of the generic K_n-free graph",
    'complement-mkn': "the complement of an infinite mK_n",
    'c5': "the pentagon",
    'rook3x3': "the 3x3 rook's graph",
}


def to_networkx(s: FiniteStructure) -> nx.Graph:
    """The networkx graph of a finite graph structure"""
    g = nx.Graph()
    g.add_nodes_from(s.universe)
    g.add_edges_from((u, v) for u, v in s.relations[0] if u < v)
    return g


def from_networkx(g: nx.Graph) -> FiniteStructure:
    """A graph structure from a networkx graph, vertices in sorted order"""
    index = {v: i for i, v in enumerate(sorted(g.nodes))}
    return graph_from_edges(len(index),
                            [(index[u], index[v]) for u, v in g.edges])


def complete_graph(n: int) -> FiniteStructure:
    return from_networkx(nx.complete_graph(n))


def is_complete(s: FiniteStructure) -> bool:
    return len(s.relations[0]) == s.size * (s.size - 1)


@dataclass(frozen=True)
class GraphPres:
    """A graph as explicit finite components plus a bulk of complete graphs

    components lists connected finite graphs with the number of copies of
    each. bulk (m, n) adds m copies of K_n, where n may be omega. A graph
    named by a catalog tag has no other fields.
    """
    components: Tuple[Tuple[FiniteStructure, ExtCount], ...] = ()
    bulk: Optional[Tuple[ExtCount, ExtCount]] = None
    catalog_tag: Optional[str] = None

    def __post_init__(self):
        if self.catalog_tag is not None:
            if self.catalog_tag not in CATALOG:
                raise InputError(f"unknown catalog tag '{self.catalog_tag}'",
                                 field="catalog")
            if self.components or self.bulk is not None:
                raise InputError("a catalog graph has no other fields",
                                 field="catalog")
        for i, (c, mult) in enumerate(self.components):
            field = f"components[{i}]"
            if c.family != Family.GRAPH:
                raise InputError("a component must be a graph", field=field)
            if c.size == 0 or not nx.is_connected(to_networkx(c)):
                raise InputError("a component must be connected and non-empty",
                                 field=field)
            if ExtCount.of(mult) == 0:
                raise InputError("multiplicity must be >= 1",
                                 field=field + ".multiplicity")
        if self.bulk is not None:
            m, n = (ExtCount.of(x) for x in self.bulk)
            if m == 0 or n == 0:
                raise InputError("bulk counts must be >= 1", field="bulk")

    def canonical(self) -> 'GraphPres':
        """Components merged by isomorphism type, finite bulk folded in

        A bulk of finite complete graphs is the same as an explicit component
        K_n with multiplicity m, so it is turned into one. Only a bulk of K_omega
        remains as bulk.
        """
        if self.catalog_tag is not None:
            return self
        acc: Dict[Tuple, Tuple[FiniteStructure, ExtCount]] = {}
        items = list(self.components)
        bulk = None
        if self.bulk is not None:
            m, n = (ExtCount.of(x) for x in self.bulk)
            if n.is_finite:
                items.append((complete_graph(n.value), m))
            else:
                bulk = (m, OMEGA)
        for c, mult in items:
            key = canonical_certificate(c)
            if key in acc:
                acc[key] = (acc[key][0], acc[key][1] + mult)
            else:
                acc[key] = (c, ExtCount.of(mult))
        comps = tuple(acc[k] for k in sorted(acc))
        return GraphPres(comps, bulk)

    @property
    def is_locally_finite(self) -> bool:
        return self.catalog_tag is None and (
            self.bulk is None or ExtCount.of(self.bulk[1]).is_finite)

    def component_types(self) -> List[Tuple[Tuple, FiniteStructure, ExtCount]]:
        """(certificate, representative, multiplicity) of the canonical form"""
        return [(canonical_certificate(c), c, m)
                for c, m in self.canonical().components]

    def to_json(self) -> dict:
        if self.catalog_tag is not None:
            return {'catalog': self.catalog_tag}
        d: dict = {'components': [
            {'vertices': c.size,
             'edges': sorted([u, v] for u, v in c.relations[0] if u < v),
             'multiplicity': m.to_json()}
            for c, m in self.components]}
        if self.bulk is not None:
            d['bulk'] = [ExtCount.of(x).to_json() for x in self.bulk]
        return d


def finite_graph_pres(s: FiniteStructure) -> GraphPres:
    """The presentation of a finite graph, one entry per component"""
    g = to_networkx(s)
    comps = [(from_networkx(g.subgraph(cc)), ExtCount(1))
             for cc in sorted(nx.connected_components(g), key=min)]
    return GraphPres(tuple(comps)).canonical()
