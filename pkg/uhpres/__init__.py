"""Finite symbolic presentations of countable structures"""

from .extcount import ExtCount, OMEGA
from .linear import (
    FIN,
    OMEGA_STAR,
    ZETA,
    ETA,
    Block,
    LinOrderPres,
    fin,
    B_OMEGA,
    B_OMEGA_STAR,
    B_ZETA,
    B_ETA,
    applicable_rewrites,
    normalize_linear,
    special_points,
    point_name
)
from .character import EqCharacter, InjSpectrum
from .tree import (
    TreePres,
    LEAF,
    node,
    star,
    tree_key,
    height,
    node_count,
    leaf_count,
    child_slots,
    slot,
    node_at,
    is_ancestor,
    level_counts,
    successor_count,
    truncate,
    from_parents,
    address_map,
    parse_address,
    as_address
)
from .graph import (
    CATALOG,
    GraphPres,
    to_networkx,
    from_networkx,
    complete_graph,
    finite_graph_pres
)
from .nested import NestedEqPres
from .materialize import (
    Presentation,
    Materialized,
    fair_merge,
    dyadic_points,
    zeta_points,
    tree_nodes,
    address_label,
    materialize,
    order_features,
    presented_size
)
from .present import present, class_tree, cycle_type
from .isomorphic import pres_isomorphic
from .schema import (
    Document,
    parse_structure,
    parse_tree,
    load_presentation,
    read_presentation,
    dump_presentation
)

__all__ = [
    'ExtCount',
    'OMEGA',
    'FIN',
    'OMEGA_STAR',
    'ZETA',
    'ETA',
    'Block',
    'LinOrderPres',
    'fin',
    'B_OMEGA',
    'B_OMEGA_STAR',
    'B_ZETA',
    'B_ETA',
    'applicable_rewrites',
    'normalize_linear',
    'order_features',
    'special_points',
    'point_name',
    'EqCharacter',
    'InjSpectrum',
    'TreePres',
    'LEAF',
    'node',
    'star',
    'tree_key',
    'height',
    'node_count',
    'leaf_count',
    'child_slots',
    'slot',
    'node_at',
    'is_ancestor',
    'level_counts',
    'successor_count',
    'truncate',
    'from_parents',
    'address_map',
    'parse_address',
    'as_address',
    'CATALOG',
    'GraphPres',
    'to_networkx',
    'from_networkx',
    'complete_graph',
    'finite_graph_pres',
    'NestedEqPres',
    'Presentation',
    'Materialized',
    'fair_merge',
    'dyadic_points',
    'zeta_points',
    'tree_nodes',
    'address_label',
    'materialize',
    'presented_size',
    'present',
    'class_tree',
    'cycle_type',
    'pres_isomorphic',
    'Document',
    'parse_structure',
    'parse_tree',
    'load_presentation',
    'read_presentation',
    'dump_presentation'
]
