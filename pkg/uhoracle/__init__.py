"""Exhaustive ground truth on small finite structures"""

from .search import (
    pair_table,
    refine,
    isomorphisms,
    find_isomorphism,
    automorphisms,
    embeddings,
    canonical_certificate,
    check_map,
    is_isomorphism
)
from .oracle import (
    OracleVerdict,
    DefinableClosureResult,
    generated_substructure,
    closed_sets,
    is_uh_bruteforce,
    is_exceptional_bruteforce,
    minimal_exceptional_sets_bruteforce,
    definable_closure_bruteforce,
    extension_of,
    automorphisms_extending
)
from .enumerate import (
    DEFAULT_NESTED_ARITY,
    partitions,
    rooted_trees,
    leveled_trees,
    tree_parents_of,
    nested_structure,
    enumerate_structures
)

__version__ = '0.1.0'

__all__ = [
    'pair_table',
    'refine',
    'isomorphisms',
    'find_isomorphism',
    'automorphisms',
    'embeddings',
    'canonical_certificate',
    'check_map',
    'is_isomorphism',
    'OracleVerdict',
    'DefinableClosureResult',
    'generated_substructure',
    'closed_sets',
    'is_uh_bruteforce',
    'is_exceptional_bruteforce',
    'minimal_exceptional_sets_bruteforce',
    'definable_closure_bruteforce',
    'extension_of',
    'automorphisms_extending',
    'DEFAULT_NESTED_ARITY',
    'partitions',
    'rooted_trees',
    'leveled_trees',
    'tree_parents_of',
    'nested_structure',
    'enumerate_structures'
]
