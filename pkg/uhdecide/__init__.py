"""Decide ultrahomogeneity and weak ultrahomogeneity of presented structures"""

from .report import (
    NA,
    CITES,
    Verdict,
    ExceptionalSet,
    ConditionResult,
    ExceptionalCheckTrace,
    RootedView,
    BranchingProfile,
    agree,
    Report
)
from .linear import (
    analyze_linear,
    is_exceptional_linear,
    minimal_exceptional_linear,
    definable_closure_linear,
    parse_point
)
from .equivalence import (
    analyze_equivalence,
    definable_closure_equivalence,
    exceptional_classes,
    main_sizes
)
from .injection import analyze_injection, definable_closure_injection
from .graph import analyze_graph, classify_finite_graph, lemma_conditions
from .finitetype import (
    embeds,
    is_strongly_finite_type,
    is_finite_type,
    type_conditions
)
from .treepo import (
    analyze_tree_po,
    is_exceptional_tree_po,
    minimal_exceptional_tree_po,
    canonical_exceptional_tree_po,
    internal_count
)
from .treepred import (
    analyze_tree_pred,
    is_exceptional_tree_pred,
    canonical_exceptional_tree_pred,
    rooted_view,
    profile,
    branching_profile,
    exclusion_plan,
    closed_form_wuh
)
from .nested import (
    analyze_nested,
    build_TA,
    check_nested,
    two_relation_wuh,
    finite_classes_uh
)
from .analyze import analyze, check_exceptional, parse_set

__version__ = '0.1.0'

__all__ = [
    'NA',
    'CITES',
    'Verdict',
    'ExceptionalSet',
    'ConditionResult',
    'ExceptionalCheckTrace',
    'RootedView',
    'BranchingProfile',
    'agree',
    'Report',
    'analyze_linear',
    'is_exceptional_linear',
    'minimal_exceptional_linear',
    'definable_closure_linear',
    'parse_point',
    'analyze_equivalence',
    'definable_closure_equivalence',
    'exceptional_classes',
    'main_sizes',
    'analyze_injection',
    'definable_closure_injection',
    'analyze_graph',
    'classify_finite_graph',
    'lemma_conditions',
    'embeds',
    'is_strongly_finite_type',
    'is_finite_type',
    'type_conditions',
    'analyze_tree_po',
    'is_exceptional_tree_po',
    'minimal_exceptional_tree_po',
    'canonical_exceptional_tree_po',
    'internal_count',
    'analyze_tree_pred',
    'is_exceptional_tree_pred',
    'canonical_exceptional_tree_pred',
    'rooted_view',
    'profile',
    'branching_profile',
    'exclusion_plan',
    'closed_form_wuh',
    'analyze_nested',
    'build_TA',
    'check_nested',
    'two_relation_wuh',
    'finite_classes_uh',
    'analyze',
    'check_exceptional',
    'parse_set'
]
