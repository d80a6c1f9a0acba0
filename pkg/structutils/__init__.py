"""Value types, errors and file helpers shared by the uh tools"""

from .errors import (
    StructError,
    InputError,
    ResourceError,
    PreconditionError,
    UnsupportedError,
    NoIsomorphismError,
    DisagreementError
)
from .structure import (
    Family,
    FiniteStructure,
    PartialMap,
    classes_of,
    chain,
    order_from_sequence,
    equivalence_from_classes,
    nested_from_partitions,
    injection_from_images,
    graph_from_edges,
    tree_from_parents,
    tree_parents
)
from .fileutils import (
    SCHEMA_VERSION,
    get_file_encoding,
    read_json,
    load_json_text,
    dump_json,
    stamp,
    open_out,
    print_error
)
from .runconfig import (
    DEFAULT_CAP,
    HARD_CAP,
    DEFAULT_MAX_PREFIX,
    DEFAULT_MAX_SETS,
    RunConfig,
    load_config
)

__all__ = [
    'StructError',
    'InputError',
    'ResourceError',
    'PreconditionError',
    'UnsupportedError',
    'NoIsomorphismError',
    'DisagreementError',
    'Family',
    'FiniteStructure',
    'PartialMap',
    'classes_of',
    'chain',
    'order_from_sequence',
    'equivalence_from_classes',
    'nested_from_partitions',
    'injection_from_images',
    'graph_from_edges',
    'tree_from_parents',
    'tree_parents',
    'SCHEMA_VERSION',
    'get_file_encoding',
    'read_json',
    'load_json_text',
    'dump_json',
    'stamp',
    'open_out',
    'print_error',
    'DEFAULT_CAP',
    'HARD_CAP',
    'DEFAULT_MAX_PREFIX',
    'DEFAULT_MAX_SETS',
    'RunConfig',
    'load_config'
]
