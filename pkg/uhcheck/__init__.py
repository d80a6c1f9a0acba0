"""Cross-validation of the deciders against the exhaustive oracle"""

from .crosscheck import (
    FAMILIES,
    SET_FAMILIES,
    Instance,
    Disagreement,
    InstanceResult,
    CrossCheckSummary,
    select_instances,
    check_instance,
    crosscheck,
    reproducer,
    smallest
)

__version__ = '0.1.0'

__all__ = [
    'FAMILIES',
    'SET_FAMILIES',
    'Instance',
    'Disagreement',
    'InstanceResult',
    'CrossCheckSummary',
    'select_instances',
    'check_instance',
    'crosscheck',
    'reproducer',
    'smallest'
]
