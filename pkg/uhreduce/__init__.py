"""Stage constructions from the index-set reductions, with their limits"""

from .schedule import Schedule, pair_code, schedules_from
from .snapshots import Kind, REDUCTIONS, StageSnapshot
from .reductions import (
    InvariantReport,
    least_code_pair,
    inj_cof_image,
    inj_cof_universe,
    two_adic,
    iter_reduction,
    build_reduction,
    check_stage_invariants
)
from .degrees import (
    element,
    element_label,
    iter_inj_degrees,
    build_inj_degrees,
    check_inj_degrees
)
from .zchain import (
    build_odd_zchain,
    two_power_split,
    zchain_image,
    zchain_orbit,
    zchain_successor
)
from .limits import (
    FINITE,
    INFINITE,
    COFINITE,
    TAILS,
    LoopCheck,
    limit_presentation,
    limit_is_exact,
    limit_document,
    predicted_verdict,
    close_loop
)

__version__ = '0.1.0'

__all__ = [
    'Schedule',
    'pair_code',
    'schedules_from',
    'Kind',
    'REDUCTIONS',
    'StageSnapshot',
    'InvariantReport',
    'least_code_pair',
    'inj_cof_image',
    'inj_cof_universe',
    'two_adic',
    'iter_reduction',
    'build_reduction',
    'check_stage_invariants',
    'element',
    'element_label',
    'iter_inj_degrees',
    'build_inj_degrees',
    'check_inj_degrees',
    'zchain_successor',
    'zchain_orbit',
    'zchain_image',
    'two_power_split',
    'build_odd_zchain',
    'FINITE',
    'INFINITE',
    'COFINITE',
    'TAILS',
    'LoopCheck',
    'limit_presentation',
    'limit_is_exact',
    'limit_document',
    'predicted_verdict',
    'close_loop'
]
