"""Back-and-forth isomorphism construction with stage checks"""

from .stages import (
    TermStage,
    iter_terms,
    term_stage,
    closure_depth,
    preserves,
    stage_iso
)
from .extend import Extension, close_map, extend_to_automorphism
from .backforth import IsoSchedule, back_and_forth

__version__ = '0.1.0'

__all__ = [
    'TermStage',
    'iter_terms',
    'term_stage',
    'closure_depth',
    'preserves',
    'stage_iso',
    'Extension',
    'close_map',
    'extend_to_automorphism',
    'IsoSchedule',
    'back_and_forth'
]
