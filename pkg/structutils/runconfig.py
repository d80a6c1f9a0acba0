"""Run configuration shared by the executables

A RunConfig is built from a dict, usually loaded from a TOML preset, and
then updated by command-line flags.
"""

import toml

from dataclasses import dataclass, field, replace
from typing import List, Optional

from .fileutils import get_file_encoding

DEFAULT_CAP: int = 8
HARD_CAP: int = 12
DEFAULT_MAX_PREFIX: int = 4096
DEFAULT_MAX_SETS: int = 10000

FORMATS = ("json", "text")


@dataclass(frozen=True)
class RunConfig:
    """Options of one run of an executable"""
    command: str = ""
    inputs: List[str] = field(default_factory=list)
    # largest structure size the oracle enumerates
    cap: int = DEFAULT_CAP
    # up to this size cross-checks run over every subset
    exhaustive: int = 6
    # instance count above which cross-checks sample
    sample: int = 2000
    seed: int = 0
    jobs: int = 1
    stages: int = 0
    out: Optional[str] = None
    format: str = "json"
    max_prefix: int = DEFAULT_MAX_PREFIX
    max_sets: int = DEFAULT_MAX_SETS
    verbose: bool = False

    def __post_init__(self):
        if not 1 <= self.cap <= HARD_CAP:
            raise ValueError(f"cap must be between 1 and {HARD_CAP}")
        if self.exhaustive < 0:
            raise ValueError("exhaustive must be >= 0")
        if self.sample < 1:
            raise ValueError("sample must be >= 1")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        if self.stages < 0:
            raise ValueError("stages must be >= 0")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {', '.join(FORMATS)}")
        if self.max_prefix < 1:
            raise ValueError("max_prefix must be >= 1")
        if self.max_sets < 1:
            raise ValueError("max_sets must be >= 1")

    @staticmethod
    def from_dict(conf_dict: dict) -> 'RunConfig':
        """Build a config from a dict with the layout of the preset files

        Argument
          conf_dict: a dict with optional [run], [caps] and [search] tables
        Returns
          the run config
        """
        run = conf_dict.get('run', {})
        caps = conf_dict.get('caps', {})
        search = conf_dict.get('search', {})
        known = {'run': run, 'caps': caps, 'search': search}
        for name, table in known.items():
            if not isinstance(table, dict):
                raise ValueError(f"config's '{name}' must be a table")
        kwargs = {}
        for key in ('seed', 'jobs', 'stages', 'format', 'out', 'verbose'):
            if key in run:
                kwargs[key] = run[key]
        for key in ('cap', 'exhaustive', 'sample'):
            if key in caps:
                kwargs[key] = caps[key]
        for key in ('max_prefix', 'max_sets'):
            if key in search:
                kwargs[key] = search[key]
        for key, val in kwargs.items():
            expected = RunConfig.__dataclass_fields__[key].type
            if expected is int and (not isinstance(val, int) or
                                    isinstance(val, bool)):
                raise ValueError(f"config's '{key}' must be an integer")
        return RunConfig(**kwargs)

    def updated(self, **changes) -> 'RunConfig':
        """A copy with some fields replaced, validated again"""
        return replace(self, **changes)


def load_config(path: str) -> RunConfig:
    """Load a RunConfig from a TOML file in its detected encoding"""
    with open(path, "r", encoding=get_file_encoding(path)) as f:
        return RunConfig.from_dict(toml.load(f))
