"""The executable of uhreduce"""

import json
import sys
import getopt
import uhreduce

from getopt import GetoptError
from typing import List, Optional
from structutils import (
    DisagreementError,
    InputError,
    RunConfig,
    StructError,
    dump_json,
    load_config,
    open_out,
    print_error,
    read_json,
    stamp
)
from .degrees import check_inj_degrees, iter_inj_degrees
from .limits import close_loop
from .reductions import check_stage_invariants, iter_reduction
from .schedule import Schedule, schedules_from
from .snapshots import Kind
from .zchain import build_odd_zchain

usage_s = """
usage: uhreduce [options] KIND
""".strip()

help_s = """
usage: uhreduce [options] KIND

Run a stage construction of an index-set reduction.

KIND is one of the reductions

    LIN_INF LIN_COF EQ_INF EQ_COF INJ_INF INJ_COF TREE_ORD_CHAIN
    TREE_ORD_UH TREE_ORD_WUH TREE_PRED_UH TREE_PRED_WUH

or one of the special structures INJ_DEGREES and ODD_ZCHAIN.

The schedule file lists the enumeration of W as [element, stage]
pairs. The command prints the snapshot after the last stage

    $ uhreduce -s w.json -t 9 LIN_INF

With --check, the stage invariants are checked after every stage and
the exit code is 4 if one fails

    $ uhreduce -s w.json -t 200 --check EQ_COF

With --limit, the construction is not run. Instead the limit
structure is built for W as listed plus the given tail, the deciders
are run on it and the verdict is compared with the one the reduction
predicts; the exit code is 4 if they differ

    $ uhreduce -s w.json --limit=cofinite INJ_COF

For INJ_DEGREES the schedule file holds one schedule per e. For
ODD_ZCHAIN, --stages is the number of elements to list.

arguments
  KIND                      name of the construction

options
  -h, --help                show help
  -s, --schedule=w.json     path to the schedule file. if this flag
                            is not specified, W is empty
  -t, --stages=N            number of stages to run (default: 0, or
                            the config's stages)
  -l, --limit=TAIL          finite, infinite or cofinite: decide the
                            limit instead of running stages
  -k, --check               check the stage invariants
  -c, --config=conf.toml    path to a run configuration
  -f, --format=FMT          json (default) or text
  -o, --out=file            path to the output file. if this flag is
                            not specified, the default is stdout
  -v, --verbose             print one line per stage to stderr
  -g, --debug               enable debug mode
  -V, --version             show version number
""".strip()


def _schedules(path: Optional[str], kind: Kind) -> List[Schedule]:
    if path is None:
        return [Schedule()]
    obj = read_json(path)
    if kind != Kind.INJ_DEGREES:
        return [Schedule.parse(obj)]
    if isinstance(obj, dict):
        obj = obj.get('schedules')
    if not isinstance(obj, list) or not obj:
        raise InputError("expected a non-empty list of schedules",
                         field="schedules")
    return schedules_from(obj)


def _log(config: RunConfig, snap):
    if config.verbose:
        print(f"{snap.kind.value}: stage {snap.stage}, {snap.size} elements",
              file=sys.stderr)


def run_reduce(kind: Kind, ws: List[Schedule], tail: Optional[str],
               check: bool, config: RunConfig) -> dict:
    """cmd_generate: the document uhreduce prints

    Arguments
      kind: the construction
      ws: the schedules, one per e for INJ_DEGREES and one otherwise
      tail: when given, decide the limit instead of running stages
      check: check the stage invariants after every stage
      config: stage count and decider bounds
    Returns
      the output document; raises DisagreementError when the check fails
      or the limit verdict differs from the prediction
    """
    if kind == Kind.ODD_ZCHAIN:
        s = build_odd_zchain(max(config.stages, 1))
        return stamp({'kind': kind.value, 'family': kind.family.value,
                      'structure': s.to_dict()})
    if tail is not None:
        loop = close_loop(kind, ws[0], tail, config)
        if not loop.agrees:
            raise DisagreementError(
                f"the deciders say {loop.prop}={loop.decided} on the limit, "
                f"the reduction predicts {loop.predicted}")
        return loop.to_dict()
    violations = []
    if kind == Kind.INJ_DEGREES:
        for snap in iter_inj_degrees(len(ws) - 1, ws, config.stages):
            _log(config, snap)
            if check:
                violations += [f"stage {snap.stage}: {v}"
                               for v in check_inj_degrees(snap, ws)]
    else:
        for snap in iter_reduction(kind, ws[0], config.stages):
            _log(config, snap)
            if check:
                report = check_stage_invariants(kind, snap, ws[0])
                violations += [f"stage {snap.stage}: {v}"
                               for v in report.violations]
    if violations:
        raise DisagreementError("; ".join(violations[:10]))
    d = snap.to_dict()
    if check:
        d['invariants'] = 'hold'
    return d


def _text(d: dict) -> str:
    if 'predicted' in d:
        return (f"{d['kind']} with a {d['tail']} tail: "
                f"{d['property']} predicted {str(d['predicted']).lower()}, "
                f"decided {str(d['decided']).lower()}")
    if 'stage' not in d:
        return f"{d['kind']}: {d['structure']['size']} elements"
    lines = [f"{d['kind']} after stage {d['stage']}: "
             f"{d['structure']['size']} elements"]
    lines += [f"{k}: {json.dumps(v)}"
              for k, v in sorted(d['metadata'].items())
              if k not in ('size', 'parents')]
    return "\n".join(lines)


def main():
    # parse arguments
    try:
        opts, args = getopt.gnu_getopt(
            sys.argv[1:],
            "hs:t:l:kc:f:o:vgV",
            ["help", "schedule=", "stages=", "limit=", "check", "config=",
             "format=", "out=", "verbose", "debug", "version"]
        )
    except GetoptError as e:
        print(e, file=sys.stderr)
        print(usage_s, file=sys.stderr)
        sys.exit(2)

    schedule_path: Optional[str] = None
    tail: Optional[str] = None
    check: bool = False
    config_path = None
    changes = {}
    debug: bool = False

    for o, a in opts:
        if o in ("-s", "--schedule"):
            schedule_path = a
        elif o in ("-t", "--stages"):
            try:
                changes['stages'] = int(a)
            except ValueError:
                print("error: stages must be an integer", file=sys.stderr)
                sys.exit(2)
        elif o in ("-l", "--limit"):
            tail = a
        elif o in ("-k", "--check"):
            check = True
        elif o in ("-c", "--config"):
            config_path = a
        elif o in ("-f", "--format"):
            changes['format'] = a
        elif o in ("-o", "--out"):
            changes['out'] = a
        elif o in ("-v", "--verbose"):
            changes['verbose'] = True
        elif o in ("-g", "--debug"):
            debug = True
        elif o in ("-V", "--version"):
            print("uhreduce", uhreduce.__version__, file=sys.stderr)
            sys.exit()
        elif o in ("-h", "--help"):
            print(help_s, file=sys.stderr)
            sys.exit()

    if len(args) < 1:
        print("error: a construction kind is needed", file=sys.stderr)
        print(usage_s, file=sys.stderr)
        sys.exit(2)
    # done parsing arguments

    try:
        config = load_config(config_path) if config_path else RunConfig()
        config = config.updated(
            command="reduce",
            inputs=[schedule_path] if schedule_path else [],
            **changes)
        kind = Kind.parse(args[0])
        ws = _schedules(schedule_path, kind)
        d = run_reduce(kind, ws, tail, check, config)
        with open_out(config.out) as out:
            if config.format == "text":
                print(_text(d), file=out)
            else:
                print(dump_json(d), end="", file=out)
    except StructError as e:
        if debug:
            raise e
        print_error(e)
        sys.exit(e.exit_code)
    except (ValueError, IOError) as e:
        if debug:
            raise e
        print_error(e)
        sys.exit(2)
    except KeyboardInterrupt as e:
        if debug:
            raise e
        print("error: interrupted", file=sys.stderr)
        sys.exit(1)
