"""The executable of uhcheck"""

import sys
import getopt
import uhcheck

from getopt import GetoptError
from structutils import (
    DisagreementError,
    Family,
    RunConfig,
    StructError,
    dump_json,
    load_config,
    open_out,
    print_error
)
from .crosscheck import crosscheck, reproducer, smallest

usage_s = """
usage: uhcheck [options]
""".strip()

help_s = """
usage: uhcheck [options]

Cross-check the deciders against exhaustive search.

Every structure of the family with up to CAP elements is decided
twice: by the family decider on its presentation and by brute force
on the structure. For orders and tree-po, every subset is checked for
being exceptional as well. Above the exhaustive threshold, instances
and subsets are sampled with the seed

    $ uhcheck --family=tree-po --cap=6

On a disagreement, the structure of the smallest one is written to
the reproducer file and the exit code is 4.

options
  -h, --help                show help
  -F, --family=FAMILY       order (default), equivalence, injection,
                            graph, tree-po, tree-pred or nested-eq
  -n, --cap=N               largest size to check (default: 8, at
                            most 12)
  -s, --seed=N              seed of the sampling (default: 0)
  -j, --jobs=N              number of worker processes (default: 1)
  -r, --repro=file          path of the reproducer file (default:
                            uhcheck-repro.json)
  -c, --config=conf.toml    path to a run configuration
  -f, --format=FMT          json (default) or text
  -o, --out=file            path to the output file. if this flag is
                            not specified, the default is stdout
  -v, --verbose             print one line per instance to stderr
  -g, --debug               enable debug mode
  -V, --version             show version number
""".strip()


def main():
    # parse arguments
    try:
        opts, args = getopt.gnu_getopt(
            sys.argv[1:],
            "hF:n:s:j:r:c:f:o:vgV",
            ["help", "family=", "cap=", "seed=", "jobs=", "repro=",
             "config=", "format=", "out=", "verbose", "debug", "version"]
        )
    except GetoptError as e:
        print(e, file=sys.stderr)
        print(usage_s, file=sys.stderr)
        sys.exit(2)

    family_name: str = "order"
    repro_path: str = "uhcheck-repro.json"
    config_path = None
    changes = {}
    debug: bool = False

    for o, a in opts:
        if o in ("-F", "--family"):
            family_name = a
        elif o in ("-n", "--cap", "-s", "--seed", "-j", "--jobs"):
            name = o.lstrip("-")
            name = {'n': 'cap', 's': 'seed', 'j': 'jobs'}.get(name, name)
            try:
                changes[name] = int(a)
            except ValueError:
                print(f"error: {name} must be an integer", file=sys.stderr)
                sys.exit(2)
        elif o in ("-r", "--repro"):
            repro_path = a
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
            print("uhcheck", uhcheck.__version__, file=sys.stderr)
            sys.exit()
        elif o in ("-h", "--help"):
            print(help_s, file=sys.stderr)
            sys.exit()
    # done parsing arguments

    try:
        config = load_config(config_path) if config_path else RunConfig()
        config = config.updated(command="crosscheck", inputs=[], **changes)
        family = Family.parse(family_name)
        summary = crosscheck(family, config)
        with open_out(config.out) as out:
            if config.format == "text":
                print(summary.to_text(), file=out)
            else:
                print(dump_json(summary.to_dict()), end="", file=out)
        if not summary.agrees:
            worst = smallest(summary.disagreements)
            with open(repro_path, "w", encoding='utf-8') as f:
                f.write(dump_json(reproducer(worst)))
            raise DisagreementError(
                f"{len(summary.disagreements)} disagreements, the smallest "
                f"written to {repro_path}")
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
