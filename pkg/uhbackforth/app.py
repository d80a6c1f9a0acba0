"""The executable of uhbackforth"""

import sys
import getopt
import uhbackforth

from getopt import GetoptError
from structutils import (
    NoIsomorphismError,
    RunConfig,
    StructError,
    dump_json,
    load_config,
    open_out,
    print_error
)
from uhpres import Document, pres_isomorphic, read_presentation
from .backforth import IsoSchedule, back_and_forth

usage_s = """
usage: uhbackforth [options] a.json b.json
""".strip()

help_s = """
usage: uhbackforth [options] a.json b.json

Build an isomorphism between two structures by back and forth.

Both files are presentation files of the same family. For two
explicit finite structures the command matches every element and
prints the verified isomorphism

    $ uhbackforth a.json b.json

For presented infinite structures it prints the first pairs of the
construction, alternating between the least unmatched element of
each side

    $ uhbackforth -n 20 eta.json eta2.json

The exit code is 3 when the structures are not isomorphic.

arguments
  a.json, b.json            paths to the presentation files

options
  -h, --help                show help
  -n, --length=N            number of pairs to build for infinite
                            structures (default: 16)
  -c, --config=conf.toml    path to a run configuration
  -f, --format=FMT          json (default) or text
  -o, --out=file            path to the output file. if this flag is
                            not specified, the default is stdout
  -g, --debug               enable debug mode
  -V, --version             show version number
""".strip()


def _operand(doc: Document):
    return doc.structure if doc.is_finite else doc.pres


def run_backforth(a: Document, b: Document, length: int,
                  config: RunConfig) -> IsoSchedule:
    """cmd_backforth: the schedule between two documents

    Two finite files are matched completely. Otherwise the presentations
    must be isomorphic; if they are not, this raises a no-isomorphism error
    like the finite case.
    """
    if not (a.is_finite and b.is_finite):
        if a.family != b.family or not pres_isomorphic(a.pres, b.pres):
            raise NoIsomorphismError("the presentations are not isomorphic")
    return back_and_forth(_operand(a), _operand(b), length, a.family,
                          config.max_prefix)


def _text(sched: IsoSchedule) -> str:
    lines = [f"{la} -> {lb}" + ("" if ok else "  (unverified)")
             for (la, lb), ok in zip(sched.labels, sched.verified)]
    if sched.isomorphism is not None:
        lines.append("total isomorphism verified")
    return "\n".join(lines)


def main():
    # parse arguments
    try:
        opts, args = getopt.gnu_getopt(
            sys.argv[1:],
            "hn:c:f:o:gV",
            ["help", "length=", "config=", "format=", "out=", "debug",
             "version"]
        )
    except GetoptError as e:
        print(e, file=sys.stderr)
        print(usage_s, file=sys.stderr)
        sys.exit(2)

    length: int = 16
    config_path = None
    changes = {}
    debug: bool = False

    for o, a in opts:
        if o in ("-n", "--length"):
            try:
                length = int(a)
            except ValueError:
                print("error: length must be an integer", file=sys.stderr)
                sys.exit(2)
        elif o in ("-c", "--config"):
            config_path = a
        elif o in ("-f", "--format"):
            changes['format'] = a
        elif o in ("-o", "--out"):
            changes['out'] = a
        elif o in ("-g", "--debug"):
            debug = True
        elif o in ("-V", "--version"):
            print("uhbackforth", uhbackforth.__version__, file=sys.stderr)
            sys.exit()
        elif o in ("-h", "--help"):
            print(help_s, file=sys.stderr)
            sys.exit()

    if len(args) < 2:
        print("error: two presentation files are needed", file=sys.stderr)
        print(usage_s, file=sys.stderr)
        sys.exit(2)
    # done parsing arguments

    try:
        config = load_config(config_path) if config_path else RunConfig()
        config = config.updated(command="backforth", inputs=args[:2],
                                **changes)
        a, b = read_presentation(args[0]), read_presentation(args[1])
        sched = run_backforth(a, b, length, config)
        with open_out(config.out) as out:
            if config.format == "text":
                print(_text(sched), file=out)
            else:
                print(dump_json(sched.to_dict()), end="", file=out)
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
