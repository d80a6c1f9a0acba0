"""The executable of uhdecide"""

import sys
import getopt
import uhdecide

from getopt import GetoptError
from structutils import (
    RunConfig,
    StructError,
    dump_json,
    load_config,
    open_out,
    print_error
)
from uhpres import read_presentation
from .analyze import analyze, check_exceptional, parse_set

usage_s = """
usage: uhdecide [options] pres.json
""".strip()

help_s = """
usage: uhdecide [options] pres.json

Decide whether a presented countable structure is ultrahomogeneous.

This command reads a presentation file, runs the decider of its
family and prints a report with the verdicts uh (ultrahomogeneous),
wuh (weakly ultrahomogeneous), cc (computably categorical) and
delta2 (Delta02 categorical), the minimal exceptional sets and the
results the verdicts rest on

    $ uhdecide order.json

To check whether a set of elements is exceptional, list them with
the -x flag. Points of an order are named a1, a2, ..., tree nodes
by their address, elements of a finite structure by label or number

    $ uhdecide -x a1,a3,a5 order.json

The exit code is 3 when the set is not exceptional.

arguments
  pres.json                 path to the presentation file

options
  -h, --help                show help
  -x, --exceptional=SET     check the comma-separated set SET instead
                            of printing the report
  -c, --config=conf.toml    path to a run configuration
  -f, --format=FMT          json (default) or text
  -o, --out=file            path to the output file. if this flag is
                            not specified, the default is stdout
  -g, --debug               enable debug mode
  -V, --version             show version number
""".strip()


def main():
    # parse arguments
    try:
        opts, args = getopt.gnu_getopt(
            sys.argv[1:],
            "hx:c:f:o:gV",
            ["help", "exceptional=", "config=", "format=", "out=", "debug",
             "version"]
        )
    except GetoptError as e:
        print(e, file=sys.stderr)
        print(usage_s, file=sys.stderr)
        sys.exit(2)

    exceptional = None
    config_path = None
    changes = {}
    debug: bool = False

    for o, a in opts:
        if o in ("-x", "--exceptional"):
            exceptional = parse_set(a)
        elif o in ("-c", "--config"):
            config_path = a
        elif o in ("-f", "--format"):
            changes['format'] = a
        elif o in ("-o", "--out"):
            changes['out'] = a
        elif o in ("-g", "--debug"):
            debug = True
        elif o in ("-V", "--version"):
            print("uhdecide", uhdecide.__version__, file=sys.stderr)
            sys.exit()
        elif o in ("-h", "--help"):
            print(help_s, file=sys.stderr)
            sys.exit()

    if len(args) < 1:
        print("error: no presentation file is given", file=sys.stderr)
        print(usage_s, file=sys.stderr)
        sys.exit(2)
    # done parsing arguments

    try:
        config = load_config(config_path) if config_path else RunConfig()
        config = config.updated(command="analyze", inputs=args[:1], **changes)
        doc = read_presentation(args[0])
        if exceptional is not None:
            trace = check_exceptional(doc, exceptional, config)
            result, code = trace.to_dict(), 0 if trace.holds else 3
            text = "exceptional" if trace.holds else \
                f"not exceptional: {trace.failed.name} " \
                f"({', '.join(trace.failed.witness)})"
        else:
            report = analyze(doc, config)
            result, code, text = report.to_dict(), 0, report.to_text()
        with open_out(config.out) as out:
            if config.format == "text":
                print(text, file=out)
            else:
                print(dump_json(result), end="", file=out)
        sys.exit(code)
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
