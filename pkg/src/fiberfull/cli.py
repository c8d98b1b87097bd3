"""Command dispatch and report emission.

Usage:  fiberfull <command> <input-file> [flags]

Commands: gb, resolve, betti, hilbert, localcohom, fiberfull, locus,
cv-verify.  Reports are JSON on stdout (CSV for Hilbert/Betti tables with
--csv); identical inputs produce byte-identical output.  Exit codes: 0 on
success, 2 on a theorem-violation error, 1 on any other error.
"""

import argparse
import json
import sys

from .errors import AlgebraError, ParseError, TheoremViolationError, UnknownCommandError
from .ext import hilbert_function, local_cohomology_hilbert
from .fields import GF, QQ
from .fiberfull import fiber_full_check, fiber_full_locus, verify_degeneration
from .groebner import buchberger, initial_module
from .modules import SubmodulePresentation
from .orders import TermOrder, order_from_string
from .parser import parse_input
from .resolution import betti_table, depth_and_regularity, free_resolution

COMMANDS = ("gb", "resolve", "betti", "hilbert", "localcohom", "fiberfull", "locus", "cv-verify")

DEFAULT_VERIFY_FIELD = 32003


def _build_flag_parser(command):
    p = argparse.ArgumentParser(prog="fiberfull %s" % command, add_help=True)
    p.add_argument("input", help="problem file, or - for stdin")
    p.add_argument("--order", default=None, help="lex | grevlex | block-x-over-t | weights:<csv>")
    p.add_argument("--field", default=None, help="QQ | Fp:<p>")
    p.add_argument("--window", default=None, help="<lo>:<hi>")
    p.add_argument("--json-out", default=None, help="also write the report to this path")
    p.add_argument("--csv", action="store_true", help="emit CSV for Hilbert/Betti tables")
    p.add_argument("--threads", type=int, default=1, help="accepted for compatibility")
    if command == "localcohom":
        p.add_argument("--i", type=int, required=True, help="cohomological index")
    if command == "fiberfull":
        p.add_argument("--at", type=int, default=0, help="check at the prime (t - c)")
    return p


def _parse_window(text):
    lo, _, hi = text.partition(":")
    try:
        window = (int(lo), int(hi))
    except ValueError:
        raise AlgebraError("bad window %r, expected <lo>:<hi>" % text)
    if window[0] > window[1]:
        raise AlgebraError("window bounds out of order")
    return window


def _parse_field(text):
    if text == "QQ":
        return QQ
    if text.startswith("Fp:"):
        return GF(int(text[3:]))
    raise AlgebraError("bad field %r, expected QQ or Fp:<p>" % text)


def _ring_json(ring):
    xnames = ring.names[:-1] if ring.has_parameter else ring.names
    return {
        "vars": list(xnames),
        "weights": list(ring.weights),
        "field": "QQ" if ring.field.p is None else "Fp(%d)" % ring.field.p,
        "param": "t" if ring.has_parameter else None,
        "delta": ring.delta,
    }


def _load(command, args):
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    spec = parse_input(text)
    if args.field is not None:
        spec = spec.with_field(_parse_field(args.field))
    elif command == "cv-verify" and spec.ring.field == QQ:
        # certified reruns use --field QQ; the default trades certainty in
        # characteristic zero for speed
        spec = spec.with_field(GF(DEFAULT_VERIFY_FIELD))
    order = spec.order
    if args.order is not None:
        order = order_from_string(args.order)
    if order is None:
        order = TermOrder.grevlex()
    window = spec.window
    if args.window is not None:
        window = _parse_window(args.window)
    if window is None:
        window = (-spec.ring.delta - 10, 10)
    if args.threads < 1:
        raise AlgebraError("--threads must be positive")
    return spec, order, window


def _presentation(spec):
    return SubmodulePresentation.ideal(spec.ring, list(spec.generators))


def run_command(command, args):
    """Execute one command; returns (report dict, csv lines or None)."""
    spec, order, window = _load(command, args)
    pres = _presentation(spec)
    report = {
        "command": command,
        "ring": _ring_json(spec.ring),
        "ideal": {"name": spec.ideal_name, "generators": [str(g) for g in spec.generators]},
    }
    csv_lines = None

    if command == "gb":
        G = buchberger(pres, order)
        init = initial_module(G)
        report["order"] = order.describe()
        report["basis"] = [str(v.components[0]) for v in G.elements]
        report["leading_terms"] = [str(v.components[0]) for v in init.generators]
    elif command == "resolve":
        res = free_resolution(pres, minimize=not spec.ring.has_parameter)
        report["minimal"] = res.minimal
        report["length"] = res.length
        report["ranks"] = res.ranks()
        report["twists"] = [list(m.twists) for m in res.modules]
        report["differentials"] = [
            [[str(col.components[row]) for col in cols] for row in range(res.modules[k].rank)]
            for k, cols in enumerate(res.diffs)
        ]
    elif command == "betti":
        res = free_resolution(pres, minimize=True)
        table = betti_table(res)
        depth, reg = depth_and_regularity(table, spec.ring.num_positive)
        report["betti"] = table.to_json_dict()
        report["depth"] = depth
        report["regularity"] = reg
        if args.csv:
            csv_lines = ["i,j,beta"]
            for (i, j), beta in sorted(table.entries.items()):
                csv_lines.append("%d,%d,%d" % (i, j, beta))
    elif command == "hilbert":
        table = hilbert_function(pres.as_quotient(), window)
        report["window"] = [window[0], window[1]]
        report["table"] = table.to_json_dict()
        if args.csv:
            csv_lines = ["nu,dim"] + ["%d,%d" % (nu, table.dims[nu])
                                      for nu in range(window[0], window[1] + 1)]
    elif command == "localcohom":
        table = local_cohomology_hilbert(pres, args.i, window)
        report["i"] = args.i
        report["window"] = [window[0], window[1]]
        report["table"] = table.to_json_dict()
        if args.csv:
            csv_lines = ["nu,dim"] + ["%d,%d" % (nu, table.dims[nu])
                                      for nu in range(window[0], window[1] + 1)]
    elif command == "fiberfull":
        ff = fiber_full_check(pres, at=args.at)
        report["fiberfull"] = ff.to_json_dict()
    elif command == "locus":
        g = fiber_full_locus(pres)
        report["g"] = str(g)
    elif command == "cv-verify":
        deg = verify_degeneration(pres, order, window)
        report["report"] = deg.to_json_dict()
    else:
        raise UnknownCommandError("unknown command %r" % command)
    return report, csv_lines


def _emit(report, csv_lines, json_out):
    if csv_lines is not None:
        body = "\n".join(csv_lines) + "\n"
    else:
        body = json.dumps(report, indent=2) + "\n"
    sys.stdout.write(body)
    if json_out:
        with open(json_out, "w", encoding="utf-8") as fh:
            fh.write(body)


def _emit_error(kind, message, extra=None):
    payload = {"error": {"kind": kind, "message": message}}
    if extra:
        payload["error"].update(extra)
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] in ("-h", "--help"):
        sys.stdout.write(__doc__)
        return 0
    command = argv[0]
    if command not in COMMANDS:
        _emit_error("unknown-command", "unknown command %r; expected one of %s"
                    % (command, ", ".join(COMMANDS)))
        return 1
    parser = _build_flag_parser(command)
    try:
        args = parser.parse_args(argv[1:])
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report, csv_lines = run_command(command, args)
    except TheoremViolationError as exc:
        extra = {}
        if exc.report is not None:
            extra["report"] = exc.report.to_json_dict()
        _emit_error(exc.kind, str(exc), extra)
        return 2
    except ParseError as exc:
        _emit_error(exc.kind, exc.message, {"line": exc.line, "col": exc.col})
        return 1
    except AlgebraError as exc:
        _emit_error(exc.kind, str(exc))
        return 1
    except (OSError, IndexError, ValueError) as exc:
        _emit_error("error", str(exc))
        return 1
    _emit(report, csv_lines, args.json_out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
