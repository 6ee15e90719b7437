"""Command-line front end.

Subcommands: parse, invariants, construct {concat,close,switch,dn}, color,
homcount, fuzz.  Exit codes: 0 success, 1 parse error, 2 invalid
configuration, 3 computation budget exceeded, 4 move-invariance failure.
JSON output carries ``"schema": 1`` and is byte-stable for identical runs.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import alexander, diagram, invariants, moves
from .diagram import GaussCodeError, parse_gauss, serialize_gauss
from .invariants import BudgetExceeded
from .laurent import LaurentPoly

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_CONFIG = 2
EXIT_BUDGET = 3
EXIT_UNSTABLE = 4

SCHEMA = 1


class ConfigError(ValueError):
    pass


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from exc
    return parse_gauss(text)


def _emit(args, payload, text_lines):
    if args.json:
        payload = {"schema": SCHEMA, **payload}
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _check_coeff_budget(matrix, max_bits):
    if max_bits is None:
        return
    for row in matrix.rows:
        for entry in row:
            coeffs = entry.terms.values() if isinstance(entry, LaurentPoly) else [entry]
            for c in coeffs:
                if abs(c).bit_length() > max_bits:
                    raise BudgetExceeded(f"coefficient exceeds {max_bits} bits")


def cmd_parse(args):
    d = _load(args.input)
    payload = {
        "kind": d.kind,
        "crossings": d.crossings,
        "arcs": d.arc_count,
        "code": serialize_gauss(d),
    }
    _emit(args, payload, [serialize_gauss(d), f"# {d.kind}, {d.crossings} crossings, {d.arc_count} arcs"])
    return EXIT_OK


def cmd_invariants(args):
    d = _load(args.input)
    payload = {"input": args.input, "quotient": args.quotient}
    lines = []
    wants_charpoly = args.charpoly is not None and len(args.charpoly) > 0
    if args.presentation:
        pres = alexander.tietze_eliminate(alexander.extended_presentation(d))
        payload["presentation"] = pres.to_json()
        lines.append(str(pres))
    if wants_charpoly:
        mat = invariants.quotient_pipeline(d, args.quotient)
        if args.t == "v1":
            mat = alexander.one_variable(mat)
        elif args.t == "diag":
            mat = alexander.diagonal_t(mat)
        _check_coeff_budget(mat, args.max_coeff_bits)
        entries = []
        for k in args.charpoly:
            value = invariants.char_poly(mat, k, max_minors=args.max_minors)
            entries.append({"k": k, "ring": mat.ring, "value": str(value)})
            lines.append(str(value))
        payload["charpoly"] = entries[0] if len(entries) == 1 else entries
    if args.det:
        if d.kind != diagram.LONG:
            raise ConfigError("--det requires a long diagram")
        det = invariants.determinant_long(d, max_minors=args.max_minors)
        payload["determinant"] = det
        lines.append(str(det))
    if args.color:
        reports = []
        for p in args.color:
            rep = invariants.coloring_count(d, p)
            reports.append({"p": p, "count": rep.count, "nontrivial": rep.nontrivial})
            lines.append(f"p={p}: {rep.count} colorings" + (" (nontrivial)" if rep.nontrivial else ""))
        payload["colorings"] = reports[0] if len(reports) == 1 else reports
    if not (args.presentation or wants_charpoly or args.det or args.color):
        raise ConfigError("nothing requested: use --charpoly/--det/--color/--presentation")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_construct(args):
    if args.op == "concat":
        if not args.other:
            raise ConfigError("concat requires two diagrams")
        out = diagram.concatenate(_load(args.input), _load(args.other))
    elif args.op == "close":
        out = diagram.close(_load(args.input))
    elif args.op == "switch":
        out = diagram.switch_all_crossings(_load(args.input))
    elif args.op == "dn":
        raw = args.n if args.n is not None else args.other
        try:
            n = int(raw)
        except (TypeError, ValueError):
            raise ConfigError("dn requires a winding count") from None
        if n < 1:
            raise ConfigError("dn requires a positive winding count")
        out = diagram.dn_family(_load(args.input), n)
    else:
        raise ConfigError(f"unknown construction {args.op!r}")
    text = serialize_gauss(out)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n" if text else text)
    else:
        _emit(args, {"code": text, "crossings": out.crossings}, [text])
    return EXIT_OK


def cmd_color(args):
    d = _load(args.input)
    reports = []
    lines = []
    for p in args.p:
        rep = invariants.coloring_count(d, p)
        item = {"p": p, "count": rep.count, "nontrivial": rep.nontrivial}
        if args.matrix:
            item["matrix"] = [list(r) for r in rep.matrix]
        reports.append(item)
        lines.append(f"p={p}: {rep.count} colorings" + (" (nontrivial)" if rep.nontrivial else ""))
    _emit(args, {"input": args.input, "colorings": reports[0] if len(reports) == 1 else reports}, lines)
    return EXIT_OK


def cmd_homcount(args):
    d = _load(args.input)
    mat = invariants.quotient_pipeline(d, args.quotient)
    mat = alexander.one_variable(mat) if args.t == "v1" else alexander.diagonal_t(mat)
    count = invariants.hom_count_to_cyclic(mat, args.p, args.s)
    _emit(
        args,
        {"input": args.input, "p": args.p, "s": args.s, "quotient": args.quotient, "count": count},
        [str(count)],
    )
    return EXIT_OK


def cmd_fuzz(args):
    d = _load(args.input)
    cap = args.max_crossings if args.max_crossings is not None else d.crossings + 6
    baseline = invariants.invariant_profile(d, max_minors=args.max_minors)
    walks = []
    for w in range(args.walks):
        seed = args.seed + w
        walked = moves.random_walk(d, seed, args.steps, max_crossings=cap)
        profile = invariants.invariant_profile(walked, max_minors=args.max_minors)
        if profile != baseline:
            drift = sorted(k for k in baseline if profile.get(k) != baseline[k])
            payload = {
                "input": args.input,
                "seed": seed,
                "steps": args.steps,
                "stable": False,
                "changed": drift,
            }
            _emit(args, payload, [f"INVARIANCE FAILURE at seed {seed}: {', '.join(drift)}"])
            return EXIT_UNSTABLE
        walks.append(seed)
    payload = {
        "input": args.input,
        "seeds": walks,
        "steps": args.steps,
        "stable": True,
    }
    _emit(args, payload, ["OK (invariants stable)"])
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="vka",
        description="Alexander-type invariants of long and closed virtual knots from Gauss codes.",
    )
    parser.add_argument("--json", action="store_true", help="emit a JSON report")
    parser.add_argument("--max-minors", type=int, default=invariants.DEFAULT_MINOR_BUDGET,
                        help="abort (exit 3) beyond this many minor evaluations")
    parser.add_argument("--max-coeff-bits", type=int, default=None,
                        help="abort (exit 3) when a coefficient exceeds this bit length")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="validate and normalize a Gauss code")
    p.add_argument("input")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("invariants", help="characteristic polynomials, determinant, colorings")
    p.add_argument("input")
    p.add_argument("--charpoly", type=int, action="append", metavar="K",
                   help="characteristic polynomial of the K-th ideal (repeatable)")
    p.add_argument("--quotient", choices=["none", "end-minus", "end-plus", "ends"], default="none")
    p.add_argument("--t", choices=["uv", "v1", "diag"], default="uv",
                   help="coefficients: two-variable, v=1, or u=v=t")
    p.add_argument("--det", action="store_true", help="knot determinant")
    p.add_argument("--color", type=int, action="append", metavar="P", help="coloring count mod P")
    p.add_argument("--presentation", action="store_true", help="print the eliminated presentation")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("construct", help="concatenate, close, switch, or wind diagrams")
    p.add_argument("op", choices=["concat", "close", "switch", "dn"])
    p.add_argument("input")
    p.add_argument("other", nargs="?", help="second diagram (concat)")
    p.add_argument("n", nargs="?", type=int, help="winding count (dn)")
    p.add_argument("-o", "--output", help="write the result to a file")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("color", help="coloring report for one or more moduli")
    p.add_argument("input")
    p.add_argument("-p", type=int, action="append", required=True, help="modulus (repeatable)")
    p.add_argument("--matrix", action="store_true", help="include the coloring matrix (JSON)")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("homcount", help="count module maps to Z/p with t acting as s")
    p.add_argument("input")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-s", type=int, required=True)
    p.add_argument("--quotient", choices=["none", "end-minus", "end-plus", "ends"], default="none")
    p.add_argument("--t", choices=["v1", "diag"], default="diag")
    p.set_defaults(func=cmd_homcount)

    p = sub.add_parser("fuzz", help="seeded move walks, checking invariant stability")
    p.add_argument("input")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--steps", type=int, default=50)
    p.add_argument("--walks", type=int, default=1)
    p.add_argument("--max-crossings", type=int, default=None)
    p.set_defaults(func=cmd_fuzz)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GaussCodeError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ConfigError, ValueError, KeyError) as exc:
        print(f"invalid configuration: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
