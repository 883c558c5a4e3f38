"""Command line interface: ``python -m fano95 <command>`` or ``fano95 <command>``.

Exit codes: 0 success, 1 usage error, 2 validation mismatch, 3 data error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import registry
from .enumeration import DEFAULT_MAX_DEGREE, DEFAULT_MAX_WEIGHT, enumerate_families
from .fibrations import N19_COEFFICIENTS, density_witness_n19
from .groups import Presentation, equal, order, parse_word, reduce
from .singularities import NonTerminalError, QuotientSingularity, blowup_chain
from .weights import WeightSystem

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_DATA = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _emit(args, payload, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _records(args):
    return registry.load_registry(args.table) if args.table else registry.load_registry()


def cmd_list(args) -> int:
    recs = _records(args)
    lines = [f"{'N':>3}  {'d':>3}  {'weights':<18} {'-K^3':>8}  {'group':<6} {'elliptic':<20} k3"]
    for r in recs:
        lines.append(f"{r.n:>3}  {r.ws.degree:>3}  {','.join(map(str, r.ws.weights)):<18} "
                     f"{_frac(r.minus_k_cubed):>8}  {r.presentation.tag:<6} {r.elliptic.kind.value:<20} {r.k3.value}")
    _emit(args, [r.to_json() for r in recs], "\n".join(lines))
    return EXIT_OK


def _family(args):
    try:
        return registry.family(args.n, _records(args))
    except KeyError:
        raise UsageError(f"no family N={args.n}") from None


def cmd_show(args) -> int:
    r = _family(args)
    e = r.elliptic
    text = "\n".join([
        f"N={r.n}: {r.ws}",
        f"  -K^3          {_frac(r.minus_k_cubed)}",
        f"  basket        {r.basket}",
        f"  presentation  {r.presentation.tag} ({r.presentation.generators} generators)",
        f"  elliptic      {e.kind.value}" + (" [several structures]" if e.multiple_structures else "")
        + (" [unique structure]" if e.unique_structure else ""),
        f"  K3 route      {r.k3.value}",
        f"  dense         {'yes' if r.potentially_dense else 'no'}",
    ])
    _emit(args, r.to_json(), text)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    try:
        found = enumerate_families(args.max_weight, args.max_degree)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = [{"degree": ws.degree, "weights": list(ws.weights)} for ws in found]
    text = "\n".join(f"{i:>3}  {ws}" for i, ws in enumerate(found, 1)) + f"\n{len(found)} weight systems"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_classify(args) -> int:
    try:
        ws = WeightSystem(parse_word(args.weights), args.degree)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rep = registry.classify(ws, _records(args) if args.table else None)
    if rep.in_classification:
        d = rep.derived or rep.tabulated
        text = (f"{ws}: family N={rep.n}\n  presentation {d.get('presentation')}, elliptic {d.get('elliptic')}, "
                f"k3 {d.get('k3')}, dense {d.get('dense')}")
        if rep.mismatches:
            text += f"\n  MISMATCHES: {', '.join(rep.mismatches)}"
    else:
        text = f"{ws}: not in the classification ({rep.verdict.describe()})"
    _emit(args, rep.to_json(), text)
    return EXIT_MISMATCH if rep.mismatches else EXIT_OK


def cmd_basket(args) -> int:
    r = _family(args)
    payload = {"N": r.n, "basket": r.to_json()["basket"], "basket_string": r.basket.to_string()}
    _emit(args, payload, f"N={r.n}: {r.basket}")
    return EXIT_OK


def cmd_blowup(args) -> int:
    r = _family(args)
    try:
        chain = [QuotientSingularity.parse(t) for t in args.chain.split(",") if t.strip()]
        values = blowup_chain(r.ws, chain)
    except (ValueError, NonTerminalError) as exc:
        raise UsageError(str(exc)) from None
    payload = {"N": r.n, "chain": [str(s) for s in chain], "values": [_frac(v) for v in values]}
    text = f"N={r.n}: -K^3 = {_frac(values[0])}"
    for s, v in zip(chain, values[1:]):
        text += f"\n  blow up {s}: {_frac(v)}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_group(args) -> int:
    p = Presentation.from_tag(args.presentation)
    try:
        if args.reduce is not None:
            e = reduce(p, args.reduce)
            payload, text = e.to_json(), str(e)
        elif args.equal is not None:
            same = equal(p, args.equal[0], args.equal[1])
            payload, text = {"presentation": p.tag, "equal": same}, str(same).lower()
        else:
            o = order(p, args.order)
            shown = "infinity" if o == math.inf else str(o)
            payload, text = {"presentation": p.tag, "order": shown}, shown
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, payload, text)
    return EXIT_OK


def cmd_validate(args) -> int:
    recs = registry.load_registry(args.table, strict=False) if args.table else registry.load_registry(strict=False)
    reports = registry.validate_all(recs)
    bad = [r for r in reports if r.mismatches]
    payload = {"families": len(recs), "clean": len(reports) - len(bad), "reports": [r.to_json() for r in bad]}
    lines = [f"N={r.n}: {', '.join(r.mismatches)}" for r in bad]
    lines.append(f"{len(reports) - len(bad)}/{len(reports)} reports clean")
    _emit(args, payload, "\n".join(lines))
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_witness(args) -> int:
    values = [t for t in args.coeffs.split(",") if t.strip()]
    try:
        w = density_witness_n19([Fraction(v) for v in values])
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from None
    payload = {"lambda": _frac(w.lam), "mu": _frac(w.mu), "cubic": [_frac(c) for c in w.cubic],
               "double_root": _frac(w.double_root)}
    text = (f"lambda = {_frac(w.lam)}, mu = {_frac(w.mu)}\n"
            f"f = x5 (x5 + {_frac(-w.double_root)})^2")
    _emit(args, payload, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--table", help="family table (default: shipped table or $FANO95_TABLE)")
    parser = _Parser(prog="fano95", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("list", parents=[common], help="table summary").set_defaults(func=cmd_list)
    p = sub.add_parser("show", parents=[common], help="one family")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_show)
    p = sub.add_parser("enumerate", parents=[common], help="enumerate admissible weight systems")
    p.add_argument("--max-weight", type=int, default=DEFAULT_MAX_WEIGHT)
    p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    p.set_defaults(func=cmd_enumerate)
    p = sub.add_parser("classify", parents=[common], help="classify a weight system")
    p.add_argument("--weights", required=True, help="1,a2,a3,a4,a5")
    p.add_argument("--degree", type=int)
    p.set_defaults(func=cmd_classify)
    p = sub.add_parser("basket", parents=[common], help="basket of a family")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_basket)
    p = sub.add_parser("blowup", parents=[common], help="-K^3 along Kawamata blow-ups")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--chain", default="", help='"r:a,r:a,..."')
    p.set_defaults(func=cmd_blowup)
    p = sub.add_parser("group", parents=[common], help="word problem")
    p.add_argument("--presentation", required=True, choices=[x.tag for x in Presentation])
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--reduce", metavar="WORD")
    g.add_argument("--equal", nargs=2, metavar="WORD")
    g.add_argument("--order", metavar="WORD")
    p.set_defaults(func=cmd_group)
    sub.add_parser("validate", parents=[common], help="cross-check the table").set_defaults(func=cmd_validate)
    p = sub.add_parser("witness-n19", parents=[common], help="density witness for N=19")
    p.add_argument("--coeffs", required=True, help=",".join(N19_COEFFICIENTS))
    p.set_defaults(func=cmd_witness)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"fano95: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (registry.RegistryError, OSError) as exc:
        print(f"fano95: data error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
