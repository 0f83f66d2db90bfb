"""Batch command-line front end.

Every command prints a human-readable report by default and compact JSON with
``--json``.  Exit status: 0 on success, 1 on a domain error, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classification import (
    brill_noether_rho,
    is_globally_generated,
    is_limit_of_trivial,
    simple_decomposition,
    split_criterion,
)
from .curve import Curve, canonical_divisor, parse_curve, parse_divisor
from .errors import DomainError
from .pairing import Differential, koszul_pair, u2e_functional
from .picard import DivisorClass, class_of, parse_class
from .plane import prop4_certificate
from .riemann_roch import function_divisor, parse_function, rr_space
from .survey import render_survey, run_survey


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


class UsageError(Exception):
    pass


def _curve(args) -> Curve:
    if args.curve is None:
        raise UsageError("--curve is required")
    return parse_curve(args.curve)


def _divisor(args, curve):
    if args.divisor is None:
        raise UsageError("--divisor is required")
    return parse_divisor(curve, args.divisor)


def _class(args, curve) -> DivisorClass:
    if args.cls is not None:
        return parse_class(curve, args.cls)
    if args.divisor is not None:
        return class_of(curve, parse_divisor(curve, args.divisor))
    raise UsageError("--class or --divisor is required")


def _function(args, curve, name):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name} is required")
    return parse_function(curve, value)


def _int(args, name) -> int:
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name} is required")
    return value


# ------------------------------------------------------------------ commands


def cmd_h0(args):
    curve = _curve(args)
    basis = rr_space(curve, _divisor(args, curve))
    return basis.to_json(), str(basis.dimension)


def cmd_divisor_of(args):
    curve = _curve(args)
    D = function_divisor(curve, _function(args, curve, "function"))
    return D.to_json(), repr(D)


def cmd_decompose(args):
    curve = _curve(args)
    dec = simple_decomposition(curve, _divisor(args, curve))
    return dec.to_json(), f"L = H^{dec.k}({dec.D!r})"


def cmd_gg(args):
    curve = _curve(args)
    gg = is_globally_generated(curve, _divisor(args, curve))
    return {"globally_generated": gg}, "globally generated" if gg else "not globally generated"


def cmd_classify_limit(args):
    curve = _curve(args)
    v = is_limit_of_trivial(curve, _class(args, curve))
    text = f"is_limit={str(v.is_limit).lower()} reason={v.reason}"
    if "k" in v.to_json():
        text += f" k={v.k}"
    return v.to_json(), text


def cmd_ext_split(args):
    curve = _curve(args)
    splits = split_criterion(curve, _class(args, curve), args.seed)
    return {"splits": splits}, "every extension splits" if splits else "h^1(L^2) != 0"


def cmd_koszul_pair(args):
    curve = _curve(args)
    D_L = _divisor(args, curve)
    s, t = _function(args, curve, "s"), _function(args, curve, "t")
    if args.w is not None:
        ws = [parse_function(curve, args.w)]
    else:
        ws = list(rr_space(curve, canonical_divisor(curve) + 2 * D_L).elements)
    values = [int(koszul_pair(curve, D_L, s, t, Differential(w))) for w in ws]
    return {"values": values}, " ".join(str(v) for v in values)


def cmd_u2e(args):
    curve = _curve(args)
    D_L = _divisor(args, curve)
    s, t, u = (_function(args, curve, n) for n in ("s", "t", "u"))
    report = u2e_functional(curve, D_L, s, t, u)
    text = f"values={[int(v) for v in report.values]} splits={str(report.splits).lower()}"
    return report.to_json(), text


def cmd_prop4(args):
    cert = prop4_certificate(_int(args, "d"), _int(args, "k"))
    return cert.to_json(), cert.render()


def cmd_rho(args):
    rho = brill_noether_rho(_int(args, "g"), _int(args, "r"), _int(args, "d"))
    return {"rho": rho}, str(rho)


def cmd_survey(args):
    genera = tuple(int(g) for g in args.genera.split(","))
    report = run_survey(seed=args.seed, genera=genera, p=args.p, trials=args.trials)
    return report, render_survey(report)


COMMANDS = {
    "h0": (cmd_h0, "dimension and basis of L(D)"),
    "divisor-of": (cmd_divisor_of, "divisor of a rational function"),
    "decompose": (cmd_decompose, "write L = H^k(D) with D simple"),
    "gg": (cmd_gg, "is |D| base-point free"),
    "classify-limit": (cmd_classify_limit, "is L + L^-1 a limit of the trivial bundle"),
    "ext-split": (cmd_ext_split, "does h^1(L^2) vanish"),
    "koszul-pair": (cmd_koszul_pair, "residue pairing of the Koszul class"),
    "u2e": (cmd_u2e, "pairings of u^2 e against H^0(K - 2L)"),
    "prop4": (cmd_prop4, "dimension certificate for plane curves"),
    "rho": (cmd_rho, "Brill-Noether number"),
    "survey": (cmd_survey, "randomized invariant sweep"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trivial-limits", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--json", action="store_true", help="compact JSON output")
        sp.add_argument("--seed", type=int, default=42 if name == "survey" else 0)
        if name in ("prop4", "rho", "survey"):
            continue
        sp.add_argument("--curve", help='e.g. {"p":7,"f":[0,-1,0,0,0,1]}')
        sp.add_argument("--divisor", help='e.g. [["inf",2],[[0,0],1]]')
        if name in ("classify-limit", "ext-split"):
            sp.add_argument("--class", dest="cls", help='"H", "H^k", "K" or {"u":..,"v":..,"degree":..}')
        if name == "divisor-of":
            sp.add_argument("--function", help='{"a":[..],"b":[..],"c":[..]} for (a + y b)/c')
        if name in ("koszul-pair", "u2e"):
            sp.add_argument("--s")
            sp.add_argument("--t")
        if name == "koszul-pair":
            sp.add_argument("--w", help="coefficient of dx/y; default: a basis of H^0(K + 2 D_L)")
        if name == "u2e":
            sp.add_argument("--u")
    for name in ("prop4", "rho"):
        sp = sub.choices[name]
        sp.add_argument("--d", type=int)
        if name == "prop4":
            sp.add_argument("--k", type=int)
        else:
            sp.add_argument("--g", type=int)
            sp.add_argument("--r", type=int)
    sp = sub.choices["survey"]
    sp.add_argument("--p", type=int, default=101)
    sp.add_argument("--genera", default="2,3,4")
    sp.add_argument("--trials", type=int, default=200)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    handler = COMMANDS[args.command][0]
    try:
        obj, text = handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=err)
        return 1
    print(dumps(obj) if args.json else text, file=out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
