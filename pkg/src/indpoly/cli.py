"""Command-line entry point: ``indpoly {poly,analyze,transform,verify,corpus}``.

Results go to stdout, diagnostics to stderr.  Exit status is 0 when nothing
failed, 1 when a check failed, 2 on bad input.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys

from . import analysis
from .calculus import (Corona, corona_skeleton, eval_with_order, forward_transform,
                       inverse_transform)
from .corpus import run_corpus
from .exprlang import ParseError, parse, render
from .poly import IntPoly, unimodality

FORMATS = ("plain", "json", "csv")


def _parse_expr(text: str):
    try:
        return parse(text)
    except ParseError as exc:
        print(f"parse error: {exc}\n  {text}\n  {' ' * exc.position}^", file=sys.stderr)
        raise SystemExit(2)


def _coeff_list(text: str) -> IntPoly:
    try:
        return IntPoly(int(c) for c in text.split(",") if c.strip())
    except ValueError:
        print(f"bad coefficient list: {text!r}", file=sys.stderr)
        raise SystemExit(2)


def _emit_csv(p: IntPoly) -> None:
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["k", "coefficient"])
    for k, a in enumerate(p.coeffs):
        w.writerow([k, a])


def cmd_poly(args) -> int:
    e = _parse_expr(args.expr)
    p, n = eval_with_order(e)
    mode = unimodality(p)
    window, ok = None, True
    skeleton = corona_skeleton(e)
    if skeleton is not None:
        rep = analysis.report_from_skeleton_poly(*eval_with_order(skeleton))
        window = rep.window
        ok = rep.ok
    if args.fmt == "csv":
        _emit_csv(p)
    elif args.fmt == "json":
        print(json.dumps({"expr": render(e), "n": n, "coeffs": p.to_json(), "alpha": p.degree,
                          "mode": list(mode.mode_set), "window": list(window) if window else None,
                          "unimodal": mode.unimodal, "ok": ok}))
    else:
        print(p)
        print(f"degree: {p.degree}")
        print(f"vertices: {n}")
        print(f"stable sets: {p.evaluate(1)}")
        print(f"unimodal: {'yes' if mode.unimodal else 'no'}  mode: {list(mode.mode_set)}")
    return 0 if ok else 1


def cmd_analyze(args) -> int:
    if args.skeleton is not None:
        skeleton = _parse_expr(args.skeleton)
    elif args.expr is not None:
        skeleton = corona_skeleton(_parse_expr(args.expr))
        if skeleton is None:
            print("analyze needs corona(<skeleton>) or --skeleton <expr>", file=sys.stderr)
            return 2
    else:
        print("analyze needs an expression or --skeleton", file=sys.stderr)
        return 2
    rep = analysis.analyze_star(skeleton)
    if args.fmt == "json":
        d = rep.to_dict()
        print(json.dumps({"expr": render(Corona(skeleton)), "n": d["n"], "coeffs": d["coeffs"],
                          "alpha": d["alpha"], "mode": d["mode"], "window": d["window"],
                          "unimodal": d["unimodal"], "ok": d["ok"],
                          "chain_ok": d["chain_ok"], "wellcovered_star": d["wellcovered_star"],
                          "very_wellcovered_star": d["very_wellcovered_star"]}))
    elif args.fmt == "csv":
        _emit_csv(rep.star_poly)
    else:
        print(f"skeleton: {render(skeleton)}")
        print(f"n: {rep.n}  alpha: {rep.alpha}")
        print(f"I(G*): {rep.star_poly}")
        print(f"unimodal: {'yes' if rep.mode.unimodal else 'no'}")
        print(f"mode: {', '.join(map(str, rep.mode.mode_set))}")
        if rep.window is None:
            print(f"window: not covered (alpha={rep.alpha}); (n+1)//2 = {(rep.n + 1) // 2}")
        else:
            print(f"window: [{rep.window[0]}, {rep.window[1]}]")
        if rep.very_wellcovered_star is not None:
            print(f"G* very well-covered: {'yes' if rep.very_wellcovered_star else 'no'}")
        print(f"verdict: {'OK' if rep.ok else 'VIOLATION'}")
    return 0 if rep.ok else 1


def cmd_transform(args) -> int:
    s = _coeff_list(args.coeffs)
    fn = forward_transform if args.direction == "forward" else inverse_transform
    try:
        t = fn(s, args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.fmt == "json":
        print(json.dumps(t.to_json()))
    elif args.fmt == "csv":
        _emit_csv(t)
    else:
        print(",".join(t.to_json()))
    return 0


def cmd_verify(args) -> int:
    try:
        if args.sample is not None:
            if args.seed is None:
                print("sampling needs --seed", file=sys.stderr)
                return 2
            rep = analysis.sweep_sample(args.n_max, args.sample, args.seed, args.alpha,
                                        n_min=args.n_min)
        else:
            rep = analysis.sweep_exhaustive(args.n_max, args.alpha, allow_n7=args.allow_n7)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.fmt == "json":
        print(rep.to_json())
    elif args.fmt == "csv":
        sys.stdout.write(rep.to_csv())
    else:
        print(rep.summary())
    return 1 if rep.violations else 0


def cmd_corpus(args) -> int:
    rep = run_corpus()
    print(rep.to_json() if args.fmt == "json" else rep.to_text())
    return 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="indpoly", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="independence polynomial of an expression")
    p.add_argument("expr")
    p.add_argument("--fmt", choices=FORMATS, default="plain")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("analyze", help="unimodality and mode window of I(G*)")
    p.add_argument("expr", nargs="?", help="corona(<skeleton>)")
    p.add_argument("--skeleton")
    p.add_argument("--fmt", choices=FORMATS, default="plain")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("transform", help="map I(G) to I(G*) coefficients or back")
    p.add_argument("direction", choices=("forward", "inverse"))
    p.add_argument("n", type=int, help="order of the skeleton")
    p.add_argument("coeffs", help="comma-separated, lowest degree first")
    p.add_argument("--fmt", choices=FORMATS, default="plain")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("verify", help="sweep skeletons and check mode windows")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--n-min", type=int, default=1, help="smallest order when sampling")
    how = p.add_mutually_exclusive_group()
    how.add_argument("--exhaustive", action="store_true", help="all labelled graphs (default)")
    how.add_argument("--sample", type=int, metavar="COUNT", help="seeded random skeletons")
    p.add_argument("--seed", type=int)
    p.add_argument("--alpha", type=int, action="append",
                   help="only check skeletons with this stability number (repeatable)")
    p.add_argument("--allow-n7", action="store_true", help="permit exhaustive n=7 (2^21 graphs)")
    p.add_argument("--fmt", choices=FORMATS, default="plain")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corpus", help="recompute every golden polynomial")
    p.add_argument("--fmt", choices=("plain", "json"), default="plain")
    p.set_defaults(func=cmd_corpus)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
