"""
Command line front end.

Every command prints one JSON document on stdout and, unless ``--quiet``,
a short human summary on stderr.  Exit status: 0 pass, 1 violation,
2 input error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Optional

import numpy as np

from . import acceptance, constructions, pentagon as pg
from .geom import perimeter, symmetry_center
from .io import dumps, polygon_to_dict, read_polygon, write_polygon, write_svg
from .search import SearchConfig, centsym_deficit_search, conjecture_search, minimize_delta_perimeter
from .strut import has_delta_property, has_delta_s_property, side_has_strut

EXIT = {"pass": 0, "violation": 1, "input_error": 2}


class InputError(Exception):
    pass


def _emit(status: str, payload: dict, args, summary: str = "") -> int:
    doc = {"status": status, **payload}
    sys.stdout.write(dumps(doc) + "\n")
    if summary and not getattr(args, "quiet", False):
        sys.stderr.write(summary.rstrip("\n") + "\n")
    return EXIT[status]


# -- commands -------------------------------------------------------------------

def cmd_verify_all(args) -> int:
    prof = acceptance.DEFAULT_PROFILE
    if args.profile:
        try:
            prof = acceptance.load_profile(args.profile)
        except (OSError, ValueError, TypeError) as exc:
            raise InputError(f"cannot read tolerance profile {args.profile}: {exc}") from None
    only = None
    if args.only:
        try:
            only = [int(s) for s in args.only.split(",") if s.strip()]
        except ValueError:
            raise InputError(f"--only expects comma separated criterion numbers, got {args.only!r}") from None
        bad = [k for k in only if k not in acceptance.CRITERIA]
        if bad:
            raise InputError(f"unknown criteria {bad}; valid: 1..{len(acceptance.CRITERIA)}")
    results = acceptance.run_all(prof, only)
    failed = [f"{r.number}:{c.name}" for r in results for c in r.failures()]
    status = "pass" if not failed else "violation"
    payload = {
        "profile": {"eps_geom": prof.tol.eps_geom, "eps_contains": prof.tol.eps_contains,
                    "eps_check": prof.tol.eps_check, "cap": prof.cap},
        "criteria": [r.to_dict() for r in results],
        "failures": failed,
    }
    return _emit(status, payload, args, acceptance.format_table(results))


def cmd_check(args) -> int:
    try:
        P = read_polygon(args.input)
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        raise InputError(f"{args.input}: {exc}") from None
    if not args.l > 0:
        raise InputError("--l must be positive")
    if len(P) < 3:
        raise InputError(f"{args.input}: need at least 3 vertices, got {len(P)}")
    rep = has_delta_property(P, args.l)
    sym = None
    c = symmetry_center(P)
    if c is not None and np.hypot(*c) <= 1e-9:
        sym = has_delta_s_property(P).to_dict()
    payload = {"polygon": polygon_to_dict(P), "l": args.l, "perimeter": perimeter(P),
               "delta": rep.to_dict(), "delta_s": sym}
    summary = (f"Delta(l={args.l}): {'holds' if rep.holds else 'fails'}"
               + ("" if rep.holds else f" (failing sides {list(rep.failing_sides)})"))
    return _emit("pass" if rep.holds else "violation", payload, args, summary)


def cmd_pentagon(args) -> int:
    try:
        p = pg.PentagonParams(args.alpha, args.beta, args.gamma)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    pts = pg.pentagon_points(p)
    P = pg.build_pentagon(p)
    forms = {}
    for f in pg.Form:
        try:
            forms[f.value] = pg.perimeter_closed_form(p, f)
        except ValueError:
            forms[f.value] = None
    try:
        grad = list(pg.gradient_closed_form(p))
    except ValueError:
        grad = None
    # the sides AB and BC carry the struts E and F by construction
    struts = []
    b = int(np.argmin(np.hypot(*P.vertices.T)))
    for i in ((b - 1) % len(P), b) if len(P) >= 3 else ():
        cert = side_has_strut(P, i)
        struts.append({"side": [list(map(float, s)) for s in P.side(i)],
                       "apex": None if cert is None else list(map(float, cert.apex))})
    payload = {
        "params": p.to_dict(),
        "theta": p.theta,
        "substitution": list(p.substitution()),
        "points": {k: v.tolist() for k, v in pts.items()},
        "closed_forms": forms,
        "geometric_perimeter": perimeter(P),
        "convex_position": pg.in_convex_position(p),
        "in_omega": p.in_omega(),
        "struts": struts,
        "gradient": grad,
        "equality_pattern": pg.equality_pattern(p),
    }
    summary = f"perimeter {forms['A']!r} (geometric {perimeter(P)!r})"
    return _emit("pass", payload, args, summary)


def constants_payload() -> dict:
    k = pg.extremal_constants()
    return {
        **k.to_dict(),
        "z1_quartic_roots": sorted(pg.z1_quartic_roots()),
        "v3_roots": pg.v3_roots(),
        "case1": [c.to_dict() for c in pg.case1_critical_points()],
        "case2": [c.to_dict() for c in pg.case2_critical_points()],
    }


def cmd_constants(args) -> int:
    payload = constants_payload()
    summary = (f"theta0 = {payload['theta0']!r}\nalpha0 = {payload['alpha0']!r}\n"
               f"case-1 perimeters: {[c['perimeter'] for c in payload['case1']]}\n"
               f"case-2 perimeters: {[c['perimeter'] for c in payload['case2']]}")
    return _emit("pass", payload, args, summary)


def cmd_construct(args) -> int:
    params = {"n": args.n, "eps": args.eps, "alpha": args.alpha, "a": args.a,
              "scale": args.scale, "side": args.side}
    try:
        P = constructions.construct(args.kind, **params)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    rep = has_delta_property(P) if len(P) >= 3 else None
    if args.out:
        write_polygon(P, args.out)
    if args.svg:
        struts = []
        if args.show_struts and rep is not None:
            for c in rep.certificates:
                A, B = P.side(c.side_index)
                struts.append((A, B, c.apex))
        write_svg(P, args.svg, struts)
    payload = {"kind": args.kind, "parameters": {k: v for k, v in params.items() if v is not None},
               "polygon": polygon_to_dict(P), "perimeter": perimeter(P),
               "delta": None if rep is None else rep.to_dict()}
    return _emit("pass", payload, args, f"{args.kind}: {len(P)} vertices, perimeter {perimeter(P)!r}")


def cmd_search(args) -> int:
    try:
        cfg = SearchConfig(seed=args.seed, iterations=args.iters, restarts=args.restarts,
                           n_vertices=args.n)
        if args.objective == "min-delta":
            rep = minimize_delta_perimeter(cfg)
        elif args.objective == "centsym":
            rep = centsym_deficit_search(cfg)
        else:
            rep = conjecture_search(args.m, cfg)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    doc = rep.to_dict()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(dumps(doc) + "\n")
    if args.trace:
        with open(args.trace, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["iteration", "value", "feasible"])
            for it, val, feas in rep.trace:
                w.writerow([it, format(val, ".17g"), str(feas).lower()])
    status = "violation" if rep.violations else "pass"
    summary = (f"{rep.objective}: best {rep.best_value!r} (bound {rep.bound}), "
               f"feasible={rep.feasible}, violations={len(rep.violations)}")
    return _emit(status, doc, args, summary)


# -- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="strutgeo", description="Strut geometry verification tools.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--quiet", action="store_true", help="no human summary on stderr")
        sp.set_defaults(func=fn)
        return sp

    sp = add("verify-all", cmd_verify_all, "run the acceptance suite")
    sp.add_argument("--profile", help="JSON tolerance profile")
    sp.add_argument("--only", help="comma separated criterion numbers, e.g. 5,6,7")

    sp = add("check", cmd_check, "check a polygon JSON file for the strut properties")
    sp.add_argument("input")
    sp.add_argument("--l", type=float, default=1.0)

    sp = add("pentagon", cmd_pentagon, "analyse the parametrised pentagon")
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--beta", type=float, required=True)
    sp.add_argument("--gamma", type=float, required=True)

    add("constants", cmd_constants, "extremal constants and critical points")

    sp = add("construct", cmd_construct, "build a named polygon family")
    sp.add_argument("kind", choices=[k.value for k in constructions.Kind])
    for flag, typ in (("--n", int), ("--eps", float), ("--alpha", float), ("--a", float),
                      ("--scale", float), ("--side", float)):
        sp.add_argument(flag, type=typ)
    sp.add_argument("--out", help="write polygon JSON here")
    sp.add_argument("--svg", help="write an SVG drawing here")
    sp.add_argument("--show-struts", action="store_true")

    sp = add("search", cmd_search, "seeded annealing search")
    sp.add_argument("objective", choices=["min-delta", "centsym", "conjecture"])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, default=2)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--iters", type=int, default=200_000)
    sp.add_argument("--restarts", type=int, default=1)
    sp.add_argument("--out", help="write the report JSON here")
    sp.add_argument("--trace", help="write iteration,value,feasible CSV here")
    return ap


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        return _emit("input_error", {"error": str(exc)}, args, f"error: {exc}")
    except OSError as exc:
        return _emit("input_error", {"error": str(exc)}, args, f"error: {exc}")


if __name__ == "__main__":
    sys.exit(main())
