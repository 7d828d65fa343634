"""Batch command-line front end.

Four subcommands, all single-shot and deterministic on stdout (timing goes
to stderr so identical invocations stay byte-identical):

* ``enum {infty,plus,manin} M``       -- emit a representative as JSON;
* ``check {compat,transpose,product,membership}`` -- exact decisions,
  one JSON report line per parameter, exit 0 pass / 1 fail / 2 bad input;
* ``numeric {three-term,hecke-apply,periodic-action,arg-identity}`` --
  residual reports against per-check tolerances;
* ``graph M --bound B [--cycles K] [--label-rules]`` -- DOT export or
  cycle / label-rule reports.

Ranges such as ``--m 1..30`` expand inclusively; the process exit status is
the worst result across the range.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from .matrices import GradingError, ProjMatrix
from .sums import FormalSum
from .hecke import hecke_infty, hecke_manin, hecke_plus
from .congruence import (
    compatibility_check,
    divide_one_minus_t_tp,
    product_formula_check,
    transpose_identity_check,
)
from .graph import build_graph, find_cycles, scan_label_rules, to_dot
from .numerics import (
    CoeffSeq,
    DerivedPeriod,
    DomainError,
    PeriodicFunction,
    ReciprocalPeriod,
    apply_hecke_like,
    arg_identity_check,
    grid_points,
    periodic_action_residual,
    three_term_residual,
)

USAGE_ERROR = 2

_HECKE_KINDS = {"infty": hecke_infty, "plus": hecke_plus, "manin": hecke_manin}


class InputError(Exception):
    """Bad user input; maps to exit code 2."""


def _parse_range(text):
    try:
        if ".." in text:
            lo, hi = text.split("..")
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise InputError("bad range %r (use N or A..B)" % (text,))
    if lo < 1 or hi < lo:
        raise InputError("bad range %r" % (text,))
    return list(range(lo, hi + 1))


def _parse_complex(text):
    try:
        parts = [float(p) for p in text.split(",")]
    except ValueError:
        raise InputError("bad complex %r (use re or re,im)" % (text,))
    if len(parts) == 1:
        return complex(parts[0], 0.0)
    if len(parts) == 2:
        return complex(parts[0], parts[1])
    raise InputError("bad complex %r" % (text,))


def _parse_grid(text):
    try:
        re0, re1, im0, im1, steps = text.split(",")
        return grid_points(float(re0), float(re1), float(im0), float(im1), int(steps))
    except (ValueError, TypeError):
        raise InputError("bad grid %r (use re0,re1,im0,im1,steps)" % (text,))


def _load_coeffs(path):
    try:
        with open(path) as fh:
            obj = json.load(fh)
        entries = {int(n): complex(v[0], v[1]) for n, v in obj["a"].items()}
        return CoeffSeq(obj["N"], entries)
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc))
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise InputError("bad coefficient file %s: %s" % (path, exc))


def _jsonable(value):
    if isinstance(value, complex):
        return [value.real, value.imag]
    return value


def _emit(report):
    print(json.dumps({k: _jsonable(v) for k, v in report.items()}, sort_keys=True))


# -- subcommands -----------------------------------------------------------


def _cmd_enum(args):
    print(_HECKE_KINDS[args.kind](args.m).dumps())
    return 0


def _cmd_check(args):
    worst = 0
    if args.name == "compat":
        builder = _HECKE_KINDS[args.cand]
        for m in _parse_range(args.m):
            ok = compatibility_check(m, builder(m))
            _emit({"check": "compat", "cand": args.cand, "m": m, "pass": ok})
            worst = max(worst, 0 if ok else 1)
    elif args.name == "transpose":
        for m in _parse_range(args.m):
            ok = transpose_identity_check(m)
            _emit({"check": "transpose", "m": m, "pass": ok})
            worst = max(worst, 0 if ok else 1)
    elif args.name == "product":
        for n in _parse_range(args.n):
            for m in _parse_range(args.m):
                ok = product_formula_check(n, m)
                _emit({"check": "product", "n": n, "m": m, "pass": ok})
                worst = max(worst, 0 if ok else 1)
    else:  # membership
        text = sys.stdin.read() if args.file is None else _read_file(args.file)
        try:
            xi = FormalSum.loads(text)
        except (ValueError, GradingError) as exc:
            raise InputError("bad formal sum: %s" % (exc,))
        if not xi.is_positive_support():
            raise InputError("membership input must have nonnegative support")
        witness = divide_one_minus_t_tp(xi)
        report = {
            "check": "membership",
            "m": xi.grade,
            "member": witness is not None,
        }
        if witness is not None:
            report["witness"] = witness.to_obj()
        _emit(report)
        worst = 0 if witness is not None else 1
    return worst


def _read_file(path):
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc))


def _numeric_psi(args):
    if args.psi == "reciprocal":
        s = complex(1.0)
        if args.s is not None and _parse_complex(args.s) != s:
            raise InputError("the reciprocal closed form is pinned to s = 1")
        return ReciprocalPeriod(), s
    if args.coeffs is None:
        raise InputError("--psi coeffs requires --coeffs FILE")
    if args.s is None:
        raise InputError("--psi coeffs requires --s re,im with Re s > 0")
    s = _parse_complex(args.s)
    return DerivedPeriod(PeriodicFunction(_load_coeffs(args.coeffs), s)), s


def _default_pts(domain, grid_arg):
    if grid_arg is not None:
        return _parse_grid(grid_arg)
    if domain == "cutplane":
        return grid_points(0.25, 2.25, -1.0, 1.0, 10)
    upper = grid_points(1.0, 2.2, 0.2, 0.5, 4)
    return upper + [z.conjugate() for z in upper]


def _cmd_numeric(args):
    if args.name == "three-term":
        psi, s = _numeric_psi(args)
        tol = args.tol if args.tol is not None else (1e-12 if args.psi == "reciprocal" else 1e-9)
        pts = _default_pts(psi.domain, args.grid)
        residual, bad = _guarded_residual(three_term_residual, psi, s, pts)
        report = {
            "check": "three-term",
            "psi": args.psi,
            "s": s,
            "points": len(pts),
            "max_residual": residual,
            "tol": tol,
            "pass": not bad and residual <= tol,
        }
        if bad:
            report["domain_errors"] = bad
        _emit(report)
        return 0 if report["pass"] else 1

    if args.name == "hecke-apply":
        psi, s = _numeric_psi(args)
        tol = args.tol if args.tol is not None else 1e-10
        pts = _default_pts(psi.domain, args.grid)
        for m in _parse_range(args.m):
            _, rep = apply_hecke_like(psi, m, s, pts)
            rep.update({"check": "hecke-apply", "psi": args.psi, "s": s, "tol": tol})
            rep["pass"] = rep["three_term_residual"] <= tol
            _emit(rep)
            if not rep["pass"]:
                return 1
        return 0

    if args.name == "periodic-action":
        if args.coeffs is None or args.s is None:
            raise InputError("periodic-action requires --coeffs FILE and --s re,im")
        coeffs = _load_coeffs(args.coeffs)
        s = _parse_complex(args.s)
        tol = args.tol if args.tol is not None else 1e-10
        pts = _default_pts("offreal", args.grid)
        worst = 0
        for m in _parse_range(args.m):
            residual = periodic_action_residual(m, coeffs, s, pts)
            ok = residual <= tol
            _emit(
                {
                    "check": "periodic-action",
                    "m": m,
                    "s": s,
                    "points": len(pts),
                    "max_residual": residual,
                    "tol": tol,
                    "pass": ok,
                }
            )
            worst = max(worst, 0 if ok else 1)
        return worst

    # arg-identity
    tol = args.tol if args.tol is not None else 1e-12
    rng = random.Random(args.seed)
    failures = 0
    done = 0
    while done < args.samples:
        entries = [rng.randint(0, args.max_entry) for _ in range(4)]
        if entries[0] * entries[3] - entries[1] * entries[2] < 1:
            continue
        z = complex(rng.uniform(-3, 3), rng.choice([1, -1]) * rng.uniform(0.05, 3))
        if not arg_identity_check(ProjMatrix(*entries), z, tol=tol):
            failures += 1
        done += 1
    _emit(
        {
            "check": "arg-identity",
            "samples": args.samples,
            "seed": args.seed,
            "failures": failures,
            "tol": tol,
            "pass": failures == 0,
        }
    )
    return 0 if failures == 0 else 1


def _guarded_residual(fn, psi, s, pts):
    worst = 0.0
    bad = []
    for z in pts:
        try:
            worst = max(worst, fn(psi, s, [z]))
        except DomainError:
            bad.append([z.real, z.imag])
    return worst, bad


def _cmd_graph(args):
    graph = build_graph(args.m, args.bound)
    worst = 0
    reported = False
    if args.cycles is not None:
        found = find_cycles(graph, args.cycles)
        counts = {"S-segment": 0, "U-triangle": 0, "other": 0}
        for cyc in found:
            counts[cyc.kind] += 1
        ok = counts["other"] == 0
        _emit(
            {
                "check": "cycles",
                "m": args.m,
                "bound": args.bound,
                "max_len": args.cycles,
                "s_segments": counts["S-segment"],
                "u_triangles": counts["U-triangle"],
                "other": counts["other"],
                "pass": ok,
            }
        )
        worst = max(worst, 0 if ok else 1)
        reported = True
    if args.label_rules:
        violations = scan_label_rules(graph)
        ok = not violations
        _emit(
            {
                "check": "label-rules",
                "m": args.m,
                "bound": args.bound,
                "violations": len(violations),
                "pass": ok,
            }
        )
        worst = max(worst, 0 if ok else 1)
        reported = True
    if not reported:
        print(to_dot(graph))
    return worst


def build_parser():
    parser = argparse.ArgumentParser(
        prog="heckeperiod",
        description="Exact Hecke-operator representatives on period functions: "
        "enumeration, congruence checks, graph export, numeric verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enum", help="emit a Hecke representative as JSON")
    p_enum.add_argument("kind", choices=sorted(_HECKE_KINDS))
    p_enum.add_argument("m", type=int)
    p_enum.set_defaults(func=_cmd_enum)

    p_check = sub.add_parser("check", help="exact congruence / membership checks")
    p_check.add_argument("name", choices=["compat", "transpose", "product", "membership"])
    p_check.add_argument("--m", default="1..10", help="grade or range A..B")
    p_check.add_argument("--n", default="1..6", help="left grade or range (product)")
    p_check.add_argument("--cand", choices=["plus", "manin"], default="plus")
    p_check.add_argument("--file", help="formal-sum JSON (membership; default stdin)")
    p_check.set_defaults(func=_cmd_check)

    p_num = sub.add_parser("numeric", help="floating-point identity checks")
    p_num.add_argument(
        "name", choices=["three-term", "hecke-apply", "periodic-action", "arg-identity"]
    )
    p_num.add_argument("--psi", choices=["reciprocal", "coeffs"], default="reciprocal")
    p_num.add_argument("--coeffs", help="coefficient JSON file")
    p_num.add_argument("--s", help="spectral parameter re,im")
    p_num.add_argument("--m", default="2", help="grade or range A..B")
    p_num.add_argument("--grid", help="re0,re1,im0,im1,steps")
    p_num.add_argument("--tol", type=float)
    p_num.add_argument("--samples", type=int, default=10000)
    p_num.add_argument("--seed", type=int, default=0)
    p_num.add_argument("--max-entry", type=int, default=12)
    p_num.set_defaults(func=_cmd_numeric)

    p_graph = sub.add_parser("graph", help="DOT export and graph reports")
    p_graph.add_argument("m", type=int)
    p_graph.add_argument("--bound", type=int, default=5)
    p_graph.add_argument("--cycles", type=int, help="search cycles up to this length")
    p_graph.add_argument("--label-rules", action="store_true")
    p_graph.set_defaults(func=_cmd_graph)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses 2 for usage errors already
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    start = time.monotonic()
    try:
        status = args.func(args)
    except InputError as exc:
        print("error: %s" % (exc,), file=sys.stderr)
        return USAGE_ERROR
    except (GradingError, DomainError, ValueError) as exc:
        print("error: %s" % (exc,), file=sys.stderr)
        return USAGE_ERROR
    print("wall_time_s=%.3f" % (time.monotonic() - start), file=sys.stderr)
    return status


def console_main():
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
