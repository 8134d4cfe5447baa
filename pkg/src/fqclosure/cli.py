"""Command-line front end.

Exit status: 0 when everything ran and every bound held, 1 when some bound
failed, 2 on usage or input errors (malformed JSON, caps exceeded, violated
hypotheses).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import bounds
from .bounds import THEOREM_IDS, BoundReport, HypothesisError
from .closures import GridTooLarge, closure, multiplicity_closure
from .fields import FieldError, field_from_json, field_from_order
from .generators import (
    CurveSpec,
    InstanceBundle,
    curve_points,
    nikodym_instance,
    partial_lines_instance,
    product_set,
)
from .ideals import PointSet, hilbert_profile, stabilization_degree
from .linalg import MatrixTooLarge
from .reporting import report_emit

THEOREM_HELP = "theorem ids: " + ", ".join(THEOREM_IDS)


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _load_json_arg(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {what}: {exc}") from None


def _load_file(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    return _load_json_arg(text, path)


def _field(args):
    try:
        return field_from_order(args.q)
    except FieldError as exc:
        raise UsageError(str(exc)) from None


def _pointset(args, obj=None) -> PointSet:
    """Point set from --instance (or a loaded object) or from --q/--n/--points."""
    if obj is None and getattr(args, "instance", None):
        obj = _load_file(args.instance)
    if obj is not None:
        if "Y" in obj and "points" not in obj:
            obj = obj["Y"]
        return PointSet.from_json(obj)
    if args.q is None or args.points is None:
        raise UsageError("give either --instance FILE or --q with --points")
    pts = _load_json_arg(args.points, "--points")
    n = args.n if args.n is not None else (len(pts[0]) if pts else None)
    if n is None:
        raise UsageError("--n is required for an empty point set")
    return PointSet(_field(args), n, pts)


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(t) for t in text.split(",") if t.strip()]


# -- subcommands --------------------------------------------------------------

def cmd_hilbert(args) -> tuple[str, int]:
    Y = _pointset(args)
    prof = hilbert_profile(Y, args.m, args.dmax, matrix_cap=args.cap_matrix)
    if args.format == "csv":
        return prof.to_csv(), 0
    return _dump(prof.to_json()), 0


def _closure_out(res, fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([f"x{i + 1}" for i in range(res.input.n)])
        w.writerows(res.output)
        return buf.getvalue()
    return _dump(res.to_json())


def cmd_closure(args) -> tuple[str, int]:
    Y = _pointset(args)
    res = closure(Y, args.d, grid_cap=args.cap_grid, matrix_cap=args.cap_matrix)
    return _closure_out(res, args.format), 0


def cmd_mclosure(args) -> tuple[str, int]:
    Y = _pointset(args)
    res = multiplicity_closure(Y, args.d, args.ell, args.m, grid_cap=args.cap_grid, matrix_cap=args.cap_matrix)
    return _closure_out(res, args.format), 0


def cmd_gen(args) -> tuple[str, int]:
    F = _field(args)
    if args.kind == "lines":
        b = partial_lines_instance(F, args.n, args.count, args.tau, seed=args.seed)
        return _dump(b.to_json()), 0
    if args.kind == "nikodym":
        b = nikodym_instance(F, args.n, args.tau, seed=args.seed, grid_cap=args.cap_grid)
        return _dump(b.to_json()), 0
    if args.kind == "product":
        if args.factors is None:
            raise UsageError("gen product needs --factors")
        return _dump(product_set(F, _load_json_arg(args.factors, "--factors")).to_json()), 0
    if args.components is None:
        raise UsageError("gen curve needs --components")
    comps = _load_json_arg(args.components, "--components")
    spec = CurveSpec(F, tuple(tuple(c) for c in comps), args.degree)
    return _dump({"curve": spec.to_json(), "points": curve_points(spec).to_json()}), 0


def _param(args, obj: dict, name: str, default=None):
    v = getattr(args, name, None)
    if v is not None:
        return v
    if obj and name in obj:
        return obj[name]
    return default


def _degrees(args, obj, Y: PointSet, m: int = 1) -> list[int]:
    d = _param(args, obj, "d")
    if d is not None:
        return [int(d)]
    return list(range(stabilization_degree(Y.field.q, Y.n, m) + 1))


def _run_verify(args) -> list[BoundReport]:
    tid = args.theorem
    obj = _load_file(args.instance) if args.instance else {}
    if tid in ("size-bound", "closure-bound", "mult-set-bound", "mult-closure-bound", "hilbert-growth"):
        Y = _pointset(args, obj or None)
        m = int(_param(args, obj, "m", 1))
        ell = int(_param(args, obj, "ell", 1))
        if tid == "size-bound":
            return [bounds.verify_size_bound(Y, d) for d in _degrees(args, obj, Y)]
        if tid == "closure-bound":
            return [bounds.verify_closure_bound(Y, d) for d in _degrees(args, obj, Y)]
        if tid == "mult-set-bound":
            return [bounds.verify_multiplicity_set_bound(Y, d, m) for d in _degrees(args, obj, Y, m)]
        if tid == "mult-closure-bound":
            return [bounds.verify_multiplicity_closure_bound(Y, d, ell, m) for d in _degrees(args, obj, Y, m)]
        m1, m2 = _param(args, obj, "m1"), _param(args, obj, "m2")
        if m1 is None or m2 is None:
            raise UsageError("hilbert-growth needs m1 and m2")
        return [bounds.verify_hilbert_growth(Y, int(m1), int(m2), m)]
    if tid == "product-closure-bound":
        factors = obj.get("factors") or (args.factors and _load_json_arg(args.factors, "--factors"))
        if not factors:
            raise UsageError("product-closure-bound needs factors")
        Y = _pointset(args, obj or None)
        return [bounds.verify_product_closure_bound(factors, Y, d) for d in _degrees(args, obj, Y)]
    if tid == "schwartz-zippel-mult":
        if not obj:
            raise UsageError("schwartz-zippel-mult needs --instance with X and curve")
        X = PointSet.from_json(obj["X"])
        spec = CurveSpec.from_json(obj["curve"])
        d = int(_param(args, obj, "d", 0))
        return [bounds.verify_schwartz_zippel_mult(X, spec, d, int(_param(args, obj, "ell", 1)),
                                                   int(_param(args, obj, "m", 1)))]
    if tid in ("statistical-kakeya", "partial-lines"):
        if not obj:
            raise UsageError(f"{tid} needs --instance with an instance bundle")
        bundle = InstanceBundle.from_json(obj)
        if tid == "statistical-kakeya":
            return [bounds.verify_statistical_kakeya(
                bundle, int(_param(args, obj, "curve_degree", 1)), _param(args, obj, "tau"))]
        alpha = _param(args, obj, "alpha")
        if alpha is not None:
            return [bounds.verify_partial_lines_alpha(bundle, Fraction(str(alpha)))]
        return list(bounds.verify_partial_lines_corollaries(bundle))
    if tid == "splus-growth":
        n = int(_param(args, obj, "n"))
        S = [tuple(a) for a in obj.get("set", [])]
        return [bounds.verify_splus_growth(S, int(_param(args, obj, "d", 0)), n)]
    if tid == "union-subadditivity":
        parts = [PointSet.from_json(p) for p in obj.get("parts", [])]
        if not parts:
            raise UsageError("union-subadditivity needs parts")
        return [bounds.verify_union_subadditivity(parts, int(_param(args, obj, "d", 0)))]
    if tid == "closure-axioms":
        X = PointSet.from_json(obj["X"])
        Y = PointSet.from_json(obj.get("Y", obj["X"]))
        return [bounds.verify_closure_axioms(X, Y, int(_param(args, obj, "d", 0)))]
    raise UsageError(f"unknown theorem id {tid!r}; {THEOREM_HELP}")  # pragma: no cover


def cmd_verify(args) -> tuple[str, int]:
    reports = _run_verify(args)
    return report_emit(reports, args.format), 0 if all(r.ok for r in reports) else 1


def cmd_sweep(args) -> tuple[str, int]:
    F = _field(args)
    res = bounds.exhaustive_sweep(
        F, args.n, _parse_range(args.d), args.mode, samples=args.samples, seed=args.seed,
        keep_reports=args.format == "csv",
    )
    if args.format == "csv":
        return report_emit(res.reports, "csv"), 0 if res.ok else 1
    return _dump(res.to_json()), 0 if res.ok else 1


def cmd_fkg(args) -> tuple[str, int]:
    fn = bounds.LatticeFunctions.from_json(_load_file(args.functions))
    rep = bounds.fkg_check(fn)
    # only a failure under the hypotheses counts as a violation
    return _dump(rep.to_json()), 1 if rep.hypotheses_hold and not rep.inequality_holds else 0


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--cap-grid", type=int, default=None, help="max grid size q^n")
    common.add_argument("--cap-matrix", type=int, default=None, help="max evaluation-matrix entries")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--output", "-o", default=None, help="write to this file instead of stdout")

    space = argparse.ArgumentParser(add_help=False)
    space.add_argument("--q", type=int, help="field order (a prime power)")
    space.add_argument("--n", type=int, help="dimension")
    src = space.add_mutually_exclusive_group()
    src.add_argument("--points", help="inline JSON list of points")
    src.add_argument("--instance", help="JSON instance file")

    p = argparse.ArgumentParser(
        prog="fqclosure",
        description="Hilbert functions, degree-d closures and bound verification over GF(q)^n.",
        epilog=THEOREM_HELP,
    )
    sub = p.add_subparsers(dest="command", required=True)

    h = sub.add_parser("hilbert", parents=[common, space], help="affine Hilbert profile")
    h.add_argument("--dmax", type=int, required=True)
    h.add_argument("--m", type=int, default=1)
    h.set_defaults(func=cmd_hilbert)

    c = sub.add_parser("closure", parents=[common, space], help="degree-d closure")
    c.add_argument("--d", type=int, required=True)
    c.set_defaults(func=cmd_closure)

    mc = sub.add_parser("mclosure", parents=[common, space], help="multiplicity closure cl_d^{l,m}")
    mc.add_argument("--d", type=int, required=True)
    mc.add_argument("--ell", type=int, default=1)
    mc.add_argument("--m", type=int, default=1)
    mc.set_defaults(func=cmd_mclosure)

    g = sub.add_parser("gen", parents=[common], help="generate instances")
    g.add_argument("kind", choices=("lines", "nikodym", "product", "curve"))
    g.add_argument("--q", type=int, required=True)
    g.add_argument("--n", type=int, default=2)
    g.add_argument("--count", type=int, default=1)
    g.add_argument("--tau", type=int, default=1)
    g.add_argument("--factors", help="JSON list of n coordinate subsets")
    g.add_argument("--components", help="JSON list of n coefficient lists (little-endian)")
    g.add_argument("--degree", type=int, default=1)
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", parents=[common, space], help="verify one bound", epilog=THEOREM_HELP)
    v.add_argument("theorem", choices=THEOREM_IDS, metavar="THEOREM_ID")
    for name in ("d", "m", "ell", "m1", "m2", "tau", "curve_degree"):
        v.add_argument(f"--{name.replace('_', '-')}", dest=name, type=int, default=None)
    v.add_argument("--alpha", default=None, help="exponent as a fraction, e.g. 1/2")
    v.add_argument("--factors", default=None, help="JSON list of n coordinate subsets")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sweep", parents=[common], help="exhaustive or sampled sweep over subsets")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d", default="0..2", help="degrees: 'lo..hi' or comma list")
    s.add_argument("--mode", choices=("closure-bound", "size-bound"), default="closure-bound")
    s.add_argument("--samples", type=int, default=None, help="sample this many subsets instead")
    s.set_defaults(func=cmd_sweep)

    f = sub.add_parser("fkg-check", parents=[common], help="check the FKG hypotheses and inequality")
    f.add_argument("--functions", required=True)
    f.set_defaults(func=cmd_fkg)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GridTooLarge, MatrixTooLarge) as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 2
    except HypothesisError as exc:
        print(f"hypothesis violation: {exc}", file=sys.stderr)
        for x in exc.offending[:20]:
            print(f"  offending: {x}", file=sys.stderr)
        return 2
    except (FieldError, ValueError, KeyError, TypeError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
