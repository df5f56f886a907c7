"""Command-line front end: ``invcurve <verb> ...``.

Exit status is 0 on success, 1 when a check fails (or is inconclusive under
``--strict``), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from . import decisions, groups, ideals, invariants, singularity

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"
ALL_CHECKS = (
    "group-order", "molien", "degrees", "invariance", "jacobian-7290",
    "x-squared", "zero-locus", "nonsingular", "transversal",
)
MOLIEN_RANGE = {"V": 90, "I": 30, "K": 42}
DEFAULT_TABLE_MAX = 100


class UsageError(Exception):
    pass


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


# ---- verify -------------------------------------------------------------

def _check_group_order(g, coords, opts):
    G = groups.lift(g)
    proj = groups.projective_order(G)
    ok = G.order == groups.LIFT_ORDERS[g] and proj == groups.PROJECTIVE_ORDERS[g]
    return ok, f"order {G.order}, projective order {proj}"


def _check_molien(g, coords, opts):
    N = MOLIEN_RANGE[g]
    ok = groups.molien_series(groups.lift(g), N) == groups.expand_poincare(g, N)
    return ok, f"coefficients agree up to t^{N}" if ok else "mismatch"


def _check_degrees(g, coords, opts):
    T = invariants.build_invariants(g, coords)
    ok = T.degrees == groups.DEGREES[g]
    return ok, "degrees " + "/".join(map(str, T.degrees))


def _check_invariance(g, coords, opts):
    T = invariants.build_invariants(g, coords)
    if coords == "standard":
        gens = groups.generators(g)
        what = "generators " + ",".join(gens.names)
    else:
        gens = invariants.wiman_symmetries()
        what = "visible Wiman-frame symmetries"
    bad = [name for name, p in T.as_dict().items() if not invariants.is_invariant(p, gens)]
    return not bad, f"F, Phi, Psi, X fixed by {what}" if not bad else f"moved: {bad}"


def _check_jacobian(g, coords, opts):
    if (g, coords) != ("I", "wiman"):
        return None, "only defined for --group I --coords wiman"
    v = invariants.wiman_jacobian_at_base_point()
    return v == 7290, f"value {v}"


def _check_x_squared(g, coords, opts):
    if g == "V" and coords == "standard" and not opts.deep:
        return None, "needs --deep (or use --coords wiman)"
    T = invariants.build_invariants(g, coords)
    try:
        e = invariants.express_in_basic(T.X * T.X, T)
    except invariants.ExpressionError as exc:
        return False, str(exc)
    return True, f"X^2 uses {len(e.coefficients)} monomials in F, Phi, Psi"


def _groebner(fn, g, opts):
    if g == "V" and not opts.deep:
        return None, "needs --deep"
    try:
        return fn()
    except ideals.Inconclusive as exc:
        return None, f"budget exhausted after {exc.pairs} pairs"


def _check_zero_locus(g, coords, opts):
    T = invariants.build_invariants(g, coords)

    def run():
        r = ideals.zero_locus_report(ideals.Ideal(list(T.basic)), opts.budget)
        return r.empty, f"F = Phi = Psi = 0 only at the origin ({r.method})"
    return _groebner(run, g, opts)


def _check_nonsingular(g, coords, opts):
    T = invariants.build_invariants(g, coords)

    def run():
        bad = [n for n, p in zip(("F", "Phi", "Psi"), T.basic)
               if not ideals.nonsingular_check(p, opts.budget)]
        return not bad, "V(F), V(Phi), V(Psi) smooth" if not bad else f"singular: {bad}"
    return _groebner(run, g, opts)


def _check_transversal(g, coords, opts):
    T = invariants.build_invariants(g, coords)

    def run():
        ok = ideals.transversal_check(T.F, T.Phi, opts.budget)
        return ok, "V(F) and V(Phi) meet transversally"
    return _groebner(run, g, opts)


CHECKS = {
    "group-order": _check_group_order,
    "molien": _check_molien,
    "degrees": _check_degrees,
    "invariance": _check_invariance,
    "jacobian-7290": _check_jacobian,
    "x-squared": _check_x_squared,
    "zero-locus": _check_zero_locus,
    "nonsingular": _check_nonsingular,
    "transversal": _check_transversal,
}

CHECK_LABELS = {"jacobian-7290": "jacobian-at-(1,0,0) = 7290"}


def _run_check(name, g, coords, opts):
    t0 = time.perf_counter()
    try:
        ok, detail = CHECKS[name](g, coords, opts)
    except ideals.Inconclusive as exc:
        ok, detail = None, f"budget exhausted after {exc.pairs} pairs"
    status = PASS if ok is True else FAIL if ok is False else INCONCLUSIVE
    return {
        "check": CHECK_LABELS.get(name, name),
        "status": status,
        "detail": detail,
        "seconds": round(time.perf_counter() - t0, 3),
    }


def _default_checks(g, coords) -> list:
    out = [c for c in ALL_CHECKS if c != "jacobian-7290"]
    if (g, coords) == ("I", "wiman"):
        out.insert(out.index("x-squared"), "jacobian-7290")
    if coords == "wiman":
        out = [c for c in out if c not in ("group-order", "molien")]
    return out


def cmd_verify(opts) -> tuple:
    g = opts.group
    coords = opts.coords
    if g == "K" and coords == "wiman":
        raise UsageError("the Klein group has no Wiman frame here; use --coords standard")
    if opts.checks:
        names = [c.strip() for c in opts.checks.split(",") if c.strip()]
        unknown = [c for c in names if c not in CHECKS]
        if unknown:
            raise UsageError(f"unknown checks {unknown}; choose from {', '.join(ALL_CHECKS)}")
    else:
        names = _default_checks(g, coords)
    if opts.threads > 1:
        with ThreadPoolExecutor(max_workers=opts.threads) as pool:
            results = list(pool.map(lambda n: _run_check(n, g, coords, opts), names))
    else:
        results = [_run_check(n, g, coords, opts) for n in names]
    statuses = {r["status"] for r in results}
    code = 1 if FAIL in statuses or (opts.strict and INCONCLUSIVE in statuses) else 0
    if opts.json:
        shown = [dict(r) for r in results]
        if not opts.timings:
            for r in shown:
                r.pop("seconds")
        report = {"command": "verify", "group": g, "coords": coords, "results": shown,
                  "deep": opts.deep}
        text = dump_json(report)
    else:
        lines = [f"{r['check']}: {r['status']} ({r['seconds']:.2f}s) {r['detail']}"
                 for r in results]
        text = "\n".join(lines)
    if INCONCLUSIVE in statuses and not opts.strict:
        print("warning: some checks were inconclusive", file=sys.stderr)
    return text, code


# ---- build / molien -------------------------------------------------------

def cmd_build(opts) -> tuple:
    if opts.group == "K" and opts.coords == "wiman":
        raise UsageError("the Klein group has no Wiman frame here; use --coords standard")
    T = invariants.build_invariants(opts.group, opts.coords)
    text = dump_json(T.to_json())
    if opts.out:
        with open(opts.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        return f"wrote {opts.out}", 0
    return text, 0


def cmd_molien(opts) -> tuple:
    N = opts.max if opts.max is not None else MOLIEN_RANGE[opts.group]
    G = groups.lift(opts.group)
    series = groups.molien_series(G, N)
    code = 0 if series == groups.expand_poincare(opts.group, N) else 1
    if opts.json:
        return json.dumps(series), code
    lines = [f"group {opts.group}: order {G.order}, projective order {groups.projective_order(G)}"]
    lines += [f"t^{k}: {c}" for k, c in enumerate(series)]
    return "\n".join(lines), code


# ---- decide / classify / table -------------------------------------------

def _degrees(opts) -> list:
    if opts.degree is not None and opts.max is not None:
        raise UsageError("give either --degree or --max, not both")
    if opts.degree is not None:
        if opts.degree < 1:
            raise UsageError("--degree must be positive")
        return [opts.degree]
    if opts.max is not None:
        if opts.max < 1:
            raise UsageError("--max must be positive")
        return list(range(1, opts.max + 1))
    raise UsageError("one of --degree or --max is required")


def _decide_one(kind, g, d) -> dict:
    if kind == "nonsingular":
        return decisions.decide_nonsingular(g, d).to_json()
    return singularity.integral_report(g, d).to_json()


def _table_text(kind, g, rows) -> str:
    yes = [r["degree"] for r in rows if r["exists"]]
    lines = [f"{kind} degrees for {g} (d <= {rows[-1]['degree']}):",
             " ".join(map(str, yes)) if yes else "(none)"]
    return "\n".join(lines)


def cmd_decide(opts) -> tuple:
    ds = _degrees(opts)
    rows = [_decide_one(opts.kind, opts.group, d) for d in ds]
    if len(ds) == 1 and opts.degree is not None:
        return dump_json(rows[0]), 0
    if opts.json:
        return dump_json(rows), 0
    return _table_text(opts.kind, opts.group, rows), 0


def cmd_classify(opts) -> tuple:
    ds = _degrees(opts)
    rows = [singularity.singularity_report(opts.group, d).to_json() for d in ds]
    if len(ds) == 1 and opts.degree is not None:
        return dump_json(rows[0]), 0
    if opts.json:
        return dump_json(rows), 0
    lines = [f"{r['degree']:>4}  {r['type']}" for r in rows]
    return "\n".join(lines), 0


def cmd_table(opts) -> tuple:
    N = opts.max if opts.max is not None else DEFAULT_TABLE_MAX
    if N < 1:
        raise UsageError("--max must be positive")
    if opts.kind == "classify":
        rows = [singularity.singularity_report(opts.group, d).to_json() for d in range(1, N + 1)]
        if opts.json:
            return dump_json(rows), 0
        lines = [f"{r['degree']:>4}  {r['type']}" for r in rows
                 if r["type"] != singularity.SingularityType.UNDEFINED.value]
        return "\n".join(lines), 0
    rows = [_decide_one(opts.kind, opts.group, d) for d in range(1, N + 1)]
    if opts.json:
        slim = [{"degree": r["degree"], "exists": r["exists"]} for r in rows]
        return dump_json(slim), 0
    return _table_text(opts.kind, opts.group, rows), 0


# ---- parser -----------------------------------------------------------

def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", required=True, choices=("V", "I", "K"))
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=_positive, default=1)

    p = argparse.ArgumentParser(
        prog="invcurve",
        description="Invariant plane curves of the Valentiner, icosahedral and Klein groups.",
    )
    sub = p.add_subparsers(dest="verb", required=True)

    b = sub.add_parser("build-invariants", parents=[common], help="emit F, Phi, Psi, X")
    b.add_argument("--coords", choices=("standard", "wiman"), default="standard")
    b.add_argument("--out")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", parents=[common], help="run structural checks")
    v.add_argument("--coords", choices=("standard", "wiman"), default="standard")
    v.add_argument("--checks", help="comma-separated subset of: " + ", ".join(ALL_CHECKS))
    v.add_argument("--deep", action="store_true", help="run the heavy Valentiner algebra")
    v.add_argument("--budget", type=_positive, default=None,
                   help=f"Groebner pair budget (default {ideals.DEFAULT_BUDGET}, "
                        f"or ${ideals.BUDGET_ENV})")
    v.add_argument("--strict", action="store_true", help="treat inconclusive as failure")
    v.add_argument("--timings", action="store_true", help="include timings in JSON output")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("decide", parents=[common], help="degree decisions")
    d.add_argument("kind", choices=("nonsingular", "integral"))
    d.add_argument("--degree", type=int)
    d.add_argument("--max", type=int)
    d.set_defaults(func=cmd_decide)

    c = sub.add_parser("classify", parents=[common], help="singularity type of a general member")
    c.add_argument("--degree", type=int)
    c.add_argument("--max", type=int)
    c.set_defaults(func=cmd_classify)

    t = sub.add_parser("table", parents=[common], help="tabulate admissible degrees")
    t.add_argument("kind", choices=("nonsingular", "integral", "classify"))
    t.add_argument("--max", type=int, default=None)
    t.set_defaults(func=cmd_table)

    m = sub.add_parser("molien", parents=[common], help="Molien series coefficients")
    m.add_argument("--max", type=int, default=None)
    m.set_defaults(func=cmd_molien)
    return p


def run(argv=None) -> tuple:
    """Parse and dispatch; returns (output text, exit code)."""
    parser = build_parser()
    opts = parser.parse_args(argv)
    if getattr(opts, "budget", None) is None and hasattr(opts, "budget"):
        try:
            opts.budget = ideals.default_budget()
        except ValueError as exc:
            parser.error(str(exc))
    try:
        return opts.func(opts)
    except UsageError as exc:
        parser.error(str(exc))


def main(argv=None) -> int:
    text, code = run(argv)
    if text:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
