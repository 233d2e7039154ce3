"""Command-line front end: runs the verification suites and writes
deterministic reports.

Exit codes: 0 when every check passes / every probe is consistent, 1 when
any verification fails or a conjecture violation is found, 2 on usage or
I/O errors.  All output is deterministic: CSV uses '.' decimals, 17
significant digits and LF line endings, JSON is sorted.
"""

import argparse
import json
import math
import sys

from gamma_envelope import analysis, bounds, polycert, proofaudit, refcore

FORMATS = ("csv", "json", "markdown")


class SystemExit2(Exception):
    """Usage error surfaced as exit code 2."""


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _rows_to_csv(header, rows):
    def cell(v):
        if isinstance(v, float):
            return "%.17g" % v
        return str(v)

    lines = [",".join(header)]
    lines.extend(",".join(cell(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _rows_to_markdown(header, rows):
    def cell(v):
        if isinstance(v, float):
            return "%.17g" % v
        return str(v)

    lines = [
        "| " + " | ".join(header) + " |",
        "|" + "---|" * len(header),
    ]
    lines.extend(
        "| " + " | ".join(cell(v) for v in row) + " |" for row in rows
    )
    return "\n".join(lines) + "\n"


def _render(header, rows, fmt):
    if fmt == "csv":
        return _rows_to_csv(header, rows)
    if fmt == "markdown":
        return _rows_to_markdown(header, rows)
    return (
        json.dumps(
            [dict(zip(header, row)) for row in rows],
            indent=2,
            sort_keys=True,
        )
        + "\n"
    )


# ---------------------------------------------------------------------------
# sub-commands


def _cmd_bounds(args):
    if args.x is None:
        raise SystemExit2("--x is required for the bounds command")
    bp = bounds.evaluate_family(args.family, args.x)
    if bp.argument_convention == bounds.GAMMA_OF_X_PLUS_1:
        true_value = refcore.gamma(args.x + 1.0)
    elif bp.argument_convention == bounds.GAMMA_OF_X:
        true_value = refcore.gamma(args.x)
    else:
        true_value = float("nan")
    header = [
        "family", "x", "lower", "true_gamma", "upper", "convention",
        "equality_point", "one_sided",
    ]
    rows = [[
        bp.family, float(args.x), bp.lower, true_value, bp.upper,
        bp.argument_convention, bp.is_equality_point, bp.one_sided,
    ]]
    _emit(_render(header, rows, args.format), args.out)
    if bp.is_equality_point:
        return 0
    lower_ok = bp.one_sided or bp.lower < true_value
    upper_ok = true_value < bp.upper
    return 0 if lower_ok and upper_ok else 1


def _cmd_compare(args):
    a, b = args.interval if args.interval else (0.0, 1.0)
    findings = analysis.remark_claims(grid_n=max(args.grid, 500))
    header = ["claim_id", "description", "verdict"]
    rows = [list(f) for f in findings]
    _emit(_render(header, rows, args.format), args.out)
    return 0 if all(v in ("pass", "flagged") for _, _, v in findings) else 1


def _cmd_audit(args):
    claims = proofaudit.audit_proof(grid_n=args.grid)
    if args.format == "markdown":
        text = proofaudit.claims_to_markdown(claims)
    elif args.format == "json":
        text = proofaudit.claims_to_json(claims) + "\n"
    else:
        header = ["name", "kind", "expected", "measured", "verdict", "witness"]
        rows = [
            [c.name, c.kind, c.expected, c.measured, c.verdict,
             "" if c.witness is None else c.witness]
            for c in claims
        ]
        text = _rows_to_csv(header, rows)
    _emit(text, args.out)
    return 0 if all(c.verdict == "pass" for c in claims) else 1


def _cmd_lemma2(args):
    certs = polycert.certify_lemma_polynomials()
    rows = []
    ok = True
    for i, cert in certs.items():
        rows.append([
            "h%d" % i,
            "polynomial",
            cert.claimed_sign,
            cert.descartes_bound,
            cert.sturm_root_count,
            cert.verdict,
        ])
        ok = ok and cert.verdict == "certified"
    # the transcendental member is checked numerically on a grid
    n = max(args.grid, 100)
    eps = 1e-6
    xs = [eps + (1.0 - 2.0 * eps) * i / (n - 1) for i in range(n)]
    h2_min = min(proofaudit.lemma_expr(2, x) for x in xs)
    h2_ok = h2_min > 0.0 and abs(proofaudit.lemma_expr(2, 0.0) - 1.0) <= 1e-12
    rows.append([
        "h2", "transcendental", "positive", "", "",
        "consistent" if h2_ok else "violated",
    ])
    ok = ok and h2_ok
    header = ["name", "kind", "claimed_sign", "descartes_bound",
              "sturm_root_count", "verdict"]
    if args.format == "json":
        payload = {
            "certificates": {
                "h%d" % i: json.loads(cert.to_json())
                for i, cert in certs.items()
            },
            "h2_grid_check": {
                "min_value": h2_min,
                "value_at_0": proofaudit.lemma_expr(2, 0.0),
                "verdict": "consistent" if h2_ok else "violated",
            },
        }
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    else:
        _emit(_render(header, rows, args.format), args.out)
    return 0 if ok else 1


def _cmd_monotone(args):
    a, b = args.interval if args.interval else (0.0, 1.0)
    rep = analysis.check_monotone(
        args.function, a, b, args.direction, grid_n=args.grid
    )
    header = ["function", "a", "b", "direction", "grid_n",
              "min_abs_diff", "violations", "verdict"]
    rows = [[rep.function_id, a, b, rep.direction, rep.grid_n,
             rep.min_abs_diff, len(rep.strict_violations), rep.verdict]]
    _emit(_render(header, rows, args.format), args.out)
    return 0 if rep.verdict == "consistent" else 1


def _cmd_conjecture(args):
    rows = []
    ok = True
    if args.which == "cm":
        a, b = args.interval if args.interval else (0.1, 50.0)
        rep = analysis.cm_probe("h_cm", a, b, args.max_order, args.step)
        rows.append(["cm_h", "(%g,%g)" % (a, b), len(rep.violations),
                     rep.verdict])
        ok = rep.verdict == "consistent"
    elif args.which == "ratio-global":
        a, b = args.interval if args.interval else (0.0, 50.0)
        rep = analysis.check_monotone(
            "ratio_R", a, b, "increasing", grid_n=args.grid
        )
        rows.append(["ratio_global_increasing", "(%g,%g)" % (a, b),
                     len(rep.strict_violations), rep.verdict])
        ok = rep.verdict == "consistent"
    else:  # tau
        a, b = args.interval if args.interval else (1e-3, 50.0)
        for tau in (0.5, 1.0, 2.0, 6.0):
            rep = analysis.check_monotone(
                "tau_ratio:%g" % tau, a, b, "increasing", grid_n=args.grid
            )
            rows.append(["tau_ratio_increasing_tau=%g" % tau,
                         "(%g,%g)" % (a, b),
                         len(rep.strict_violations), rep.verdict])
            ok = ok and rep.verdict == "consistent"
    header = ["probe", "interval", "violations", "verdict"]
    _emit(_render(header, rows, args.format), args.out)
    return 0 if ok else 1


def _cmd_openproblem_lambda(args):
    inc, dec, table = analysis.search_lambda_thresholds(
        grid_n=max(args.grid, 1000), lambda_tol=args.lambda_tol
    )
    header = ["lambda", "classification"]
    rows = [[lam, cls] for lam, cls in table]
    rows.append(["lambda_inc_max_estimate", "%.17g" % inc])
    rows.append(["lambda_dec_min_estimate", "%.17g" % dec])
    rows.append(["note", "numerical estimates for an open question"])
    _emit(_render(header, rows, args.format), args.out)
    return 0 if 1.0 < inc <= dec < 6.0 else 1


def _cmd_polygamma_check(args):
    import numpy as np

    xs = np.logspace(math.log10(0.01), math.log10(100.0), args.grid)
    rows = []
    ok = True
    for k in (1, 2, 3):
        worst = math.inf
        for x in xs:
            bp = bounds.polygamma_bounds(k, float(x))
            val = abs(refcore.polygamma(k, float(x)))
            worst = min(worst, val - bp.lower, bp.upper - val)
        k_ok = worst > 0.0
        rows.append([k, float(xs[0]), float(xs[-1]), len(xs), worst,
                     "pass" if k_ok else "fail"])
        ok = ok and k_ok
    header = ["k", "x_min", "x_max", "points", "min_margin", "verdict"]
    _emit(_render(header, rows, args.format), args.out)
    return 0 if ok else 1


def build_parser():
    p = argparse.ArgumentParser(
        prog="gamma-envelope",
        description="Verification toolkit for elementary gamma-function "
        "bounds: exact lemma certificates, proof audit, family "
        "comparison, and conjecture probes.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, grid_default=10000):
        sp.add_argument("--grid", type=int, default=grid_default,
                        metavar="N", help="grid resolution")
        sp.add_argument("--interval", type=float, nargs=2, default=None,
                        metavar=("A", "B"), help="interval endpoints")
        sp.add_argument("--format", choices=FORMATS, default="csv")
        sp.add_argument("--out", default=None, metavar="PATH",
                        help="output file (default: stdout)")

    sp = sub.add_parser("bounds", help="evaluate one bound family at a point")
    common(sp)
    sp.add_argument("--family", default="qi_guo",
                    choices=sorted(bounds.FAMILIES))
    sp.add_argument("--x", type=float, default=None)
    sp.set_defaults(fn=_cmd_bounds)

    sp = sub.add_parser("compare", help="re-check the comparison findings")
    common(sp, grid_default=2000)
    sp.set_defaults(fn=_cmd_compare)

    sp = sub.add_parser("audit", help="audit every step of the "
                        "monotonicity proof")
    common(sp)
    sp.set_defaults(fn=_cmd_audit)

    sp = sub.add_parser("lemma2", help="exact sign certificates for the "
                        "lemma polynomials")
    common(sp)
    sp.set_defaults(fn=_cmd_lemma2)

    sp = sub.add_parser("monotone", help="strict monotonicity check of a "
                        "registered function")
    common(sp)
    sp.add_argument("--function", default="ratio_R")
    sp.add_argument("--direction", choices=("increasing", "decreasing"),
                    default="increasing")
    sp.set_defaults(fn=_cmd_monotone)

    sp = sub.add_parser("conjecture", help="falsification probes")
    sp.add_argument("which", choices=("cm", "ratio-global", "tau"))
    common(sp)
    sp.add_argument("--max-order", type=int, default=6)
    sp.add_argument("--step", type=float, default=0.01)
    sp.set_defaults(fn=_cmd_conjecture)

    sp = sub.add_parser("openproblem-lambda", help="bracket the "
                        "monotonicity transition in lambda")
    common(sp, grid_default=2000)
    sp.add_argument("--lambda-tol", type=float, default=1e-3)
    sp.set_defaults(fn=_cmd_openproblem_lambda)

    sp = sub.add_parser("polygamma-check", help="polygamma sandwich sweep")
    common(sp, grid_default=2000)
    sp.set_defaults(fn=_cmd_polygamma_check)

    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize others
        return 2 if exc.code not in (0,) else 0
    try:
        return args.fn(args)
    except SystemExit2 as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (OSError, ValueError, KeyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
