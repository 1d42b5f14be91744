"""Batch command-line front end.

Subcommands
-----------
classify    chamber, lowest K-type, and dual-pair case report for a parameter
coeff-ds    radial coefficient profile of a discrete-series trace
coeff-weil  closed-form oscillator coefficient at a group point
zeta        dual-route zeta evaluation for one case
verify      invariant suites with one pass/fail line per check
table       parameter sweeps emitted as CSV, JSON, or aligned text

Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 internal
error. Output is deterministic for a fixed command line; the only sampling
is the seeded oracle spot check in `verify`.

Half-integers are accepted as 'n' or reduced 'p/2' only; floats are
rejected. Exact rationals are serialized as 'num/den' strings so that table
rows round-trip bit-exactly through Fraction().
"""

import argparse
import csv
import io
import json
import math
import random
import sys
from fractions import Fraction
from itertools import product

from .dscoef import (c_coeff, ctilde, psi_radial, riemann_p_residual,
                     schmid_residual)
from .exactmath import HalfInt, binom_factorial_sum, binomial, vandermonde_sum
from .fockweil import (bargmann_oracle, build_harmonic, harmonicity_check,
                       phi_norm_sq, weight_check, weil_coeff)
from .repparams import (CASE_PARAM_NAMES, CASE_TAGS, BoundaryParameter,
                        DualPairCase, HCParam, KPoint, NoCaseMatch,
                        NotCompactDominant, NotRegular, blattner,
                        case_from_hc_param, dual_param, formal_degree)
from .zetaeval import (QuadratureConfig, c_squared_projection,
                       consistency_check, zeta_closed_form, zeta_numeric)

SCHEMA = "u21zeta/1"

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

FORMATS = ("json", "csv", "plain")
SUITES = ("identities", "ode", "harmonics", "zeta", "projection", "all")

T_CHECK = (0.3, 0.7, 1.5)
SCHMID_TOL = 1e-9
RIEMANN_TOL = 1e-8
ZETA_TOL = 1e-8
ORACLE_TOL = 1e-9

PARAM_FLAGS = ("mu1", "mu2", "mu", "nu", "nu1", "nu2", "alpha", "beta")

# Minimal and mid-range parameters for each (case, subcase) pair.
CASE_PLAN = (
    ("A", {"mu1": 0, "mu2": 0, "nu": 0}), ("A", {"mu1": 2, "mu2": 1, "nu": 1}),
    ("B", {"nu1": 0, "nu2": 0, "alpha": 0}), ("B", {"nu1": 2, "nu2": 1, "alpha": 1}),
    ("C1", {"mu1": 0, "mu2": 0, "alpha": 4}), ("C1", {"mu1": 2, "mu2": 1, "alpha": 7}),
    ("C1", {"mu1": 2, "mu2": 2, "alpha": 0}), ("C1", {"mu1": 4, "mu2": 3, "alpha": 1}),
    ("C1", {"mu1": 2, "mu2": 0, "alpha": 2}), ("C1", {"mu1": 4, "mu2": 1, "alpha": 3}),
    ("C2", {"mu": 0, "nu": 0, "beta": 2}), ("C2", {"mu": 1, "nu": 1, "beta": 4}),
    ("C2", {"mu": 0, "nu": 2, "beta": 0}), ("C2", {"mu": 1, "nu": 3, "beta": 1}),
    ("D1", {"nu1": 2, "nu2": 2, "beta": 0}), ("D1", {"nu1": 4, "nu2": 3, "beta": 1}),
    ("D1", {"nu1": 0, "nu2": 0, "beta": 4}), ("D1", {"nu1": 2, "nu2": 1, "beta": 7}),
    ("D1", {"nu1": 2, "nu2": 0, "beta": 2}), ("D1", {"nu1": 4, "nu2": 1, "beta": 3}),
    ("D2", {"mu": 0, "nu": 0, "alpha": 2}), ("D2", {"mu": 1, "nu": 1, "alpha": 4}),
    ("D2", {"mu": 2, "nu": 0, "alpha": 0}), ("D2", {"mu": 3, "nu": 1, "alpha": 1}),
)

CONFIG_DESTS = {
    "case": "case", "lambda": "lam", "grid-max": "grid_max",
    "quad-t": "quad_t", "quad-theta": "quad_theta", "tol": "tol",
    "format": "fmt", "out": "out", "seed": "seed", "t": "t",
    **{name: name for name in PARAM_FLAGS},
}


class CLIError(Exception):
    """Invalid input; maps to exit code 2."""


def frac_str(q):
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _as_int(value, name):
    if value is None or isinstance(value, int):
        return value
    try:
        return int(str(value).strip())
    except ValueError:
        raise CLIError(f"{name} must be an integer, got {value!r}") from None


def _as_float(value, name):
    if value is None or isinstance(value, float):
        return value
    try:
        return float(str(value).strip())
    except ValueError:
        raise CLIError(f"{name} must be a number, got {value!r}") from None


def parse_lambda(text):
    """Three space-separated half-integers; errors name the bad entry."""
    parts = str(text).split()
    if len(parts) != 3:
        raise CLIError(f"--lambda needs three entries, got {len(parts)} in {text!r}")
    vals = []
    for pos, tok in enumerate(parts, 1):
        try:
            vals.append(HalfInt.parse(tok))
        except ValueError as exc:
            raise CLIError(f"--lambda entry {pos}: {exc}") from None
    return HCParam(*vals)


def read_config(path):
    """key=value lines; '#' starts a comment; unknown keys are rejected."""
    entries = {}
    try:
        with open(path) as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                key, eq, value = line.partition("=")
                if not eq:
                    raise CLIError(f"{path}:{lineno}: expected key=value")
                entries[key.strip()] = value.strip()
    except OSError as exc:
        raise CLIError(f"cannot read config {path}: {exc}") from None
    for key in entries:
        if key not in CONFIG_DESTS:
            raise CLIError(f"unknown config key {key!r}")
    return entries


def apply_config(args, entries):
    """Fill unset flags from the config; explicit flags win."""
    for key, value in entries.items():
        dest = CONFIG_DESTS[key]
        if hasattr(args, dest) and getattr(args, dest) is None:
            setattr(args, dest, value)


def _case_from_args(args):
    tag = args.case
    if tag is None:
        raise CLIError("--case is required (one of A, B, C1, C2, D1, D2)")
    tag = str(tag).upper()
    if tag not in CASE_TAGS:
        raise CLIError(f"unknown case {args.case!r}")
    names = CASE_PARAM_NAMES[tag]
    params = {}
    for name in names:
        value = getattr(args, name, None)
        if value is None:
            raise CLIError(f"case {tag} needs --{name}")
        params[name] = _as_int(value, f"--{name}")
    for name in PARAM_FLAGS:
        if name not in names and getattr(args, name, None) is not None:
            raise CLIError(f"case {tag} takes no --{name}")
    try:
        return DualPairCase(tag, params)
    except ValueError as exc:
        raise CLIError(str(exc)) from None


def _quad_config(args):
    n_t = _as_int(getattr(args, "quad_t", None), "--quad-t")
    n_theta = _as_int(getattr(args, "quad_theta", None), "--quad-theta")
    tol = _as_float(getattr(args, "tol", None), "--tol")
    try:
        return QuadratureConfig(n_t=64 if n_t is None else n_t,
                                n_theta=64 if n_theta is None else n_theta,
                                tol=ZETA_TOL if tol is None else tol)
    except ValueError as exc:
        raise CLIError(str(exc)) from None


def _flatten(value):
    if isinstance(value, dict):
        return ";".join(f"{k}={_flatten(v)}" for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return ";".join(_flatten(v) for v in value)
    if value is None:
        return ""
    return str(value)


def _payload_text(payload, fmt):
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        keys = [k for k in payload if k != "schema"]
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        writer.writeheader()
        writer.writerow({k: _flatten(payload[k]) for k in keys})
        return buf.getvalue()
    lines = [f"{k}: {_flatten(v)}" for k, v in payload.items() if k != "schema"]
    return "\n".join(lines) + "\n"


def _rows_text(rows, fieldnames, fmt, command, extra=None):
    if fmt == "json":
        payload = {"schema": SCHEMA, "command": command}
        payload.update(extra or {})
        payload["rows"] = rows
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=fieldnames, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _flatten(row.get(k)) for k in fieldnames})
        return buf.getvalue()
    cells = [[_flatten(row.get(k)) for k in fieldnames] for row in rows]
    widths = [max([len(name)] + [len(c[j]) for c in cells])
              for j, name in enumerate(fieldnames)]
    lines = ["  ".join(name.ljust(w) for name, w in zip(fieldnames, widths))]
    for row in cells:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _write(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_classify(args):
    if args.lam is None:
        raise CLIError("classify needs --lambda \"a b c\"")
    lam = parse_lambda(args.lam)
    b = blattner(lam)
    payload = {
        "schema": SCHEMA,
        "command": "classify",
        "lambda": str(lam),
        "chamber": b.chamber,
        "Lambda": " ".join(str(x) for x in b.Lambda),
        "r": b.r,
        "s": b.s,
        "dual_lambda": str(dual_param(lam)),
        "formal_degree": frac_str(formal_degree(lam)),
        "case": None,
        "subcase": None,
        "parameters": None,
        "note": "",
    }
    try:
        case = case_from_hc_param(lam)
        payload["case"] = case.tag
        payload["subcase"] = case.subcase
        payload["parameters"] = dict(case.params)
    except BoundaryParameter as exc:
        payload["note"] = f"boundary: {exc}"
    _write(_payload_text(payload, args.fmt), args.out)
    return EXIT_OK


def cmd_coeff_ds(args):
    if args.lam is None:
        raise CLIError("coeff-ds needs --lambda \"a b c\"")
    lam = parse_lambda(args.lam)
    t = _as_float(args.t, "--t")
    if t is None:
        t = 1.0
    b = blattner(lam)
    rows = [{"i": i,
             "ctilde": ctilde(b.chamber, b.r, b.s, i, t),
             "c": c_coeff(b.chamber, b.r, b.s, i, t)}
            for i in range(b.r + 1)]
    payload = {
        "schema": SCHEMA,
        "command": "coeff-ds",
        "lambda": str(lam),
        "chamber": b.chamber,
        "r": b.r,
        "s": b.s,
        "t": t,
        "trace": psi_radial(b.chamber, b.r, b.s, t),
        "coefficients": rows,
    }
    _write(_payload_text(payload, args.fmt), args.out)
    return EXIT_OK


def cmd_coeff_weil(args):
    case = _case_from_args(args)
    t = _as_float(args.t, "--t")
    if t is None:
        t = 1.0
    value = weil_coeff(case, t, KPoint(), KPoint())
    norm = phi_norm_sq(case)
    payload = {
        "schema": SCHEMA,
        "command": "coeff-weil",
        "case": case.tag,
        "subcase": case.subcase,
        "parameters": dict(case.params),
        "sigma_dual": " ".join(str(x) for x in case.sigma_dual),
        "t": t,
        "value_re": value.real,
        "value_im": value.imag,
        "norm_sq": frac_str(norm.q),
        "norm_sq_pi_power": -norm.d,
    }
    _write(_payload_text(payload, args.fmt), args.out)
    return EXIT_OK


def cmd_zeta(args):
    if args.lam is not None and args.case is not None:
        raise CLIError("give either --case with parameters or --lambda, not both")
    if args.lam is not None:
        case = case_from_hc_param(parse_lambda(args.lam))
    else:
        case = _case_from_args(args)
    config = _quad_config(args)
    try:
        closed = zeta_closed_form(case)
        numeric = zeta_numeric(case, config)
    except BoundaryParameter as exc:
        raise CLIError(f"boundary parameter: {exc}") from None
    rel = abs(numeric - float(closed.ratio)) / float(closed.ratio)
    ok = rel <= config.tol
    lam = case.hc_param()
    c2 = c_squared_projection(lam)
    payload = {
        "schema": SCHEMA,
        "command": "zeta",
        "case": case.tag,
        "subcase": case.subcase,
        "parameters": dict(case.params),
        "lambda": str(lam),
        "zeta_ratio": frac_str(closed.ratio),
        "zeta_numeric": numeric,
        "rel_error": rel,
        "tol": config.tol,
        "ok": ok,
        "formal_degree": frac_str(formal_degree(lam)),
        "c_squared": frac_str(c2),
        "consistent": consistency_check(lam),
    }
    _write(_payload_text(payload, args.fmt), args.out)
    return EXIT_OK if ok else EXIT_VERIFY


def _check(name, passed, count, worst):
    return {"name": name, "passed": bool(passed), "count": count,
            "worst": float(worst)}


def _rs_grid(chamber, bound):
    out = []
    for r in range(bound + 1):
        if chamber == "I":
            out.extend((r, s) for s in range(3, 4 + bound))
        elif chamber == "II":
            out.extend((r, -3 - r - k) for k in range(bound + 1))
        else:
            out.extend((r, s) for s in range(-bound - 2, 0) if r + s >= 1)
    return out


def _case_grid(tag, bound):
    names = CASE_PARAM_NAMES[tag]
    for vals in product(range(bound + 1), repeat=3):
        try:
            yield DualPairCase(tag, dict(zip(names, vals)))
        except ValueError:
            continue


def _suite_identities(bound):
    worst = Fraction(0)
    n = 0
    for mu in range(bound + 1):
        for r in range(bound + 1):
            want = Fraction(math.factorial(mu + r + 1), r + 1)
            for i in range(r + 1):
                worst = max(worst, abs(binom_factorial_sum(mu, r, i) - want))
                n += 1
    checks = [_check("identities/factorial-sum", worst == 0 and n > 0, n, worst)]
    worst = Fraction(0)
    n = 0
    for r in range(bound + 1):
        for i in range(r + 1):
            worst = max(worst, abs(vandermonde_sum(r, i) - binomial(r, i)))
            n += 1
    checks.append(_check("identities/vandermonde", worst == 0 and n > 0, n, worst))
    return checks


def _suite_ode(bound):
    checks = []
    for chamber in ("I", "II", "III"):
        worst = 0.0
        n = 0
        for r, s in _rs_grid(chamber, bound):
            for i in range(r + 1):
                for t in T_CHECK:
                    worst = max(worst, *map(abs, schmid_residual(chamber, r, s, i, t)))
                    n += 1
        checks.append(_check(f"ode/schmid-{chamber}", worst < SCHMID_TOL, n, worst))
    worst = 0.0
    n = 0
    for r, s in _rs_grid("III", bound):
        for i in range(r + 1):
            for t in T_CHECK:
                worst = max(worst, abs(riemann_p_residual(r, s, i, t)))
                n += 1
    checks.append(_check("ode/riemann-p", worst < RIEMANN_TOL, n, worst))
    return checks


def _suite_harmonics(bound):
    checks = []
    for tag in CASE_TAGS:
        ok = True
        n = 0
        for case in _case_grid(tag, bound):
            h = build_harmonic(case)
            ok = ok and harmonicity_check(h) and weight_check(h)
            n += 1
        checks.append(_check(f"harmonics/{tag}", ok and n > 0, n, 0.0 if ok else 1.0))
    return checks


def _suite_zeta(config, seed):
    worst = 0.0
    for tag, params in CASE_PLAN:
        case = DualPairCase(tag, params)
        want = float(zeta_closed_form(case).ratio)
        worst = max(worst, abs(zeta_numeric(case, config) - want) / want)
    checks = [_check("zeta/closed-vs-quadrature", worst < ZETA_TOL,
                     len(CASE_PLAN), worst)]
    if seed is not None:
        rng = random.Random(seed)
        worst = 0.0
        n = 0
        for tag, params in CASE_PLAN[::2][:6]:
            case = DualPairCase(tag, params)
            for _ in range(3):
                t = rng.uniform(0.2, 1.5)
                k, kp = KPoint.random(rng), KPoint.random(rng)
                diff = abs(bargmann_oracle(case, t, k, kp) - weil_coeff(case, t, k, kp))
                worst = max(worst, diff)
                n += 1
        checks.append(_check("zeta/oracle-sample", worst < ORACLE_TOL, n, worst))
    return checks


def _suite_projection(bound):
    consistent = True
    in_range = True
    compact_one = True
    n = 0
    boundary = 0
    for tag in CASE_TAGS:
        for case in _case_grid(tag, bound):
            if case.subcase is None:
                boundary += 1
                continue
            lam = case.hc_param()
            c2 = c_squared_projection(lam)
            consistent = consistent and consistency_check(lam)
            in_range = in_range and 0 < c2 <= 1
            if tag in ("A", "B"):
                compact_one = compact_one and c2 == 1
            n += 1
    return [
        _check("projection/degree-consistency", consistent and n > 0, n, 0.0),
        _check("projection/range", in_range, n, 0.0),
        _check("projection/compact-saturation", compact_one, n, 0.0),
        _check("projection/boundary-rows", True, boundary, 0.0),
    ]


def cmd_verify(args):
    bound = _as_int(args.grid_max, "--grid-max")
    if bound is None:
        bound = 4
    if bound < 0:
        raise CLIError("--grid-max must be nonnegative")
    seed = _as_int(args.seed, "--seed")
    config = _quad_config(args)
    checks = []
    if args.suite in ("identities", "all"):
        checks += _suite_identities(bound)
    if args.suite in ("ode", "all"):
        checks += _suite_ode(bound)
    if args.suite in ("harmonics", "all"):
        checks += _suite_harmonics(min(bound, 4))
    if args.suite in ("zeta", "all"):
        checks += _suite_zeta(config, seed)
    if args.suite in ("projection", "all"):
        checks += _suite_projection(bound)
    failed = [c for c in checks if not c["passed"]]
    if args.fmt == "json":
        payload = {"schema": SCHEMA, "command": "verify", "suite": args.suite,
                   "grid_max": bound, "passed": not failed, "checks": checks}
        _write(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        lines = [f"{c['name']}: {'pass' if c['passed'] else 'FAIL'}"
                 f"  n={c['count']}  worst={c['worst']:.3e}" for c in checks]
        lines.append(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
        _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK if not failed else EXIT_VERIFY


def _parse_range(value, fallback):
    if value is None:
        return range(fallback + 1)
    text = str(value).strip()
    if ".." in text:
        lo, _, hi = text.partition("..")
        try:
            return range(int(lo), int(hi) + 1)
        except ValueError:
            raise CLIError(f"bad range {text!r}, expected LO..HI") from None
    return range(int(_as_int(text, "parameter")), int(_as_int(text, "parameter")) + 1)


def _table_row(tag, params):
    names = CASE_PARAM_NAMES[tag]
    row = {"case": tag}
    row.update({name: params[name] for name in names})
    row.update({"subcase": "", "lambda": "", "formal_degree": "",
                "zeta_ratio": "", "c_squared": "", "c_squared_decimal": "",
                "note": ""})
    try:
        case = DualPairCase(tag, params)
    except ValueError:
        row["note"] = "not-dominant"
        return row
    if case.subcase is None:
        row["note"] = "boundary"
        return row
    lam = case.hc_param()
    c2 = c_squared_projection(lam)
    row["subcase"] = case.subcase
    row["lambda"] = str(lam)
    row["formal_degree"] = frac_str(formal_degree(lam))
    row["zeta_ratio"] = frac_str(zeta_closed_form(case).ratio)
    row["c_squared"] = frac_str(c2)
    row["c_squared_decimal"] = float(c2)
    return row


def cmd_table(args):
    tag = args.case
    if tag is None:
        raise CLIError("table needs --case")
    tag = str(tag).upper()
    if tag not in CASE_TAGS:
        raise CLIError(f"unknown case {args.case!r}")
    bound = _as_int(args.grid_max, "--grid-max")
    if bound is None:
        bound = 3
    names = CASE_PARAM_NAMES[tag]
    ranges = [_parse_range(getattr(args, name, None), bound) for name in names]
    # cells are independent; rows are assembled in grid order
    rows = [_table_row(tag, dict(zip(names, vals))) for vals in product(*ranges)]
    fieldnames = (["case"] + list(names)
                  + ["subcase", "lambda", "formal_degree", "zeta_ratio",
                     "c_squared", "c_squared_decimal", "note"])
    _write(_rows_text(rows, fieldnames, args.fmt, "table", {"case": tag}),
           args.out)
    return EXIT_OK


def _add_common(parser, params=False, quad=False, t_flag=False):
    parser.add_argument("--format", dest="fmt", default=None,
                        help="json, csv, or plain (default plain)")
    parser.add_argument("--out", default=None, help="output file (default stdout)")
    parser.add_argument("--config", default=None,
                        help="key=value file mirroring the flags; flags win")
    if params:
        parser.add_argument("--case", default=None,
                            help="dual-pair case tag: A, B, C1, C2, D1, D2")
        for name in PARAM_FLAGS:
            parser.add_argument(f"--{name}", default=None)
    if quad:
        parser.add_argument("--quad-t", dest="quad_t", default=None,
                            help="radial node count (default 64)")
        parser.add_argument("--quad-theta", dest="quad_theta", default=None,
                            help="angular node count (default 64)")
        parser.add_argument("--tol", default=None,
                            help="relative tolerance (default 1e-8)")
    if t_flag:
        parser.add_argument("--t", default=None, help="radial coordinate (default 1.0)")


def get_args(argv=None):
    parser = argparse.ArgumentParser(
        prog="u21zeta",
        description="Discrete-series zeta integrals for U(2,1): "
                    "classification, coefficients, dual-route evaluation.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="chamber and dual-pair case of a parameter")
    p.add_argument("--lambda", dest="lam", default=None,
                   help="three half-integers, e.g. \"-1/2 -5/2 -3/2\"")
    _add_common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("coeff-ds", help="radial coefficients of a trace")
    p.add_argument("--lambda", dest="lam", default=None)
    _add_common(p, t_flag=True)
    p.set_defaults(func=cmd_coeff_ds)

    p = sub.add_parser("coeff-weil", help="oscillator coefficient of a case")
    _add_common(p, params=True, t_flag=True)
    p.set_defaults(func=cmd_coeff_weil)

    p = sub.add_parser("zeta", help="dual-route zeta evaluation")
    p.add_argument("--lambda", dest="lam", default=None)
    _add_common(p, params=True, quad=True)
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("verify", help="run an invariant suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--grid-max", dest="grid_max", default=None,
                   help="parameter bound (default 4)")
    p.add_argument("--seed", default=None,
                   help="enable the seeded oracle spot check in the zeta suite")
    _add_common(p, quad=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="sweep a case over parameter ranges")
    p.add_argument("--grid-max", dest="grid_max", default=None,
                   help="default range bound (default 3)")
    _add_common(p, params=True)
    p.set_defaults(func=cmd_table)

    return parser.parse_args(argv)


def main(argv=None):
    try:
        args = get_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if getattr(args, "config", None):
            apply_config(args, read_config(args.config))
        if getattr(args, "fmt", None) is None:
            args.fmt = "plain"
        if args.fmt not in FORMATS:
            raise CLIError(f"unknown format {args.fmt!r}")
        return args.func(args)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotRegular, NotCompactDominant, NoCaseMatch, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
