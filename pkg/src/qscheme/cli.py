"""Command-line front door.

Commands:
    list    family registry as a table or JSON
    eval    coefficient/value tables for one family
    graph   scheme graph in DOT or JSON form
    verify  run a verification suite, exit 0 on pass / 1 on failure

All inputs and outputs are exact rationals ("p/q" strings); there are no
floating-point options, so no tolerance knobs exist at this boundary.
Exit codes: 0 pass, 1 verification failure, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import catalog, classifier, verify
from .core import (
    monic_poly,
    recurrence_coeff0,
    recurrence_coeffs,
)
from .errors import QSchemeError
from .qpolynomial import format_poly
from .qrational import format_rational, parse_rational

DEFAULT_HARD_CAP = 24


class UsageError(Exception):
    pass


def hard_cap() -> int:
    raw = os.environ.get("QSCHEME_HARD_CAP")
    if raw is None:
        return DEFAULT_HARD_CAP
    try:
        return int(raw)
    except ValueError as exc:
        raise UsageError(f"QSCHEME_HARD_CAP must be an integer, got {raw!r}") from exc


def load_config(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            config = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(config, dict):
        raise UsageError("config file must hold a JSON object")
    return config


def parse_param_overrides(pairs: list[str]) -> dict[str, Fraction]:
    out: dict[str, Fraction] = {}
    for pair in pairs:
        if "=" not in pair:
            raise UsageError(f"--param expects name=value, got {pair!r}")
        name, _, value = pair.partition("=")
        try:
            out[name.strip()] = parse_rational(value)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    return out


def _write_json(path: str, payload) -> None:
    Path(path).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")


# -- commands ------------------------------------------------------------------


def cmd_list(args: argparse.Namespace) -> int:
    rows = catalog.registry_json()
    if args.node:
        rows = [r for r in rows if r["node_label"] == args.node]
    if args.json:
        _write_json(args.json, rows)
    widths = (5, 45, 4, 22)
    print(f"{'node':<{widths[0]}} {'family':<{widths[1]}} {'kls':<{widths[2]}} {'parameters':<{widths[3]}} defaults")
    for r in rows:
        params = " ".join(p["name"] for p in r["params"]) or "-"
        defaults = (
            " ".join(f"{k}={v}" for k, v in r["defaults"].items()) or "-"
        )
        kls = str(r["kls_section"]) if r["kls_section"] is not None else "-"
        print(
            f"{r['node_label']:<{widths[0]}} {r['name']:<{widths[1]}} "
            f"{kls:<{widths[2]}} {params:<{widths[3]}} {defaults}"
        )
    return 0


def cmd_eval(args: argparse.Namespace, config: dict) -> int:
    if args.family not in catalog.FAMILIES:
        raise UsageError(
            f"unknown family {args.family!r}; `qscheme list` shows the registry"
        )
    cap = hard_cap()
    if args.n > cap:
        raise UsageError(f"n = {args.n} exceeds the hard cap {cap} (QSCHEME_HARD_CAP)")
    if args.n < 0:
        raise UsageError("n must be >= 0")
    spec = catalog.FAMILIES[args.family]
    params: dict[str, Fraction] = {}
    family_config = config.get("families", {}).get(args.family, {})
    for name, value in family_config.items():
        params[name] = parse_rational(str(value))
    params.update(parse_param_overrides(args.param))
    q = None
    if args.q is not None:
        q = parse_rational(args.q)
    elif "q" in config:
        q = parse_rational(str(config["q"]))
    xs = []
    if args.xs:
        xs = [parse_rational(piece) for piece in args.xs.split(",")]
    try:
        pv = catalog.instantiate(args.family, params or None, q)
    except QSchemeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    merged = catalog.coerce_params(spec, params or None)
    shown_params = " ".join(
        f"{k}={format_rational(v)}" for k, v in merged.items()
    )
    print(
        f"family {args.family} ({spec.name}), q = {format_rational(pv.q)}"
        + (f", {shown_params}" if shown_params else "")
    )
    header = f"{'n':>2}  {'u_n':<42} {'a_n':>12} {'b_n':>12}"
    header += "".join(f" {'u_n(' + format_rational(x) + ')':>14}" for x in xs)
    print(header)
    rows_json = []
    for n in range(args.n + 1):
        u = monic_poly(pv, n)
        if n == 0:
            a_n, b_n = recurrence_coeff0(pv), None
        else:
            a_n, b_n = recurrence_coeffs(pv, n)
        a_str = format_rational(a_n)
        b_str = format_rational(b_n) if b_n is not None else "-"
        line = f"{n:>2}  {format_poly(u):<42} {a_str:>12} {b_str:>12}"
        line += "".join(f" {format_rational(u(x)):>14}" for x in xs)
        print(line)
        rows_json.append(
            {
                "n": n,
                "coeffs": [format_rational(c) for c in u.coeffs],
                "poly": format_poly(u),
                "a_n": a_str,
                "b_n": b_str,
                "values": {format_rational(x): format_rational(u(x)) for x in xs},
            }
        )
    if args.json:
        _write_json(
            args.json,
            {
                "family": args.family,
                "vector": pv.to_json_dict(checked_depth=args.n + 1),
                "rows": rows_json,
            },
        )
    return 0


def cmd_graph(args: argparse.Namespace) -> int:
    graph = classifier.build_graph()
    blob = classifier.emit(graph, args.format)
    if args.output:
        Path(args.output).write_bytes(blob)
        print(
            f"wrote {args.output}: {graph.labeled_count} labeled nodes "
            f"(+{graph.unlisted_count} unlisted), {len(graph.arrows)} arrows"
        )
    else:
        sys.stdout.buffer.write(blob)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    cap = hard_cap()
    if args.n_max is not None and args.n_max > cap:
        raise UsageError(
            f"--n-max {args.n_max} exceeds the hard cap {cap} (QSCHEME_HARD_CAP)"
        )
    reports = verify.run_suite(
        args.suite,
        n_max=args.n_max,
        depth=args.depth,
        count=args.count,
        seed=args.seed,
    )
    failures = 0
    for report in reports:
        for check in report.checks:
            status = "pass" if check.passed else "FAIL"
            detail = f"  ({check.detail})" if check.detail else ""
            print(f"[{status}] {check.name}{detail}")
            failures += 0 if check.passed else 1
        for warning in report.warnings:
            print(f"[warn] {warning}")
        if report.seed is not None:
            print(f"[info] {report.suite}: seed = {report.seed}")
    total = sum(len(r.checks) for r in reports)
    print(f"{total - failures}/{total} checks passed")
    if args.json:
        _write_json(args.json, [r.to_json() for r in reports])
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qscheme",
        description="Exact-arithmetic toolkit for the q-Askey scheme "
        "(families, identities, classification graph, limit transitions).",
    )
    parser.add_argument(
        "--config", help="JSON config presetting q and family parameters"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="show the family registry")
    p_list.add_argument("--node", help="filter by diagram label, e.g. 4d")
    p_list.add_argument("--json", help="also write the registry as JSON")
    p_list.set_defaults(fn=lambda a, cfg: cmd_list(a))

    p_eval = sub.add_parser("eval", help="print u_0..u_n with recurrence data")
    p_eval.add_argument("family", help="registry key, e.g. 3a or 5b")
    p_eval.add_argument("-n", type=int, default=6, help="highest degree (default 6)")
    p_eval.add_argument("-q", help="base as a rational string, e.g. 1/2")
    p_eval.add_argument(
        "--param",
        action="append",
        default=[],
        metavar="NAME=VALUE",
        help="parameter override, repeatable",
    )
    p_eval.add_argument("--xs", help="comma-separated rational sample points")
    p_eval.add_argument("--json", help="also write the table as JSON")
    p_eval.set_defaults(fn=cmd_eval)

    p_graph = sub.add_parser("graph", help="emit the scheme graph")
    p_graph.add_argument(
        "--format", choices=("dot", "json"), default="dot", help="output format"
    )
    p_graph.add_argument("-o", "--output", help="output path (default stdout)")
    p_graph.set_defaults(fn=lambda a, cfg: cmd_graph(a))

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=verify.SUITES)
    p_verify.add_argument("--n-max", type=int, default=None)
    p_verify.add_argument("--depth", type=int, default=None)
    p_verify.add_argument("--count", type=int, default=None)
    p_verify.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p_verify.add_argument("--json", help="write the JSON report here")
    p_verify.set_defaults(fn=lambda a, cfg: cmd_verify(a))

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config)
        return args.fn(args, config)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QSchemeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
