"""Command-line front end.

Subcommands: eval, table, verify, fuzz, bench, presets, vectors.  Results go
to stdout as plain text, JSON or CSV; diagnostics go to stderr.

Exit codes: 0 ok, 1 identity falsified / fuzz failures, 2 bad flags,
3 strategy domain error, 4 strategies disagree in bench.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import statistics
import sys
import time
from typing import Any, Optional, Sequence

from .core import HoradamParams, matrix_power_eval, recurrence_eval
from .errors import DomainError, HoradamError, UnknownPreset
from .identities import FuzzBounds, IdentityId, IdentityInstance, fuzz_verify, verify
from .presets import PRESET_NAMES, all_presets, corollary_vectors, preset
from .quadratic import binet_eval
from .strategy import EvalStrategy, evaluate_counted

DEFAULT_MAX_N = 10**6
EXIT_OK, EXIT_FALSIFIED, EXIT_USAGE, EXIT_DOMAIN, EXIT_DISAGREE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def parse_params(text: str) -> HoradamParams:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"expected a,b,p,q, got {text!r}")
    try:
        return HoradamParams(*(int(x) for x in parts))
    except ValueError:
        raise argparse.ArgumentTypeError(f"non-integer entry in {text!r}") from None


def non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def positive(text: str) -> int:
    value = non_negative(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def strategy_arg(text: str) -> EvalStrategy:
    try:
        return EvalStrategy.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def int_list(text: str) -> list[int]:
    return [non_negative(x) for x in text.split(",") if x.strip()]


def strategy_list(text: str) -> list[EvalStrategy]:
    return [strategy_arg(x) for x in text.split(",") if x.strip()]


def _join_negative_values(argv: Sequence[str]) -> list[str]:
    # argparse reads "--params -1,2,3,4" as two flags; glue the value on
    out: list[str] = []
    it = iter(argv)
    for arg in it:
        if arg in ("--params", "--n-list"):
            nxt = next(it, None)
            out.append(arg if nxt is None else f"{arg}={nxt}")
        else:
            out.append(arg)
    return out


# -- output -----------------------------------------------------------------


def _stringify(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {k: _stringify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_stringify(v) for v in value]
    return value


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


TABULAR = ("table", "bench", "presets", "vectors")


def render(record: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_stringify(record), indent=2) + "\n"
    rows = record["results"]
    if fmt == "csv":
        buf = io.StringIO()
        fields: list[str] = []
        for row in rows:
            fields.extend(k for k in row if k not in fields)
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\r\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _cell(v) for k, v in row.items()})
        return buf.getvalue()
    return _render_plain(record)


def _render_plain(record: dict) -> str:
    rows = record["results"]
    lines = []
    if len(rows) == 1 and record["command"] not in TABULAR:
        lines.extend(f"{k}: {_cell(v)}" for k, v in rows[0].items())
    elif rows:
        fields: list[str] = []
        for row in rows:
            fields.extend(k for k in row if k not in fields)
        table = [fields] + [[_cell(row.get(k)) for k in fields] for row in rows]
        widths = [max(len(r[c]) for r in table) for c in range(len(fields))]
        for r in table:
            lines.append("  ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip())
    for fail in record.get("failures", []):
        lines.append("FAIL " + " ".join(f"{k}={_cell(v)}" for k, v in fail.items()))
    return "\n".join(lines) + "\n"


# -- shared argument handling -----------------------------------------------


def _add_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", help=f"one of: {', '.join(PRESET_NAMES)}")
    src.add_argument("--params", type=parse_params, metavar="A,B,P,Q")
    p.add_argument("--p", type=int, help="p for the generalized presets")
    p.add_argument("--q", type=int, help="q for the generalized presets")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    p.add_argument(
        "--max-n",
        type=non_negative,
        default=None,
        help=f"largest index allowed (default: $HORADAM_MAX_N or {DEFAULT_MAX_N})",
    )


def _resolve_params(args: argparse.Namespace) -> tuple[HoradamParams, Optional[str]]:
    if args.params is not None:
        if args.p is not None or args.q is not None:
            raise UsageError("--p/--q only apply to --preset")
        return args.params, None
    try:
        sp = preset(args.preset, args.p, args.q)
    except UnknownPreset:
        raise UsageError(f"unknown preset {args.preset!r}") from None
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    return sp.params, sp.name


def _max_n(args: argparse.Namespace) -> int:
    if args.max_n is not None:
        return args.max_n
    env = os.environ.get("HORADAM_MAX_N")
    if env:
        try:
            return non_negative(env)
        except argparse.ArgumentTypeError as exc:
            raise UsageError(f"HORADAM_MAX_N: {exc}") from None
    return DEFAULT_MAX_N


def _cap(args: argparse.Namespace, n: int) -> None:
    limit = _max_n(args)
    if n > limit:
        raise UsageError(f"index {n} exceeds the safety cap {limit}; raise it with --max-n")


def _params_dict(params: HoradamParams) -> dict:
    return {"a": params.a, "b": params.b, "p": params.p, "q": params.q}


def _inputs(params: HoradamParams, name: Optional[str], **extra: Any) -> dict:
    return {"preset": name, "params": _params_dict(params), **extra}


# -- commands ---------------------------------------------------------------


def cmd_eval(args: argparse.Namespace) -> tuple[dict, int]:
    params, name = _resolve_params(args)
    _cap(args, args.n)
    start = time.perf_counter_ns()
    value, ops = evaluate_counted(params, args.n, args.strategy)
    elapsed = time.perf_counter_ns() - start
    row = {
        "n": args.n,
        "strategy": str(args.strategy),
        "value": value,
        "timing_ns": elapsed,
        "mul_count": ops.matmul if ops is not None and args.strategy.kind == "matrix" else None,
        "op_count": ops.bigint_ops if ops is not None else None,
    }
    record = {"command": "eval", "inputs": _inputs(params, name, n=args.n, strategy=str(args.strategy)), "results": [row]}
    return record, EXIT_OK


def table_rows(params: HoradamParams, n_max: int) -> list[dict]:
    with_binet = params.discriminant != 0
    rows = []
    for n in range(n_max + 1):
        rec = recurrence_eval(params, n)
        mat = matrix_power_eval(params, n)
        bin_ = binet_eval(params, n) if with_binet else None
        agree = rec == mat and (bin_ is None or bin_ == rec)
        rows.append({"n": n, "recurrence": rec, "matrix": mat, "binet": bin_, "agree": agree})
    return rows


def cmd_table(args: argparse.Namespace) -> tuple[dict, int]:
    params, name = _resolve_params(args)
    _cap(args, args.n_max)
    record = {
        "command": "table",
        "inputs": _inputs(params, name, n_max=args.n_max),
        "results": table_rows(params, args.n_max)
    }
    return record, EXIT_OK


def _report_row(report) -> dict:
    inst = report.instance
    return {
        "identity": inst.id.value,
        "a": inst.params.a,
        "b": inst.params.b,
        "p": inst.params.p,
        "q": inst.params.q,
        "i": inst.i,
        "n": inst.n,
        "index": inst.n * inst.i + inst.i,
        "lhs": report.lhs,
        "rhs": report.rhs,
        "holds": report.holds,
    }


def cmd_verify(args: argparse.Namespace) -> tuple[dict, int]:
    params, name = _resolve_params(args)
    _cap(args, args.n * args.i + args.i)
    report = verify(IdentityInstance(IdentityId(args.identity), params, args.i, args.n))
    record = {
        "command": "verify",
        "inputs": _inputs(params, name, identity=args.identity, i=args.i, n=args.n),
        "results": [_report_row(report)],
    }
    return record, EXIT_OK if report.holds else EXIT_FALSIFIED


def cmd_fuzz(args: argparse.Namespace) -> tuple[dict, int]:
    bounds = FuzzBounds(args.param_bound, args.i_max, args.n_max)
    summary = fuzz_verify(args.identity, args.trials, bounds, args.seed)
    failures = [{"trial": k, **_report_row(rep)} for k, rep in summary.failures]
    record = {
        "command": "fuzz",
        "inputs": {
            "identity": summary.id.value,
            "trials": args.trials,
            "seed": args.seed,
            "param_bound": bounds.param_bound,
            "i_max": bounds.i_max,
            "n_max": bounds.n_max,
        },
        "results": [{"identity": summary.id.value, "trials": summary.trials, "failures": len(failures)}],
        "failures": failures,
    }
    return record, EXIT_OK if not failures else EXIT_FALSIFIED


def cmd_bench(args: argparse.Namespace) -> tuple[dict, int]:
    params, name = _resolve_params(args)
    if not args.n_list:
        raise UsageError("--n-list is empty")
    _cap(args, max(args.n_list))
    strategies = args.strategies
    # correctness gate: every applicable strategy must agree before any timing
    first: dict[tuple[int, str], Any] = {}
    for n in args.n_list:
        values = {}
        for s in strategies:
            try:
                values[str(s)] = evaluate_counted(params, n, s)
            except DomainError as exc:
                values[str(s)] = exc
        got = {v[0] for v in values.values() if not isinstance(v, Exception)}
        if len(got) > 1:
            names = ", ".join(k for k, v in values.items() if not isinstance(v, Exception))
            print(f"horadam bench: strategies disagree at n={n} ({names}); no timings reported", file=sys.stderr)
            return {}, EXIT_DISAGREE
        for key, v in values.items():
            first[(n, key)] = v
    rows = []
    for n in args.n_list:
        for s in strategies:
            result = first[(n, str(s))]
            if isinstance(result, Exception):
                rows.append({"n": n, "strategy": str(s), "applicable": False, "value_bits": None,
                             "median_ns": None, "mul_count": None, "op_count": None})
                continue
            value, ops = result
            samples = []
            for _ in range(args.repeat):
                start = time.perf_counter_ns()
                evaluate_counted(params, n, s)
                samples.append(time.perf_counter_ns() - start)
            rows.append({
                "n": n,
                "strategy": str(s),
                "applicable": True,
                "value_bits": value.bit_length(),
                "median_ns": int(statistics.median(samples)),
                "mul_count": ops.matmul if ops is not None and s.kind == "matrix" else None,
                "op_count": ops.bigint_ops if ops is not None else None,
            })
    record = {
        "command": "bench",
        "inputs": _inputs(params, name, n_list=list(args.n_list), strategies=[str(s) for s in strategies],
                          repeat=args.repeat),
        "results": rows
    }
    return record, EXIT_OK


def cmd_presets(args: argparse.Namespace) -> tuple[dict, int]:
    rows = []
    for sp in all_presets():
        row = {"name": sp.name, **_params_dict(sp.params), "companion": sp.companion_name}
        if sp.name.startswith("generalized"):
            # parameterized rows: show the symbols rather than a sample instance
            row.update(p="p", q="q", b="1" if sp.name.endswith("fibonacci") else "p")
        rows.append(row)
    return {"command": "presets", "inputs": {}, "results": rows}, EXIT_OK


def cmd_vectors(args: argparse.Namespace) -> tuple[dict, int]:
    vectors = corollary_vectors(args.corollary, args.i_max, args.n_max)
    rows = [
        {"corollary": v.corollary, "preset": v.preset, "i": v.i, "n": v.n, "index": v.index,
         "expected": v.expected, "printed": v.printed, "status": v.status}
        for v in vectors
    ]
    record = {
        "command": "vectors",
        "inputs": {"corollary": args.corollary.upper(), "i_max": args.i_max, "n_max": args.n_max},
        "results": rows
    }
    return record, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="horadam", description="Exact Horadam sequence terms and stride identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="compute W_n with one strategy")
    _add_source(p)
    p.add_argument("--n", type=non_negative, required=True)
    p.add_argument("--strategy", type=strategy_arg, default=EvalStrategy("recurrence"),
                   help="recurrence|matrix|binet|stride:I|binomial:I")
    _add_common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("table", help="terms 0..N from every applicable strategy")
    _add_source(p)
    p.add_argument("--n-max", type=non_negative, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="check one identity instance")
    _add_source(p)
    p.add_argument("--identity", choices=[x.value for x in IdentityId], required=True)
    p.add_argument("--i", type=positive, required=True)
    p.add_argument("--n", type=non_negative, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fuzz", help="check an identity at random parameter points")
    p.add_argument("--identity", choices=[x.value for x in IdentityId], required=True)
    p.add_argument("--trials", type=positive, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--param-bound", type=positive, default=9)
    p.add_argument("--i-max", type=positive, default=6)
    p.add_argument("--n-max", type=positive, default=12)
    _add_common(p)
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("bench", help="time strategies after checking they agree")
    _add_source(p)
    p.add_argument("--n-list", type=int_list, required=True, metavar="N1,N2,...")
    p.add_argument("--strategies", type=strategy_list, default=strategy_list("recurrence,matrix,binet"))
    p.add_argument("--repeat", type=positive, default=3)
    _add_common(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("presets", help="list the named sequences")
    _add_common(p)
    p.set_defaults(func=cmd_presets)

    p = sub.add_parser("vectors", help="regression vectors for the stride-sum corollaries")
    p.add_argument("--corollary", type=str.upper, choices=("C3", "C5"), required=True)
    p.add_argument("--i-max", type=positive, default=2)
    p.add_argument("--n-max", type=positive, default=8)
    _add_common(p)
    p.set_defaults(func=cmd_vectors)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    args = parser.parse_args(_join_negative_values(sys.argv[1:] if argv is None else argv))
    try:
        record, code = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except HoradamError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if record:
        sys.stdout.write(render(record, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
