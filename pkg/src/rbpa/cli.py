"""Command line front end.

Subcommands: seq (tabulate a family), egf (dump series coefficients),
oracle (brute-force counts), cycle (last-digit periodicity check),
verify (run the identity registry).

Exit codes: 0 on success, 1 when a verification fails, 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import csv
import enum
import json
import sys
from fractions import Fraction

from . import bernoulli, counts, identities, oracle
from .egf import exp_series


class OutputFormat(enum.Enum):
    JSON = "json"
    CSV = "csv"
    BFILE = "bfile"


class UsageError(Exception):
    pass


def _scalar_text(value) -> str:
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def _scalar_json(value):
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return value.numerator
        return f"{value.numerator}/{value.denominator}"
    return value


def _emit_values(family: str, params: dict, values, fmt: OutputFormat, out) -> None:
    """values[i] is the sequence member at n = i."""
    if fmt is OutputFormat.JSON:
        payload = {
            "family": family,
            "params": {k: _scalar_json(v) for k, v in params.items()},
            "values": [_scalar_json(v) for v in values],
        }
        out.write(json.dumps(payload, sort_keys=True, separators=(",", ":")))
        out.write("\n")
    elif fmt is OutputFormat.CSV:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n", "value"])
        for n, v in enumerate(values):
            writer.writerow([n, _scalar_text(v)])
    else:
        for v in values:
            if isinstance(v, Fraction) and v.denominator != 1:
                raise UsageError(
                    "bfile output needs integer values; use json or csv"
                )
        for n, v in enumerate(values):
            out.write(f"{n} {_scalar_text(v)}\n")


def _parse_index(text: str) -> tuple[int, ...]:
    try:
        entries = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"bad index {text!r}; expected e.g. -2,0,0") from None
    if not entries:
        raise UsageError("index must have at least one entry")
    return entries


def _negated(entries: tuple[int, ...]) -> tuple[int, ...]:
    if any(e > 0 for e in entries):
        raise UsageError(
            "this family needs non-positive index entries, e.g. -2,0"
        )
    return tuple(-e for e in entries)


def _family_values(args, n_max: int):
    """(family tag, params dict, list of values for n = 0..n_max)."""
    family = args.family
    if family == "p":
        if args.r is None or args.j is None:
            raise UsageError("family p needs --r and --j")
        table = counts.p_egf(args.r, args.j, n_max)
        return family, {"r": args.r, "j": args.j}, list(table.values)
    if family == "B":
        if args.index is None:
            raise UsageError("family B needs --index")
        entries = _parse_index(args.index)
        params = {"index": list(entries)}
        if len(entries) == 1:
            vals = [bernoulli.poly_bernoulli(entries[0], n) for n in range(n_max + 1)]
        else:
            idx = _negated(entries)
            vals = [bernoulli.multi_poly_bernoulli(idx, n) for n in range(n_max + 1)]
        return family, params, vals
    if family == "U":
        if args.index is None:
            raise UsageError("family U needs --index")
        entries = _parse_index(args.index)
        params = {"index": list(entries)}
        if all(e <= 0 for e in entries):
            idx = tuple(-e for e in entries)
            vals = [bernoulli.u_number(idx, n) for n in range(n_max + 1)]
        else:
            vals = [bernoulli.u_stirling_sum(entries, n) for n in range(n_max + 1)]
        return family, params, vals
    if family == "W":
        if args.r is None:
            raise UsageError("family W needs --r")
        if args.r < 1:
            raise UsageError("family W needs --r >= 1")
        vals = [bernoulli.w_family(args.r, n) for n in range(n_max + 1)]
        return family, {"r": args.r}, vals
    raise UsageError(f"unknown family {family!r}")


def cmd_seq(args) -> int:
    if args.n_max < 0:
        raise UsageError("--n-max must be >= 0")
    family, params, vals = _family_values(args, args.n_max)
    _emit_values(family, params, vals, OutputFormat(args.format), sys.stdout)
    return 0


def cmd_egf(args) -> int:
    if args.order < 0:
        raise UsageError("--order must be >= 0")
    if args.r < 0 or args.j < 0:
        raise UsageError("--r and --j must be >= 0")
    series = exp_series(args.r, args.order) * (
        counts.two_minus_exp(args.order) ** args.j
    ).reciprocal()
    if args.reciprocal:
        series = series.reciprocal()
    vals = [series.coeff(n) for n in range(args.order + 1)]
    params = {"r": args.r, "j": args.j, "reciprocal": bool(args.reciprocal)}
    _emit_values("egf", params, vals, OutputFormat(args.format), sys.stdout)
    return 0


ORACLE_CLI_MAX = 7


def cmd_oracle(args) -> int:
    if not 0 <= args.n_max <= ORACLE_CLI_MAX:
        raise UsageError(f"--n-max must be between 0 and {ORACLE_CLI_MAX}")
    if args.r < 0 or args.j < 0:
        raise UsageError("--r and --j must be >= 0")
    vals = [oracle.enumerate_rbpa(n, args.r, args.j) for n in range(args.n_max + 1)]
    _emit_values(
        "p", {"r": args.r, "j": args.j, "oracle": True}, vals,
        OutputFormat(args.format), sys.stdout,
    )
    return 0


def cmd_cycle(args) -> int:
    if args.n_max < 9:
        raise UsageError("--n-max must be >= 9 so every residue is checked")
    family, params, vals = _family_values(args, args.n_max)
    for v in vals:
        if isinstance(v, Fraction) and v.denominator != 1:
            raise UsageError("cycle check needs an integer family")
    holds = counts.last_digit_cycle_check(vals[1:], offset=1)
    payload = {
        "family": family,
        "params": {k: _scalar_json(v) for k, v in params.items()},
        "offset": 1,
        "n_max": args.n_max,
        "holds": holds,
    }
    sys.stdout.write(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    sys.stdout.write("\n")
    return 0 if holds else 1


def _parse_overrides(pairs) -> dict:
    overrides = {}
    for pair in pairs or []:
        if "=" not in pair:
            raise UsageError(f"bad override {pair!r}; expected name=v1,v2,...")
        name, _, raw = pair.partition("=")
        try:
            overrides[name.strip()] = [int(v) for v in raw.split(",")]
        except ValueError:
            raise UsageError(f"override values must be integers: {pair!r}") from None
    return overrides


def _print_coverage(out) -> None:
    rows = identities.REGISTRY.coverage_table()
    width = max(len(r["id"]) for r in rows)
    out.write(f"{'ID':<{width}}  MODE        LHS ROUTE / RHS ROUTE\n")
    for row in rows:
        mode = "diagnostic" if row["diagnostic"] else "check"
        out.write(f"{row['id']:<{width}}  {mode:<10}  {row['lhs']}\n")
        out.write(f"{'':<{width}}  {'':<10}  {row['rhs']}\n")
        out.write(f"{'':<{width}}  {'':<10}  [{row['anchor']}]\n")
    out.write(f"{len(rows)} identities registered\n")


def cmd_verify(args) -> int:
    if args.list:
        _print_coverage(sys.stdout)
        return 0
    if args.identity is None:
        if args.set:
            raise UsageError("--set needs a specific identity id")
        summary = identities.run_all(profile=args.profile)
        sys.stdout.write(summary.to_json())
        sys.stdout.write("\n")
        return summary.exit_code
    overrides = _parse_overrides(args.set)
    try:
        spec = identities.REGISTRY.get(args.identity)
        reports = identities.run_identity(
            args.identity, overrides=overrides or None, profile=args.profile
        )
    except identities.UnknownIdentityError:
        raise UsageError(
            f"unknown identity {args.identity!r}; see `rbpa verify --list`"
        ) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(identities.reports_to_json(reports))
    sys.stdout.write("\n")
    if not spec.diagnostic and any(not r.passed for r in reports):
        return 1
    return 0


def _add_format(parser) -> None:
    parser.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.JSON.value,
        help="output format (default json)",
    )


def _add_family(parser) -> None:
    parser.add_argument(
        "--family", required=True, choices=["p", "B", "U", "W"],
        help="p: barred counts; B, U: the two number families; W: 2r^n-(r-1)^n",
    )
    parser.add_argument("--r", type=int, default=None)
    parser.add_argument("--j", type=int, default=None)
    parser.add_argument(
        "--index", default=None,
        help="comma-separated signed upper index, e.g. -2,0,0",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rbpa",
        description="exact arrangement counts and their number families",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_seq = sub.add_parser("seq", help="tabulate a family for n = 0..n_max")
    _add_family(p_seq)
    p_seq.add_argument("--n-max", type=int, required=True)
    _add_format(p_seq)
    p_seq.set_defaults(func=cmd_seq)

    p_egf = sub.add_parser(
        "egf", help="dump coefficients of e^{rm}/(2-e^m)^j or its reciprocal"
    )
    p_egf.add_argument("--r", type=int, required=True)
    p_egf.add_argument("--j", type=int, required=True)
    p_egf.add_argument("--order", type=int, required=True)
    p_egf.add_argument(
        "--reciprocal", action="store_true",
        help="dump the reciprocal series instead",
    )
    _add_format(p_egf)
    p_egf.set_defaults(func=cmd_egf)

    p_oracle = sub.add_parser(
        "oracle", help="brute-force the counts by direct enumeration"
    )
    p_oracle.add_argument("--r", type=int, required=True)
    p_oracle.add_argument("--j", type=int, required=True)
    p_oracle.add_argument(
        "--n-max", type=int, required=True,
        help=f"largest n to enumerate, at most {ORACLE_CLI_MAX}",
    )
    _add_format(p_oracle)
    p_oracle.set_defaults(func=cmd_oracle)

    p_cycle = sub.add_parser(
        "cycle", help="check the period-4 last-digit cycle from n = 1"
    )
    _add_family(p_cycle)
    p_cycle.add_argument(
        "--n-max", type=int, required=True, help="at least 9",
    )
    p_cycle.set_defaults(func=cmd_cycle)

    p_verify = sub.add_parser("verify", help="run the identity registry")
    p_verify.add_argument(
        "identity", nargs="?", default=None,
        help="single identity id; omit to run everything",
    )
    p_verify.add_argument(
        "--profile", choices=sorted(identities.PROFILES), default="quick",
    )
    p_verify.add_argument(
        "--set", action="append", metavar="NAME=V1,V2,...",
        help="override one parameter range (repeatable)",
    )
    p_verify.add_argument(
        "--list", action="store_true", help="print the coverage table and exit",
    )
    p_verify.set_defaults(func=cmd_verify)

    return parser


def _glue_index(argv: list[str]) -> list[str]:
    # argparse reads "-2,0" as a flag, so fold `--index -2,0` into one token
    out = []
    skip = False
    for pos, token in enumerate(argv):
        if skip:
            skip = False
            continue
        if token == "--index" and pos + 1 < len(argv):
            out.append(f"--index={argv[pos + 1]}")
            skip = True
        else:
            out.append(token)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    args = parser.parse_args(_glue_index(argv))
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"rbpa: {exc}", file=sys.stderr)
        return 2
    except (ValueError, oracle.SizeLimitError) as exc:
        print(f"rbpa: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
