"""Command line front end: construct, solve, check, sweep, and tabulate.

Exit codes are a stable contract: 0 all requested checks pass, 1 a clause or
check failed, 2 invalid input.  Rational parameters are given as "num/den"
strings; plain decimals are parsed as exact decimal fractions (0.4 becomes
2/5), never as binary floats.  The environment variable INTERLACE_FLOOR
overrides the default separation floor of 1e-9.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import families
from .families import FamilySpec, InvalidParameterError, ORTHOGONAL_KINDS, extra_point
from .interlacing import DEFAULT_FLOOR
from .poly import Polynomial
from .relations import (
    CHECK_IDS,
    CheckReport,
    run_check,
    oracle_down_one,
    oracle_pair_up,
    check_relation,
    check_pair_up,
)
from .rootfind import zeros_general, zeros_orthogonal

FAMILY_CHOICES = families.ALL_KINDS
ORACLE_MODES = {
    "pair-up": "pair-up",
    "down-one": "down-one",
    # spelled aliases kept for sweep files written against older scripts
    "thm1": "pair-up",
    "thm2star": "down-one",
}


def parse_fraction(text: str) -> Fraction:
    """Exact rational from "num/den" or decimal text (0.4 -> 2/5)."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidParameterError(f"cannot parse rational {text!r}: {exc}") from exc


def resolve_floor(value: float | None) -> float:
    if value is not None:
        return value
    env = os.environ.get("INTERLACE_FLOOR")
    if env:
        try:
            return float(env)
        except ValueError as exc:
            raise InvalidParameterError(f"bad INTERLACE_FLOOR {env!r}") from exc
    return DEFAULT_FLOOR


def _add_family_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--family", required=True, choices=FAMILY_CHOICES)
    sub.add_argument("--n", required=True, type=int)
    for name in ("alpha", "beta", "p", "N", "t", "w"):
        sub.add_argument(f"--{name}", default=None)


def _spec_from_args(args) -> FamilySpec:
    names = families.PARAM_NAMES[args.family]
    params = {}
    for name in names:
        raw = getattr(args, name)
        if raw is None:
            raise InvalidParameterError(f"{args.family} requires --{name}")
        params[name] = parse_fraction(raw)
    return FamilySpec.make(args.family, args.n, **params)


def _round_float(value: float, digits: int) -> float:
    return float(f"{value:.{digits}g}")


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_poly(args) -> int:
    spec = _spec_from_args(args)
    poly = families.monic_by_recurrence(spec)
    if args.float:
        poly = poly.to_float()
    print(json.dumps(poly.to_json()))
    return 0


def _zero_set_for(spec: FamilySpec):
    if spec.kind in ORTHOGONAL_KINDS:
        return zeros_orthogonal(spec)
    return zeros_general(families.monic_by_recurrence(spec))


def _family_label(spec: FamilySpec) -> str:
    bits = [spec.kind] + [f"{k}={v}" for k, v in spec.params] + [f"n={spec.n}"]
    return ";".join(bits)


def cmd_zeros(args) -> int:
    spec = _spec_from_args(args)
    zs = _zero_set_for(spec)
    digits = args.digits
    if args.plot_data:
        label = _family_label(spec)
        lines = [f"{_round_float(z, digits)},{label}" for z in zs.zeros]
        print("\n".join(["x,family"] + lines))
        return 0
    payload = {
        "zeros": [_round_float(z, digits) for z in zs.zeros],
        "bound": _round_float(zs.bound, 3) if zs.bound else 0.0,
        "method": zs.method,
    }
    print(json.dumps(payload))
    return 0


def _check_params_from_args(check_id: str, args) -> dict:
    from .relations import CHECK_TO_PAIR, PAIR_BUILDERS

    pair = CHECK_TO_PAIR[check_id]
    names = PAIR_BUILDERS[pair][1]
    params = {}
    for name in names:
        raw = getattr(args, name)
        if raw is None:
            raise InvalidParameterError(f"check {check_id} requires --{name}")
        params[name] = parse_fraction(raw)
    return params


def _report_text(report: CheckReport) -> str:
    lines = [f"check {report.check_id}  shape={report.shape}"]
    lines.append(
        "params: " + " ".join(f"{k}={v}" for k, v in report.params.items())
    )
    lines.append(f"E = {report.e_value} ({float(report.e_value):.6g})")
    lines.append(f"identity: {'PASS' if report.identity_ok else 'FAIL'}")
    hyp = " ".join(f"{k}={'yes' if v else 'NO'}" for k, v in report.hypotheses.items())
    if hyp:
        lines.append(f"hypotheses: {hyp}")
    lines.append(f"premise: {report.premise_kind or 'FAILED'}")
    lines.append(f"E position: {report.e_position}")
    for clause, result in report.clauses.items():
        lines.append(f"clause {clause}: {result.upper()}")
    for note in report.notes:
        lines.append(f"note: {note}")
    lines.append(f"result: {'PASS' if report.passed else 'FAIL'}")
    return "\n".join(lines) + "\n"


def cmd_check(args) -> int:
    floor = resolve_floor(args.floor)
    params = _check_params_from_args(args.check_id, args)
    report = run_check(args.check_id, args.n, params, floor)
    if args.json:
        print(json.dumps(report.to_json()))
    else:
        sys.stdout.write(_report_text(report))
    return 0 if report.passed else 1


TABLE2_BLOCKS = (
    {"block": 1, "n": 6, "alpha": Fraction(2), "beta": Fraction(14)},
    {"block": 2, "n": 7, "alpha": Fraction(14), "beta": Fraction(2)},
)


def table2_data(floor: float = DEFAULT_FLOOR) -> list[dict]:
    """Both comparison blocks: zeros of the base and shifted families plus
    the occupancy of the two extreme intervals by shifted-family zeros."""
    out = []
    for blk in TABLE2_BLOCKS:
        n, alpha, beta = blk["n"], blk["alpha"], blk["beta"]
        base = zeros_orthogonal(families.jacobi(alpha, beta, n))
        shifted = zeros_orthogonal(families.jacobi(alpha + 1, beta + 1, n))
        e = extra_point(families.jacobi(alpha, beta, n), "jacobi-3.6").value
        out.append(
            {
                "block": blk["block"],
                "n": n,
                "alpha": alpha,
                "beta": beta,
                "E": e,
                "x": list(base.zeros),
                "z": list(shifted.zeros),
                "left_occupied": shifted.zeros[0] < base.zeros[0],
                "right_occupied": shifted.zeros[-1] > base.zeros[-1],
            }
        )
    return out


def cmd_table2(args) -> int:
    digits = args.digits
    rows = []
    for blk in table2_data(resolve_floor(args.floor)):
        for k, (x, z) in enumerate(zip(blk["x"], blk["z"]), start=1):
            rows.append(
                {
                    "block": blk["block"],
                    "n": blk["n"],
                    "alpha": str(blk["alpha"]),
                    "beta": str(blk["beta"]),
                    "E": str(blk["E"]),
                    "k": k,
                    "x": f"{x:.{digits}g}",
                    "z": f"{z:.{digits}g}",
                    "left_occupied": str(blk["left_occupied"]).lower(),
                    "right_occupied": str(blk["right_occupied"]).lower(),
                }
            )
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(rows[0].keys()))
    writer.writeheader()
    writer.writerows(rows)
    _emit(buffer.getvalue(), args.output)
    return 0


def _parse_n_range(text) -> list[int]:
    if isinstance(text, list):
        lo, hi = int(text[0]), int(text[1])
        return list(range(lo, hi + 1))
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _sweep_grid(spec: dict) -> list[tuple[int, dict]]:
    ns = _parse_n_range(spec["n"])
    names = sorted(spec.get("params", {}))
    points: list[tuple[int, dict]] = []

    def expand(prefix: dict, remaining: list[str]):
        if not remaining:
            for n in ns:
                points.append((n, dict(prefix)))
            return
        name = remaining[0]
        for raw in spec["params"][name]:
            expand({**prefix, name: parse_fraction(str(raw))}, remaining[1:])

    expand({}, names)
    points.sort(key=lambda item: (sorted(item[1].items()), item[0]))
    return points


def _run_sweep_point(check_id: str, n: int, params: dict, floor: float) -> list[dict]:
    base = {"check": check_id, "n": n}
    try:
        report = run_check(check_id, n, params, floor)
    except InvalidParameterError as exc:
        row = dict(base)
        row.update({k: str(v) for k, v in params.items()})
        row.update({"clause": "build", "result": f"error: {exc}"})
        return [row]
    return report.csv_rows(base)


def _run_oracle_point(mode: str, n: int, seed: int, floor: float) -> list[dict]:
    if mode == "pair-up":
        rel = oracle_pair_up(n, seed)
        report = check_pair_up(rel, floor)
    else:
        rel = oracle_down_one(n, seed)
        report = check_relation(rel, floor)
    return [
        {
            "oracle": mode,
            "n": n,
            "seed": seed,
            "orientation": rel.params.get("orientation") or rel.params.get("e_region") or "",
            "result": "pass" if report.passed else "fail",
        }
    ]


def _rows_to_csv(rows: list[dict]) -> str:
    fieldnames: list[str] = []
    for row in rows:
        for key in row:
            if key not in fieldnames:
                fieldnames.append(key)
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=fieldnames, restval="")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def cmd_sweep(args) -> int:
    floor = resolve_floor(args.floor)
    workers = max(args.workers, 1)
    if args.oracle:
        mode = ORACLE_MODES[args.oracle]
        ns = _parse_n_range(args.n or "1..8")
        seeds = range(args.seeds)
        tasks = [(n, seed) for n in ns for seed in seeds]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(
                pool.map(lambda item: _run_oracle_point(mode, item[0], item[1], floor), tasks)
            )
    else:
        if not args.spec_file:
            raise InvalidParameterError("sweep needs a spec file or --oracle")
        try:
            with open(args.spec_file, "r", encoding="utf-8") as handle:
                spec = json.load(handle)
        except (OSError, json.JSONDecodeError) as exc:
            raise InvalidParameterError(f"cannot read sweep spec: {exc}") from exc
        if "check" not in spec or "n" not in spec:
            raise InvalidParameterError("sweep spec needs 'check' and 'n' fields")
        check_id = spec["check"]
        if check_id not in CHECK_IDS:
            raise InvalidParameterError(f"unknown check id {check_id!r} in sweep spec")
        grid = _sweep_grid(spec)
        wanted = set(spec.get("clauses", []))
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(
                pool.map(
                    lambda item: _run_sweep_point(check_id, item[0], item[1], floor), grid
                )
            )
        if wanted:
            keep = wanted | {"build"}
            chunks = [[row for row in rows if row["clause"] in keep] for rows in chunks]
    rows = [row for rows in chunks for row in rows]
    _emit(_rows_to_csv(rows), args.output)
    passed = sum(1 for row in rows if row["result"] == "pass")
    failed = sum(1 for row in rows if row["result"] == "fail")
    errored = sum(1 for row in rows if str(row["result"]).startswith("error"))
    print(
        f"sweep: {passed} pass, {failed} fail, {errored} error, {len(rows)} rows",
        file=sys.stderr,
    )
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="interlace",
        description="Polynomial families, real zeros, and interlacing checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_poly = sub.add_parser("poly", help="print a family member's coefficients")
    _add_family_flags(p_poly)
    p_poly.add_argument("--float", action="store_true", help="demote to float mode")
    p_poly.set_defaults(func=cmd_poly)

    p_zeros = sub.add_parser("zeros", help="print a family member's real zeros")
    _add_family_flags(p_zeros)
    p_zeros.add_argument("--digits", type=int, default=6)
    p_zeros.add_argument("--plot-data", action="store_true", dest="plot_data")
    p_zeros.add_argument("--floor", type=float, default=None)
    p_zeros.set_defaults(func=cmd_zeros)

    p_check = sub.add_parser("check", help="run one named interlacing check")
    p_check.add_argument("check_id", choices=sorted(CHECK_IDS))
    p_check.add_argument("--n", required=True, type=int)
    for name in ("alpha", "beta", "p", "N", "t", "w"):
        p_check.add_argument(f"--{name}", default=None)
    p_check.add_argument("--json", action="store_true")
    p_check.add_argument("--floor", type=float, default=None)
    p_check.set_defaults(func=cmd_check)

    p_table = sub.add_parser("table2", help="emit the two-block zero comparison table")
    p_table.add_argument("--digits", type=int, default=6)
    p_table.add_argument("--output", default=None)
    p_table.add_argument("--floor", type=float, default=None)
    p_table.set_defaults(func=cmd_table2)

    p_sweep = sub.add_parser("sweep", help="run a check over a parameter grid")
    p_sweep.add_argument("spec_file", nargs="?", default=None)
    p_sweep.add_argument("--oracle", choices=sorted(ORACLE_MODES), default=None)
    p_sweep.add_argument("--n", default=None, help="range like 1..8 (oracle mode)")
    p_sweep.add_argument("--seeds", type=int, default=100)
    p_sweep.add_argument("--workers", type=int, default=4)
    p_sweep.add_argument("--output", default=None)
    p_sweep.add_argument("--floor", type=float, default=None)
    p_sweep.set_defaults(func=cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
