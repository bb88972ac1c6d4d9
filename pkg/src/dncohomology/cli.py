"""Command-line front end.

    dncohom dims --D 2 --p 2..3 --d 0..8 --format csv
    dncohom theta-dims --D 3 --p 0..4 --d 0..6
    dncohom oracle --D 2 --p 0..2 --d 0..3 --u-max 2
    dncohom verify --suite paper-tables
    dncohom normalize --c 1,1

Exit codes: 0 success, 1 verification mismatch, 2 invalid arguments,
3 truncation unstable.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import theta
from .cohomology import BracketSpec, dim_table, normalize_bracket
from .grading import DimTable, Method
from .suites import SUITES
from .varcalc.oracle import TruncationUnstable, brute_cohomology

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_UNSTABLE = 0, 1, 2, 3

COMMANDS = ("dims", "theta-dims", "oracle", "verify", "normalize")
FORMATS = ("table", "csv", "json")


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    D: int = 2
    p_range: Tuple[int, int] = (0, 3)
    d_range: Tuple[int, int] = (0, 4)
    u_max: int = 2
    format: str = "table"
    seed: int = 0
    out: Optional[str] = None
    suite: Optional[str] = None
    c: Optional[Tuple[Fraction, ...]] = None

    def validate(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}")
        if self.command in ("dims", "theta-dims", "oracle"):
            if self.D < 1:
                raise UsageError("--D must be >= 1")
            for name, (lo, hi) in (("--p", self.p_range), ("--d", self.d_range)):
                if lo < 0 or hi < lo:
                    raise UsageError(f"{name} range {lo}..{hi} is empty or negative")
            if self.u_max < 0:
                raise UsageError("--u-max must be >= 0")
        if self.command == "verify" and self.suite not in SUITES:
            raise UsageError(f"--suite must be one of {', '.join(SUITES)}")
        if self.command == "normalize" and not self.c:
            raise UsageError("--c is required for normalize")


def parse_range(text: str) -> Tuple[int, int]:
    """'a..b' or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        v = int(text)
        return v, v
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use a..b") from None


def parse_vector(text: str) -> Tuple[Fraction, ...]:
    try:
        return tuple(Fraction(x.strip()) for x in text.split(",") if x.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad rational vector {text!r}") from None


# rendering ---------------------------------------------------------------

def render_table(table: DimTable, fmt: str) -> str:
    ps, ds = table.p_values(), table.d_values()
    if fmt == "json":
        entries = [
            {"p": p, "d": d, "dim": table.dim(p, d), "method": table.entries[(p, d)][1].value}
            for p in ps for d in ds
        ]
        return json.dumps({"D": table.D, "entries": entries}, indent=2) + "\n"
    if fmt == "csv":
        lines = [",".join(["p"] + [str(d) for d in ds])]
        lines += [",".join([str(p)] + [str(table.dim(p, d)) for d in ds]) for p in ps]
        return "\n".join(lines) + "\n"
    width = max([len(str(table.dim(p, d))) for p in ps for d in ds] + [len(str(ds[-1]))]) + 1
    head = "p\\d".ljust(5) + "".join(str(d).rjust(width) for d in ds)
    rows = [head, "-" * len(head)]
    for p in ps:
        rows.append(str(p).ljust(5) + "".join(str(table.dim(p, d)).rjust(width) for d in ds))
    return f"D = {table.D}\n" + "\n".join(rows) + "\n"


def render_checks(suite: str, checks, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"suite": suite, "checks": [
            {"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks]}, indent=2) + "\n"
    if fmt == "csv":
        lines = ["name,passed,detail"]
        lines += [f'"{c.name}",{int(c.passed)},"{c.detail}"' for c in checks]
        return "\n".join(lines) + "\n"
    lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}" + (f"  ({c.detail})" if c.detail else "") for c in checks]
    n_ok = sum(c.passed for c in checks)
    lines.append(f"{suite}: {n_ok}/{len(checks)} passed")
    return "\n".join(lines) + "\n"


def render_matrix(c, J, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"D": len(c), "c": [str(x) for x in c],
                           "J": [[str(x) for x in row] for row in J]}, indent=2) + "\n"
    if fmt == "csv":
        return "\n".join(",".join(str(x) for x in row) for row in J) + "\n"
    cells = [[str(x) for x in row] for row in J]
    w = max(len(s) for row in cells for s in row)
    return "\n".join("[ " + "  ".join(s.rjust(w) for s in row) + " ]" for row in cells) + "\n"


# commands ----------------------------------------------------------------

def _window(cfg: RunConfig):
    return range(cfg.p_range[0], cfg.p_range[1] + 1), range(cfg.d_range[0], cfg.d_range[1] + 1)


def run(cfg: RunConfig) -> Tuple[int, str]:
    cfg.validate()
    ps, ds = _window(cfg)
    if cfg.command == "dims":
        t = dim_table(cfg.D, ps[-1], ds[-1], ps[0], ds[0])
        return EXIT_OK, render_table(t, cfg.format)
    if cfg.command == "theta-dims":
        t = DimTable(cfg.D)
        for p in ps:
            for d in ds:
                t.put(p, d, theta.h_theta_dim(cfg.D, p, d), Method.RANK)
        return EXIT_OK, render_table(t, cfg.format)
    if cfg.command == "oracle":
        t = DimTable(cfg.D)
        for p in ps:
            for d in ds:
                t.put(p, d, brute_cohomology(cfg.D, p, d, cfg.u_max), Method.ORACLE)
        return EXIT_OK, render_table(t, cfg.format)
    if cfg.command == "verify":
        checks = SUITES[cfg.suite](seed=cfg.seed)
        code = EXIT_OK if all(c.passed for c in checks) else EXIT_MISMATCH
        return code, render_checks(cfg.suite, checks, cfg.format)
    spec = BracketSpec(len(cfg.c), cfg.c)
    J = normalize_bracket(spec)
    return EXIT_OK, render_matrix(spec.c, J.J, cfg.format)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dncohom",
        description="Poisson cohomology of scalar multidimensional Dubrovin-Novikov brackets.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, window=True):
        if window:
            sp.add_argument("--D", type=int, default=2, help="number of independent variables (default: 2)")
            sp.add_argument("--p", dest="p_range", type=parse_range, default=(0, 3),
                            help="super degrees a..b (default: 0..3)")
            sp.add_argument("--d", dest="d_range", type=parse_range, default=(0, 4),
                            help="standard degrees a..b (default: 0..4)")
        sp.add_argument("--format", choices=FORMATS, default="table")
        sp.add_argument("--seed", type=int, default=0, help="seed for randomized checks (default: 0)")
        sp.add_argument("--out", help="write output to this file instead of stdout")

    common(sub.add_parser("dims", help="dim H^p_d of the Poisson cohomology"))
    common(sub.add_parser("theta-dims", help="dim of the (p,d) component of the Theta quotient"))
    sp = sub.add_parser("oracle", help="brute-force cohomology of the truncated complex")
    common(sp)
    sp.add_argument("--u-max", type=int, default=2, help="u-weight bound (default: 2)")
    sp = sub.add_parser("verify", help="run a verification suite")
    common(sp, window=False)
    sp.add_argument("--suite", required=True, choices=sorted(SUITES))
    sp = sub.add_parser("normalize", help="det-1 matrix J with J c = xi_D")
    common(sp, window=False)
    sp.add_argument("--c", type=parse_vector, required=True, help="comma-separated rationals, e.g. 1,-1/2")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=ns.command,
        D=getattr(ns, "D", 2),
        p_range=getattr(ns, "p_range", (0, 3)),
        d_range=getattr(ns, "d_range", (0, 4)),
        u_max=getattr(ns, "u_max", 2),
        format=ns.format,
        seed=ns.seed,
        out=ns.out,
        suite=getattr(ns, "suite", None),
        c=getattr(ns, "c", None),
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        code, text = run(config_from_args(ns))
    except (UsageError, ValueError) as e:
        print(f"dncohom: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except TruncationUnstable as e:
        print(f"dncohom: truncation unstable: {e}", file=sys.stderr)
        return EXIT_UNSTABLE
    if ns.out:
        with open(ns.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
