"""Command-line front end.

    phd diamond --surface k3-elliptic --n 2 --format json
    phd check all --surface k3-elliptic --n-max 5
    phd check smooth --n 6
    phd oracle --surface k3-elliptic --n-max 8

Exit codes: 0 when every selected check passes, 1 when a check fails, 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import formats
from .hilbert import check_matsushita, hilb_partition_sum, hilb_product_formula
from .oracles import euler_series, goettsche_hodge
from .smooth import check_smooth_grid, saito_consistency
from .surfaces import SurfaceSpec, ValidationError, get_builtin, load_surface, validate_surface_table
from .tables import CheckReport, TableError, check_phs, check_self_dual, hodge_marginal, perverse_marginal
from .weyl import check_octahedron, check_weyl_invariance

CHECKS = ("phs", "dual", "matsushita", "weyl", "octahedron", "paths", "smooth")
FORMATS = ("ascii", "json", "csv")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    surface: str | None = None
    surface_file: str | None = None
    n: int | None = None
    n_max: int | None = None
    checks: tuple[str, ...] = ()
    fmt: str = "ascii"
    validate: bool = True
    truncation: int = 10

    def __post_init__(self):
        if self.surface and self.surface_file:
            raise UsageError("--surface and --surface-file are mutually exclusive")
        for label, value in (("--n", self.n), ("--n-max", self.n_max)):
            if value is not None and value < 1:
                raise UsageError(f"{label} must be >= 1")
        if self.fmt not in FORMATS:
            raise UsageError(f"--format must be one of {', '.join(FORMATS)}")
        if self.truncation < 0:
            raise UsageError("--truncation must be non-negative")

    def ns(self) -> list[int]:
        if self.n is not None:
            return [self.n]
        if self.n_max is not None:
            return list(range(1, self.n_max + 1))
        raise UsageError("one of --n or --n-max is required")


def _surface(config: RunConfig, validate: bool) -> SurfaceSpec:
    if config.surface_file:
        try:
            text = Path(config.surface_file).read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {config.surface_file}: {exc}") from exc
        return load_surface(text, validate=validate)
    spec = get_builtin(config.surface or "k3-elliptic")
    return spec if validate else SurfaceSpec(spec.name, spec.table, spec.meta, validated=False)


def _parse_checks(values: list[str]) -> tuple[str, ...]:
    chosen: list[str] = []
    for value in values:
        for name in value.split(","):
            name = name.strip()
            if not name:
                continue
            if name == "all":
                chosen.extend(CHECKS)
            elif name in CHECKS:
                chosen.append(name)
            else:
                raise UsageError(f"unknown check {name!r} (choose from {', '.join(CHECKS + ('all',))})")
    return tuple(c for c in CHECKS if c in chosen)


def cmd_diamond(config: RunConfig) -> tuple[str, int]:
    surface = _surface(config, config.validate)
    if config.n is None:
        raise UsageError("diamond needs --n")
    table = hilb_partition_sum(surface, config.n)
    name = surface.name if config.n == 1 else f"{surface.name}^[{config.n}]"
    if config.fmt == "json":
        return formats.to_json(table, name), 0
    if config.fmt == "csv":
        return formats.to_csv(table), 0
    return formats.to_ascii(table, name), 0


def _row(check: str, n, report: CheckReport) -> str:
    status = "PASS" if report.passed else "FAIL"
    detail = "" if report.passed else f"first violation: {report.first()}"
    if report.notes:
        detail = (detail + "; " if detail else "") + "; ".join(report.notes)
    return f"{check:<12} {str(n):>4}  {status}  {detail}".rstrip()


def cmd_check(config: RunConfig) -> tuple[str, int]:
    checks = config.checks or CHECKS
    rows: list[str] = []
    failed = False

    def emit(check, n, report):
        nonlocal failed
        failed |= not report.passed
        rows.append(_row(check, n, report))

    needs_surface = any(c != "smooth" for c in checks)
    if needs_surface:
        # structural problems in the file are input errors; symmetry problems are check failures
        surface = _surface(config, validate=False)
        report = CheckReport("surface")
        if config.validate:
            try:
                validate_surface_table(surface.table)
            except ValidationError as exc:
                report.violations.append(exc.triple if exc.triple is not None else str(exc))
                report.notes.append(str(exc))
        emit("surface", 1, report)
        if surface.table.outside_box():
            raise UsageError(f"support outside box at {surface.table.outside_box()[0]}")
        ns = config.ns()
        diamonds = {n: hilb_partition_sum(surface, n) for n in ns}
        series = hilb_product_formula(surface, max(ns)) if "paths" in checks else None
        for n in ns:
            d = diamonds[n]
            if "phs" in checks:
                emit("phs", n, check_phs(d))
            if "dual" in checks:
                emit("dual", n, check_self_dual(d))
            if "matsushita" in checks:
                emit("matsushita", n, check_matsushita(d))
            if "weyl" in checks:
                emit("weyl-D3", n, check_weyl_invariance(d, "D3"))
                emit("weyl-B3", n, check_weyl_invariance(d, "B3"))
            if "octahedron" in checks:
                report = check_octahedron(d)
                if not report.details["vertices_ok"]:
                    report.violations.append("vertex missing")
                emit("octahedron", n, report)
            if "paths" in checks:
                report = CheckReport("paths")
                if series[n] != d:
                    report.violations.append(_first_difference(d, series[n]))
                emit("paths", n, report)
    if "smooth" in checks:
        smooth_n = config.n if config.n is not None else (config.n_max or 6)
        for m in range(1, smooth_n + 1):
            grid = check_smooth_grid(m)
            report = CheckReport("smooth")
            report.violations.extend(r.name for r in grid if not r.passed)
            report.violations.extend(
                r.name for r in (saito_consistency(m, k) for k in range(2 * m + 1)) if not r.passed)
            report.notes.append(f"{len(grid)} (i,k) pairs")
            emit("smooth", m, report)
    header = f"{'check':<12} {'n':>4}  result"
    verdict = "all checks passed" if not failed else "some checks FAILED"
    return "\n".join([header] + rows + [verdict, ""]), 1 if failed else 0


def _first_difference(a, b):
    for key in sorted(set(a.entries) | set(b.entries), key=lambda t: (t[2], t[0], t[1])):
        if a[key] != b[key]:
            return (key, a[key], b[key])
    return ("n", a.n, b.n)


def cmd_oracle(config: RunConfig) -> tuple[str, int]:
    surface = _surface(config, config.validate)
    ns = config.ns()
    top = max(ns)
    order = max(top, config.truncation)
    series = hilb_product_formula(surface, order)
    rows: list[str] = []
    failed = False

    def emit(label, ok, detail=""):
        nonlocal failed
        failed |= not ok
        rows.append(f"{label:<34} {'PASS' if ok else 'FAIL'}  {detail}".rstrip())

    goettsche = goettsche_hodge(hodge_marginal(surface.table), top)
    for n in ns:
        d = hilb_partition_sum(surface, n)
        emit(f"marginals n={n}", hodge_marginal(d) == perverse_marginal(d))
        emit(f"goettsche hodge n={n}", hodge_marginal(d) == goettsche[n])
        emit(f"paths n={n}", d == series[n])
    chi = surface.table.euler()
    expected = euler_series(chi, order)
    got = series.euler()
    emit(f"euler series to z^{order}", got == expected, f"chi(S)={chi}: {got[1:]}")
    if surface.has_odd:
        rows.append("note: surface has odd-degree classes; super-symmetric sign rule applied")
    verdict = "all comparisons agree" if not failed else "some comparisons DISAGREE"
    return "\n".join(rows + [verdict, ""]), 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="phd", description="Perverse-Hodge diamonds of Hilbert schemes of points.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        src = p.add_mutually_exclusive_group()
        src.add_argument("--surface", help="built-in surface name (default: k3-elliptic)")
        src.add_argument("--surface-file", help="JSON surface table")
        p.add_argument("--n", type=int)
        p.add_argument("--n-max", type=int)
        p.add_argument("--format", dest="fmt", default="ascii", choices=FORMATS)
        p.add_argument("--truncation", type=int, default=10)
        p.add_argument("--no-validate", dest="validate", action="store_false")

    p = sub.add_parser("diamond", help="print the diamond of S^[n]")
    common(p)
    p = sub.add_parser("check", help="run symmetry and shape checks")
    common(p)
    p.add_argument("which", nargs="*", help="checks to run (comma-separated); default all")
    p.add_argument("--checks", action="append", default=[])
    p = sub.add_parser("oracle", help="compare against classical product formulas")
    common(p)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = RunConfig(
            command=args.command,
            surface=args.surface,
            surface_file=args.surface_file,
            n=args.n,
            n_max=args.n_max,
            checks=_parse_checks(getattr(args, "which", []) + getattr(args, "checks", [])),
            fmt=args.fmt,
            validate=args.validate,
            truncation=args.truncation,
        )
        handler = {"diamond": cmd_diamond, "check": cmd_check, "oracle": cmd_oracle}[config.command]
        out, code = handler(config)
    except (UsageError, ValidationError, TableError, json.JSONDecodeError) as exc:
        print(f"phd: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
