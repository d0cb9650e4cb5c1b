"""Command-line front end: verification sweeps with CSV/JSON reports.

Exit codes: 0 pass, 1 usage error, 2 bound violation, 3 work-budget refusal.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .arith import coprime_harmonic, euler_phi, factorize, tau
from .bounds import (
    LEMMA2_MULTIPLIERS,
    WorkBudgetExceeded,
    check_work_budget,
    corollary_bound,
    lemma2_main_term,
    primorial_study,
    theorem_rhs_explicit,
    verify_modulus,
)
from .chargroup import build_group, enumerate_characters
from .lfun import l1_digamma

log = logging.getLogger("dirichlet_l1")

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    q_min: int = 3
    q_max: int = 100
    x_max: float = 13.0
    output_format: str = "csv"
    output_path: str | None = None
    tolerance: float = 0.0
    parallelism: int = field(default_factory=lambda: os.cpu_count() or 1)
    x_multipliers: tuple[int, ...] = (1, 10)

    def validate(self) -> None:
        if self.q_min < 1 or self.q_max < 1:
            raise UsageError("moduli must be positive")
        if self.q_min > self.q_max:
            raise UsageError(f"--q-min {self.q_min} exceeds --q-max {self.q_max}")
        if self.tolerance < 0:
            raise UsageError("--tolerance must be nonnegative")
        if self.parallelism < 1:
            raise UsageError("--jobs must be positive")
        if self.output_format not in ("csv", "json"):
            raise UsageError(f"unknown format {self.output_format!r}")
        if not self.x_multipliers or any(m < 1 for m in self.x_multipliers):
            raise UsageError("--x-multipliers must be positive integers")

    def echo(self) -> dict:
        return {
            "command": self.command,
            "q_min": self.q_min,
            "q_max": self.q_max,
            "x_max": self.x_max,
            "tolerance": self.tolerance,
            "x_multipliers": list(self.x_multipliers),
        }


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v + 0.0:.14e}"
    return str(v)


def render(rows: list[dict], cfg: RunConfig, columns: list[str]) -> str:
    if cfg.output_format == "json":
        def clean(v):
            return None if isinstance(v, float) and math.isnan(v) else v

        payload = {"config": cfg.echo(), "rows": [{k: clean(r[k]) for k in columns} for r in rows]}
        return json.dumps(payload, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([_fmt(r[k]) for k in columns])
    return buf.getvalue()


def emit(text: str, cfg: RunConfig) -> None:
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _map(fn, items, jobs: int):
    if jobs <= 1 or len(items) <= 1:
        return [fn(i) for i in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map preserves submission order, so output order never depends on timing
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


LEMMA2_COLUMNS = ["q", "x", "lhs", "main_term", "residual", "tau_over_x", "pass"]


def _lemma2_rows(args: tuple[int, tuple[int, ...], float]) -> list[dict]:
    q, mults, tol = args
    f = factorize(q)
    out = []
    for m in mults:
        x = m * q
        lhs = coprime_harmonic(x, f)
        main = lemma2_main_term(f, x)
        bound = tau(f) / x
        out.append(
            {"q": q, "x": x, "lhs": lhs, "main_term": main, "residual": lhs - main,
             "tau_over_x": bound, "pass": abs(lhs - main) <= bound + tol}
        )
    return out


def cmd_verify_lemma2(cfg: RunConfig) -> tuple[int, list[dict]]:
    qs = list(range(cfg.q_min, cfg.q_max + 1))
    rows = [r for chunk in _map(_lemma2_rows, [(q, cfg.x_multipliers, cfg.tolerance) for q in qs], cfg.parallelism) for r in chunk]
    emit(render(rows, cfg, LEMMA2_COLUMNS), cfg)
    failed = [r for r in rows if not r["pass"]]
    for r in failed:
        log.error("lemma residual exceeds tau(q)/x at q=%d x=%d", r["q"], r["x"])
    return (EXIT_VIOLATION if failed else EXIT_OK), rows


SWEEP_COLUMNS = [
    "q", "phi_ratio", "lemma2_residual_max", "corollary_bound", "theorem_main",
    "max_abs_l1", "theorem_residual_ratio", "corollary_margin_min", "pv_ratio_max",
    "theorem_margin_min", "n_characters", "abs_error", "pass",
]


def _sweep_row(args: tuple[int, float]) -> dict:
    q, tol = args
    rep = verify_modulus(q)
    row = rep.as_dict()
    row["pass"] = rep.corollary_margin_min > 0 and rep.theorem_margin_min >= -tol
    return row


def cmd_sweep_bounds(cfg: RunConfig) -> tuple[int, list[dict]]:
    qs = list(range(cfg.q_min, cfg.q_max + 1))
    for q in qs:
        if q < 3:
            log.warning("skipping q=%d: no nonprincipal characters", q)
    qs = [q for q in qs if q >= 3]
    rows = _map(_sweep_row, [(q, cfg.tolerance) for q in qs], cfg.parallelism)
    emit(render(rows, cfg, SWEEP_COLUMNS), cfg)
    failed = [r for r in rows if not r["pass"]]
    for r in failed:
        log.error("bound violated at q=%d", r["q"])
    return (EXIT_VIOLATION if failed else EXIT_OK), rows


PRIMORIAL_COLUMNS = [
    "x", "q", "phi_ratio", "mertens_reference", "log_log_q", "max_abs_l1", "ratio",
    "theorem_reference", "corollary_reference", "theorem_main_ratio",
    "corollary_bound_ratio", "abs_error",
]


def cmd_primorial_study(cfg: RunConfig) -> tuple[int, list[dict]]:
    if cfg.x_max < 2:
        raise UsageError("--x-max must be at least 2")
    try:
        check_work_budget(cfg.x_max)
    except WorkBudgetExceeded as exc:
        log.error("refused: %s", exc)
        return EXIT_BUDGET, []
    rows = [r.as_dict() for r in primorial_study(cfg.x_max)]
    if not rows:
        log.warning("no primorial modulus q >= 3 with largest prime <= %s", cfg.x_max)
    emit(render(rows, cfg, PRIMORIAL_COLUMNS), cfg)
    return EXIT_OK, rows


def cmd_eval(q: int, index: int, cfg: RunConfig) -> tuple[int, dict | None]:
    if q < 1:
        raise UsageError("--q must be positive")
    g = build_group(q)
    n = euler_phi(g.factorization)
    if not 0 <= index < n:
        raise UsageError(f"character index {index} out of range [0, {n})")
    chi = enumerate_characters(g)[index]
    if chi.is_principal:
        raise UsageError("refused: index 0 is the principal character, L(1, chi_0) diverges")
    est = l1_digamma(chi)
    row = {
        "q": q,
        "index": index,
        "exponents": list(chi.exponents),
        "value_real": est.value.real,
        "value_imag": est.value.imag,
        "abs_value": abs(est.value),
        "abs_error": est.abs_error,
        "method": est.method,
        "corollary_bound": corollary_bound(q) if q >= 3 else math.nan,
        "theorem_rhs_explicit": theorem_rhs_explicit(chi) if q >= 3 else math.nan,
    }
    emit(render([row], cfg, list(row)), cfg)
    return EXIT_OK, row


def _multipliers(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=["csv", "json"], default="csv")
    common.add_argument("--out", dest="output_path", metavar="PATH")
    common.add_argument("--jobs", type=int, default=os.cpu_count() or 1, metavar="N")
    common.add_argument("--tolerance", type=float, default=0.0, metavar="EPS",
                        help="slack added to non-strict comparisons (default 0)")

    rng = argparse.ArgumentParser(add_help=False)
    rng.add_argument("--q-min", type=int, default=3)
    rng.add_argument("--q-max", type=int, default=100)

    p = argparse.ArgumentParser(
        prog="dirichlet-l1",
        description="Verify identities and upper bounds for L(1, chi) over Dirichlet characters.",
    )
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("verify-lemma2", parents=[common, rng],
                       help="coprime harmonic sums against their main term")
    s.add_argument("--x-multipliers", type=_multipliers, default=(1, 10), metavar="M1,M2",
                   help="check x = m*q for each m (default 1,10)")
    sub.add_parser("sweep-bounds", parents=[common, rng],
                   help="per-modulus bound report for every q in range")
    s = sub.add_parser("primorial-study", parents=[common],
                       help="max |L(1,chi)| over primorial moduli")
    s.add_argument("--x-max", type=float, default=13.0)
    s = sub.add_parser(
        "eval", parents=[common],
        help="evaluate one character",
        description="Characters are indexed in enumeration order: lexicographic on exponent "
        "vectors against the cyclic components of (Z/qZ)^*; index 0 is principal.",
    )
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--index", type=int, required=True)
    return p


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    cfg = RunConfig(
        command=ns.command,
        q_min=getattr(ns, "q_min", 3),
        q_max=getattr(ns, "q_max", 3),
        x_max=getattr(ns, "x_max", 13.0),
        output_format=ns.output_format,
        output_path=ns.output_path,
        tolerance=ns.tolerance,
        parallelism=ns.jobs,
        x_multipliers=getattr(ns, "x_multipliers", LEMMA2_MULTIPLIERS[:2]),
    )
    try:
        cfg.validate()
        if ns.command == "verify-lemma2":
            code, _ = cmd_verify_lemma2(cfg)
        elif ns.command == "sweep-bounds":
            code, _ = cmd_sweep_bounds(cfg)
        elif ns.command == "primorial-study":
            code, _ = cmd_primorial_study(cfg)
        else:
            code, _ = cmd_eval(ns.q, ns.index, cfg)
    except UsageError as exc:
        log.error("%s", exc)
        return EXIT_USAGE
    return code


if __name__ == "__main__":
    sys.exit(main())
