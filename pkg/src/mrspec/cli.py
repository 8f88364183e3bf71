"""Command-line front end.

Subcommands:

  energy   one bound state (quantum numbers or an explicit l) as JSON
  table    regenerate the golden spectrum tables, or sweep a parameter grid
  figures  plot-ready CSV plus a rendered PNG (centrifugal comparison or
           the feasible quantum-number region)
  verify   re-derive every golden energy with the Numerov oracle and write
           a machine-readable report

Flag values are resolved as: command line > config file named by the
MRSPEC_CONFIG environment variable (JSON, same keys as the flags with
underscores) > built-in defaults.  --hulthen-convention forces A = 2 b.

Exit codes: 0 success, 1 domain or constraint error, 2 I/O or schema error.
"""

import argparse
import csv
import json
import math
import os
import sys
from dataclasses import dataclass
from importlib import resources

from .angular import RingParams, solve_angular
from .constraints import feasible_region
from .errors import ConstraintError, GoldenDataError
from .oracle import (
    BracketError,
    ConvergenceError,
    NumerovConfig,
    approximation_error_table,
    norm_quadrature,
    numerov_solve,
)
from .radial import PotentialParams, energy_level

__all__ = ["BoundStateRecord", "load_golden_rows", "main"]

GOLDEN_FILES = {0.75: "table1_alpha075.csv", 1.0: "table2_alpha100.csv"}
TABLE_HEADER = ["beta", "beta_prime", "m", "N", "n_r", "l", "n", "E"]
L_MATCH_TOL = 1e-6

_DEFAULTS = {
    "A": 80.0,
    "alpha": 1.0,
    "b": 40.0,
    "beta": 0.0,
    "beta_prime": 0.0,
    "m": 0,
    "N": 0,
    "nr": 0,
    "l": None,
    "c0": 1.0 / 12.0,
    "mu": 1.0,
    "hbar": 1.0,
    "golden": False,
    "hulthen_convention": False,
    "tolerance": 1e-5,
    "mode": "approximated",
    "which": "approx",
    "output": None,
    "golden_file": None,
}


@dataclass(frozen=True)
class BoundStateRecord:
    """One spectrum-table row.  n = n_r + l + 1 is the principal label.

    source_l records where l came from: 'computed' when it agrees with the
    angular closed form l = N + zeta, 'table_override' when a golden row's
    printed l deviates from that form, 'explicit' for a user-supplied l.
    """

    beta: float
    beta_prime: float
    m: int
    N: int
    n_r: int
    l: float
    n: float
    energy: float
    source_l: str


def _zeta_closed_form(beta: float, beta_prime: float, m: int) -> float:
    return solve_angular(RingParams(beta=beta, beta_prime=beta_prime, m=m, N=0)).zeta


def _classify_l(beta: float, beta_prime: float, m: int, N: int, l: float) -> str:
    l_computed = N + _zeta_closed_form(beta, beta_prime, m)
    return "computed" if abs(l_computed - l) <= L_MATCH_TOL else "table_override"


def load_golden_rows(alpha: float | None = None, path=None) -> list[BoundStateRecord]:
    """Load a golden table, validating its schema.

    Either pass alpha in {0.75, 1.0} to select a shipped table, or an
    explicit path to a CSV with the same columns.  Malformed files raise
    GoldenDataError.
    """
    if path is None:
        if alpha is None:
            raise ValueError("either alpha or an explicit path is required")
        for key, name in GOLDEN_FILES.items():
            if abs(alpha - key) < 1e-9:
                path = resources.files("mrspec").joinpath("data", name)
                break
        else:
            raise ValueError(
                f"no golden table for alpha = {alpha:g}; shipped tables cover "
                "alpha = 0.75 and alpha = 1"
            )
    try:
        with open(path, "r", encoding="utf-8", newline="") as fh:
            reader = csv.reader(fh)
            try:
                header = next(reader)
            except StopIteration:
                raise GoldenDataError(f"golden table {path} is empty") from None
            if header != TABLE_HEADER:
                raise GoldenDataError(
                    f"golden table {path} has header {header}, expected {TABLE_HEADER}"
                )
            rows = []
            for k, raw in enumerate(reader, start=2):
                if not raw:
                    continue
                if len(raw) != len(TABLE_HEADER):
                    raise GoldenDataError(f"{path} line {k}: expected 8 fields, got {len(raw)}")
                try:
                    beta, beta_prime = float(raw[0]), float(raw[1])
                    m, big_n, n_r = int(raw[2]), int(raw[3]), int(raw[4])
                    l, n, energy = float(raw[5]), float(raw[6]), float(raw[7])
                except ValueError as exc:
                    raise GoldenDataError(f"{path} line {k}: {exc}") from None
                if energy >= 0.0:
                    raise GoldenDataError(f"{path} line {k}: bound-state energy must be negative")
                if abs(n - (n_r + l + 1.0)) > 1e-5:
                    raise GoldenDataError(
                        f"{path} line {k}: n = {n} inconsistent with n_r + l + 1 = {n_r + l + 1}"
                    )
                rows.append(
                    BoundStateRecord(
                        beta=beta, beta_prime=beta_prime, m=m, N=big_n, n_r=n_r,
                        l=l, n=n, energy=energy,
                        source_l=_classify_l(beta, beta_prime, m, big_n, l),
                    )
                )
    except OSError as exc:
        raise GoldenDataError(f"cannot read golden table {path}: {exc}") from None
    if not rows:
        raise GoldenDataError(f"golden table {path} has no data rows")
    return rows


# ---------------------------------------------------------------------------
# flag resolution

def _load_config_file() -> dict:
    path = os.environ.get("MRSPEC_CONFIG")
    if not path:
        return {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            cfg = json.load(fh)
    except json.JSONDecodeError as exc:
        raise GoldenDataError(f"config file {path} is not valid JSON: {exc}") from None
    if not isinstance(cfg, dict):
        raise GoldenDataError(f"config file {path} must hold a JSON object")
    return cfg


def _resolve(ns: argparse.Namespace) -> dict:
    """Merge flags, config file, and defaults; apply the Hulthen coupling."""
    file_cfg = _load_config_file()
    out = {}
    for key, default in _DEFAULTS.items():
        flag_val = getattr(ns, key, None)
        if flag_val is not None:
            out[key] = flag_val
        elif key in file_cfg:
            out[key] = file_cfg[key]
        else:
            out[key] = default
    if out["hulthen_convention"]:
        out["A"] = 2.0 * out["b"]
    return out


def _potential(cfg: dict) -> PotentialParams:
    return PotentialParams(
        a_strength=float(cfg["A"]),
        alpha=float(cfg["alpha"]),
        b=float(cfg["b"]),
        mu=float(cfg["mu"]),
        hbar=float(cfg["hbar"]),
        c0=float(cfg["c0"]),
    )


# ---------------------------------------------------------------------------
# output helpers

def _fmt_g(x: float) -> str:
    return f"{x:g}"


def _write_table_csv(path: str, records: list[BoundStateRecord]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(TABLE_HEADER + ["l_source"]) + "\n")
        for rec in records:
            fh.write(
                f"{_fmt_g(rec.beta)},{_fmt_g(rec.beta_prime)},{rec.m},{rec.N},"
                f"{rec.n_r},{rec.l:.6f},{rec.n:.6f},{rec.energy:.6f},{rec.source_l}\n"
            )


# ---------------------------------------------------------------------------
# subcommands

def cmd_energy(cfg: dict) -> int:
    pp = _potential(cfg)
    out: dict = {
        "inputs": {
            "A": pp.a_strength, "alpha": pp.alpha, "b": pp.b,
            "mu": pp.mu, "hbar": pp.hbar, "c0": pp.c0,
        }
    }
    if cfg["l"] is not None:
        l = float(cfg["l"])
        out["l_source"] = "explicit"
    else:
        rp = RingParams(
            beta=float(cfg["beta"]), beta_prime=float(cfg["beta_prime"]),
            m=int(cfg["m"]), N=int(cfg["N"]),
        )
        ang = solve_angular(rp)
        l = ang.l_eff
        out["inputs"].update(
            {"beta": rp.beta, "beta_prime": rp.beta_prime, "m": rp.m, "N": rp.N}
        )
        out["l_source"] = "computed"
        out["u"] = ang.u
        out["zeta"] = ang.zeta
    n_r = int(cfg["nr"])
    sol = energy_level(pp, l * (l + 1.0), n_r)
    out.update(
        {
            "n_r": n_r,
            "l": l,
            "n": n_r + l + 1.0,
            "lambda": sol.lam,
            "big_lambda": sol.big_lambda,
            "sqrt_c": sol.sqrt_c,
            "eps_sq": sol.eps_sq,
            "energy": sol.energy,
        }
    )
    print(json.dumps(out, indent=2))
    return 0


def _golden_records(cfg: dict, pp: PotentialParams) -> list[BoundStateRecord]:
    """Replay a golden row set with energies recomputed from (l, n_r)."""
    rows = load_golden_rows(alpha=float(cfg["alpha"]), path=cfg["golden_file"])
    out = []
    for rec in rows:
        sol = energy_level(pp, rec.l * (rec.l + 1.0), rec.n_r)
        out.append(
            BoundStateRecord(
                beta=rec.beta, beta_prime=rec.beta_prime, m=rec.m, N=rec.N,
                n_r=rec.n_r, l=rec.l, n=rec.n_r + rec.l + 1.0,
                energy=sol.energy, source_l=rec.source_l,
            )
        )
    return out


def _generated_records(cfg: dict, pp: PotentialParams) -> list[BoundStateRecord]:
    """Sweep the standard ring-strength grid, keeping only bound states."""
    records = []
    for beta, beta_prime in ((0.0, 0.0), (0.0, 1.0), (1.0, 0.0), (1.0, 1.0)):
        for m in range(4):
            for big_n in range(4):
                try:
                    ang = solve_angular(
                        RingParams(beta=beta, beta_prime=beta_prime, m=m, N=big_n)
                    )
                except ConstraintError:
                    continue  # angular eigenvalue not real for this combo
                for n_r in range(4):
                    try:
                        sol = energy_level(pp, ang.lam, n_r)
                    except ConstraintError:
                        break  # deeper n_r only gets worse
                    records.append(
                        BoundStateRecord(
                            beta=beta, beta_prime=beta_prime, m=m, N=big_n,
                            n_r=n_r, l=ang.l_eff, n=n_r + ang.l_eff + 1.0,
                            energy=sol.energy, source_l="computed",
                        )
                    )
    # most bound first, then lexicographic quantum numbers
    records.sort(
        key=lambda r: (r.energy, r.beta, r.beta_prime, r.m, r.N, r.n_r)
    )
    return records


def cmd_table(cfg: dict) -> int:
    pp = _potential(cfg)
    if cfg["golden"] or cfg["golden_file"]:
        records = _golden_records(cfg, pp)
        default_name = f"table_alpha{cfg['alpha']:g}_golden.csv"
    else:
        records = _generated_records(cfg, pp)
        default_name = f"table_alpha{cfg['alpha']:g}.csv"
    path = cfg["output"] or default_name
    _write_table_csv(path, records)
    overrides = sum(1 for r in records if r.source_l == "table_override")
    print(f"wrote {len(records)} rows to {path} ({overrides} flagged table_override)")
    return 0


def cmd_figures(cfg: dict) -> int:
    import numpy as np

    from . import plotting

    pp = _potential(cfg)
    if cfg["which"] == "approx":
        b = pp.b
        r = np.linspace(0.05 * b, 6.0 * b, 500)
        rows = approximation_error_table(pp, r)
        stem = cfg["output"] or f"centrifugal_b{b:g}.csv"
        if stem.endswith(".csv"):
            stem = stem[:-4]
        with open(stem + ".csv", "w", encoding="utf-8", newline="\n") as fh:
            fh.write("r,exact,improved,conventional\n")
            for row in rows:
                fh.write(f"{row[0]:.10g},{row[1]:.10g},{row[2]:.10g},{row[3]:.10g}\n")
        plotting.save_centrifugal_figure(rows, b, stem + ".png")
        print(f"wrote {stem}.csv and {stem}.png")
    elif cfg["which"] == "region":
        pairs = feasible_region(pp, l_max=10.0, n_r_max_scan=10)
        stem = cfg["output"] or f"region_alpha{cfg['alpha']:g}.csv"
        if stem.endswith(".csv"):
            stem = stem[:-4]
        with open(stem + ".csv", "w", encoding="utf-8", newline="\n") as fh:
            fh.write("n_r,l\n")
            for n_r, l in pairs:
                fh.write(f"{n_r},{l}\n")
        plotting.save_region_figure(pairs, pp.alpha, pp.a_strength, stem + ".png")
        print(f"wrote {stem}.csv and {stem}.png ({len(pairs)} feasible pairs)")
    else:
        raise ValueError(f"unknown figure selector {cfg['which']!r}")
    return 0


def cmd_verify(cfg: dict) -> int:
    pp = _potential(cfg)
    tolerance = float(cfg["tolerance"])
    exact_mode = cfg["mode"] == "exact-centrifugal"
    if cfg["mode"] not in ("approximated", "exact-centrifugal"):
        raise ValueError(f"unknown verification mode {cfg['mode']!r}")
    ncfg = NumerovConfig(
        centrifugal_mode="exact" if exact_mode else "approximated"
    )
    rows = load_golden_rows(alpha=float(cfg["alpha"]), path=cfg["golden_file"])
    report_rows = []
    failures = 0
    max_delta = 0.0
    overrides = []
    for rec in rows:
        lam = rec.l * (rec.l + 1.0)
        sol = energy_level(pp, lam, rec.n_r)
        entry: dict = {
            "inputs": {
                "beta": rec.beta, "beta_prime": rec.beta_prime, "m": rec.m,
                "N": rec.N, "n_r": rec.n_r, "l": rec.l, "n": rec.n,
                "l_source": rec.source_l,
            },
            "analytic_E": sol.energy,
            "printed_E": rec.energy,
        }
        if rec.source_l == "table_override":
            overrides.append(entry["inputs"])
        try:
            oracle = numerov_solve(pp, lam, rec.n_r, ncfg)
            delta = oracle.energy - sol.energy
            norm = norm_quadrature(sol, pp)
            nodes_ok = oracle.n_r_found == rec.n_r
            entry.update(
                {
                    "oracle_E": oracle.energy,
                    "delta": delta,
                    "norm_check": norm,
                    "nodes_ok": nodes_ok,
                    "converged": oracle.converged,
                }
            )
            max_delta = max(max_delta, abs(delta))
            row_ok = oracle.converged and nodes_ok and abs(norm - 1.0) <= 1e-7
            if not exact_mode:
                row_ok = row_ok and abs(delta) <= tolerance
        except (BracketError, ConvergenceError) as exc:
            entry.update({"oracle_E": None, "delta": None, "error": str(exc)})
            row_ok = False
        if not row_ok:
            failures += 1
        entry["ok"] = row_ok
        report_rows.append(entry)
    report = {
        "params": {
            "A": pp.a_strength, "alpha": pp.alpha, "b": pp.b, "mu": pp.mu,
            "hbar": pp.hbar, "c0": pp.c0, "mode": cfg["mode"],
            "tolerance": tolerance,
        },
        "rows": report_rows,
        "summary": {
            "max_delta": max_delta,
            "failures": failures,
            "rows_checked": len(report_rows),
            "table_override_rows": overrides,
        },
    }
    out_path = cfg["output"] or "verify_report.json"
    with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(report, fh, indent=2)
        fh.write("\n")
    label = "approximation shift" if exact_mode else "analytic vs oracle"
    print(
        f"checked {len(report_rows)} golden rows (alpha = {pp.alpha:g}): "
        f"max |delta E| = {max_delta:.3e} ({label}), "
        f"{len(overrides)} rows flagged table_override, {failures} failures"
    )
    print(f"report written to {out_path}")
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# argument parsing

def _build_parser() -> argparse.ArgumentParser:
    phys = argparse.ArgumentParser(add_help=False)
    phys.add_argument("--A", type=float, dest="A", help="potential strength A")
    phys.add_argument("--alpha", type=float, help="potential shape alpha")
    phys.add_argument("--b", type=float, help="screening length b")
    phys.add_argument("--c0", type=float, help="centrifugal constant (1/12 or 0)")
    phys.add_argument("--mu", type=float, help="particle mass")
    phys.add_argument("--hbar", type=float, help="action quantum")
    phys.add_argument(
        "--hulthen-convention", action="store_true", default=None,
        dest="hulthen_convention", help="force the Hulthen coupling A = 2 b",
    )

    parser = argparse.ArgumentParser(
        prog="mrspec",
        description=(
            "Bound states of the Manning-Rosen potential with a ring-shaped "
            "angular term"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("energy", parents=[phys], help="compute one bound state")
    p.add_argument("--beta", type=float, help="ring strength beta")
    p.add_argument("--beta-prime", type=float, dest="beta_prime", help="ring strength beta'")
    p.add_argument("--m", type=int, help="magnetic quantum number")
    p.add_argument("--N", type=int, dest="N", help="polar node count")
    p.add_argument("--nr", type=int, help="radial node count")
    p.add_argument("--l", type=float, help="explicit effective l (bypasses the angular solve)")

    p = sub.add_parser("table", parents=[phys], help="emit a spectrum table as CSV")
    p.add_argument("--golden", action="store_true", default=None,
                   help="replay the golden row set for this alpha")
    p.add_argument("--golden-file", dest="golden_file",
                   help="explicit golden CSV path (implies --golden)")
    p.add_argument("--output", help="output CSV path")

    p = sub.add_parser("figures", parents=[phys], help="emit figure data CSV + PNG")
    p.add_argument("--which", choices=["approx", "region"],
                   help="centrifugal comparison or feasible region")
    p.add_argument("--output", help="output CSV path (PNG written alongside)")

    p = sub.add_parser("verify", parents=[phys],
                       help="check golden energies against the Numerov oracle")
    p.add_argument("--tolerance", type=float, help="max allowed |analytic - oracle| energy")
    p.add_argument("--mode", choices=["approximated", "exact-centrifugal"],
                   help="oracle centrifugal term")
    p.add_argument("--golden-file", dest="golden_file", help="explicit golden CSV path")
    p.add_argument("--output", help="JSON report path")

    return parser


_COMMANDS = {
    "energy": cmd_energy,
    "table": cmd_table,
    "figures": cmd_figures,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = _resolve(ns)
        return _COMMANDS[ns.command](cfg)
    except GoldenDataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ConstraintError, ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
