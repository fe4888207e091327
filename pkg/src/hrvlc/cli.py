"""Command-line surface: sweeps, solves, convergence traces, fading studies.

All commands read one JSON scenario config and emit CSV (LF line endings,
UTF-8, floats at 17 significant digits) so that identical inputs and seed
reproduce byte-identical files.  Charts are derived SVG artifacts rendered
from previously written CSVs.
"""

import argparse
import csv
import hashlib
import json
import sys
import time
from dataclasses import dataclass

import numpy as np

from .errors import (
    ConvergenceError,
    HrvlcError,
    MalformedCsvError,
)
from .harvest_uplink import harvest_constants, harvested_energy, sample_rician
from .objective import reduce_coefficients, total_rate
from .optimizer import grid_oracle, solve_closed_form, solve_iterative
from .scenario import associate, load_scenario


@dataclass(frozen=True)
class RunReport:
    command: str
    digest: str      # sha256 of the canonicalized config
    seed: int
    rows: tuple
    wall_time: float


def _fmt(value):
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".17g")


def _write_csv(out_path, header, rows):
    with open(out_path, "w", newline="", encoding="utf-8") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def _load(config_path):
    with open(config_path, "r", encoding="utf-8") as fh:
        text = fh.read()
    scn = load_scenario(text)
    canonical = json.dumps(json.loads(text), sort_keys=True,
                           separators=(",", ":"))
    digest = hashlib.sha256(canonical.encode()).hexdigest()
    return scn, digest


def _fading_power(mt, seed, draw_index):
    # each draw owns a generator derived from (master seed, draw index)
    rng = np.random.default_rng([seed, draw_index])
    h = sample_rician(mt.rician_k, mt.rician_omega, rng)
    return h * h


def cmd_sweep(config_path, mt_index, n_points, seed, out_path):
    """Rate components on a uniform alpha grid for one fading draw."""
    start = time.perf_counter()
    scn, digest = _load(config_path)
    if n_points < 2:
        raise ValueError("--points must be >= 2")
    serving = associate(scn, mt_index)
    h_sq = _fading_power(scn.mts[mt_index], seed, 0)
    coeffs = reduce_coefficients(scn, mt_index, serving, h_sq)
    consts = harvest_constants(scn, mt_index, serving)
    rows = []
    for alpha in np.linspace(0.0, 1.0, n_points):
        ev = total_rate(coeffs, float(alpha))
        rows.append((ev.alpha, ev.total, ev.downlink_term, ev.uplink_term,
                     harvested_energy(consts, ev.alpha)))
    _write_csv(out_path, ["alpha", "R_total", "R_d_term", "R_u_term", "E_H"],
               rows)
    return RunReport("sweep", digest, seed, tuple(rows),
                     time.perf_counter() - start)


def cmd_solve(config_path, mt_index, method, seed, out_path,
              eps=1e-9, n_points=10001):
    """Single optimal-alpha solve by one of the three solver routes."""
    start = time.perf_counter()
    scn, digest = _load(config_path)
    serving = associate(scn, mt_index)
    h_sq = _fading_power(scn.mts[mt_index], seed, 0)
    coeffs = reduce_coefficients(scn, mt_index, serving, h_sq)
    if method == "closed":
        res = solve_closed_form(coeffs)
        row = (res.kkt.alpha, res.rate, res.kkt.lam, res.kkt.mu, method, 0)
    elif method == "iter":
        res = solve_iterative(coeffs, eps=eps)
        row = (res.kkt.alpha, res.rate, res.kkt.lam, res.kkt.mu, method,
               res.iterations)
    elif method == "grid":
        alpha, rate = grid_oracle(coeffs, n_points)
        row = (alpha, rate, 0.0, 0.0, method, 0)
    else:
        raise ValueError(f"unknown method {method!r}")
    _write_csv(out_path,
               ["alpha_star", "R_star", "lambda", "mu", "method", "iterations"],
               [row])
    return RunReport("solve", digest, seed, (row,),
                     time.perf_counter() - start)


def cmd_converge(config_path, mt_index, eps, seed, out_path):
    """Bisection traces, one block per VLC bandwidth in the config sweep list."""
    start = time.perf_counter()
    scn, digest = _load(config_path)
    if eps <= 0:
        raise ValueError("--eps must be > 0")
    bandwidths = scn.bv_sweep or (scn.params.b_v,)
    h_sq = _fading_power(scn.mts[mt_index], seed, 0)
    rows = []
    for b_v in bandwidths:
        sub = scn.with_vlc_bandwidth(b_v)
        serving = associate(sub, mt_index)
        coeffs = reduce_coefficients(sub, mt_index, serving, h_sq)
        res = solve_iterative(coeffs, eps=eps)
        if res.trace:
            rows.extend(res.trace)
        else:
            # boundary binding: one iteration, no bisection residual
            rows.append((1, res.kkt.alpha, 0.0))
    _write_csv(out_path, ["iteration", "alpha", "residual"], rows)
    return RunReport("converge", digest, seed, tuple(rows),
                     time.perf_counter() - start)


def cmd_montecarlo(config_path, mt_index, n_draws, seed, out_path):
    """Per-fading-draw solves plus mean/std summary rows."""
    start = time.perf_counter()
    scn, digest = _load(config_path)
    if n_draws < 1:
        raise ValueError("--draws must be >= 1")
    serving = associate(scn, mt_index)
    mt = scn.mts[mt_index]
    rows = []
    alphas = np.empty(n_draws)
    rates = np.empty(n_draws)
    for i in range(n_draws):
        h_sq = _fading_power(mt, seed, i)
        coeffs = reduce_coefficients(scn, mt_index, serving, h_sq)
        res = solve_closed_form(coeffs)
        alphas[i] = res.kkt.alpha
        rates[i] = res.rate
        rows.append((i, h_sq, res.kkt.alpha, res.rate))
    rows.append(("mean", "", float(np.mean(alphas)), float(np.mean(rates))))
    rows.append(("std", "", float(np.std(alphas)), float(np.std(rates))))
    _write_csv(out_path, ["draw_index", "h_sq", "alpha_star", "R_star"], rows)
    return RunReport("montecarlo", digest, seed, tuple(rows),
                     time.perf_counter() - start)


_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def _read_numeric_csv(csv_path):
    with open(csv_path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        table = [row for row in reader if row]
    if len(table) < 2:
        raise MalformedCsvError(f"{csv_path}: no data rows")
    header, data = table[0], table[1:]
    parsed = []
    for row in data:
        if len(row) != len(header):
            raise MalformedCsvError(f"{csv_path}: ragged row {row!r}")
        try:
            parsed.append([float(v) for v in row])
        except ValueError as exc:
            raise MalformedCsvError(
                f"{csv_path}: non-numeric value in {row!r}") from exc
    return header, parsed


def cmd_chart(csv_path, out_path):
    """Render a sweep or converge CSV as a self-contained SVG line chart.

    Converge CSVs are split into one polyline per bandwidth block (block
    boundaries are iteration-counter resets); any other CSV gets one
    polyline per column plotted against the first column.
    """
    header, data = _read_numeric_csv(csv_path)
    series = []
    if header[0] == "iteration":
        block = []
        prev = None
        count = 0
        for row in data:
            if prev is not None and row[0] <= prev:
                count += 1
                series.append((f"block {count}", block))
                block = []
            block.append((row[0], row[1]))
            prev = row[0]
        series.append((f"block {count + 1}", block))
        x_label, y_label = "iteration", "alpha"
    else:
        for j in range(1, len(header)):
            series.append((header[j], [(row[0], row[j]) for row in data]))
        x_label, y_label = header[0], "value (per-series normalized)"
    _write_svg(out_path, series, x_label, y_label)


def _write_svg(out_path, series, x_label, y_label):
    width, height, margin = 800, 500, 60
    xs = [x for _, pts in series for x, _ in pts]
    x_lo, x_hi = min(xs), max(xs)
    x_span = (x_hi - x_lo) or 1.0

    def sx(x):
        return margin + (x - x_lo) / x_span * (width - 2 * margin)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<text x="{width / 2}" y="{height - margin / 4}" '
        f'text-anchor="middle">{x_label}</text>',
        f'<text x="{margin / 4}" y="{height / 2}" text-anchor="middle" '
        f'transform="rotate(-90 {margin / 4} {height / 2})">{y_label}</text>',
        f'<text x="{margin}" y="{height - margin + 20}" '
        f'text-anchor="middle">{x_lo:g}</text>',
        f'<text x="{width - margin}" y="{height - margin + 20}" '
        f'text-anchor="middle">{x_hi:g}</text>',
    ]
    for idx, (name, pts) in enumerate(series):
        ys = [y for _, y in pts]
        y_lo, y_hi = min(ys), max(ys)
        y_span = (y_hi - y_lo) or 1.0

        def sy(y):
            return height - margin - (y - y_lo) / y_span * (height - 2 * margin)

        color = _PALETTE[idx % len(_PALETTE)]
        coords = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in pts)
        parts.append(f'<polyline fill="none" stroke="{color}" '
                     f'stroke-width="1.5" points="{coords}"/>')
        parts.append(f'<text x="{width - margin - 150}" '
                     f'y="{margin + 18 * idx}" fill="{color}">{name}</text>')
    parts.append("</svg>")
    with open(out_path, "w", newline="", encoding="utf-8") as fh:
        fh.write("\n".join(parts) + "\n")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hrvlc",
        description="Hybrid RF/VLC joint uplink-downlink rate optimizer")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", required=True)
        p.add_argument("--mt", type=int, required=True)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", required=True)

    p = sub.add_parser("sweep", help="rate components over an alpha grid")
    common(p)
    p.add_argument("--points", type=int, default=101)

    p = sub.add_parser("solve", help="optimal alpha by one solver route")
    common(p)
    p.add_argument("--method", choices=("closed", "iter", "grid"),
                   default="closed")
    p.add_argument("--eps", type=float, default=1e-9)
    p.add_argument("--points", type=int, default=10001)

    p = sub.add_parser("converge", help="bisection trace per VLC bandwidth")
    common(p)
    p.add_argument("--eps", type=float, default=1e-9)

    p = sub.add_parser("montecarlo", help="solve across fading draws")
    common(p)
    p.add_argument("--draws", type=int, default=1000)

    p = sub.add_parser("chart", help="render a CSV as an SVG line chart")
    p.add_argument("--csv", required=True)
    p.add_argument("--out", required=True)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "sweep":
            cmd_sweep(args.config, args.mt, args.points, args.seed, args.out)
        elif args.command == "solve":
            cmd_solve(args.config, args.mt, args.method, args.seed, args.out,
                      eps=args.eps, n_points=args.points)
        elif args.command == "converge":
            cmd_converge(args.config, args.mt, args.eps, args.seed, args.out)
        elif args.command == "montecarlo":
            cmd_montecarlo(args.config, args.mt, args.draws, args.seed,
                           args.out)
        elif args.command == "chart":
            cmd_chart(args.csv, args.out)
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (HrvlcError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
