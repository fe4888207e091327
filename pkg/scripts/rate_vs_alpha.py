"""Sweep the total rate over alpha for the two-AP room and chart it."""

from pathlib import Path

from hrvlc.cli import cmd_chart, cmd_solve, cmd_sweep

ROOT = Path(__file__).resolve().parent.parent
CONFIG = ROOT / "configs" / "two_ap_room.json"
OUT = ROOT / "out"


def main():
    OUT.mkdir(exist_ok=True)
    sweep_csv = OUT / "rate_vs_alpha.csv"
    report = cmd_sweep(str(CONFIG), mt_index=0, n_points=201, seed=7,
                       out_path=str(sweep_csv))
    cmd_chart(str(sweep_csv), str(OUT / "rate_vs_alpha.svg"))
    solve_csv = OUT / "optimal_alpha.csv"
    cmd_solve(str(CONFIG), mt_index=0, method="closed", seed=7,
              out_path=str(solve_csv))
    print(f"sweep: {len(report.rows)} rows in {report.wall_time:.3f}s")
    print(f"wrote {sweep_csv}, {OUT / 'rate_vs_alpha.svg'}, {solve_csv}")


if __name__ == "__main__":
    main()
