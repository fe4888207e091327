"""Bisection convergence traces for the VLC bandwidths in the config sweep."""

from pathlib import Path

from hrvlc.cli import cmd_chart, cmd_converge

ROOT = Path(__file__).resolve().parent.parent
CONFIG = ROOT / "configs" / "two_ap_room.json"
OUT = ROOT / "out"


def main():
    OUT.mkdir(exist_ok=True)
    csv_path = OUT / "convergence.csv"
    report = cmd_converge(str(CONFIG), mt_index=0, eps=1e-9, seed=7,
                          out_path=str(csv_path))
    cmd_chart(str(csv_path), str(OUT / "convergence.svg"))
    print(f"converge: {len(report.rows)} rows in {report.wall_time:.3f}s")
    print(f"wrote {csv_path}, {OUT / 'convergence.svg'}")


if __name__ == "__main__":
    main()
