"""Roy's simultaneous approximation statistic s(X) = delta(X) X^{1/Phi} over a log grid."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from digitwords.contfrac import log_grid, roy_check


@dataclass(frozen=True)
class Config:
    A: int = 1
    B: int = 2
    x_max: int = 100_000
    points: int = 40


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--A", type=int, default=Config.A)
    ap.add_argument("--B", type=int, default=Config.B)
    ap.add_argument("--xmax", type=int, default=Config.x_max)
    a = ap.parse_args()
    cfg = Config(a.A, a.B, a.xmax)
    rep = roy_check(cfg.A, cfg.B, log_grid(10, cfg.x_max, cfg.points))
    print("X,x0,delta,s")
    for r in rep.rows:
        print(f"{r.X},{r.x0},{r.delta:.3e},{r.s:.5f}")
    print(f"# sup s = {rep.c_emp:.6f}")


if __name__ == "__main__":
    main()
