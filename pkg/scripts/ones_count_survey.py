"""B(x, n) experiments: the sum/product/reciprocal inequalities and the n^{1/d} lower bound."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from digitwords.reals import Sqrt, check_b_inequalities, fit_ones_lower_bound, ones_count, parse_source


@dataclass(frozen=True)
class Config:
    n_max: int = 2000
    fit_n: int = 10_000
    pairs: tuple[tuple[str, str], ...] = (("sqrt:2", "sqrt:3"), ("sqrt:5", "sqrt:7"), ("phi", "sqrt:2"))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=Config.n_max)
    cfg = Config(n_max=ap.parse_args().n_max)
    print("x,y,inequality,n0,violations")
    for xd, yd in cfg.pairs:
        rep = check_b_inequalities(parse_source(xd), parse_source(yd), cfg.n_max)
        for name, chk in rep.checks.items():
            print(f"{xd},{yd},{name},{chk.n0},{len(chk.violations)}")
    x = Sqrt(2)
    C = fit_ones_lower_bound(x, cfg.fit_n)
    print(f"# B(sqrt 2, {cfg.fit_n}) = {ones_count(x, cfg.fit_n)}, fitted C in (leading ones) >= C sqrt(n): {C:.4f}")


if __name__ == "__main__":
    main()
