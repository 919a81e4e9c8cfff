"""Block-frequency deviations of the constructed normal numbers and of a few algebraic ones."""

from __future__ import annotations

import argparse
import warnings
from dataclasses import dataclass

from digitwords.reals import normality_stats, parse_source


@dataclass(frozen=True)
class Config:
    n: int = 200_000
    block_lens: tuple[int, ...] = (1, 2, 3)
    sources: tuple[tuple[str, int], ...] = (
        ("champernowne:2", 2),
        ("champernowne:10", 10),
        ("copeland-erdos:10", 10),
        ("stoneham:3,2", 2),
        ("sqrt:2", 2),
        ("sqrt:2", 10),
        ("phi", 10),
        ("lacunary:2^n,2", 2),
    )


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=Config.n)
    cfg = Config(n=ap.parse_args().n)
    print("source,base,m,max_deviation")
    for desc, g in cfg.sources:
        src = parse_source(desc)
        for m in cfg.block_lens:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                rep = normality_stats(src, g, m, cfg.n)
            print(f'"{desc}",{g},{m},{rep.max_deviation:.6f}")


if __name__ == "__main__":
    main()
