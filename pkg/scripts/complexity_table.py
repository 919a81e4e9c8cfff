"""Subword complexity p_N(m) for the named words, one CSV row per word."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from digitwords.cli import parse_word
from digitwords.complexity import complexity


@dataclass(frozen=True)
class Config:
    max_m: int = 10
    horizon: int = 1 << 14
    words: tuple[str, ...] = ("fibonacci", "thue_morse", "ptm", "rudin_shapiro", "baum_sweet", "paper_fold", "powers2", "nesterenko", "danilov")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-m", type=int, default=Config.max_m)
    ap.add_argument("--horizon", type=int, default=Config.horizon)
    args = ap.parse_args()
    cfg = Config(args.max_m, args.horizon)
    print("word," + ",".join(f"p({m})" for m in range(1, cfg.max_m + 1)))
    for name in cfg.words:
        prof = complexity(parse_word(name), cfg.max_m, cfg.horizon)
        print(name + "," + ",".join(map(str, prof.counts)))


if __name__ == "__main__":
    main()
