"""Star discrepancy of Hypothesis A orbits for the builtin BBP specs, as N grows."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from digitwords.bbp import discrepancy, hypothesis_a_orbit, spec_by_name


@dataclass(frozen=True)
class Config:
    specs: tuple[str, ...] = ("log2_2", "log2_9", "log3_4", "pi16")
    sizes: tuple[int, ...] = (100, 1000, 10000)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=list(Config.sizes))
    cfg = Config(sizes=tuple(ap.parse_args().sizes))
    print("spec,N,discrepancy,sqrt(N)*discrepancy")
    for name in cfg.specs:
        spec = spec_by_name(name)
        orbit = hypothesis_a_orbit(spec, max(cfg.sizes))
        for N in cfg.sizes:
            d = discrepancy(orbit.values[1 : N + 1])
            print(f"{name},{N},{d:.6f},{d * N**0.5:.4f}")


if __name__ == "__main__":
    main()
