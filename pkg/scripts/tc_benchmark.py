"""Time coset enumeration on the finite tetrahedral groups and report table statistics."""

import argparse
import time
from dataclasses import dataclass

from coxtet.presentations import family_group
from coxtet.tc import Completed, order

CASES = [
    ("C", 2, 2), ("C", 2, 3), ("C", 2, 4), ("C", 2, 5), ("C", 3, 3), ("C", 3, 4), ("C", 3, 5),
    ("Ctau", 2, 2), ("Ctau", 2, 3), ("Ctau", 2, 4),
    ("Cmu", 2, 2), ("Cmu", 3, 3), ("Ctaumu", 2, 2),
]


@dataclass(frozen=True)
class Config:
    repeats: int = 3
    budget: int = 10**6


def run(cfg: Config) -> None:
    print(f"{'group':<14}{'order':>7}{'peak':>8}{'defined':>9}{'best ms':>10}")
    for family, n, m in CASES:
        _, p = family_group(family, n, m)
        times = []
        for _ in range(cfg.repeats):
            start = time.perf_counter()
            r = order(p, cfg.budget)
            times.append(time.perf_counter() - start)
        assert isinstance(r, Completed)
        print(f"{family}({n},{m}):".ljust(14) + f"{r.index:>7}{r.peak_live:>8}{r.defined:>9}{min(times) * 1e3:>10.1f}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeats", type=int, default=Config.repeats)
    ap.add_argument("--budget", type=int, default=Config.budget)
    a = ap.parse_args()
    run(Config(a.repeats, a.budget))


if __name__ == "__main__":
    main()
