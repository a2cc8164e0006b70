"""Rank admissible two-factor amalgams by orbifold Euler characteristic."""

import argparse
from dataclasses import dataclass

from coxtet.orbifold import search_minimal


@dataclass(frozen=True)
class Config:
    max_n: int = 12
    top: int = 20
    orientation_preserving: bool = False


def run(cfg: Config) -> None:
    results = search_minimal(cfg.max_n, cfg.orientation_preserving)
    print(f"{len(results)} amalgams with chi < 0 (n <= {cfg.max_n}, relative to the admissibility table)")
    for a, chi in results[: cfg.top]:
        print(f"{str(chi):>8}  {a.name}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--top", type=int, default=Config.top)
    ap.add_argument("--orientation-preserving", action="store_true")
    a = ap.parse_args()
    run(Config(a.max_n, a.top, a.orientation_preserving))


if __name__ == "__main__":
    main()
