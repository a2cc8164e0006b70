"""List every Coxeter tetrahedron with bounded labels, with its geometry and (if finite) group order."""

import argparse
from collections import Counter
from dataclasses import dataclass

from coxtet.presentations import coxeter_presentation
from coxtet.tc import Completed, order
from coxtet.tetra import GeometryClass, enumerate_tetrahedra


@dataclass(frozen=True)
class Config:
    max_label: int = 5
    budget: int = 10**5


def run(cfg: Config) -> None:
    rows = enumerate_tetrahedra(cfg.max_label)
    for t, cls in rows:
        extra = ""
        if cls is GeometryClass.SPHERICAL:
            r = order(coxeter_presentation(t), cfg.budget)
            extra = str(r.index) if isinstance(r, Completed) else "exceeded"
        print(f"{str(t):<20} {str(cls):<11} {extra}")
    counts = Counter(str(cls) for _, cls in rows)
    print(", ".join(f"{k}: {v}" for k, v in sorted(counts.items())))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-label", type=int, default=Config.max_label)
    ap.add_argument("--budget", type=int, default=Config.budget)
    a = ap.parse_args()
    run(Config(a.max_label, a.budget))


if __name__ == "__main__":
    main()
