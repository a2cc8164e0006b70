"""Re-derive every numeric claim as a list of exact checks.

Each check recomputes one value from scratch and compares it, as a string,
with the claimed value.  There are no tolerances: integers, fractions and
class names compare exactly.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import orbifold as orb
from .presentations import (
    FAMILIES,
    ReflectionSubgroup,
    VertexStabilizer,
    coxeter_presentation,
    extended_triangle_order,
    family_group,
    subgroup_words,
)
from .tc import Completed, enumerate_cosets
from .tetra import classify_geometry, coxeter_family, twisted_family

FINITE_BUDGET = 10**6
INFINITE_BUDGET = 10**5
REPORT_SCHEMA = "coxtet.verification-report/1"


@dataclass(frozen=True)
class Check:
    id: str
    anchor: str
    expected: str
    compute: Callable[[], str]


@dataclass(frozen=True)
class CheckResult:
    id: str
    anchor: str
    expected: str
    computed: str
    passed: bool
    elapsed_ms: float

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "anchor": self.anchor,
            "expected": self.expected,
            "computed": self.computed,
            "pass": self.passed,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def _order(family, n, m, budget=FINITE_BUDGET) -> int | None:
    _, p = family_group(family, n, m)
    r = enumerate_cosets(p, (), budget)
    return r.index if isinstance(r, Completed) else None


def _genus(family, n, m) -> str:
    k = FAMILIES[family][2]
    order = _order(family, n, m)
    if order is None:
        return "exceeded"
    return str(orb.genus_from_order(order, Fraction(-1, k)))


def _reflection_index(family, n, m) -> str:
    _, p = family_group(family, n, m)
    r = enumerate_cosets(p, subgroup_words(p, ReflectionSubgroup()), FINITE_BUDGET)
    return str(r.index) if isinstance(r, Completed) else "exceeded"


def _outcome_of_infinite(family, n, m) -> str:
    _, p = family_group(family, n, m)
    r = enumerate_cosets(p, (), INFINITE_BUDGET)
    return "exceeded" if not isinstance(r, Completed) else f"completed {r.index}"


def _geometry(family, n, m) -> str:
    t, _ = family_group(family, n, m)
    return classify_geometry(t).value


def _stabilizer_lagrange(vertex: int) -> str:
    t = coxeter_family(3, 5)
    p = coxeter_presentation(t)
    r = enumerate_cosets(p, subgroup_words(p, VertexStabilizer(vertex)), FINITE_BUDGET)
    stab = extended_triangle_order(*t.vertex_triples()[vertex - 1])
    return f"{r.index}*{stab}={r.index * stab}"


def _gluing_counts() -> str:
    counts = Counter()
    for left in orb.minimal_types():
        for right in orb.minimal_types():
            for gmap in orb.GluingMap:
                outcome = orb.classify_gluing(orb.GluingSpec(left, right, gmap))
                counts[type(outcome).__name__] += 1
    names = ("TypeMismatch", "Double", "BadOrbifold", "CoxeterQuotient", "TwistedCoxeterQuotient")
    return ",".join(f"{k}={counts[k]}" for k in names)


def _glue(left, right, gmap) -> str:
    spec = orb.GluingSpec(orb.MinimalOrbifoldType.parse(left), orb.MinimalOrbifoldType.parse(right), orb.GluingMap(gmap))
    return str(orb.classify_gluing(spec))


def _minimal_gap(max_n: int) -> str:
    results = orb.search_minimal(max_n)
    top = [a for a, chi in results if chi == orb.MINIMAL_CHI]
    above = [a for a, chi in results if orb.MINIMAL_CHI < chi < 0]
    return f"top={results[0][1]},count={len(top)},in_gap={len(above)}"


UNTWISTED = {(2, 2): 2, (2, 3): 3, (2, 4): 5, (2, 5): 11, (3, 3): 6, (3, 4): 17, (3, 5): 601}
TWISTED = {(2, 2): 4, (2, 3): 11, (2, 4): 97}
ONE_ROTATION_GENERA = {("Cmu", 2): 2, ("Cmu", 3): 6, ("Ctaumu", 2): 4}

C_GEOMETRY = {
    **{nm: "Spherical" for nm in [(2, 2), (2, 3), (2, 4), (2, 5), (3, 3), (3, 4), (3, 5)]},
    (4, 4): "Euclidean",
    (4, 5): "Hyperbolic",
    (5, 5): "Hyperbolic",
}
CTAU_GEOMETRY = {
    **{nm: "Spherical" for nm in [(2, 2), (2, 3), (2, 4)]},
    (3, 3): "Euclidean",
    **{nm: "Hyperbolic" for nm in [(2, 5), (3, 4), (3, 5), (4, 4), (4, 5), (5, 5)]},
}
TWISTED_PAIRS_GEOMETRY = {
    ("Cmu", 2): "Spherical",
    ("Cmu", 3): "Spherical",
    ("Ctaumu", 2): "Spherical",
    ("Cmu", 4): "Euclidean",
    ("Ctaumu", 3): "Euclidean",
    ("Cmu", 5): "Hyperbolic",
    ("Ctaumu", 4): "Hyperbolic",
    ("Ctaumu", 5): "Hyperbolic",
}


def build_checks() -> list[Check]:
    checks: list[Check] = []
    add = lambda *args: checks.append(Check(*args))  # noqa: E731

    for (n, m), g in UNTWISTED.items():
        add(f"ac01.untwisted-genus.C({n},{m})", "genus of C(n,m) is |C(n,m)|/24 + 1",
            str(g), lambda n=n, m=m: _genus("C", n, m))
    for (n, m), g in TWISTED.items():
        add(f"ac02.twisted-genus.Ctau({n},{m})", "genus of C_tau(n,m) is |C_tau(n,m)|/24 + 1",
            str(g), lambda n=n, m=m: _genus("Ctau", n, m))
    for n, m in TWISTED:
        add(f"ac03.reflection-index.Ctau({n},{m})", "reflections have index 2 in C_tau",
            "2", lambda n=n, m=m: _reflection_index("Ctau", n, m))
    add("ac03.reflection-index.Ctaumu(2,2)", "reflections have index 4 in C_taumu",
        "4", lambda: _reflection_index("Ctaumu", 2, 2))

    for (n, m), cls in C_GEOMETRY.items():
        add(f"ac04.geometry.C({n},{m})", "geometry of C(n,m;2,2;2,3)",
            cls, lambda n=n, m=m: _geometry("C", n, m))
    for (n, m), cls in CTAU_GEOMETRY.items():
        add(f"ac04.geometry.Ctau({n},{m})", "geometry of C(n,m;3,3;2,2)",
            cls, lambda n=n, m=m: _geometry("Ctau", n, m))
    for (fam, n), cls in TWISTED_PAIRS_GEOMETRY.items():
        add(f"ac04.geometry.{fam}({n},{n})", "geometry of C_mu(n,n) and C_taumu(n,n)",
            cls, lambda fam=fam, n=n: _geometry(fam, n, n))

    for a in orb.minimal_amalgams(orientation_preserving=True):
        preserving = a.orientation_class is orb.OrientationClass.PRESERVING
        add(f"ac05.chi.{a.name.replace(' ', '')}",
            "orientation-preserving minimal chi" if preserving else "minimal chi",
            "-1/12" if preserving else "-1/24", lambda a=a: str(orb.chi_orb(a)))
    add("ac05.minimal-search.max_n=100", "no admissible chi strictly between -1/24 and 0",
        "top=-1/24,count=8,in_gap=0", lambda: _minimal_gap(100))

    for (fam, n), g in ONE_ROTATION_GENERA.items():
        add(f"ac06.genus-48.{fam}({n},{n})", "genus is |G|/48 + 1",
            str(g), lambda fam=fam, n=n: _genus(fam, n, n))

    add("ac07.hyperbolic-example.genus-24", "240 = 24(g-1)",
        "11", lambda: str(orb.genus_from_order(240, Fraction(-1, 24))))
    add("ac07.hyperbolic-example.genus-48", "480 = 48(g-1)",
        "11", lambda: str(orb.genus_from_order(480, Fraction(-1, 48))))

    add("ac08.gluing.counts", "gluing case analysis",
        "TypeMismatch=64,Double=8,BadOrbifold=24,CoxeterQuotient=16,TwistedCoxeterQuotient=16", _gluing_counts)
    for left, right, gmap, expected in [
        ("H4", "H5", "id", "BadOrbifold(4,5)"),
        ("H5", "H5", "id", "Double(H,5)"),
        ("Ht3", "Ht3", "id", "Double(Ht,3)"),
        ("H2", "Ht2", "id", "TypeMismatch"),
        ("H4", "H5", "refl", "CoxeterQuotient(4,5)"),
        ("Ht3", "Ht4", "refl", "TwistedCoxeterQuotient(3,4)"),
    ]:
        add(f"ac08.gluing.{left}-{right}-{gmap}", "gluing case analysis",
            expected, lambda l=left, r=right, g=gmap: _glue(l, r, g))

    for v, (idx, stab) in {1: (1200, 12), 2: (600, 24), 3: (120, 120), 4: (720, 20)}.items():
        add(f"ac09.lagrange.C(3,5).vertex{v}", "index times stabilizer order is |C(3,5)|",
            f"{idx}*{stab}=14400", lambda v=v: _stabilizer_lagrange(v))

    infinite = [("C", nm) for nm, c in C_GEOMETRY.items() if c != "Spherical"]
    infinite += [("Ctau", nm) for nm, c in CTAU_GEOMETRY.items() if c != "Spherical"]
    infinite += [(fam, (n, n)) for (fam, n), c in TWISTED_PAIRS_GEOMETRY.items() if c != "Spherical"]
    for fam, (n, m) in infinite:
        add(f"ac10.infinite-consistency.{fam}({n},{m})", "Euclidean and hyperbolic groups are infinite",
            "exceeded", lambda fam=fam, n=n, m=m: _outcome_of_infinite(fam, n, m))
    return checks


def run_checks(checks: list[Check]) -> list[CheckResult]:
    results = []
    for check in checks:
        start = time.perf_counter()
        try:
            computed = check.compute()
        except Exception as exc:  # a crashing check is a failing check
            computed = f"error: {type(exc).__name__}: {exc}"
        elapsed = (time.perf_counter() - start) * 1000
        results.append(CheckResult(check.id, check.anchor, check.expected, computed, computed == check.expected, elapsed))
    return sorted(results, key=lambda r: r.id)


def report_dict(results: list[CheckResult]) -> dict:
    failed = [r.id for r in results if not r.passed]
    return {
        "schema": REPORT_SCHEMA,
        "checks": [r.as_dict() for r in results],
        "summary": {"total": len(results), "passed": len(results) - len(failed), "failed": failed},
    }
