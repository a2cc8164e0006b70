"""Minimal handlebody orbifolds, their Euler characteristics, and the
gluing case analysis for quotients of strongly maximally symmetric actions.

Sign convention: the orbifold Euler characteristic of the handlebody
orbifold D^3/G1 u_{D^2/H} D^3/G2 is

    chi = 1/|G1| + 1/|G2| - 1/|H|

which is multiplicative under finite covers, chi(V_g/G) = (1 - g)/|G|.
The minimal orientation-reversing value is -1/24, so |G| = 24(g - 1).
"""

from __future__ import annotations

import enum
import functools
import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from itertools import combinations_with_replacement

from .presentations import (
    ABAR4,
    ABAR5,
    A4,
    A5,
    S4,
    SBAR4,
    CatalogueGroup,
    D,
    D2star,
    Dbar,
    Z,
    Zbar,
)
from .tetra import LabeledTetrahedron, coxeter_family, twisted_family

MINIMAL_CHI = Fraction(-1, 24)
MINIMAL_CHI_PRESERVING = Fraction(-1, 12)


class OrientationClass(enum.Enum):
    REVERSING = "OrientationReversingFamily"
    PRESERVING = "OrientationPreservingFamily"


@dataclass(frozen=True)
class Amalgam:
    g1: CatalogueGroup
    h: CatalogueGroup
    g2: CatalogueGroup
    orientation_class: OrientationClass = OrientationClass.REVERSING

    def __post_init__(self):
        if self.h.order >= min(self.g1.order, self.g2.order):
            raise ValueError(f"{self.h} must be a proper subgroup of both factors")
        for g in (self.g1, self.g2, self.h):
            if g.orientation_preserving != (self.orientation_class is OrientationClass.PRESERVING):
                raise ValueError(f"{g} does not belong to the {self.orientation_class.value}")

    @property
    def n(self) -> int:
        return self.h.n

    @property
    def name(self) -> str:
        return f"{self.g1} *_{self.h} {self.g2}"

    def __str__(self):
        return self.name


def chi_orb(a: Amalgam) -> Fraction:
    return Fraction(1, a.g1.order) + Fraction(1, a.g2.order) - Fraction(1, a.h.order)


_SECOND_FACTOR = {2: Dbar(3), 3: ABAR4, 4: SBAR4, 5: ABAR5}
_SECOND_FACTOR_PRESERVING = {2: D(3), 3: A4, 4: S4, 5: A5}


def minimal_amalgams(orientation_preserving: bool = False) -> list[Amalgam]:
    """The eight minimal orientation-reversing amalgams (H_2..H_5 then
    Ht_2..Ht_5); with the flag, followed by the four orientation-preserving
    ones of Euler characteristic -1/12."""
    out = [Amalgam(Dbar(n), Zbar(n), _SECOND_FACTOR[n]) for n in range(2, 6)]
    out += [Amalgam(D2star(n), Zbar(n), _SECOND_FACTOR[n]) for n in range(2, 6)]
    if orientation_preserving:
        out += [
            Amalgam(D(n), Z(n), _SECOND_FACTOR_PRESERVING[n], OrientationClass.PRESERVING)
            for n in range(2, 6)
        ]
    return out


@functools.lru_cache(maxsize=None)
def load_admissibility() -> dict:
    with resources.files("coxtet").joinpath("data/admissibility.json").open() as fh:
        return json.load(fh)


def admissible_factors(n: int, max_n: int, orientation_preserving: bool = False) -> list[CatalogueGroup]:
    """Catalogue groups that can sit on either side of a join along D^2/H_n."""
    table = load_admissibility()["orientation_preserving" if orientation_preserving else "orientation_reversing"]
    found = set()
    for rule in table["rules"]:
        if rule["n"] != "any" and n not in rule["n"]:
            continue
        template = rule["group"]
        if "{k}" in template:
            names = [template.format(k=k) for k in range(2, max(max_n, 6) + 1)]
        else:
            names = [template.format(n=n)]
        found.update(CatalogueGroup.parse(name) for name in names)
    return sorted(found, key=lambda g: (g.order, g.name))


def search_minimal(max_n: int, orientation_preserving: bool = False) -> list[tuple[Amalgam, Fraction]]:
    """All table-admissible amalgams with parameter <= max_n and chi < 0,
    sorted by chi descending (ties by name).

    Completeness is relative to the admissibility table only.  Raises
    AssertionError if the top of the list is not exactly the known minimal
    amalgams with parameter <= max_n, or if some chi falls strictly between
    the minimal value and 0.
    """
    if max_n < 2:
        raise ValueError("max_n must be >= 2")
    cls = OrientationClass.PRESERVING if orientation_preserving else OrientationClass.REVERSING
    h_of = Z if orientation_preserving else Zbar
    found: dict[str, tuple[Amalgam, Fraction]] = {}
    for n in range(2, max_n + 1):
        h = h_of(n)
        factors = admissible_factors(n, max_n, orientation_preserving)
        for g1, g2 in combinations_with_replacement(factors, 2):
            a = Amalgam(g1, h, g2, cls)
            chi = chi_orb(a)
            if chi < 0:
                found.setdefault(a.name, (a, chi))
    results = sorted(found.values(), key=lambda pair: (-pair[1], pair[0].name))

    bound = MINIMAL_CHI_PRESERVING if orientation_preserving else MINIMAL_CHI
    known = {
        _unordered(a)
        for a in minimal_amalgams(orientation_preserving)
        if a.orientation_class is cls and a.n <= max_n
    }
    top = {_unordered(a) for a, chi in results if chi == bound}
    assert top == known, f"minimal amalgams differ from the known list: {sorted(top ^ known)}"
    gap = [a.name for a, chi in results if bound < chi < 0]
    assert not gap, f"amalgams with chi in ({bound}, 0): {gap}"
    return results


def _unordered(a: Amalgam):
    return (frozenset((a.g1, a.g2)), a.h)


class NonIntegralGenus(ValueError):
    """The group order is incompatible with the quotient's Euler characteristic."""


def genus_from_order(order: int, chi: Fraction) -> int:
    """Genus g with chi * order = 1 - g."""
    chi = Fraction(chi)
    if chi >= 0:
        raise ValueError("chi must be negative")
    if order < 1:
        raise ValueError("order must be positive")
    g = 1 - chi * order
    if g.denominator != 1:
        raise NonIntegralGenus(f"order {order} with chi {chi} gives genus {g}")
    return int(g)


# -- gluing two minimal handlebody orbifolds ---------------------------------


class Family(enum.Enum):
    H = "H"
    HT = "Ht"

    def __str__(self):
        return self.value


class Boundary(enum.Enum):
    SQUARE_2223 = "D2([2,2,2,3])"
    DISK_2_23 = "D2(2,[2,3])"


class GluingMap(enum.Enum):
    IDENTITY = "id"
    REFLECTION = "refl"


@dataclass(frozen=True)
class MinimalOrbifoldType:
    family: Family
    n: int

    def __post_init__(self):
        if self.n not in (2, 3, 4, 5):
            raise ValueError(f"n must be in 2..5, got {self.n}")

    @property
    def boundary(self) -> Boundary:
        return Boundary.SQUARE_2223 if self.family is Family.H else Boundary.DISK_2_23

    @property
    def amalgam(self) -> Amalgam:
        offset = 0 if self.family is Family.H else 4
        return minimal_amalgams()[offset + self.n - 2]

    @classmethod
    def parse(cls, text: str) -> "MinimalOrbifoldType":
        for fam in (Family.HT, Family.H):
            if text.startswith(fam.value) and text[len(fam.value):].isdigit():
                return cls(fam, int(text[len(fam.value):]))
        raise ValueError(f"expected H2..H5 or Ht2..Ht5, got {text!r}")

    def __str__(self):
        return f"{self.family}{self.n}"


def minimal_types() -> list[MinimalOrbifoldType]:
    return [MinimalOrbifoldType(f, n) for f in Family for n in range(2, 6)]


def orbifold_type(a: Amalgam) -> MinimalOrbifoldType:
    for t in minimal_types():
        if t.amalgam == a:
            return t
    raise ValueError(f"{a} is not one of the eight minimal amalgams")


@dataclass(frozen=True)
class GluingSpec:
    left: MinimalOrbifoldType
    right: MinimalOrbifoldType
    map: GluingMap


@dataclass(frozen=True)
class TypeMismatch:
    def __str__(self):
        return "TypeMismatch"


@dataclass(frozen=True)
class BadOrbifold:
    n: int
    m: int

    def __str__(self):
        return f"BadOrbifold({self.n},{self.m})"


@dataclass(frozen=True)
class Double:
    family: Family
    n: int

    def __str__(self):
        return f"Double({self.family},{self.n})"


@dataclass(frozen=True)
class CoxeterQuotient:
    n: int
    m: int

    def __str__(self):
        return f"CoxeterQuotient({self.n},{self.m})"


@dataclass(frozen=True)
class TwistedCoxeterQuotient:
    n: int
    m: int

    def __str__(self):
        return f"TwistedCoxeterQuotient({self.n},{self.m})"


def classify_gluing(spec: GluingSpec):
    left, right = spec.left, spec.right
    # boundaries of H_n and Ht_m are not homeomorphic
    if left.family is not right.family:
        return TypeMismatch()
    n, m = left.n, right.n
    if spec.map is GluingMap.IDENTITY:
        # the two disks D^2/Zbar_n, D^2/Zbar_m close up into a disk with
        # corners n and m, which is bad unless n = m
        return Double(left.family, n) if n == m else BadOrbifold(n, m)
    if left.family is Family.H:
        return CoxeterQuotient(n, m)
    return TwistedCoxeterQuotient(n, m)


def quotient_tetrahedron(outcome) -> LabeledTetrahedron | None:
    """Coxeter tetrahedron of a quotient outcome; None for the others."""
    if isinstance(outcome, CoxeterQuotient):
        return coxeter_family(outcome.n, outcome.m)
    if isinstance(outcome, TwistedCoxeterQuotient):
        return twisted_family(outcome.n, outcome.m)
    return None
