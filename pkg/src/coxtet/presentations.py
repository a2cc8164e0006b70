"""Finite presentations for tetrahedral Coxeter groups, their twisted
extensions, and the spherical catalogue groups.

A word is a tuple of nonzero ints: ``k`` is generator ``k-1`` and ``-k`` its
inverse.

Text form::

    presentation := gens " | " relator ("/" relator)*
    gens         := name ("," name)*
    relator      := term (" " term)*
    term         := atom ["^" int]
    atom         := name | "(" relator ")"

e.g. ``r1,r2 | r1^2/r2^2/(r1 r2)^3``.  Printing is canonical: runs of one
letter become ``x^k``, and a word that is a proper power of a primitive
word ``u`` of length > 1 prints as ``(u)^k``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .tetra import (
    MU,
    TAU,
    LabeledTetrahedron,
    VertexPermutation,
    coxeter_family,
    label_automorphisms,
    twisted_family,
)

Word = tuple[int, ...]


class TwistUnavailable(ValueError):
    """The requested rotation does not preserve the tetrahedron's labels."""


class UnknownSelector(ValueError):
    pass


class PresentationSyntaxError(ValueError):
    pass


def inverse(word: Word) -> Word:
    return tuple(-x for x in reversed(word))


def free_reduce(word: Word) -> Word:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def power(word: Word, k: int) -> Word:
    return word * k if k >= 0 else inverse(word) * -k


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        n = len(self.generators)
        if n == 0:
            raise ValueError("a presentation needs at least one generator")
        if len(set(self.generators)) != n:
            raise ValueError(f"duplicate generator names: {self.generators}")
        for w in self.relators:
            if not w:
                raise ValueError("empty relator")
            for x in w:
                if x == 0 or abs(x) > n:
                    raise ValueError(f"letter {x} out of range in {w}")

    @property
    def generator_count(self) -> int:
        return len(self.generators)

    def gen(self, name: str) -> int:
        """Letter (1-based) for a named generator."""
        return self.generators.index(name) + 1

    def format_word(self, word: Word) -> str:
        return _format_word(word, self.generators)

    def __str__(self):
        return format_presentation(self)


# -- text serialization ------------------------------------------------------


def _primitive_root(word: Word) -> tuple[Word, int]:
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word[:d] * (n // d) == word:
            return word[:d], n // d
    return word, 1


def _runs(word: Word) -> list[tuple[int, int]]:
    out: list[tuple[int, int]] = []
    for x in word:
        g, e = abs(x), (1 if x > 0 else -1)
        if out and out[-1][0] == g and (out[-1][1] > 0) == (e > 0):
            out[-1] = (g, out[-1][1] + e)
        else:
            out.append((g, e))
    return out


def _format_flat(word: Word, names) -> str:
    parts = []
    for g, e in _runs(word):
        parts.append(names[g - 1] if e == 1 else f"{names[g - 1]}^{e}")
    return " ".join(parts)


def _format_word(word: Word, names) -> str:
    root, k = _primitive_root(word)
    if k > 1 and len(_runs(root)) > 1:
        return f"({_format_flat(root, names)})^{k}"
    return _format_flat(word, names)


def format_presentation(p: Presentation) -> str:
    rels = "/".join(_format_word(w, p.generators) for w in p.relators)
    return f"{','.join(p.generators)} | {rels}"


_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<pow>\^\s*-?\d+)|(?P<lp>\()|(?P<rp>\)))")


def _parse_word(text: str, names: dict[str, int]) -> Word:
    pos, stack = 0, [[]]
    text = text.strip()
    last: list | None = None  # the letters of the most recent term
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise PresentationSyntaxError(f"unexpected input at {text[pos:]!r}")
        pos = m.end()
        if m.group("name"):
            name = m.group("name")
            if name not in names:
                raise PresentationSyntaxError(f"unknown generator {name!r}")
            last = [names[name]]
            stack[-1].append(last)
        elif m.group("pow"):
            if last is None:
                raise PresentationSyntaxError("'^' without a preceding term")
            k = int(m.group("pow")[1:].strip())
            stack[-1][-1] = list(power(tuple(last), k))
            last = None
        elif m.group("lp"):
            stack.append([])
            last = None
        else:
            if len(stack) == 1:
                raise PresentationSyntaxError("unbalanced ')'")
            inner = [x for term in stack.pop() for x in term]
            last = inner
            stack[-1].append(last)
    if len(stack) != 1:
        raise PresentationSyntaxError("unbalanced '('")
    return tuple(x for term in stack[0] for x in term)


def parse_presentation(text: str) -> Presentation:
    if "|" not in text:
        raise PresentationSyntaxError("expected 'generators | relators'")
    head, body = text.split("|", 1)
    gens = tuple(g.strip() for g in head.split(",") if g.strip())
    names = {g: k + 1 for k, g in enumerate(gens)}
    relators = tuple(_parse_word(r, names) for r in body.split("/") if r.strip())
    try:
        return Presentation(gens, relators)
    except ValueError as exc:
        raise PresentationSyntaxError(str(exc)) from exc


# -- tetrahedral Coxeter groups ----------------------------------------------

COXETER_GENERATORS = ("r1", "r2", "r3", "r4")
TWIST_NAMES = {"tau": "t", "mu": "u"}
TWISTS = {"tau": TAU, "mu": MU}


def pair_exponent(t: LabeledTetrahedron, i: int, j: int) -> int:
    """Order of r_i r_j: the label on the edge shared by faces i and j."""
    k, l = (v for v in range(1, 5) if v not in (i, j))
    return t.label(k, l)


def _coxeter_relators(t: LabeledTetrahedron) -> list[Word]:
    rels: list[Word] = [(i, i) for i in range(1, 5)]
    for i, j in combinations(range(1, 5), 2):
        rels.append((i, j) * pair_exponent(t, i, j))
    return rels


def coxeter_presentation(t: LabeledTetrahedron) -> Presentation:
    return Presentation(COXETER_GENERATORS, tuple(_coxeter_relators(t)))


def twisted_presentation(t: LabeledTetrahedron, twists) -> Presentation:
    """Extend the Coxeter group of ``t`` by label-preserving rotations.

    ``twists`` is a nonempty subset of {"tau", "mu"}.  Each twist s acts on
    the reflections by s r_i s = r_{pi(i)}, since face i is opposite vertex i.
    """
    requested = set(twists)
    if not requested or not requested <= set(TWISTS):
        raise ValueError("twists must be a nonempty subset of {'tau', 'mu'}")
    twists = [w for w in ("tau", "mu") if w in requested]
    autos = label_automorphisms(t)
    gens = list(COXETER_GENERATORS)
    rels = _coxeter_relators(t)
    letters = []
    for name in twists:
        perm: VertexPermutation = TWISTS[name]
        if perm not in autos:
            raise TwistUnavailable(f"{name} = {perm.cycles()} does not preserve the labels of {t}")
        gens.append(TWIST_NAMES[name])
        s = len(gens)
        letters.append(s)
        rels.append((s, s))
        for i in range(1, 5):
            rels.append((s, i, s, -perm(i)))
    if len(letters) == 2:
        rels.append(tuple(letters) * 2)
    return Presentation(tuple(gens), tuple(rels))


# (tetrahedron constructor, twists, k) with |G| = k(g - 1) for the group
FAMILIES = {
    "C": (coxeter_family, (), 24),
    "Ctau": (twisted_family, ("tau",), 24),
    "Cmu": (coxeter_family, ("mu",), 48),
    "Ctaumu": (twisted_family, ("tau", "mu"), 48),
}


def family_group(family: str, n: int, m: int) -> tuple[LabeledTetrahedron, Presentation]:
    """Tetrahedron and presentation of C(n,m), C_tau(n,m), C_mu(n,n) or
    C_taumu(n,n).  Twists that need n = m raise TwistUnavailable otherwise."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {sorted(FAMILIES)}")
    make, twists, _ = FAMILIES[family]
    t = make(n, m)
    if twists:
        return t, twisted_presentation(t, twists)
    return t, coxeter_presentation(t)


# -- subgroup selectors ------------------------------------------------------


@dataclass(frozen=True)
class ReflectionSubgroup:
    """The four face reflections inside a (twisted) Coxeter presentation."""


@dataclass(frozen=True)
class VertexStabilizer:
    """The three reflections in the faces through vertex ``vertex``."""

    vertex: int


def subgroup_words(p: Presentation, which) -> list[Word]:
    if p.generators[:4] != COXETER_GENERATORS:
        raise UnknownSelector("selectors apply to tetrahedral Coxeter presentations only")
    if isinstance(which, ReflectionSubgroup):
        return [(i,) for i in range(1, 5)]
    if isinstance(which, VertexStabilizer):
        if which.vertex not in (1, 2, 3, 4):
            raise UnknownSelector(f"no vertex {which.vertex}")
        return [(i,) for i in range(1, 5) if i != which.vertex]
    raise UnknownSelector(f"unknown selector {which!r}")


def extended_triangle_order(p: int, q: int, r: int) -> int:
    """Order of the reflection group [p,q,r] of a spherical triangle."""
    s = Fraction(1, p) + Fraction(1, q) + Fraction(1, r) - 1
    if s <= 0:
        raise ValueError(f"[{p},{q},{r}] is not spherical")
    order = 4 / s
    assert order.denominator == 1
    return int(order)


# -- catalogue of spherical groups ------------------------------------------


class Kind(enum.Enum):
    ZBAR = "Zbar"
    DBAR = "Dbar"
    ABAR4 = "Abar4"
    SBAR4 = "Sbar4"
    ABAR5 = "Abar5"
    D2STAR = "D2*"
    Z = "Z"
    D = "D"
    A4 = "A4"
    S4 = "S4"
    A5 = "A5"


_PARAMETRIC = {Kind.ZBAR, Kind.DBAR, Kind.D2STAR, Kind.Z, Kind.D}
_FIXED_ORDER = {Kind.ABAR4: 24, Kind.SBAR4: 48, Kind.ABAR5: 120, Kind.A4: 12, Kind.S4: 24, Kind.A5: 60}
_ORIENTATION_PRESERVING = {Kind.Z, Kind.D, Kind.A4, Kind.S4, Kind.A5}


@dataclass(frozen=True)
class CatalogueGroup:
    kind: Kind
    n: int | None = None

    def __post_init__(self):
        if self.kind in _PARAMETRIC:
            if self.n is None or self.n < 2:
                raise ValueError(f"{self.kind.value} needs a parameter n >= 2")
        elif self.n is not None:
            raise ValueError(f"{self.kind.value} takes no parameter")

    @property
    def order(self) -> int:
        k, n = self.kind, self.n
        if k in _FIXED_ORDER:
            return _FIXED_ORDER[k]
        return {Kind.ZBAR: 2 * n, Kind.DBAR: 4 * n, Kind.D2STAR: 4 * n, Kind.Z: n, Kind.D: 2 * n}[k]

    @property
    def orientation_preserving(self) -> bool:
        return self.kind in _ORIENTATION_PRESERVING

    @property
    def name(self) -> str:
        return self.kind.value + ("" if self.n is None else str(self.n))

    def __str__(self):
        return self.name

    @classmethod
    def parse(cls, name: str) -> "CatalogueGroup":
        for kind in sorted(Kind, key=lambda k: -len(k.value)):
            if name.startswith(kind.value):
                rest = name[len(kind.value):]
                if kind in _PARAMETRIC:
                    if rest.isdigit():
                        return cls(kind, int(rest))
                elif rest == "":
                    return cls(kind)
        raise ValueError(f"unknown catalogue group {name!r}")


def Zbar(n): return CatalogueGroup(Kind.ZBAR, n)
def Dbar(n): return CatalogueGroup(Kind.DBAR, n)
def D2star(n): return CatalogueGroup(Kind.D2STAR, n)
def Z(n): return CatalogueGroup(Kind.Z, n)
def D(n): return CatalogueGroup(Kind.D, n)


ABAR4 = CatalogueGroup(Kind.ABAR4)
SBAR4 = CatalogueGroup(Kind.SBAR4)
ABAR5 = CatalogueGroup(Kind.ABAR5)
A4 = CatalogueGroup(Kind.A4)
S4 = CatalogueGroup(Kind.S4)
A5 = CatalogueGroup(Kind.A5)


def extended_triangle_presentation(p: int, q: int, r: int) -> Presentation:
    # a,b,c involutions; (ab)^p, (bc)^q, (ac)^r
    rels = [(1, 1), (2, 2), (3, 3), (1, 2) * p, (2, 3) * q, (1, 3) * r]
    return Presentation(("a", "b", "c"), tuple(rels))


def triangle_presentation(p: int, q: int, r: int) -> Presentation:
    return Presentation(("x", "y"), ((1,) * p, (2,) * q, (1, 2) * r))


def dihedral_presentation(n: int) -> Presentation:
    """Dihedral group of order 2n generated by two reflections."""
    return Presentation(("a", "b"), ((1, 1), (2, 2), (1, 2) * n))


def catalogue_presentation(g: CatalogueGroup) -> Presentation:
    k, n = g.kind, g.n
    if k is Kind.ZBAR:
        return dihedral_presentation(n)
    if k is Kind.DBAR:
        return extended_triangle_presentation(2, 2, n)
    if k is Kind.ABAR4:
        return extended_triangle_presentation(2, 3, 3)
    if k is Kind.SBAR4:
        return extended_triangle_presentation(2, 3, 4)
    if k is Kind.ABAR5:
        return extended_triangle_presentation(2, 3, 5)
    if k is Kind.D2STAR:
        # only the abstract group (dihedral of order 4n) is modeled
        return dihedral_presentation(2 * n)
    if k is Kind.Z:
        return Presentation(("x",), ((1,) * n,))
    if k is Kind.D:
        return triangle_presentation(2, 2, n)
    if k is Kind.A4:
        return triangle_presentation(2, 3, 3)
    if k is Kind.S4:
        return triangle_presentation(2, 3, 4)
    return triangle_presentation(2, 3, 5)
