"""Labeled tetrahedra, the Coxeter condition, and Gram-matrix geometry.

Vertices are 1..4 and edge ``ij`` joins vertices ``i`` and ``j``.  Labels are
stored in opposite-edge-pair order ``(m12, m34, m13, m24, m14, m23)`` so that
the notation ``C(n,m;a,b;c,d)`` maps positionally onto the six fields.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

EPS = 1e-9

# field order, as vertex pairs
EDGES = ((1, 2), (3, 4), (1, 3), (2, 4), (1, 4), (2, 3))
_EDGE_INDEX = {e: k for k, e in enumerate(EDGES)}


def _edge(i: int, j: int) -> int:
    return _EDGE_INDEX[(i, j) if i < j else (j, i)]


class GeometryClass(enum.Enum):
    SPHERICAL = "Spherical"
    EUCLIDEAN = "Euclidean"
    HYPERBOLIC = "Hyperbolic"
    NOT_COXETER = "NotCoxeter"

    def __str__(self):
        return self.value


class ClassificationError(RuntimeError):
    """A Coxeter tetrahedron matched none of the minor-sign patterns."""


@dataclass(frozen=True)
class LabeledTetrahedron:
    m12: int
    m34: int
    m13: int
    m24: int
    m14: int
    m23: int

    def __post_init__(self):
        for name, value in zip(("m12", "m34", "m13", "m24", "m14", "m23"), self.labels):
            if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
                raise TypeError(f"{name} must be an integer, got {value!r}")
            if value < 2:
                raise ValueError(f"{name} must be >= 2, got {value}")

    @classmethod
    def from_labels(cls, labels) -> "LabeledTetrahedron":
        labels = tuple(int(x) for x in labels)
        if len(labels) != 6:
            raise ValueError(f"expected 6 labels, got {len(labels)}")
        return cls(*labels)

    @property
    def labels(self) -> tuple[int, ...]:
        return (self.m12, self.m34, self.m13, self.m24, self.m14, self.m23)

    def label(self, i: int, j: int) -> int:
        """Label of the edge joining vertices ``i`` and ``j``."""
        return self.labels[_edge(i, j)]

    def vertex_triples(self) -> tuple[tuple[int, int, int], ...]:
        return (
            (self.m12, self.m13, self.m14),
            (self.m12, self.m23, self.m24),
            (self.m13, self.m23, self.m34),
            (self.m14, self.m24, self.m34),
        )

    def relabel(self, perm: "VertexPermutation") -> "LabeledTetrahedron":
        """The tetrahedron with vertex ``i`` renamed ``perm(i)``."""
        new = [0] * 6
        for k, (i, j) in enumerate(EDGES):
            new[_edge(perm(i), perm(j))] = self.labels[k]
        return LabeledTetrahedron(*new)

    def __str__(self):
        n, m, a, b, c, d = self.labels
        return f"C({n},{m};{a},{b};{c},{d})"


def coxeter_family(n: int, m: int) -> LabeledTetrahedron:
    """C(n,m) = C(n,m;2,2;2,3)."""
    return LabeledTetrahedron(n, m, 2, 2, 2, 3)


def twisted_family(n: int, m: int) -> LabeledTetrahedron:
    """The tetrahedron C(n,m;3,3;2,2) underlying C_tau(n,m)."""
    return LabeledTetrahedron(n, m, 3, 3, 2, 2)


@dataclass(frozen=True)
class VertexPermutation:
    """Permutation of {1,2,3,4}; ``images[i-1]`` is the image of vertex i."""

    images: tuple[int, int, int, int]

    def __post_init__(self):
        if sorted(self.images) != [1, 2, 3, 4]:
            raise ValueError(f"not a permutation of 1..4: {self.images}")

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "VertexPermutation") -> "VertexPermutation":
        # (self * other)(i) = self(other(i))
        return VertexPermutation(tuple(self(other(i)) for i in range(1, 5)))

    def inverse(self) -> "VertexPermutation":
        inv = [0] * 4
        for i in range(1, 5):
            inv[self(i) - 1] = i
        return VertexPermutation(tuple(inv))

    @property
    def is_even(self) -> bool:
        inversions = sum(
            1 for a, b in itertools.combinations(self.images, 2) if a > b
        )
        return inversions % 2 == 0

    def cycles(self) -> str:
        seen, parts = set(), []
        for i in range(1, 5):
            if i in seen or self(i) == i:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(str(j))
                j = self(j)
            parts.append("(" + " ".join(cyc) + ")")
        return "".join(parts) or "()"

    def __repr__(self):
        return f"VertexPermutation{self.cycles()}"


IDENTITY = VertexPermutation((1, 2, 3, 4))
TAU = VertexPermutation((2, 1, 4, 3))  # (1 2)(3 4)
MU = VertexPermutation((4, 3, 2, 1))  # (1 4)(2 3)
TAU_MU = VertexPermutation((3, 4, 1, 2))  # (1 3)(2 4)

ALL_PERMUTATIONS = tuple(
    VertexPermutation(p) for p in itertools.permutations((1, 2, 3, 4))
)
ROTATIONS = tuple(p for p in ALL_PERMUTATIONS if p.is_even)


def is_coxeter(t: LabeledTetrahedron) -> bool:
    return all(
        Fraction(1, a) + Fraction(1, b) + Fraction(1, c) > 1
        for a, b, c in t.vertex_triples()
    )


# exactly representable cosines
_COS = {2: 0.0, 3: 0.5}


def _cos_pi_over(m: int) -> float:
    return _COS[m] if m in _COS else math.cos(math.pi / m)


def gram_matrix(t: LabeledTetrahedron) -> np.ndarray:
    """Gram matrix of the face normals; face i is opposite vertex i.

    Faces i and j meet along the edge joining the two remaining vertices.
    """
    g = np.eye(4)
    for i, j in itertools.combinations(range(1, 5), 2):
        k, l = (v for v in range(1, 5) if v not in (i, j))
        g[i - 1, j - 1] = g[j - 1, i - 1] = -_cos_pi_over(t.label(k, l))
    return g


def leading_minors(t: LabeledTetrahedron) -> tuple[float, float, float, float]:
    g = gram_matrix(t)
    return tuple(float(np.linalg.det(g[:k, :k])) for k in range(1, 5))


def classify_geometry(t: LabeledTetrahedron) -> GeometryClass:
    if not is_coxeter(t):
        return GeometryClass.NOT_COXETER
    d1, d2, d3, d4 = leading_minors(t)
    if d1 > EPS and d2 > EPS and d3 > EPS:
        if d4 > EPS:
            return GeometryClass.SPHERICAL
        if d4 >= -EPS:
            return GeometryClass.EUCLIDEAN
        return GeometryClass.HYPERBOLIC
    raise ClassificationError(f"{t}: leading minors {(d1, d2, d3, d4)}")


def label_automorphisms(t: LabeledTetrahedron) -> frozenset[VertexPermutation]:
    """Rotations of the tetrahedron that preserve every edge label."""
    return frozenset(p for p in ROTATIONS if t.relabel(p) == t)


def canonical(t: LabeledTetrahedron) -> LabeledTetrahedron:
    """Lexicographically smallest label tuple over all 24 relabelings."""
    return min((t.relabel(p) for p in ALL_PERMUTATIONS), key=lambda s: s.labels)


def enumerate_tetrahedra(max_label: int) -> list[tuple[LabeledTetrahedron, GeometryClass]]:
    """Every Coxeter tetrahedron with labels <= max_label, up to relabeling."""
    if max_label < 2:
        raise ValueError("max_label must be >= 2")
    found = set()
    for labels in itertools.product(range(2, max_label + 1), repeat=6):
        t = LabeledTetrahedron(*labels)
        if is_coxeter(t):
            found.add(canonical(t))
    return [(t, classify_geometry(t)) for t in sorted(found, key=lambda s: s.labels)]
