from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from coxtet.orbifold import (
    Amalgam,
    BadOrbifold,
    Boundary,
    CoxeterQuotient,
    Double,
    Family,
    GluingMap,
    GluingSpec,
    MinimalOrbifoldType,
    NonIntegralGenus,
    OrientationClass,
    TwistedCoxeterQuotient,
    TypeMismatch,
    chi_orb,
    classify_gluing,
    genus_from_order,
    minimal_amalgams,
    minimal_types,
    orbifold_type,
    quotient_tetrahedron,
    search_minimal,
)
from coxtet.presentations import (
    ABAR4,
    ABAR5,
    A5,
    D,
    D2star,
    Dbar,
    Z,
    Zbar,
    catalogue_presentation,
    extended_triangle_order,
    family_group,
)
from coxtet.tc import order
from coxtet.tetra import GeometryClass, LabeledTetrahedron, classify_geometry


def test_chi_examples():
    assert chi_orb(Amalgam(Dbar(2), Zbar(2), Dbar(3))) == Fraction(1, 8) + Fraction(1, 12) - Fraction(1, 4)
    assert chi_orb(Amalgam(Dbar(2), Zbar(2), Dbar(3))) == Fraction(-1, 24)
    assert chi_orb(Amalgam(D2star(5), Zbar(5), ABAR5)) == Fraction(-1, 24)
    assert chi_orb(Amalgam(D(5), Z(5), A5, OrientationClass.PRESERVING)) == Fraction(-1, 12)


def test_minimal_amalgams():
    eight = minimal_amalgams()
    assert [a.name for a in eight] == [
        "Dbar2 *_Zbar2 Dbar3",
        "Dbar3 *_Zbar3 Abar4",
        "Dbar4 *_Zbar4 Sbar4",
        "Dbar5 *_Zbar5 Abar5",
        "D2*2 *_Zbar2 Dbar3",
        "D2*3 *_Zbar3 Abar4",
        "D2*4 *_Zbar4 Sbar4",
        "D2*5 *_Zbar5 Abar5",
    ]
    assert all(chi_orb(a) == Fraction(-1, 24) for a in eight)
    twelve = minimal_amalgams(orientation_preserving=True)
    assert len(twelve) == 12 and twelve[:8] == eight
    assert [a.name for a in twelve[8:]] == ["D2 *_Z2 D3", "D3 *_Z3 A4", "D4 *_Z4 S4", "D5 *_Z5 A5"]
    assert all(chi_orb(a) == Fraction(-1, 12) for a in twelve[8:])


def test_catalogue_orders_in_amalgams_agree_with_enumeration():
    for a in minimal_amalgams(orientation_preserving=True):
        for g in (a.g1, a.h, a.g2):
            assert order(catalogue_presentation(g)).index == g.order


def test_amalgam_to_type_mapping():
    assert [str(orbifold_type(a)) for a in minimal_amalgams()] == [
        "H2", "H3", "H4", "H5", "Ht2", "Ht3", "Ht4", "Ht5"]
    assert MinimalOrbifoldType(Family.H, 3).boundary is Boundary.SQUARE_2223
    assert MinimalOrbifoldType(Family.HT, 3).boundary is Boundary.DISK_2_23
    with pytest.raises(ValueError):
        orbifold_type(Amalgam(Dbar(2), Zbar(2), ABAR4))


def test_amalgam_validation():
    with pytest.raises(ValueError):
        Amalgam(Dbar(2), Zbar(5), Dbar(3))  # H larger than a factor
    with pytest.raises(ValueError):
        Amalgam(D(2), Zbar(2), Dbar(3))  # mixed orientation classes


def test_search_minimal_top_is_the_eight():
    results = search_minimal(100)
    top = [a for a, chi in results if chi == Fraction(-1, 24)]
    assert {frozenset((a.g1, a.g2)) for a in top} == {frozenset((a.g1, a.g2)) for a in minimal_amalgams()}
    assert results[0][1] == Fraction(-1, 24)
    assert not [a for a, chi in results if Fraction(-1, 24) < chi < 0]
    chis = [chi for _, chi in results]
    assert chis == sorted(chis, reverse=True) and all(c < 0 for c in chis)


def test_search_minimal_small_bound():
    results = search_minimal(2)
    top = [a for a, chi in results if chi == Fraction(-1, 24)]
    assert len(top) == 2 and all(a.n == 2 for a in top)


def test_search_minimal_large_parameters_are_not_negative():
    # for n >= 6 only Dbar_n and D2*n have a corner of order n, and
    # 1/4n + 1/4n - 1/2n = 0
    results = search_minimal(30)
    assert all(a.n <= 5 for a, _ in results)
    a = Amalgam(Dbar(6), Zbar(6), Dbar(6))
    assert chi_orb(a) == 0


def test_search_minimal_preserving():
    results = search_minimal(50, orientation_preserving=True)
    assert results[0][1] == Fraction(-1, 12)
    assert len([a for a, chi in results if chi == Fraction(-1, 12)]) == 4


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_minimal_chi_from_triangle_group_orders(n):
    # second factor is the reflection group [2,3,n]; orders from 4/(1/p+1/q+1/r-1)
    second = extended_triangle_order(2, 3, n)
    assert minimal_amalgams()[n - 2].g2.order == second
    assert Fraction(1, 4 * n) + Fraction(1, second) - Fraction(1, 2 * n) == Fraction(-1, 24)


@pytest.mark.parametrize(
    "order_, chi, g",
    [(14400, Fraction(-1, 24), 601), (240, Fraction(-1, 24), 11), (480, Fraction(-1, 48), 11), (24, Fraction(-1, 24), 2)],
)
def test_genus_from_order(order_, chi, g):
    assert genus_from_order(order_, chi) == g


def test_genus_non_integral():
    with pytest.raises(NonIntegralGenus):
        genus_from_order(25, Fraction(-1, 24))
    with pytest.raises(ValueError):
        genus_from_order(24, Fraction(1, 24))


@given(st.integers(1, 10**6))
def test_genus_roundtrip(k):
    assert genus_from_order(24 * k, Fraction(-1, 24)) == k + 1


@pytest.mark.parametrize(
    "family, n, m",
    [("C", 2, 2), ("C", 2, 3), ("C", 2, 4), ("C", 2, 5), ("C", 3, 3), ("C", 3, 4), ("C", 3, 5),
     ("Ctau", 2, 2), ("Ctau", 2, 3), ("Ctau", 2, 4)],
)
def test_spherical_orders_divisible_by_24(family, n, m):
    t, p = family_group(family, n, m)
    assert classify_geometry(t) is GeometryClass.SPHERICAL
    genus_from_order(order(p).index, Fraction(-1, 24))


def T(s):
    return MinimalOrbifoldType.parse(s)


@pytest.mark.parametrize(
    "left, right, gmap, outcome",
    [
        ("H5", "H5", GluingMap.IDENTITY, Double(Family.H, 5)),
        ("H4", "H5", GluingMap.IDENTITY, BadOrbifold(4, 5)),
        ("Ht3", "Ht4", GluingMap.REFLECTION, TwistedCoxeterQuotient(3, 4)),
        ("H2", "Ht2", GluingMap.IDENTITY, TypeMismatch()),
        ("Ht2", "H2", GluingMap.REFLECTION, TypeMismatch()),
        ("H3", "H5", GluingMap.REFLECTION, CoxeterQuotient(3, 5)),
    ],
)
def test_classify_gluing_examples(left, right, gmap, outcome):
    assert classify_gluing(GluingSpec(T(left), T(right), gmap)) == outcome


def test_classify_gluing_exhaustive():
    outcomes = [
        classify_gluing(GluingSpec(l, r, g))
        for l in minimal_types() for r in minimal_types() for g in GluingMap
    ]
    counts = Counter(type(o).__name__ for o in outcomes)
    assert counts == {"TypeMismatch": 64, "Double": 8, "BadOrbifold": 24,
                      "CoxeterQuotient": 16, "TwistedCoxeterQuotient": 16}
    for l in minimal_types():
        for r in minimal_types():
            o = classify_gluing(GluingSpec(l, r, GluingMap.REFLECTION))
            if isinstance(o, CoxeterQuotient):
                assert l.family is r.family is Family.H
            if isinstance(o, TwistedCoxeterQuotient):
                assert l.family is r.family is Family.HT


def test_quotient_tetrahedron():
    t = quotient_tetrahedron(CoxeterQuotient(4, 5))
    assert t == LabeledTetrahedron(4, 5, 2, 2, 2, 3)
    assert classify_geometry(t) is GeometryClass.HYPERBOLIC
    t = quotient_tetrahedron(TwistedCoxeterQuotient(2, 4))
    assert t == LabeledTetrahedron(2, 4, 3, 3, 2, 2)
    assert classify_geometry(t) is GeometryClass.SPHERICAL
    assert quotient_tetrahedron(Double(Family.H, 3)) is None
    assert quotient_tetrahedron(TypeMismatch()) is None


def test_type_parse_errors():
    for bad in ("H1", "H6", "Hx", "X2", "Ht"):
        with pytest.raises(ValueError):
            MinimalOrbifoldType.parse(bad)
