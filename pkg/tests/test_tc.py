from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from coxtet.presentations import (
    Presentation,
    ReflectionSubgroup,
    coxeter_presentation,
    dihedral_presentation,
    family_group,
    subgroup_words,
    twisted_presentation,
)
from coxtet.tc import (
    BUDGET_ENV,
    Completed,
    CosetTable,
    Exceeded,
    check_table,
    default_budget,
    enumerate_cosets,
    index,
    order,
)
from coxtet.tetra import LabeledTetrahedron, coxeter_family, twisted_family

GOLDEN = Path(__file__).parent / "golden"


def abelian(n, m):
    """Z_n x Z_m; no involutory generators, so inverse columns are real."""
    return Presentation(("x", "y"), ((1,) * n, (2,) * m, (1, 2, -1, -2)))


def test_order_examples():
    assert order(coxeter_presentation(LabeledTetrahedron(2, 2, 2, 2, 2, 3)), 10**5).index == 24
    assert order(coxeter_presentation(coxeter_family(3, 5)), 10**6).index == 14400
    assert order(coxeter_presentation(coxeter_family(2, 5))).index == 240
    assert order(coxeter_presentation(twisted_family(2, 4))).index == 1152
    assert order(Presentation(("g",), ((1,),))).index == 1


def test_hyperbolic_exceeds_budget():
    assert order(coxeter_presentation(coxeter_family(5, 5)), 10**5) == Exceeded(10**5)


def test_index_examples():
    _, p = family_group("Ctau", 2, 3)
    assert index(p, subgroup_words(p, ReflectionSubgroup())).index == 2
    _, p = family_group("Ctaumu", 2, 2)
    assert index(p, subgroup_words(p, ReflectionSubgroup())).index == 4
    _, p = family_group("C", 3, 4)
    assert index(p, [(g,) for g in range(1, 5)]).index == 1


def test_empty_subgroup_word_is_identity():
    p = dihedral_presentation(5)
    assert index(p, [()]).index == 10


def test_bad_arguments():
    p = dihedral_presentation(3)
    with pytest.raises(ValueError):
        enumerate_cosets(p, [(3,)])
    with pytest.raises(ValueError):
        enumerate_cosets(p, (), 0)


def test_budget_env(monkeypatch):
    monkeypatch.setenv(BUDGET_ENV, "50")
    assert default_budget() == 50
    assert order(coxeter_presentation(coxeter_family(2, 5))) == Exceeded(50)
    monkeypatch.delenv(BUDGET_ENV)
    assert default_budget() == 10**6


FINITE = [
    coxeter_presentation(coxeter_family(3, 4)),
    coxeter_presentation(coxeter_family(3, 5)),
    twisted_presentation(twisted_family(2, 4), {"tau"}),
    twisted_presentation(twisted_family(2, 2), {"tau", "mu"}),
    twisted_presentation(coxeter_family(3, 3), {"mu"}),
    abelian(6, 4),
    Presentation(("a", "b"), ((1, 1), (2, 2, 2), (1, 2) * 5)),  # (2,3,5): A5
]


@pytest.mark.parametrize("p", FINITE, ids=lambda p: str(p)[:40])
def test_completed_table_satisfies_invariants(p):
    r = order(p)
    assert isinstance(r, Completed) and r.index == len(r.table)
    check_table(p, r.table)
    # transitive from coset 0
    seen, stack = {0}, [0]
    while stack:
        c = stack.pop()
        for d in r.table.rows[c]:
            if d not in seen:
                seen.add(d)
                stack.append(d)
    assert len(seen) == r.index


def test_subgroup_words_fix_coset_zero():
    _, p = family_group("Ctaumu", 2, 2)
    words = subgroup_words(p, ReflectionSubgroup())
    r = index(p, words)
    check_table(p, r.table, words)


def test_check_table_rejects_broken_table():
    p = dihedral_presentation(3)
    r = order(p)
    rows = [list(row) for row in r.table.rows]
    rows[0][0], rows[1][0] = rows[1][0], rows[0][0]
    with pytest.raises(AssertionError):
        check_table(p, CosetTable(p.generators, tuple(map(tuple, rows))))


def test_deterministic_tables():
    p = twisted_presentation(twisted_family(2, 3), {"tau"})
    assert order(p).table.dump() == order(p).table.dump()


def test_golden_table_dump():
    p = coxeter_presentation(LabeledTetrahedron(2, 2, 2, 2, 2, 3))
    assert order(p).table.dump() == (GOLDEN / "c22-2223.table").read_text()


def test_dump_format():
    line = order(dihedral_presentation(2)).table.dump().splitlines()[0]
    assert line == "0 a -> 1"


@pytest.mark.parametrize("p", FINITE[:5], ids=lambda p: str(p)[:40])
def test_budget_monotonicity(p):
    r = order(p)
    assert order(p, r.peak_live) == r
    assert order(p, r.peak_live + 1000) == r
    assert order(p, r.peak_live - 1) == Exceeded(r.peak_live - 1)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 30), st.integers(1, 30))
def test_abelian_orders(n, m):
    r = order(abelian(n, m))
    assert r.index == n * m
    check_table(abelian(n, m), r.table)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 60))
def test_dihedral_orders_and_subgroups(n):
    p = dihedral_presentation(n)
    assert order(p).index == 2 * n
    assert index(p, [(1,)]).index == n
    assert index(p, [(1, 2)]).index == 2


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 12), st.integers(1, 12), st.integers(1, 12))
def test_cyclic_quotient_by_power(n, a, b):
    # <x | x^n> with subgroup <x^a, x^b> has index gcd(n, a, b)
    from math import gcd

    p = Presentation(("x",), ((1,) * n,))
    assert index(p, [(1,) * a, (-1,) * b]).index == gcd(gcd(n, a), b)
