"""Todd-Coxeter coset enumeration (HLT strategy).

Cosets are scanned in creation order; for each live coset every relator is
traced, defining new cosets to fill gaps.  Coincidences are processed
immediately with a union-find over coset ids, always keeping the smaller id.
A generator ``x`` that has ``x^2`` among the relators shares a single table
column with its inverse, which makes that relator hold by construction.

The budget bounds the number of simultaneously live cosets.  ``Exceeded``
says nothing about whether the index is finite.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .presentations import Presentation, Word

DEFAULT_BUDGET = 10**6
BUDGET_ENV = "COXTET_BUDGET"


def default_budget() -> int:
    value = os.environ.get(BUDGET_ENV)
    return int(value) if value else DEFAULT_BUDGET


@dataclass(frozen=True)
class CosetTable:
    """A completed coset table.

    ``rows[c]`` lists the image of coset ``c`` under each column, in the
    order ``g1, g1^-1, g2, g2^-1, ...``.  Coset 0 is the subgroup.
    """

    generators: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.rows)

    @staticmethod
    def column(letter: int) -> int:
        return 2 * (abs(letter) - 1) + (letter < 0)

    def act(self, coset: int, letter: int) -> int:
        return self.rows[coset][self.column(letter)]

    def trace(self, coset: int, word: Word) -> int:
        for x in word:
            coset = self.rows[coset][2 * (abs(x) - 1) + (x < 0)]
        return coset

    def column_names(self) -> list[str]:
        return [name for g in self.generators for name in (g, f"{g}^-1")]

    def dump(self) -> str:
        """``coset gen -> coset`` lines in row-major order."""
        names = self.column_names()
        return "".join(
            f"{c} {names[j]} -> {d}\n" for c, row in enumerate(self.rows) for j, d in enumerate(row)
        )


@dataclass(frozen=True)
class Completed:
    index: int
    table: CosetTable
    peak_live: int
    defined: int


@dataclass(frozen=True)
class Exceeded:
    budget: int


class _BudgetExhausted(Exception):
    pass


def _columns(p: Presentation):
    """Column for each letter, and the inverse-column map."""
    involutions = {abs(w[0]) for w in p.relators if len(w) == 2 and w[0] == w[1]}
    col_of: dict[int, int] = {}
    inv: list[int] = []
    for g in range(1, p.generator_count + 1):
        c = len(inv)
        if g in involutions:
            col_of[g] = col_of[-g] = c
            inv.append(c)
        else:
            col_of[g], col_of[-g] = c, c + 1
            inv.extend((c + 1, c))
    return col_of, inv, involutions


def enumerate_cosets(p: Presentation, subgroup=(), budget: int | None = None):
    """Enumerate cosets of the subgroup generated by ``subgroup`` words.

    Returns ``Completed`` or ``Exceeded``.  Deterministic.
    """
    if budget is None:
        budget = default_budget()
    if budget < 1:
        raise ValueError("budget must be >= 1")
    for w in subgroup:
        for x in w:
            if x == 0 or abs(x) > p.generator_count:
                raise ValueError(f"subgroup word {w} uses letters outside the presentation")

    col_of, inv, involutions = _columns(p)
    ncols = len(inv)
    rels = [
        [col_of[x] for x in w]
        for w in p.relators
        if not (len(w) == 2 and w[0] == w[1] and abs(w[0]) in involutions)
    ]
    gens = [[col_of[x] for x in w] for w in subgroup if w]

    table: list[list[int]] = [[-1] * ncols]
    parent = [0]
    live = 1
    peak = 1

    def define(a, x):
        nonlocal live, peak
        if live >= budget:
            raise _BudgetExhausted
        b = len(table)
        table.append([-1] * ncols)
        parent.append(b)
        table[a][x] = b
        table[b][inv[x]] = a
        live += 1
        if live > peak:
            peak = live

    def rep(k):
        root = k
        while parent[root] != root:
            root = parent[root]
        while parent[k] != root:
            parent[k], k = root, parent[k]
        return root

    def coincidence(a, b):
        nonlocal live
        queue = []

        def merge(k, l):
            nonlocal live
            k, l = rep(k), rep(l)
            if k != l:
                if l < k:
                    k, l = l, k
                parent[l] = k
                live -= 1
                queue.append(l)

        merge(a, b)
        i = 0
        while i < len(queue):
            g = queue[i]
            i += 1
            row = table[g]
            for x in range(ncols):
                d = row[x]
                if d < 0:
                    continue
                xi = inv[x]
                table[d][xi] = -1
                m, n = rep(g), rep(d)
                if table[m][x] >= 0:
                    merge(n, table[m][x])
                elif table[n][xi] >= 0:
                    merge(m, table[n][xi])
                else:
                    table[m][x] = n
                    table[n][xi] = m

    def scan_and_fill(a, w):
        r = len(w)
        f, i = a, 0
        b, j = a, r - 1
        while True:
            row = table[f]
            while i <= j and row[w[i]] >= 0:
                f = row[w[i]]
                row = table[f]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            row = table[b]
            while j >= i and row[inv[w[j]]] >= 0:
                b = row[inv[w[j]]]
                row = table[b]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if j == i:
                table[f][w[i]] = b
                table[b][inv[w[i]]] = f
                return
            define(f, w[i])

    try:
        for w in gens:
            scan_and_fill(0, w)
            if parent[0] != 0:
                break
        a = 0
        while a < len(table):
            if parent[a] == a:
                for w in rels:
                    scan_and_fill(a, w)
                    if parent[a] != a:
                        break
                else:
                    row = table[a]
                    for x in range(ncols):
                        if row[x] < 0:
                            define(a, x)
            a += 1
    except _BudgetExhausted:
        return Exceeded(budget)

    alive = [c for c in range(len(table)) if parent[c] == c]
    renumber = {c: k for k, c in enumerate(alive)}
    rows = []
    for c in alive:
        row = table[c]
        full = []
        for g in range(1, p.generator_count + 1):
            full.append(renumber[row[col_of[g]]])
            full.append(renumber[row[col_of[-g]]])
        rows.append(tuple(full))
    result = CosetTable(p.generators, tuple(rows))
    return Completed(len(rows), result, peak, len(table))


def order(p: Presentation, budget: int | None = None):
    return enumerate_cosets(p, (), budget)


def index(p: Presentation, subgroup, budget: int | None = None):
    return enumerate_cosets(p, subgroup, budget)


def check_table(p: Presentation, table: CosetTable, subgroup=()) -> None:
    """Raise AssertionError unless ``table`` is closed, consistent, and
    satisfies every relator at every coset and every subgroup word at 0."""
    n = len(table)
    for c, row in enumerate(table.rows):
        for g in range(1, p.generator_count + 1):
            d = row[table.column(g)]
            if not 0 <= d < n:
                raise AssertionError(f"coset {c}: entry out of range")
            if table.act(d, -g) != c:
                raise AssertionError(f"coset {c}, {p.generators[g - 1]}: inverse entry mismatch")
        for w in p.relators:
            if table.trace(c, w) != c:
                raise AssertionError(f"relator {p.format_word(w)} fails at coset {c}")
    for w in subgroup:
        if table.trace(0, w) != 0:
            raise AssertionError(f"subgroup word {p.format_word(w)} moves coset 0")
