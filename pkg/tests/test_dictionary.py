"""Dictionary pivots, classification, and the negative transpose."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import afsimplex as af
from afsimplex.dictionary import (
    Dictionary,
    ZeroPivot,
    initial_dictionary,
    slack,
    structural,
)


@st.composite
def dictionaries(draw, max_rows=4, max_cols=4):
    m = draw(st.integers(1, max_rows))
    n = draw(st.integers(1, max_cols))
    cell = st.integers(-6, 6).map(F)
    entries = tuple(
        tuple(draw(cell) for _ in range(n + 1)) for _ in range(m + 1)
    )
    return Dictionary(
        basis=tuple(slack(i + 1) for i in range(m)),
        nonbasis=tuple(structural(j + 1) for j in range(n)),
        entries=entries,
    )


@st.composite
def dictionaries_with_pivot(draw):
    d = draw(dictionaries())
    spots = [
        (i, j)
        for i in range(1, d.m + 1)
        for j in range(1, d.n + 1)
        if d.entries[i][j] != 0
    ]
    if not spots:
        # force one usable pivot entry
        row = list(d.entries[1])
        row[1] = F(1)
        entries = (d.entries[0], tuple(row)) + d.entries[2:]
        d = Dictionary(d.basis, d.nonbasis, entries)
        spots = [(1, 1)]
    return d, draw(st.sampled_from(spots))


def test_initial_dictionary_walk(walk_sp):
    d = initial_dictionary(walk_sp)
    assert [d.rhs(i) for i in range(1, 6)] == [F(4), F(-6), F(-18), F(-8), F(-32)]
    assert d.entries[0] == (F(0), F(-3), F(-5))
    assert [l.name for l in d.basis] == ["w1", "w2", "w3", "w4", "w5"]
    assert [l.name for l in d.nonbasis] == ["x1", "x2"]


def test_initial_dictionary_tiny():
    sp = af.standardize(af.parse_lp("max: x1;\nc1: x1 <= 1;\n"))
    d = initial_dictionary(sp)
    assert d.m == d.n == 1
    assert d.rhs(1) == F(1)
    assert d.entries[0] == (F(0), F(-1))


def test_basic_solution_reads_rhs(walk_sp):
    d = initial_dictionary(walk_sp)
    values, z = d.basic_solution()
    assert z == F(0)
    assert values[slack(1)] == F(4)
    assert values[structural(1)] == F(0)
    assert d.corner() == (F(0), F(0))


def test_pivot_rejects_zero_entry(walk_sp):
    d = initial_dictionary(walk_sp)
    # row c2 has no x1 term
    assert d.entry(2, 1) == F(0)
    with pytest.raises(ZeroPivot):
        d.pivot(2, 1)


def test_pivot_out_of_range(walk_sp):
    d = initial_dictionary(walk_sp)
    with pytest.raises(IndexError):
        d.pivot(6, 1)


def test_pivot_swaps_labels(walk_sp):
    d = initial_dictionary(walk_sp).pivot(1, 1)
    assert d.row_label(1) == structural(1)
    assert d.column_label(1) == slack(1)


@given(dictionaries_with_pivot())
def test_pivot_is_an_involution(case):
    d, (r, m) = case
    back = d.pivot(r, m).pivot(r, m)
    assert back.entries == d.entries
    assert back.basis == d.basis
    assert back.nonbasis == d.nonbasis


@given(dictionaries_with_pivot())
@settings(max_examples=60)
def test_pivot_preserves_the_solution_set(case):
    # the pivoted dictionary's basic solution must satisfy every defining
    # equation of the original dictionary, objective row included
    d, (r, m) = case
    values, z = d.pivot(r, m).basic_solution()
    for i in range(1, d.m + 1):
        rhs = d.entries[i][0] - sum(
            d.entries[i][j] * values[d.column_label(j)]
            for j in range(1, d.n + 1)
        )
        assert values[d.row_label(i)] == rhs
    assert z == d.entries[0][0] - sum(
        d.entries[0][j] * values[d.column_label(j)] for j in range(1, d.n + 1)
    )


@given(dictionaries())
def test_negative_transpose_is_an_involution(d):
    assert d.negative_transpose().negative_transpose() == d


@given(dictionaries())
def test_negative_transpose_trades_feasibility_flags(d):
    flags = d.classify()
    mirrored = d.negative_transpose().classify()
    assert flags.primal_feasible == mirrored.dual_feasible
    assert flags.dual_feasible == mirrored.primal_feasible


@given(dictionaries_with_pivot())
@settings(max_examples=60)
def test_negative_transpose_commutes_with_pivot(case):
    d, (r, m) = case
    assert d.pivot(r, m).negative_transpose() == d.negative_transpose().pivot(m, r)


def test_classify_inconsistent_row():
    d = Dictionary(
        basis=(slack(1),),
        nonbasis=(structural(1),),
        entries=((F(0), F(1)), (F(-2), F(3))),
    )
    flags = d.classify()
    assert flags.inconsistent_row == 1
    assert not flags.primal_feasible


def test_classify_unbounded_column():
    d = Dictionary(
        basis=(slack(1), slack(2)),
        nonbasis=(structural(1),),
        entries=((F(0), F(-5)), (F(1), F(-1)), (F(2), F(0))),
    )
    assert d.classify().unbounded_column == 1


def test_classify_walk_after_phase1(walk_sp):
    d0 = initial_dictionary(walk_sp)
    d1, _, _ = af.run_phase1(d0, af.SolveConfig())
    flags = d1.classify()
    assert flags.primal_feasible
    assert not flags.dual_feasible  # an improving column remains


def test_drop_column():
    d = Dictionary(
        basis=(slack(1),),
        nonbasis=(structural(1), structural(2)),
        entries=((F(0), F(1), F(2)), (F(3), F(4), F(5))),
    )
    dropped = d.drop_column(1)
    assert dropped.nonbasis == (structural(2),)
    assert dropped.entries == ((F(0), F(2)), (F(3), F(5)))


def test_signature_ignores_row_order():
    a = Dictionary(
        basis=(slack(2), slack(1)),
        nonbasis=(structural(1),),
        entries=((F(0), F(1)), (F(1), F(1)), (F(2), F(1))),
    )
    b = Dictionary(
        basis=(slack(1), slack(2)),
        nonbasis=(structural(1),),
        entries=((F(0), F(1)), (F(2), F(1)), (F(1), F(1))),
    )
    assert a.signature() == b.signature()
