"""Simplex dictionaries: an (m+1) x (n+1) array of exact entries plus
the basis bookkeeping, with the pivot transform that re-expresses it.

Row 0 holds the objective (entry [0][0] is the current objective value),
column 0 holds the right-hand sides, and public indices are 1-based so
that code reads like the algebra: entry(i, j) is d_ij.  A dictionary is
read as

    basic_i = d_i0 - sum_j d_ij * nonbasic_j
    z       = d_00 - sum_j d_0j * nonbasic_j

so an objective-row entry is the negated reduced cost of its column.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Optional

from .model import StandardProblem
from .numeric import EXACT, NumericMode, Value


class ZeroPivot(ValueError):
    """Pivot requested on an entry classified as zero."""


class LabelKind(IntEnum):
    STRUCTURAL = 0
    SLACK = 1
    ARTIFICIAL = 2


@dataclass(frozen=True, order=True)
class Label:
    """Identity of a variable; ordering is structural < slack < artificial,
    then by index, which gives the label-id order used by tie-breaks."""

    kind: LabelKind
    index: int

    @property
    def name(self) -> str:
        prefix = {
            LabelKind.STRUCTURAL: "x",
            LabelKind.SLACK: "w",
            LabelKind.ARTIFICIAL: "a",
        }[self.kind]
        return f"{prefix}{self.index}"

    def __repr__(self) -> str:  # keeps test output readable
        return self.name


def structural(index: int) -> Label:
    return Label(LabelKind.STRUCTURAL, index)


def slack(index: int) -> Label:
    return Label(LabelKind.SLACK, index)


def artificial(index: int) -> Label:
    return Label(LabelKind.ARTIFICIAL, index)


@dataclass(frozen=True)
class DictStatus:
    primal_feasible: bool
    dual_feasible: bool
    inconsistent_row: Optional[int]
    unbounded_column: Optional[int]


@dataclass(frozen=True)
class Dictionary:
    basis: tuple[Label, ...]
    nonbasis: tuple[Label, ...]
    entries: tuple[tuple[Value, ...], ...]
    mode: NumericMode = EXACT

    def __post_init__(self):
        if len(self.entries) != self.m + 1:
            raise ValueError("entry grid must have m+1 rows")
        for row in self.entries:
            if len(row) != self.n + 1:
                raise ValueError("entry grid must have n+1 columns")
        if set(self.basis) & set(self.nonbasis):
            raise ValueError("a label cannot be basic and nonbasic at once")

    @property
    def m(self) -> int:
        return len(self.basis)

    @property
    def n(self) -> int:
        return len(self.nonbasis)

    def entry(self, i: int, j: int) -> Value:
        return self.entries[i][j]

    def rhs(self, i: int) -> Value:
        return self.entries[i][0]

    @property
    def objective_value(self) -> Value:
        return self.entries[0][0]

    def row_label(self, i: int) -> Label:
        return self.basis[i - 1]

    def column_label(self, j: int) -> Label:
        return self.nonbasis[j - 1]

    def signature(self) -> tuple[Label, ...]:
        """Sorted basis labels; the identity of the basis."""
        return tuple(sorted(self.basis))

    def pivot(self, r: int, m: int) -> "Dictionary":
        """Exchange basis row r with nonbasis column m.

        Implements the standard dictionary pivot: with p = d_rm,

            d'_rm = 1/p          d'_rj = d_rj / p
            d'_im = -d_im / p    d'_ij = d_ij - d_im * d_rj / p

        for i != r (the objective row included) and j != m, applied to
        column 0 and row 0 alike.  Returns a new dictionary; raises
        ZeroPivot when d_rm classifies as zero.
        """
        if not (1 <= r <= self.m and 1 <= m <= self.n):
            raise IndexError(f"pivot ({r}, {m}) outside dictionary")
        d = self.entries
        p = d[r][m]
        if self.mode.is_zero(p):
            raise ZeroPivot(f"entry ({r}, {m}) = {p!r} classifies as zero")

        rows = []
        for i in range(self.m + 1):
            if i == r:
                rows.append(
                    tuple(
                        1 / p if j == m else d[r][j] / p
                        for j in range(self.n + 1)
                    )
                )
            else:
                factor = d[i][m] / p
                rows.append(
                    tuple(
                        -factor if j == m else d[i][j] - factor * d[r][j]
                        for j in range(self.n + 1)
                    )
                )

        basis = list(self.basis)
        nonbasis = list(self.nonbasis)
        basis[r - 1], nonbasis[m - 1] = nonbasis[m - 1], basis[r - 1]
        return Dictionary(tuple(basis), tuple(nonbasis), tuple(rows), self.mode)

    def drop_column(self, m: int) -> "Dictionary":
        """Remove nonbasis position m (used to retire artificial columns)."""
        nonbasis = self.nonbasis[: m - 1] + self.nonbasis[m:]
        rows = tuple(row[:m] + row[m + 1 :] for row in self.entries)
        return Dictionary(self.basis, nonbasis, rows, self.mode)

    def classify(self) -> DictStatus:
        """Feasibility flags plus one-line certificates when available.

        inconsistent_row is the smallest row with negative rhs and no
        negative entry (its equation cannot be satisfied by nonnegative
        variables); unbounded_column is the smallest column with negative
        objective entry and no positive entry below it.
        """
        mode = self.mode
        d = self.entries
        primal = all(mode.is_nonnegative(d[i][0]) for i in range(1, self.m + 1))
        dual = all(mode.is_nonnegative(d[0][j]) for j in range(1, self.n + 1))
        inconsistent = None
        for i in range(1, self.m + 1):
            if mode.is_negative(d[i][0]) and all(
                mode.is_nonnegative(d[i][j]) for j in range(1, self.n + 1)
            ):
                inconsistent = i
                break
        unbounded = None
        for j in range(1, self.n + 1):
            if mode.is_negative(d[0][j]) and all(
                mode.sign(d[i][j]) <= 0 for i in range(1, self.m + 1)
            ):
                unbounded = j
                break
        return DictStatus(primal, dual, inconsistent, unbounded)

    def basic_solution(self) -> tuple[dict[Label, Value], Value]:
        """Values of every label (nonbasic ones are zero) and the objective."""
        values: dict[Label, Value] = {}
        for i, label in enumerate(self.basis, start=1):
            values[label] = self.entries[i][0]
        for label in self.nonbasis:
            values[label] = self.mode.zero
        return values, self.objective_value

    def corner(self) -> tuple[Value, ...]:
        """Structural-variable values at the current basic solution."""
        values, _ = self.basic_solution()
        pairs = sorted(
            (label.index, v)
            for label, v in values.items()
            if label.kind is LabelKind.STRUCTURAL
        )
        return tuple(v for _, v in pairs)

    def negative_transpose(self) -> "Dictionary":
        """The dual dictionary D*: d*_ji = -d_ij with border rows swapped.

        Rows of D* are indexed by this dictionary's nonbasis labels and
        columns by its basis labels; primal and dual feasibility trade
        places, and the map is an involution.
        """
        d = self.entries
        rows = [
            tuple([-d[0][0]] + [d[i][0] for i in range(1, self.m + 1)])
        ]
        for j in range(1, self.n + 1):
            rows.append(
                tuple([d[0][j]] + [-d[i][j] for i in range(1, self.m + 1)])
            )
        return Dictionary(self.nonbasis, self.basis, tuple(rows), self.mode)


def initial_dictionary(sp: StandardProblem) -> Dictionary:
    """Slack-basic starting dictionary: w_i = b_i - A_i . x, z = c . x."""
    mode = sp.mode
    top = tuple([mode.zero] + [-cj for cj in sp.c])
    rows = [top]
    for i in range(sp.m):
        rows.append(tuple([sp.b[i]] + list(sp.A[i])))
    basis = tuple(slack(i) for i in range(1, sp.m + 1))
    nonbasis = tuple(structural(j) for j in range(1, sp.p + 1))
    return Dictionary(basis, nonbasis, tuple(rows), mode)
