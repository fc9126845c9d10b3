"""Ground-truth checker: exhaustive enumeration of basic solutions.

Deliberately shares no code path with the simplex machinery.  The
constraint system A x <= b, x >= 0 is rewritten as [A | I] y = b with
y >= 0; every m-subset of columns is solved exactly, nonnegative
solutions are collected as vertices, and unboundedness is decided by
testing every edge direction at every feasible basis for a feasible,
objective-improving ray.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, lcm
from typing import Optional

from .model import StandardProblem
from .numeric import ExactMode


class TooLarge(ValueError):
    """The basis count exceeds the enumeration guard."""


@dataclass(frozen=True)
class OracleResult:
    feasible: bool
    unbounded: bool
    # Reported in the problem's original sense (a minimum for min input),
    # matching what solve() reports for the same file.  None unless
    # feasible and bounded.
    optimal_value: Optional[Fraction]
    optimal_vertex: Optional[tuple[Fraction, ...]]
    vertices: tuple[tuple[Fraction, ...], ...]  # distinct, sorted


def _integer_rows(sp: StandardProblem) -> tuple[list[list[int]], list[int]]:
    """Row-scale [A | I] and b to integers (scaling keeps the x-geometry)."""
    rows: list[list[int]] = []
    rhs: list[int] = []
    for i in range(sp.m):
        values = [Fraction(x) for x in sp.A[i]] + [Fraction(sp.b[i])]
        scale = lcm(*(v.denominator for v in values))
        row = [int(v * scale) for v in values[:-1]]
        slack_part = [scale if k == i else 0 for k in range(sp.m)]
        rows.append(row + slack_part)
        rhs.append(int(values[-1] * scale))
    return rows, rhs


def _solve_subset(
    matrix: list[list[int]], width: int
) -> Optional[list[list[Fraction]]]:
    """Gaussian elimination on an integer matrix whose first `width`
    columns must be invertible; returns solutions for every augmented
    column, or None when singular.  Fraction-free (Bareiss) forward pass,
    exact back-substitution."""
    a = [row[:] for row in matrix]
    size = width
    total = len(a[0])
    sign = 1
    prev = 1
    for k in range(size):
        pivot_row = next(
            (i for i in range(k, size) if a[i][k] != 0),
            None,
        )
        if pivot_row is None:
            return None
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, total):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]

    solutions: list[list[Fraction]] = []
    for col in range(size, total):
        x = [Fraction(0)] * size
        for i in range(size - 1, -1, -1):
            acc = Fraction(a[i][col])
            for j in range(i + 1, size):
                acc -= a[i][j] * x[j]
            x[i] = acc / a[i][i]
        solutions.append(x)
    return solutions


def enumerate_vertices(sp: StandardProblem, guard: int = 10**6) -> OracleResult:
    """Enumerate all basic solutions of the slack-augmented system.

    Raises TooLarge when C(m+p, m) exceeds `guard`.  Exact mode only:
    the whole point of the oracle is bit-for-bit comparability.
    """
    if not isinstance(sp.mode, ExactMode):
        raise ValueError("the enumeration oracle runs in exact mode only")
    m, p = sp.m, sp.p
    total_cols = m + p
    if comb(total_cols, m) > guard:
        raise TooLarge(
            f"C({total_cols}, {m}) = {comb(total_cols, m)} bases exceeds guard {guard}"
        )

    rows, rhs = _integer_rows(sp)
    c_ext = [Fraction(x) for x in sp.c] + [Fraction(0)] * m

    feasible = False
    unbounded = False
    vertices: set[tuple[Fraction, ...]] = set()
    best: Optional[Fraction] = None
    best_vertex: Optional[tuple[Fraction, ...]] = None

    for subset in combinations(range(total_cols), m):
        others = [j for j in range(total_cols) if j not in subset]
        # Augmented layout: basis columns | rhs | every nonbasis column.
        matrix = [
            [rows[i][j] for j in subset]
            + [rhs[i]]
            + [rows[i][j] for j in others]
            for i in range(m)
        ]
        solved = _solve_subset(matrix, m)
        if solved is None:
            continue
        x_basis = solved[0]
        if any(v < 0 for v in x_basis):
            continue
        feasible = True

        full = [Fraction(0)] * total_cols
        for pos, j in enumerate(subset):
            full[j] = x_basis[pos]
        vertex = tuple(full[:p])
        vertices.add(vertex)
        value = sum((sp.c[j] * full[j] for j in range(p)), Fraction(0))
        if best is None or value > best or (value == best and vertex < best_vertex):
            best, best_vertex = value, vertex

        for pos, j in enumerate(others, start=1):
            y = solved[pos]  # basis response to raising column j
            if all(v <= 0 for v in y):
                reduced = c_ext[j] - sum(
                    (c_ext[subset[k]] * y[k] for k in range(m)), Fraction(0)
                )
                if reduced > 0:
                    unbounded = True

    if unbounded:
        best, best_vertex = None, None
    if best is not None and sp.negated_objective:
        best = -best
    return OracleResult(
        feasible=feasible,
        unbounded=unbounded,
        optimal_value=best,
        optimal_vertex=best_vertex,
        vertices=tuple(sorted(vertices)),
    )
