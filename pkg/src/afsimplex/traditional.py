"""Artificial-variable phase 1, kept as the reference method.

Rows whose right-hand side is negative get an artificial basic variable
(rows already satisfied at the origin keep their slack); the auxiliary
objective drives the total artificial value to zero with the classical
Dantzig rule and minimum-ratio test.  Artificial columns are never
materialized: an artificial that leaves the basis is retired on the
spot, so the method ends with a plain dictionary over the original
labels.

A basic artificial sitting at value zero can always be swapped out
against its conjugate slack, whose coefficient in that row is exactly -1
for as long as the artificial stays basic.  Pivoting there only negates
the pivot row and touches the two objective rows; every other row is
unchanged bit for bit.  That shortcut is the optional "trick" below.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .dictionary import (
    Dictionary,
    Label,
    LabelKind,
    artificial,
    slack,
    structural,
)
from .model import StandardProblem
from .numeric import ExactMode, Value
from .phase1 import _break_tie
from .trace import PivotRecord, SolveConfig, Status, TieBreak, Trace


class TraditionalVerdict(Enum):
    PIVOT = "pivot"
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class TraditionalDecision:
    entering_column: Optional[int]
    leaving_row: Optional[int]
    ratio: Optional[Value]
    via_conjugate: bool
    verdict: TraditionalVerdict


@dataclass(frozen=True)
class AuxiliaryDictionary:
    """A dictionary plus the auxiliary objective row.

    `inner` carries the original objective in its row 0 the whole time;
    `phase1_row` is the auxiliary row stored in the same convention
    (entry 0 is the current value, which equals minus the total of the
    basic artificial values).
    """

    inner: Dictionary
    phase1_row: tuple[Value, ...]

    @property
    def mode(self):
        return self.inner.mode

    def artificial_rows(self) -> tuple[int, ...]:
        return tuple(
            i
            for i, label in enumerate(self.inner.basis, start=1)
            if label.kind is LabelKind.ARTIFICIAL
        )

    def infeasibility(self) -> Value:
        """Total value of the basic artificials (= minus the row's value)."""
        return -self.phase1_row[0]

    def conjugate_column(self, row: int) -> Optional[int]:
        """Nonbasis position of the slack conjugate to the artificial in
        `row`, or None if that slack is not currently nonbasic."""
        label = self.inner.row_label(row)
        if label.kind is not LabelKind.ARTIFICIAL:
            raise ValueError(f"row {row} holds {label.name}, not an artificial")
        mate = slack(label.index)
        for j, col in enumerate(self.inner.nonbasis, start=1):
            if col == mate:
                return j
        return None

    def pivot(self, r: int, m: int) -> "AuxiliaryDictionary":
        """Pivot both objective rows; retire the column of a leaving artificial."""
        d = self.inner.entries
        p = d[r][m]
        aux = self.phase1_row
        factor = aux[m] / p
        new_aux = tuple(
            -factor if j == m else aux[j] - factor * d[r][j]
            for j in range(self.inner.n + 1)
        )
        leaving = self.inner.row_label(r)
        inner = self.inner.pivot(r, m)
        if leaving.kind is LabelKind.ARTIFICIAL:
            inner = inner.drop_column(m)
            new_aux = new_aux[:m] + new_aux[m + 1 :]
        return AuxiliaryDictionary(inner, new_aux)

    def conjugate_pivot(self, r: int, m: int) -> "AuxiliaryDictionary":
        """The shortcut pivot for a zero-valued basic artificial.

        Requires entry (r, m) to be exactly -1 with rhs 0; the pivot row
        is negated, the two objective rows are adjusted, and no other row
        changes.  The leaving artificial's column is retired as usual.
        """
        d = self.inner.entries
        mode = self.mode
        p = d[r][m]
        if not mode.is_zero(d[r][0]):
            raise ValueError("conjugate pivot needs a zero-valued pivot row")
        if not mode.is_zero(p + 1):
            raise ValueError("conjugate slack coefficient is not -1")
        for i in range(1, self.inner.m + 1):
            if i != r and not mode.is_zero(d[i][m]):
                raise RuntimeError(
                    f"conjugate slack column leaks into row {i}; dictionary corrupt"
                )

        def adjust(row: tuple[Value, ...]) -> tuple[Value, ...]:
            # Objective-row update of a full pivot, with p = -1.
            return tuple(
                -row[m] / p if j == m else row[j] - row[m] * d[r][j] / p
                for j in range(self.inner.n + 1)
            )

        rows = [adjust(d[0])]
        for i in range(1, self.inner.m + 1):
            if i == r:
                rows.append(
                    tuple(
                        1 / p if j == m else d[r][j] / p
                        for j in range(self.inner.n + 1)
                    )
                )
            else:
                rows.append(d[i])
        new_aux = adjust(self.phase1_row)

        basis = list(self.inner.basis)
        nonbasis = list(self.inner.nonbasis)
        leaving = basis[r - 1]
        basis[r - 1], nonbasis[m - 1] = nonbasis[m - 1], leaving
        inner = Dictionary(tuple(basis), tuple(nonbasis), tuple(rows), mode)
        inner = inner.drop_column(m)
        return AuxiliaryDictionary(inner, new_aux[:m] + new_aux[m + 1 :])


def build_auxiliary(sp: StandardProblem) -> AuxiliaryDictionary:
    """Auxiliary starting dictionary for the artificial-variable method.

    Rows with b_i >= 0 keep their slack basic; rows with b_i < 0 get a
    basic artificial (value -b_i > 0) and contribute their slack as a
    nonbasic column.  The auxiliary row expresses minus the artificial
    total over the nonbasic columns.
    """
    mode = sp.mode
    zero = mode.zero
    negative = [i for i in range(sp.m) if mode.is_negative(sp.b[i])]
    neg_set = set(negative)

    columns: list[Label] = [structural(j + 1) for j in range(sp.p)]
    columns += [slack(i + 1) for i in negative]
    col_pos = {label: j + 1 for j, label in enumerate(columns)}
    n = len(columns)

    top = [zero] * (n + 1)
    for j in range(sp.p):
        top[1 + j] = -sp.c[j]

    rows: list[tuple[Value, ...]] = [tuple(top)]
    basis: list[Label] = []
    for i in range(sp.m):
        row = [zero] * (n + 1)
        if i in neg_set:
            basis.append(artificial(i + 1))
            row[0] = -sp.b[i]
            for j in range(sp.p):
                row[1 + j] = -sp.A[i][j]
            row[col_pos[slack(i + 1)]] = mode.coerce(-1)
        else:
            basis.append(slack(i + 1))
            row[0] = sp.b[i]
            for j in range(sp.p):
                row[1 + j] = sp.A[i][j]
        rows.append(tuple(row))

    aux_row = [zero] * (n + 1)
    for i in negative:
        aux_row[0] += sp.b[i]
        for j in range(sp.p):
            aux_row[1 + j] += sp.A[i][j]
        aux_row[col_pos[slack(i + 1)]] += mode.coerce(1)

    inner = Dictionary(tuple(basis), tuple(columns), tuple(rows), mode)
    return AuxiliaryDictionary(inner, tuple(aux_row))


def traditional_step(
    aux: AuxiliaryDictionary,
    use_trick: bool = False,
    tie_break: TieBreak = TieBreak.SMALLEST_LABEL,
) -> TraditionalDecision:
    """Decide the next auxiliary pivot (or a terminal verdict).

    The method runs until no artificial is basic; the auxiliary value
    alone is not enough, because a degenerate artificial can sit at zero
    while the row still prices columns.  Entering is the most negative
    auxiliary-row entry (ties to the smallest label); leaving is the
    classical minimum ratio over positive column entries.
    """
    mode = aux.mode
    d = aux.inner
    art_rows = aux.artificial_rows()
    if not art_rows:
        return TraditionalDecision(None, None, None, False, TraditionalVerdict.FEASIBLE)

    if use_trick:
        for r in art_rows:
            if mode.is_zero(d.rhs(r)):
                m = aux.conjugate_column(r)
                return TraditionalDecision(m, r, mode.zero, True, TraditionalVerdict.PIVOT)

    entering: Optional[int] = None
    row = aux.phase1_row
    for j in range(1, d.n + 1):
        if not mode.is_negative(row[j]):
            continue
        if entering is None:
            entering = j
            continue
        if row[j] < row[entering] or (
            row[j] == row[entering] and d.column_label(j) < d.column_label(entering)
        ):
            entering = j

    if entering is None:
        if mode.is_negative(row[0]):
            return TraditionalDecision(None, None, None, False, TraditionalVerdict.INFEASIBLE)
        # Auxiliary optimum at zero with artificials stuck at value zero:
        # swap each out through any nonzero entry of its row (the
        # conjugate slack guarantees one exists).
        r = art_rows[0]
        best: Optional[int] = None
        for j in range(1, d.n + 1):
            if mode.is_zero(d.entry(r, j)):
                continue
            if best is None or d.column_label(j) < d.column_label(best):
                best = j
        if best is None:
            raise RuntimeError(f"artificial row {r} is identically zero")
        return TraditionalDecision(best, r, mode.zero, False, TraditionalVerdict.PIVOT)

    best_row: Optional[int] = None
    best_ratio: Optional[Value] = None
    for i in range(1, d.m + 1):
        if not mode.is_positive(d.entry(i, entering)):
            continue
        ratio = d.rhs(i) / d.entry(i, entering)
        if best_ratio is None or ratio < best_ratio:
            best_row, best_ratio = i, ratio
        elif ratio == best_ratio:
            best_row = _break_tie(d, entering, best_row, i, tie_break)
    if best_row is None:
        # The auxiliary objective is bounded above by zero, so a fully
        # nonpositive column cannot occur on consistent input.
        raise RuntimeError(f"auxiliary column {entering} has no positive entry")
    return TraditionalDecision(
        entering, best_row, best_ratio, False, TraditionalVerdict.PIVOT
    )


def run_traditional_phase1(
    aux: AuxiliaryDictionary,
    config: Optional[SolveConfig] = None,
) -> tuple[Dictionary, Status, Trace]:
    """Iterate traditional_step until the basis is free of artificials.

    On FEASIBLE the returned dictionary is the plain dictionary over
    structural and slack labels with the original objective row intact;
    on INFEASIBLE it is the terminal auxiliary interior (artificials
    still basic, their total being the minimal violation).
    """
    cfg = config or SolveConfig()
    budget = cfg.iteration_budget(aux.inner.m, aux.inner.n)
    exact = isinstance(aux.mode, ExactMode)
    seen = {aux.inner.signature()} if (exact and cfg.detect_cycles) else None
    records: list[PivotRecord] = []
    initial_corner = aux.inner.corner()
    initial_phi = aux.infeasibility()

    status: Status
    while True:
        decision = traditional_step(aux, cfg.use_trick, cfg.tie_break)
        if decision.verdict is TraditionalVerdict.FEASIBLE:
            status = Status.FEASIBLE
            break
        if decision.verdict is TraditionalVerdict.INFEASIBLE:
            status = Status.INFEASIBLE
            break
        if len(records) >= budget:
            status = Status.ITERATION_LIMIT
            break
        r, m = decision.leaving_row, decision.entering_column
        phi_before = aux.infeasibility()
        entering_label = aux.inner.column_label(m)
        leaving_label = aux.inner.row_label(r)
        degenerate = aux.mode.is_zero(aux.inner.rhs(r))
        if decision.via_conjugate:
            nxt = aux.conjugate_pivot(r, m)
        else:
            nxt = aux.pivot(r, m)
        records.append(
            PivotRecord(
                iteration=len(records) + 1,
                entering=entering_label,
                leaving=leaving_label,
                ratio=decision.ratio,
                degenerate=degenerate,
                infeasibility_before=phi_before,
                infeasibility_after=nxt.infeasibility(),
                corner=nxt.inner.corner(),
                basis_signature=nxt.inner.signature(),
                pricing=tuple(aux.phase1_row[1:]),
                via_conjugate=decision.via_conjugate,
            )
        )
        aux = nxt
        if seen is not None:
            sig = aux.inner.signature()
            if sig in seen:
                status = Status.CYCLE_DETECTED
                break
            seen.add(sig)

    trace = Trace(
        method="traditional_phase1",
        status=status,
        initial_corner=initial_corner,
        initial_infeasibility=initial_phi,
        records=tuple(records),
    )
    return aux.inner, status, trace
