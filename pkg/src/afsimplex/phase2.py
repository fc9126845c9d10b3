"""Phase 2: plain maximizing simplex on a primal-feasible dictionary."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .dictionary import Dictionary, Label, LabelKind
from .numeric import ExactMode, Value
from .phase1 import _break_tie
from .trace import PivotRecord, SolveConfig, Status, TieBreak, Trace


class NotPrimalFeasible(ValueError):
    """Phase 2 was handed a dictionary with a negative right-hand side."""


class Phase2Verdict(Enum):
    PIVOT = "pivot"
    OPTIMAL = "optimal"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class Phase2Decision:
    entering_column: Optional[int]
    leaving_row: Optional[int]
    ratio: Optional[Value]
    verdict: Phase2Verdict


def _check_primal_feasible(d: Dictionary) -> None:
    for i in range(1, d.m + 1):
        if d.mode.is_negative(d.rhs(i)):
            raise NotPrimalFeasible(f"row {i} has rhs {d.rhs(i)!r}")


def phase2_step(
    d: Dictionary, tie_break: TieBreak = TieBreak.SMALLEST_LABEL
) -> Phase2Decision:
    """One Dantzig decision: most negative objective entry enters (ties to
    the smallest label); the classical minimum ratio over positive column
    entries leaves.  A negative column with no positive entry means the
    objective is unbounded along it."""
    _check_primal_feasible(d)
    mode = d.mode
    entering: Optional[int] = None
    for j in range(1, d.n + 1):
        if not mode.is_negative(d.entry(0, j)):
            continue
        if entering is None:
            entering = j
            continue
        cur, cha = d.entry(0, entering), d.entry(0, j)
        if cha < cur or (cha == cur and d.column_label(j) < d.column_label(entering)):
            entering = j
    if entering is None:
        return Phase2Decision(None, None, None, Phase2Verdict.OPTIMAL)

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
        return Phase2Decision(entering, None, None, Phase2Verdict.UNBOUNDED)
    return Phase2Decision(entering, best_row, best_ratio, Phase2Verdict.PIVOT)


def improving_ray(d: Dictionary, column: int) -> dict[Label, Value]:
    """Structural direction along which the objective grows without bound.

    Increasing the column's nonbasic variable by t moves each basic
    variable by -d_i,column * t; projecting onto structural labels gives
    a ray that satisfies every original row with slack to spare.
    """
    ray: dict[Label, Value] = {}
    target = d.column_label(column)
    row_of = {label: i for i, label in enumerate(d.basis, start=1)}
    for label in list(d.basis) + list(d.nonbasis):
        if label.kind is not LabelKind.STRUCTURAL:
            continue
        if label == target:
            ray[label] = d.mode.coerce(1)
        elif label in row_of:
            ray[label] = -d.entry(row_of[label], column)
        else:
            ray[label] = d.mode.zero
    return ray


def run_phase2(
    d: Dictionary,
    config: Optional[SolveConfig] = None,
) -> tuple[Dictionary, Status, Trace]:
    """Iterate phase2_step to OPTIMAL or UNBOUNDED (or a safeguard stop)."""
    cfg = config or SolveConfig()
    budget = cfg.iteration_budget(d.m, d.n)
    exact = isinstance(d.mode, ExactMode)
    seen = {d.signature()} if (exact and cfg.detect_cycles) else None
    records: list[PivotRecord] = []
    initial_corner = d.corner()

    status: Status
    while True:
        decision = phase2_step(d, cfg.tie_break)
        if decision.verdict is Phase2Verdict.OPTIMAL:
            status = Status.OPTIMAL
            break
        if decision.verdict is Phase2Verdict.UNBOUNDED:
            status = Status.UNBOUNDED
            break
        if len(records) >= budget:
            status = Status.ITERATION_LIMIT
            break
        nxt = d.pivot(decision.leaving_row, decision.entering_column)
        records.append(
            PivotRecord(
                iteration=len(records) + 1,
                entering=d.column_label(decision.entering_column),
                leaving=d.row_label(decision.leaving_row),
                ratio=decision.ratio,
                degenerate=d.mode.is_zero(decision.ratio),
                infeasibility_before=d.mode.zero,
                infeasibility_after=d.mode.zero,
                corner=nxt.corner(),
                basis_signature=nxt.signature(),
            )
        )
        d = nxt
        if seen is not None:
            sig = d.signature()
            if sig in seen:
                status = Status.CYCLE_DETECTED
                break
            seen.add(sig)

    trace = Trace(
        method="phase2",
        status=status,
        initial_corner=initial_corner,
        initial_infeasibility=d.mode.zero,
        records=tuple(records),
    )
    return d, status, trace
