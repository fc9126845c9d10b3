"""Dual phase 1: reach a nonnegative objective row without artificials.

The decision rule is, by definition, the primal rule applied to the
negative transpose: negative objective-row entries play the role of
infeasible rows, their rowwise sum prices the basis rows, and the pivot
found there maps back with row and column swapped.  The pivot transform
commutes with the negative transpose, so iterating this mirror step on D
reproduces, position for position, the primal run on the transpose.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .dictionary import Dictionary
from .numeric import ExactMode, Value
from .phase1 import Phase1Verdict, phase1_step
from .trace import PivotRecord, SolveConfig, Status, TieBreak, Trace


class DualVerdict(Enum):
    PIVOT = "pivot"
    ALREADY_DUAL_FEASIBLE = "already_dual_feasible"
    DUAL_INFEASIBLE = "dual_infeasible"


@dataclass(frozen=True)
class DualPhase1Decision:
    infeasible_columns: frozenset[int]  # columns with negative objective entry
    w_prime: tuple[Value, ...]  # rowwise sums over those columns
    entering_column: Optional[int]
    leaving_row: Optional[int]
    ratio: Optional[Value]
    verdict: DualVerdict


def dual_infeasibility_sum(d: Dictionary) -> Value:
    """Sum of -d_0j over the negative objective-row entries."""
    total = d.mode.zero
    for j in range(1, d.n + 1):
        if d.mode.is_negative(d.entry(0, j)):
            total -= d.entry(0, j)
    return total


def dual_phase1_step(
    d: Dictionary, tie_break: TieBreak = TieBreak.SMALLEST_LABEL
) -> DualPhase1Decision:
    """One mirrored decision; performs no pivot itself."""
    mode = d.mode
    columns = frozenset(
        j for j in range(1, d.n + 1) if mode.is_negative(d.entry(0, j))
    )
    w_prime = tuple(
        sum((d.entry(i, k) for k in sorted(columns)), mode.zero)
        for i in range(1, d.m + 1)
    )
    mirror = phase1_step(d.negative_transpose(), tie_break)
    if mirror.verdict is Phase1Verdict.ALREADY_FEASIBLE:
        verdict = DualVerdict.ALREADY_DUAL_FEASIBLE
        return DualPhase1Decision(columns, w_prime, None, None, None, verdict)
    if mirror.verdict is Phase1Verdict.INFEASIBLE:
        verdict = DualVerdict.DUAL_INFEASIBLE
        return DualPhase1Decision(columns, w_prime, None, None, None, verdict)
    # Transpose rows are this dictionary's columns and vice versa.
    return DualPhase1Decision(
        columns,
        w_prime,
        entering_column=mirror.leaving_row,
        leaving_row=mirror.entering_column,
        ratio=mirror.ratio,
        verdict=DualVerdict.PIVOT,
    )


def run_dual_phase1(
    d: Dictionary,
    config: Optional[SolveConfig] = None,
) -> tuple[Dictionary, Status, Trace]:
    """Iterate dual_phase1_step to DUAL_FEASIBLE / DUAL_INFEASIBLE."""
    cfg = config or SolveConfig()
    budget = cfg.iteration_budget(d.m, d.n)
    exact = isinstance(d.mode, ExactMode)
    seen = {d.signature()} if (exact and cfg.detect_cycles) else None
    records: list[PivotRecord] = []
    initial_corner = d.corner()
    initial_sum = dual_infeasibility_sum(d)

    status: Status
    while True:
        decision = dual_phase1_step(d, cfg.tie_break)
        if decision.verdict is DualVerdict.ALREADY_DUAL_FEASIBLE:
            status = Status.DUAL_FEASIBLE
            break
        if decision.verdict is DualVerdict.DUAL_INFEASIBLE:
            status = Status.DUAL_INFEASIBLE
            break
        if len(records) >= budget:
            status = Status.ITERATION_LIMIT
            break
        before_sum = dual_infeasibility_sum(d)
        nxt = d.pivot(decision.leaving_row, decision.entering_column)
        records.append(
            PivotRecord(
                iteration=len(records) + 1,
                entering=d.column_label(decision.entering_column),
                leaving=d.row_label(decision.leaving_row),
                ratio=decision.ratio,
                degenerate=d.mode.is_zero(decision.ratio),
                infeasibility_before=before_sum,
                infeasibility_after=dual_infeasibility_sum(nxt),
                corner=nxt.corner(),
                basis_signature=nxt.signature(),
                pricing=decision.w_prime,
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
        method="dual_phase1",
        status=status,
        initial_corner=initial_corner,
        initial_infeasibility=initial_sum,
        records=tuple(records),
    )
    return d, status, trace
