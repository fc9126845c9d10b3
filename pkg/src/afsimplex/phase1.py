"""Artificial-free phase 1.

Feasibility is reached by pivoting on the original dictionary, with no
auxiliary variables and no auxiliary objective row.  Each step prices
columns with the vector W obtained by summing the rows that currently
have a negative right-hand side; a column with negative W can reduce the
total infeasibility, and the ratio test below picks the unique leaving
row that keeps every feasible row feasible while never pushing an
infeasible row past zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .dictionary import Dictionary, Label
from .numeric import ExactMode, Value
from .trace import PivotRecord, SolveConfig, Status, TieBreak, Trace


class NoEligibleRow(RuntimeError):
    """The ratio test found no eligible row; with a correctly chosen
    entering column this indicates an internal error, not an input."""


class Phase1Verdict(Enum):
    PIVOT = "pivot"
    ALREADY_FEASIBLE = "already_feasible"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class Phase1Decision:
    infeasible: frozenset[int]  # rows with negative rhs (1-based)
    w_vector: tuple[Value, ...]
    entering_column: Optional[int]
    leaving_row: Optional[int]
    ratio: Optional[Value]
    verdict: Phase1Verdict


def infeasible_rows(d: Dictionary) -> frozenset[int]:
    """Indices of rows whose basic variable is currently negative."""
    return frozenset(
        i for i in range(1, d.m + 1) if d.mode.is_negative(d.rhs(i))
    )


def infeasibility_sum(d: Dictionary) -> Value:
    """Total constraint violation: sum of -rhs over infeasible rows."""
    total = d.mode.zero
    for i in infeasible_rows(d):
        total -= d.rhs(i)
    return total


def phase1_objective_vector(d: Dictionary, rows: frozenset[int]) -> tuple[Value, ...]:
    """W: the columnwise sum of the infeasible rows (zero vector if none)."""
    w = [d.mode.zero] * d.n
    for i in rows:
        for j in range(1, d.n + 1):
            w[j - 1] += d.entry(i, j)
    return tuple(w)


def select_entering(
    w: tuple[Value, ...], nonbasis: tuple[Label, ...], mode
) -> Optional[int]:
    """Most negative W entry; ties go to the smallest nonbasis label.

    Returns the 1-based column index, or None when no entry is negative
    (which, with infeasible rows present, certifies infeasibility).
    """
    best: Optional[int] = None
    for j in range(len(w)):
        if not mode.is_negative(w[j]):
            continue
        if best is None:
            best = j
            continue
        if w[j] < w[best] or (w[j] == w[best] and nonbasis[j] < nonbasis[best]):
            best = j
    return None if best is None else best + 1


def select_leaving(
    d: Dictionary, m: int, tie_break: TieBreak = TieBreak.SMALLEST_LABEL
) -> tuple[int, Value]:
    """Ratio test over column m; returns (row, ratio).

    A row is eligible when rhs and column entry are both negative, or
    when rhs is nonnegative and the entry is positive.  A row with rhs
    zero and a negative entry is deliberately not eligible: pivoting
    there would be the degenerate step the method exists to avoid.
    Minimum ratio wins; ties fall to the configured rule, then to the
    smallest basis label.
    """
    mode = d.mode
    best_row: Optional[int] = None
    best_ratio: Optional[Value] = None
    for i in range(1, d.m + 1):
        rhs_sign = mode.sign(d.rhs(i))
        entry_sign = mode.sign(d.entry(i, m))
        if rhs_sign < 0:
            eligible = entry_sign < 0
        else:
            eligible = entry_sign > 0
        if not eligible:
            continue
        ratio = d.rhs(i) / d.entry(i, m)
        if best_ratio is None or ratio < best_ratio:
            best_row, best_ratio = i, ratio
        elif ratio == best_ratio:
            best_row = _break_tie(d, m, best_row, i, tie_break)
    if best_row is None:
        raise NoEligibleRow(f"no eligible row in column {m}")
    return best_row, best_ratio


def _break_tie(d: Dictionary, m: int, current: int, challenger: int, rule: TieBreak) -> int:
    if rule is TieBreak.SMALLEST_LABEL:
        keep = d.row_label(current) < d.row_label(challenger)
    else:
        cur = abs(d.entry(current, m))
        cha = abs(d.entry(challenger, m))
        if cur == cha:
            keep = d.row_label(current) < d.row_label(challenger)
        elif rule is TieBreak.SMALLEST_ABS_PIVOT:
            keep = cur < cha
        else:
            keep = cur > cha
    return current if keep else challenger


def phase1_step(
    d: Dictionary, tie_break: TieBreak = TieBreak.SMALLEST_LABEL
) -> Phase1Decision:
    """One pricing-and-ratio decision; performs no pivot itself."""
    rows = infeasible_rows(d)
    if not rows:
        w = tuple([d.mode.zero] * d.n)
        return Phase1Decision(rows, w, None, None, None, Phase1Verdict.ALREADY_FEASIBLE)
    w = phase1_objective_vector(d, rows)
    m = select_entering(w, d.nonbasis, d.mode)
    if m is None:
        # W >= 0 over rows that must all rise: no entering column can help.
        return Phase1Decision(rows, w, None, None, None, Phase1Verdict.INFEASIBLE)
    r, ratio = select_leaving(d, m, tie_break)
    return Phase1Decision(rows, w, m, r, ratio, Phase1Verdict.PIVOT)


class InvariantMonitor:
    """Checks the per-pivot guarantees of the method and records violations.

    Hooked into run_phase1 by tests; every observe() call checks one
    performed pivot against the pre-pivot dictionary.
    """

    def __init__(self):
        self.checks = 0
        self.violations: list[str] = []

    def _flag(self, ok: bool, message: str) -> None:
        if not ok:
            self.violations.append(message)

    def observe(self, before: Dictionary, decision: Phase1Decision, after: Dictionary) -> None:
        mode = before.mode
        self.checks += 1
        m, r = decision.entering_column, decision.leaving_row
        w_m = decision.w_vector[m - 1]
        t = decision.ratio
        self._flag(mode.is_negative(w_m), f"entering column {m} has W = {w_m}")
        self._flag(mode.is_nonnegative(t), f"selected ratio {t} is negative")

        # Leaving row must be one of the two eligible categories.
        rhs_sign = mode.sign(before.rhs(r))
        entry_sign = mode.sign(before.entry(r, m))
        ok = (rhs_sign < 0 and entry_sign < 0) or (rhs_sign >= 0 and entry_sign > 0)
        self._flag(ok, f"leaving row {r} not eligible (rhs sign {rhs_sign}, entry sign {entry_sign})")

        # Feasible rows stay feasible, tracked per label.
        before_vals, _ = before.basic_solution()
        after_vals, _ = after.basic_solution()
        for label, value in before_vals.items():
            if mode.is_nonnegative(value):
                self._flag(
                    mode.is_nonnegative(after_vals[label]),
                    f"{label.name} went from {value} to {after_vals[label]}",
                )

        # The infeasible set never grows, and the violation total obeys
        # phi' = phi + t * W_m (strict decrease whenever t > 0).
        l_before = infeasible_rows(before)
        l_after = infeasible_rows(after)
        self._flag(
            len(l_after) <= len(l_before),
            f"|L| grew from {len(l_before)} to {len(l_after)}",
        )
        phi_before = infeasibility_sum(before)
        phi_after = infeasibility_sum(after)
        if isinstance(mode, ExactMode):
            self._flag(
                phi_after == phi_before + t * w_m,
                f"phi {phi_before} -> {phi_after} but t*W = {t * w_m}",
            )
        self._flag(
            mode.sign(phi_after - phi_before) <= 0,
            f"phi rose from {phi_before} to {phi_after}",
        )
        if mode.is_positive(t):
            self._flag(
                mode.is_negative(phi_after - phi_before),
                f"positive step t={t} left phi at {phi_after}",
            )


def run_phase1(
    d: Dictionary,
    config: Optional[SolveConfig] = None,
    monitor: Optional[InvariantMonitor] = None,
) -> tuple[Dictionary, Status, Trace]:
    """Drive phase1_step to a verdict, recording a trace.

    Stops with FEASIBLE or INFEASIBLE normally; CYCLE_DETECTED when a
    basis repeats (exact mode), ITERATION_LIMIT when the pivot budget is
    spent.  Degenerate pivots (ratio zero) are legal here only through a
    feasible row with zero rhs and positive column entry.
    """
    cfg = config or SolveConfig()
    budget = cfg.iteration_budget(d.m, d.n)
    exact = isinstance(d.mode, ExactMode)
    seen = {d.signature()} if (exact and cfg.detect_cycles) else None
    records: list[PivotRecord] = []
    initial_corner = d.corner()
    initial_phi = infeasibility_sum(d)

    status: Status
    while True:
        decision = phase1_step(d, cfg.tie_break)
        if decision.verdict is Phase1Verdict.ALREADY_FEASIBLE:
            status = Status.FEASIBLE
            break
        if decision.verdict is Phase1Verdict.INFEASIBLE:
            status = Status.INFEASIBLE
            break
        if len(records) >= budget:
            status = Status.ITERATION_LIMIT
            break
        phi_before = infeasibility_sum(d)
        nxt = d.pivot(decision.leaving_row, decision.entering_column)
        if monitor is not None:
            monitor.observe(d, decision, nxt)
        records.append(
            PivotRecord(
                iteration=len(records) + 1,
                entering=d.column_label(decision.entering_column),
                leaving=d.row_label(decision.leaving_row),
                ratio=decision.ratio,
                degenerate=d.mode.is_zero(decision.ratio),
                infeasibility_before=phi_before,
                infeasibility_after=infeasibility_sum(nxt),
                corner=nxt.corner(),
                basis_signature=nxt.signature(),
                pricing=decision.w_vector,
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
        method="af_phase1",
        status=status,
        initial_corner=initial_corner,
        initial_infeasibility=initial_phi,
        records=tuple(records),
    )
    return d, status, trace
