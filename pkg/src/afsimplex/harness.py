"""Two-phase driver: solve a standard problem end to end, or race the
artificial-free and artificial-variable methods against each other."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .dictionary import Dictionary, LabelKind, initial_dictionary
from .model import StandardProblem
from .numeric import Value
from .phase1 import InvariantMonitor, infeasible_rows, run_phase1
from .phase2 import Phase2Verdict, improving_ray, phase2_step, run_phase2
from .trace import SolveConfig, Status, Trace
from .traditional import build_auxiliary, run_traditional_phase1


class Method(Enum):
    ARTIFICIAL_FREE = "af"
    TRADITIONAL = "trad"


class VerdictMismatch(RuntimeError):
    """The two phase-1 methods disagreed on feasibility; by construction
    this can only come from a bug, so compare() refuses to report it."""


@dataclass(frozen=True)
class Certificates:
    infeasible_rows: Optional[tuple[str, ...]] = None
    ray: Optional[dict[str, Value]] = None


@dataclass(frozen=True)
class SolveOutcome:
    status: Status
    solution: dict[str, Value]  # structural values; empty unless optimal
    objective: Optional[Value]  # in the original sense; None unless optimal
    phase1: Trace
    phase2: Optional[Trace]
    certificates: Certificates


@dataclass(frozen=True)
class MethodSummary:
    verdict: Status
    pivots: int
    degenerate_pivots: int
    corners: tuple[tuple[Value, ...], ...]  # deduplicated walk


@dataclass(frozen=True)
class ComparisonReport:
    verdict: Status
    af: MethodSummary
    traditional: MethodSummary
    corners_equal: bool
    af_pivots_le_traditional: bool


def _structural_solution(sp: StandardProblem, d: Dictionary) -> dict[str, Value]:
    values, _ = d.basic_solution()
    out: dict[str, Value] = {}
    for label, value in values.items():
        if label.kind is LabelKind.STRUCTURAL:
            out[sp.variables[label.index - 1]] = value
    return {v: out[v] for v in sp.variables}


def solve(
    sp: StandardProblem,
    method: Method = Method.ARTIFICIAL_FREE,
    config: Optional[SolveConfig] = None,
    monitor: Optional[InvariantMonitor] = None,
) -> SolveOutcome:
    """Phase 1 with the chosen method, then phase 2 on success.

    The outcome status is OPTIMAL, INFEASIBLE or UNBOUNDED, or a
    safeguard status (CYCLE_DETECTED / ITERATION_LIMIT) if a run was cut
    short.  Optimal outcomes carry the solution and the objective value
    in the sense of the original problem; infeasible outcomes name the
    dictionary rows certifying emptiness; unbounded outcomes carry an
    improving feasible ray over the structural variables.
    """
    cfg = config or SolveConfig()
    if method is Method.ARTIFICIAL_FREE:
        d1, s1, trace1 = run_phase1(initial_dictionary(sp), cfg, monitor)
    else:
        d1, s1, trace1 = run_traditional_phase1(build_auxiliary(sp), cfg)

    certificates = Certificates()
    solution: dict[str, Value] = {}
    objective: Optional[Value] = None
    phase2_trace: Optional[Trace] = None

    if s1 is Status.FEASIBLE:
        d2, s2, phase2_trace = run_phase2(d1, cfg)
        status = s2
        if s2 is Status.OPTIMAL:
            solution = _structural_solution(sp, d2)
            value = d2.objective_value
            objective = -value if sp.negated_objective else value
        elif s2 is Status.UNBOUNDED:
            decision = phase2_step(d2, cfg.tie_break)
            assert decision.verdict is Phase2Verdict.UNBOUNDED
            ray = improving_ray(d2, decision.entering_column)
            certificates = Certificates(
                ray={
                    sp.variables[label.index - 1]: value
                    for label, value in sorted(ray.items())
                }
            )
    elif s1 is Status.INFEASIBLE:
        status = Status.INFEASIBLE
        if method is Method.ARTIFICIAL_FREE:
            rows = infeasible_rows(d1)
        else:
            # The auxiliary dictionary stays primal feasible; the stuck
            # positive artificials are what certify emptiness.
            rows = frozenset(
                i
                for i in range(1, d1.m + 1)
                if d1.row_label(i).kind is LabelKind.ARTIFICIAL
                and d1.mode.is_positive(d1.rhs(i))
            )
        names = sorted(d1.row_label(i).name for i in rows)
        certificates = Certificates(infeasible_rows=tuple(names))
    else:
        status = s1  # safeguard stop

    return SolveOutcome(
        status=status,
        solution=solution,
        objective=objective,
        phase1=trace1,
        phase2=phase2_trace,
        certificates=certificates,
    )


def compare(
    sp: StandardProblem, config: Optional[SolveConfig] = None
) -> ComparisonReport:
    """Run both phase-1 methods with identical entering rule and tie-break.

    Feasibility verdicts must agree (VerdictMismatch otherwise); pivot
    counts, degenerate counts and deduplicated corner walks are reported
    side by side.
    """
    cfg = config or SolveConfig()
    _, s_af, t_af = run_phase1(initial_dictionary(sp), cfg)
    _, s_tr, t_tr = run_traditional_phase1(build_auxiliary(sp), cfg)
    if s_af is not s_tr:
        raise VerdictMismatch(f"artificial-free says {s_af}, traditional says {s_tr}")

    af = MethodSummary(s_af, t_af.pivots, t_af.degenerate_pivots, t_af.deduplicated_corners())
    tr = MethodSummary(s_tr, t_tr.pivots, t_tr.degenerate_pivots, t_tr.deduplicated_corners())
    return ComparisonReport(
        verdict=s_af,
        af=af,
        traditional=tr,
        corners_equal=af.corners == tr.corners,
        af_pivots_le_traditional=af.pivots <= tr.pivots,
    )
