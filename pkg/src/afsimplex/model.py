"""Problem containers and conversion to the standard maximize/<= form."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Optional, Sequence

from .numeric import EXACT, NumericMode, Value


class Sense(Enum):
    MAX = "max"
    MIN = "min"


class Relation(Enum):
    LE = "<="
    GE = ">="
    EQ = "="


class Transform(Enum):
    """How a standard row was obtained from its source constraint."""

    DIRECT = "direct"
    NEGATED = "negated"
    EQ_LE = "eq-le"
    EQ_GE = "eq-ge"


class UnsupportedFreeVariable(ValueError):
    """A variable without a nonnegativity bound reached standardize()."""


class EmptyProblem(ValueError):
    """The problem has no constraints (or no objective) to work with."""


@dataclass(frozen=True)
class Constraint:
    name: str
    coeffs: Mapping[str, Value]
    relation: Relation
    rhs: Value


@dataclass(frozen=True)
class GeneralProblem:
    """A linear program as written: any sense, any relation per row.

    Variables are implicitly nonnegative unless listed in `free`
    (standardize rejects free variables).  The variable registry fixes
    column order; when omitted it is derived from order of appearance in
    the objective and then the constraints.
    """

    sense: Sense
    objective: Mapping[str, Value]
    constraints: tuple[Constraint, ...]
    variables: tuple[str, ...] = ()
    free: frozenset[str] = frozenset()
    mode: NumericMode = EXACT

    def __post_init__(self):
        registry = list(self.variables)
        seen = set(registry)
        mentioned = list(self.objective)
        for con in self.constraints:
            mentioned.extend(con.coeffs)
        for var in mentioned:
            if var not in seen:
                seen.add(var)
                registry.append(var)
        object.__setattr__(self, "variables", tuple(registry))
        object.__setattr__(
            self,
            "objective",
            {v: self.mode.coerce(x) for v, x in self.objective.items()},
        )
        names = [con.name for con in self.constraints]
        if len(set(names)) != len(names):
            raise ValueError("constraint names must be unique")
        coerced = tuple(
            Constraint(
                con.name,
                {v: self.mode.coerce(x) for v, x in con.coeffs.items()},
                con.relation,
                self.mode.coerce(con.rhs),
            )
            for con in self.constraints
        )
        object.__setattr__(self, "constraints", coerced)
        object.__setattr__(self, "free", frozenset(self.free))


@dataclass(frozen=True)
class RowOrigin:
    constraint: str
    transform: Transform


@dataclass(frozen=True)
class StandardProblem:
    """max c.x subject to A x <= b, x >= 0, plus row provenance."""

    A: tuple[tuple[Value, ...], ...]
    b: tuple[Value, ...]
    c: tuple[Value, ...]
    variables: tuple[str, ...]
    row_names: tuple[str, ...]
    origins: tuple[RowOrigin, ...]
    negated_objective: bool
    zero_columns: tuple[str, ...]
    mode: NumericMode = EXACT

    @property
    def m(self) -> int:
        return len(self.b)

    @property
    def p(self) -> int:
        return len(self.variables)

    def __post_init__(self):
        if self.m == 0 or self.p == 0:
            raise EmptyProblem("standard problem needs at least one row and column")
        for row in self.A:
            if len(row) != self.p:
                raise ValueError("ragged constraint matrix")
        if not (len(self.row_names) == len(self.origins) == self.m):
            raise ValueError("row metadata out of step with the matrix")


def standardize(gp: GeneralProblem) -> StandardProblem:
    """Rewrite gp as max c.x, A x <= b, x >= 0.

    Minimization flips the objective sign; >= rows are negated; each
    equality splits into a <= pair.  Free variables are rejected rather
    than substituted, and the provenance of every produced row is kept so
    results can be reported against the original constraint names.
    """
    mode = gp.mode
    if gp.free:
        offender = sorted(gp.free)[0]
        raise UnsupportedFreeVariable(f"variable {offender!r} has no sign restriction")
    if not gp.constraints:
        raise EmptyProblem("no constraints")
    if not gp.objective:
        raise EmptyProblem("no objective")

    variables = gp.variables
    c = [gp.objective.get(v, mode.coerce(0)) for v in variables]
    negated = gp.sense is Sense.MIN
    if negated:
        c = [-x for x in c]

    rows: list[tuple[Value, ...]] = []
    b: list[Value] = []
    names: list[str] = []
    origins: list[RowOrigin] = []

    def emit(con: Constraint, flip: bool, name: str, transform: Transform) -> None:
        row = [con.coeffs.get(v, mode.coerce(0)) for v in variables]
        rhs = con.rhs
        if flip:
            row = [-x for x in row]
            rhs = -rhs
        rows.append(tuple(row))
        b.append(rhs)
        names.append(name)
        origins.append(RowOrigin(con.name, transform))

    for con in gp.constraints:
        if con.relation is Relation.LE:
            emit(con, False, con.name, Transform.DIRECT)
        elif con.relation is Relation.GE:
            emit(con, True, con.name, Transform.NEGATED)
        else:
            emit(con, False, con.name + ".le", Transform.EQ_LE)
            emit(con, True, con.name + ".ge", Transform.EQ_GE)

    zero_cols = tuple(
        variables[j]
        for j in range(len(variables))
        if all(mode.is_zero(row[j]) for row in rows)
    )
    return StandardProblem(
        A=tuple(rows),
        b=tuple(b),
        c=tuple(c),
        variables=variables,
        row_names=tuple(names),
        origins=tuple(origins),
        negated_objective=negated,
        zero_columns=zero_cols,
        mode=mode,
    )
