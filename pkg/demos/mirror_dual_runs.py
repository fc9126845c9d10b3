#! /usr/bin/env python3
"""The dual phase 1 is the primal phase 1 seen through a mirror.

Negate and transpose a dictionary and the roles swap: negative
right-hand sides become negative objective entries, rows become
columns.  Running the dual rule on a dictionary and the primal rule on
its negative transpose gives the same pivots with row and column
exchanged, all the way to the verdict.
"""

import random
from fractions import Fraction

from afsimplex import (
    Dictionary,
    SolveConfig,
    run_dual_phase1,
    run_phase1,
    slack,
    structural,
)

rng = random.Random(25)
m, n = 3, 3
entries = tuple(
    tuple(Fraction(rng.randint(-5, 5)) for _ in range(n + 1))
    for _ in range(m + 1)
)
d = Dictionary(
    basis=tuple(slack(i + 1) for i in range(m)),
    nonbasis=tuple(structural(j + 1) for j in range(n)),
    entries=entries,
)

_, dual_status, dual_trace = run_dual_phase1(d, SolveConfig())
_, primal_status, primal_trace = run_phase1(d.negative_transpose(), SolveConfig())

print("dual run on D            | primal run on -D^T")
print("-------------------------+-------------------------")
for dual_rec, primal_rec in zip(dual_trace.records, primal_trace.records):
    left = f"{dual_rec.entering.name} enters, {dual_rec.leaving.name} leaves"
    right = f"{primal_rec.entering.name} enters, {primal_rec.leaving.name} leaves"
    print(f"{left:<25}| {right}")
print(f"{dual_status.value:<25}| {primal_status.value}")

assert len(dual_trace.records) == len(primal_trace.records)
for dual_rec, primal_rec in zip(dual_trace.records, primal_trace.records):
    assert dual_rec.leaving == primal_rec.entering
    assert dual_rec.entering == primal_rec.leaving
    assert dual_rec.ratio == primal_rec.ratio
print()
print("every pivot matched with rows and columns exchanged")
