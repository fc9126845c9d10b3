#! /usr/bin/env python3
"""Cross-check the solver against brute-force vertex enumeration.

For problems small enough to enumerate every basis subset, the optimal
value can be found by inspecting all candidate vertices.  The solver
must agree exactly: same feasibility verdict, same unboundedness flag,
same optimal value as a rational number.
"""

from afsimplex import (
    Method,
    Shape,
    Status,
    enumerate_vertices,
    generate_lp,
    solve,
    standardize,
)

shapes = (Shape.FEASIBLE_BIASED, Shape.INFEASIBLE_BIASED, Shape.DEGENERATE_BIASED)

checked = 0
counts = {"optimal": 0, "infeasible": 0, "unbounded": 0}
for seed in range(90):
    shape = shapes[seed % len(shapes)]
    sp = standardize(generate_lp(seed=seed, rows=4, cols=3, shape=shape))
    truth = enumerate_vertices(sp)
    out = solve(sp, Method.ARTIFICIAL_FREE)

    if not truth.feasible:
        assert out.status is Status.INFEASIBLE
        counts["infeasible"] += 1
    elif truth.unbounded:
        assert out.status is Status.UNBOUNDED
        counts["unbounded"] += 1
    else:
        assert out.status is Status.OPTIMAL
        assert out.objective == truth.optimal_value
        counts["optimal"] += 1
    checked += 1

print(f"checked {checked} generated instances against enumeration")
for verdict, count in counts.items():
    print(f"  {verdict}: {count}")
print("no disagreements")
