"""Walk through one flip on the square at n = 3.

Builds both triangulations, shows the path sum for one corner arc on the
flipped side, pushes it back through the mutation chain step by step and
compares against the direct path sum.
"""

from qtrace.mutation import p4_plan, theta_apply
from qtrace.trace import corner_arc_trace, polygon_arc

N, ARC, I, J = 3, "a", 2, 1

plan = p4_plan(N)
print(f"flip of e1 at n={N}: {plan.length} mutations in stages {[len(s) for s in plan.stages]}")

after = corner_arc_trace(plan.target, polygon_arc(plan.target, ARC, I, J))
before = corner_arc_trace(plan.source, polygon_arc(plan.source, ARC, I, J))
print(f"trace of {ARC}{I}{J} after the flip: {len(after)} terms")
print(f"trace of {ARC}{I}{J} before the flip: {len(before)} terms")

records = []
pulled = theta_apply(plan, plan.to_chain_end(after), records)
for r in records:
    print(f"  step {r.step:2d} at {r.vertex}: m in {sorted(set(r.m_values))}, "
          f"cleared degree {r.denominator_degree}, terms {r.terms_in} -> {r.terms_out}")
print("pulled back trace equals direct trace:", pulled == before)
