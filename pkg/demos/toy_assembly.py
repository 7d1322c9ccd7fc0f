"""Assemble a complex with prescribed homology at toy depths, then ask for honest depths.

The certified depths make the build far too large; the planner says so
instead of trying.  Run with ``python3 demos/toy_assembly.py``.
"""
from finfpp import assembly, fixtest, library, scomplex, zhomology

K = library.simplex_boundary(3)
M = fixtest.asymmetrize(K).complex
R = assembly.RealizationDatum(2, M, scomplex.approximation_to_identity(M, K))
print("realizing sphere:", len(M.facets), "facets")

# toy depths: one subdivision of the 2-dimensional cylinder
plan = assembly.plan_depths(K, [R], "explicit", {2: 1})
print("toy plan: s =", plan.s, " N =", plan.N, " forecast:", plan.forecast["vertices"], "vertices")
for e in plan.entries:
    print("  stage %d, s=%d: %s holds=%s (by %s)" % (e["stage"], e["s"], e["bound"], e["holds"], e["method"]))

out = assembly.assemble_thm4(K, [R], plan=plan)
L = out.space
print("built L:", out.log["vertices"], "vertices,", out.log["facets"], "facets, mode", out.log["mode"])
print("H(L) == H(K):", zhomology.betti(L)[:3] == zhomology.betti(K)[:3])
for name in sorted(out.checks):
    print(f"  {name}: {out.checks[name]}")

# the certified depth for N facets in dimension 2
plan = assembly.plan_depths(K, [R], "bound")
print("certified plan: s_2 =", plan.s_n, " forecast facets =", plan.forecast["facets"])
try:
    assembly.assemble_thm4(K, [R])
except assembly.BuildRefused as e:
    print("refused:", e)
