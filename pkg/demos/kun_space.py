"""Build the 14-point Kun space and look at why no map on it is fixed-point free.

Run with ``python3 demos/kun_space.py``.
"""
from finfpp import assembly, fixtest, fposet, zhomology

kun = assembly.build_kun()
X = kun.space
print("points:", len(X), " covers:", len(X.covers))
print("betti numbers:", zhomology.betti(X))

# the candidate maps that were searched
rep = kun.report
print("degree 1 maps S -> crown:", rep["degree_1_maps"])
print("degree 2 maps S -> crown:", rep["degree_2_maps"])
print("candidate pairs tried:", rep["candidates_tried"])

# x and y are among the weak points; removing them leaves a crown
print("weak points:", fposet.weak_points(X))
rest = fposet.core(X.remove(["x", "y"]))
print("core after removing x, y:", rest.points)

# every check of the verifier, one line each
for name, check in sorted(rep["verify"]["checks"].items()):
    print(f"  {name:<24} {'ok' if check.get('ok') else 'FAILED'}")

# the exhaustive search agrees: no order-preserving map is fixed-point free
cert = fixtest.fpp_check(X)
print("fpp search:", cert.kind)

# a plain crown by contrast has the swap
print("crown:", fixtest.fpp_check(X.subposet(["x'", "y'", "z'", "w'"])).witness)
