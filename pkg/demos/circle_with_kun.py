"""Attach a Kun copy to a 1-dimensional class: a finite space with H of a circle.

Run with ``python3 demos/circle_with_kun.py``.
"""
from finfpp import assembly, library, zhomology
from finfpp.scomplex import SimplicialMap

K = library.cycle(4)
M = library.cycle(4, prefix="m")
R = assembly.RealizationDatum(1, M, SimplicialMap(M, K, {f"m{i}": f"c{i}" for i in range(4)}))

out = assembly.assemble_main(K, [R])
X = out.space
print("X:", len(X), "points, subobjects", sorted(out.subobjects))
print("betti(K) =", zhomology.betti(K), " betti(X) =", zhomology.betti(X))
for name in sorted(out.checks):
    print(f"  {name}: {out.checks[name]}")

# drop the Kun copy and the circle is still there
kun_pts = set(out.subobjects["Kun1"].values())
print("without the Kun copy:", zhomology.betti(X.remove(kun_pts)))
