"""Asymmetrize the boundary of a tetrahedron and certify the fixed simplex property.

Run with ``python3 demos/asymmetric_sphere.py``.
"""
from finfpp import fixtest, library, scomplex, zhomology

S = library.simplex_boundary(3)
print("automorphisms of the tetrahedron boundary:", len(fixtest.automorphisms(S)))

# the rotation a -> b -> c -> a fixes no simplex of the sphere
cert = fixtest.fsp_check(S)
print("fsp on the symmetric sphere:", cert.kind, cert.witness["map"])

res = fixtest.asymmetrize(S)
L = res.complex
print("asymmetrized:", len(L.vertices), "vertices,", len(L.facets), "facets, v0 =", res.v0)
print("homology unchanged:", zhomology.betti(L) == zhomology.betti(S))
print("certificate:", {k: v for k, v in res.certificate.items() if isinstance(v, bool)})

ok, v = fixtest.is_asymmetric(L)
print("asymmetric:", ok, " vertex fixed by every automorphism:", v)

# exhaustive search over all simplicial self-maps
cert = fixtest.fsp_check(L)
print("fsp on the asymmetrized sphere:", cert.kind, cert.stats)

print("barycentric f-vector:", scomplex.barycentric(L).f_vector())
