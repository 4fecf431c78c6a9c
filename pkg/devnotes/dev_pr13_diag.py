from fractions import Fraction
from dev_pr13_solve import (incidence_kernel, vec_to_forms, diag_s,
                            check_incidences, swapped, flatten, s_map, PAIRS)
from quarticverify.exactfield import PolyRing, TowerSpec
from quarticverify.linalg import Matrix

F = Fraction
base = TowerSpec(PolyRing(()))
aval, bval = F(1, 3), F(2)
spec = base.adjoin(base.rational(aval - aval * aval), "r")
r = spec.radical("r")
a = spec.rational(aval)
one, zero = spec.one(), spec.zero()
roots = [
    (one, zero), (zero, one), (a, one), (one, one),
    (a, a - r), (a - r, one), (a, a + r), (a + r, one),
]
verts = [
    (1, 0, 0, 0), (0, 0, 1, 0), (0, 1, 0, 0), (0, 0, 0, 1),
    (1, 1, 0, 0), (0, 0, 1, 1), (bval, 1, 0, 0), (0, 0, bval, 1),
]
kern = incidence_kernel(spec, roots, verts)
print("dim:", len(kern))
for i, vec in enumerate(kern):
    forms = vec_to_forms(spec, vec)
    check_incidences(spec, forms, roots, verts, f"k{i}")
    # and the sigma-image incidences: member(sigma(root)) singular at swap(vert)?
diag_s(spec, kern, a)
