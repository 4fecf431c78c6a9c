"""Dev: the tetrahedral eight-member pencil — derivation vs printed, closure."""
import time
from fractions import Fraction

from dev_pr13_solve import PAIRS, incidence_kernel, vec_to_forms, flatten
from dev_pr13c import mobius_s_map, vert_permutation, check_members
from quarticverify.exactfield import PolyRing, TowerSpec, tower_sqrt
from quarticverify.linalg import Matrix
from quarticverify.multipoly import Form, proportionality
from quarticverify.projgeom import ProjPoint
from quarticverify.quadpencil import Pencil
from quarticverify.matgroup import (ProjTransform, closure, fingerprint,
                                    semi_invariant_factor)

F = Fraction
t0 = time.time()

base = TowerSpec(PolyRing(()))
spec = base.adjoin(base.rational(-3), "r3")
r3 = spec.radical("r3")
one, zero = spec.one(), spec.zero()
al = (one + r3) / 2
be = (one - r3) / 2
assert (al * be - one).is_zero and (al + be - one).is_zero

roots = [
    (one, zero), (al * al, one), (zero, one), (al + one, one),
    (one, one), ((spec.rational(2) - al).inverse(), one), (al, one), (be, one),
]
verts = [
    (one, zero, zero, zero), (zero, zero, one, zero),
    (zero, one, zero, zero), (zero, zero, zero, one),
    (one, one, zero, zero), (zero, zero, one, one),
    (be, one, zero, zero), (zero, zero, be, one),
]
kern = incidence_kernel(spec, roots, verts)
print(f"[{time.time()-t0:6.1f}s] solution space dimension:", len(kern))

printed = [
    Form(spec, 4, {(0, 2, 0, 0): one, (0, 0, 0, 2): one,
                   (0, 0, 1, 1): be - one, (0, 0, 2, 0): -be}),
    Form(spec, 4, {(2, 0, 0, 0): al * al, (0, 0, 1, 1): al + one,
                   (0, 0, 2, 0): al}),
    Form(spec, 4, {(2, 0, 0, 0): -(r3 * 2), (0, 2, 0, 0): -(al + one),
                   (1, 1, 0, 0): al * 2, (0, 0, 2, 0): one,
                   (0, 0, 0, 2): -(al + one), (0, 0, 1, 1): al * al * 2}),
]
cols = Matrix(spec, [[kern[j][i] for j in range(len(kern))]
                     for i in range(30)])
sol = cols.solve(flatten(printed))
print("printed triple inside the incidence solution space:",
      "yes" if sol is not None else "NO")

pen = Pencil.from_forms(*printed)
check_members(spec, pen, roots, verts)
print(f"[{time.time()-t0:6.1f}s] printed pencil: all 8 members rank 3, "
      "vertices match")
det = pen.det_binary_form()
print("det degree:", det.degree(), " double-root count:",
      pen.double_root_count())

h1 = ProjTransform.diagonal(spec, [one, one, -one, -one])
h2 = ProjTransform.from_rows(spec, [[F(c) for c in row] for row in
                                    [[0, 0, 1, 0], [0, 0, 0, 1],
                                     [1, 0, 0, 0], [0, 1, 0, 0]]])
h3 = ProjTransform.from_rows(spec, [
    [one, -be, zero, zero],
    [zero, -be, zero, zero],
    [zero, zero, be, al],
    [zero, zero, one, zero],
])
print("h2 vertex action:", vert_permutation(spec, h2, verts))
print("h3 vertex action:", vert_permutation(spec, h3, verts))
disc = pen.discriminant_quartic().form
for nm, g in (("h1", h1), ("h2", h2), ("h3", h3)):
    print(nm, "factor on discriminant:", semi_invariant_factor(g, disc))
grp = closure([h1, h2, h3], cap=128)
fp = fingerprint(grp)
print(f"[{time.time()-t0:6.1f}s] closure order", fp.order,
      "hist", dict(fp.element_order_histogram), "abelian", fp.abelian,
      "center", fp.center_order, "derived", fp.derived_order)
