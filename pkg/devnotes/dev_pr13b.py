"""Dev: eight-member pencil — equivariant combination, generators, closure."""
from fractions import Fraction

from dev_pr13_solve import (PAIRS, incidence_kernel, vec_to_forms, flatten,
                            s_map, swapped, SWAP_ROWS)
from quarticverify.exactfield import PolyRing, TowerSpec, tower_sqrt
from quarticverify.linalg import Matrix
from quarticverify.multipoly import Form, proportionality
from quarticverify.quadpencil import Pencil
from quarticverify.matgroup import (ProjTransform, closure, fingerprint,
                                    semi_invariant_factor)

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
assert len(kern) == 2
k0, k1 = kern
cols = Matrix(spec, [[kern[j][i] for j in range(2)] for i in range(30)])
f0 = vec_to_forms(spec, k0)
f1 = vec_to_forms(spec, k1)
s10 = cols.solve(flatten(s_map(spec, f0, a)))[0][1]
s01 = cols.solve(flatten(s_map(spec, f1, a)))[0][0]
musq = s10 / s01
mu = tower_sqrt(musq)
print("mu^2 =", musq, " mu =", mu)
assert mu is not None

for sign, tag in ((one, "+"), (-one, "-")):
    m = mu * sign
    forms = [fa + fb * m for fa, fb in zip(f0, f1)]
    pen = Pencil.from_forms(*forms)
    det = pen.det_binary_form()
    ok_roots = all(det.evaluate([p, q]).is_zero for p, q in roots)
    ranks = []
    vmatch = []
    for (p, q), v in zip(roots, verts):
        qf = pen.member(p, q)
        ranks.append(qf.rank())
        vert = qf.vertex()
        vx = [spec.rational(c) for c in v]
        piv = next(i for i, c in enumerate(vx) if not c.is_zero)
        scl = vert.coords[piv] / vx[piv]
        vmatch.append(all((vert.coords[i] - vx[i] * scl).is_zero
                          for i in range(4)))
    disc = pen.discriminant_quartic().form
    g1 = ProjTransform.diagonal(spec, [one, one, -one, -one])
    g2 = ProjTransform.from_rows(spec, [[F(c) for c in row]
                                        for row in SWAP_ROWS])
    f_g1 = semi_invariant_factor(g1, disc)
    f_g2 = semi_invariant_factor(g2, disc)
    print(f"mu sign {tag}: det roots ok {ok_roots}, ranks {ranks}, "
          f"vertices {all(vmatch)}, g1 factor {f_g1}, g2 factor {f_g2}")
