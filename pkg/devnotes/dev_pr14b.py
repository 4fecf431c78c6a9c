"""Dev: tetrahedral pencil — eigen-split, printed diff, closure."""
import time
from fractions import Fraction

from dev_pr13_solve import PAIRS, incidence_kernel, vec_to_forms, flatten
from quarticverify.exactfield import PolyRing, TowerSpec, tower_sqrt
from quarticverify.linalg import Matrix
from quarticverify.multipoly import Form
from quarticverify.projgeom import ProjPoint
from quarticverify.quadpencil import Pencil
from quarticverify.matgroup import (ProjTransform, closure, fingerprint,
                                    semi_invariant_factor)

F = Fraction
SWAP = [[F(c) for c in row] for row in
        [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]]


def mobius_s_map(spec, forms, mob, proj_rows):
    (ma, mb), (mc, md) = mob
    q1, q2, q3 = forms
    combos = [
        q1 * (ma * ma) + q2 * (ma * mc) + q3 * (mc * mc),
        q1 * (ma * mb * 2) + q2 * (ma * md + mb * mc) + q3 * (mc * md * 2),
        q1 * (mb * mb) + q2 * (mb * md) + q3 * (md * md),
    ]
    return [c.substitute_linear(proj_rows) for c in combos]


t0 = time.time()
base = TowerSpec(PolyRing(()))
spec = base.adjoin(base.rational(-3), "r3")
r3 = spec.radical("r3")
one, zero = spec.one(), spec.zero()
al = (one + r3) / 2
be = (one - r3) / 2

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
assert len(kern) == 2
cols = Matrix(spec, [[kern[j][i] for j in range(2)] for i in range(30)])
f0 = vec_to_forms(spec, kern[0])
f1 = vec_to_forms(spec, kern[1])
mob = ((al * al, one - al * al), (one, -(al * al)))
s10 = cols.solve(flatten(mobius_s_map(spec, f0, mob, SWAP)))[0][1]
s01 = cols.solve(flatten(mobius_s_map(spec, f1, mob, SWAP)))[0][0]
musq = s10 / s01
mu = tower_sqrt(musq)
print("mu^2 =", musq, " mu =", mu)
assert mu is not None

printed = [
    Form(spec, 4, {(0, 2, 0, 0): one, (0, 0, 0, 2): one,
                   (0, 0, 1, 1): be - one, (0, 0, 2, 0): -be}),
    Form(spec, 4, {(2, 0, 0, 0): al * al, (0, 0, 1, 1): al + one,
                   (0, 0, 2, 0): al}),
    Form(spec, 4, {(2, 0, 0, 0): -(r3 * 2), (0, 2, 0, 0): -(al + one),
                   (1, 1, 0, 0): al * 2, (0, 0, 2, 0): one,
                   (0, 0, 0, 2): -(al + one), (0, 0, 1, 1): al * al * 2}),
]

for m in (mu, -mu):
    forms = [fa + fb * m for fa, fb in zip(f0, f1)]
    lam = s01 * m
    # scale so Q1's x1^2 coefficient is 1 (printed normalization)
    kappa = forms[0].coefficient((0, 2, 0, 0)).inverse()
    scaled = [f * kappa for f in forms]
    diffs = []
    for s, (df, pf) in enumerate(zip(scaled, printed)):
        for mono in sorted(set(mn for mn, _ in df.terms()) |
                           set(mn for mn, _ in pf.terms()), reverse=True):
            dv = df.coefficient(mono)
            pv = pf.coefficient(mono)
            if not (dv - pv).is_zero:
                diffs.append((s + 1, mono, str(pv), str(dv)))
    print(f"eigen c={lam}: differences vs printed: {len(diffs)}")
    for s, mono, pv, dv in diffs:
        print(f"  Q{s} {mono}: printed {pv}   derived {dv}")

# --- which eigen-pencil do the printed generators preserve? ---
h1 = ProjTransform.diagonal(spec, [one, one, -one, -one])
h2 = ProjTransform.from_rows(spec, SWAP)
h3 = ProjTransform.from_rows(spec, [
    [one, -be, zero, zero],
    [zero, -be, zero, zero],
    [zero, zero, be, al],
    [zero, zero, one, zero],
])


def vert_perm(g):
    imgs = []
    for v in verts:
        w = g.apply_point(ProjPoint(spec, list(v)))
        hit = None
        for j, u in enumerate(verts):
            piv = next(i for i, c in enumerate(u) if not c.is_zero)
            if w.coords[piv].is_zero:
                continue
            scl = w.coords[piv] / u[piv]
            if all((w.coords[i] - u[i] * scl).is_zero for i in range(4)):
                hit = j + 1
                break
        imgs.append(hit)
    return tuple(imgs)


print("h2 vertex action:", vert_perm(h2))
print("h3 vertex action:", vert_perm(h3))

for m in (mu, -mu):
    forms = [fa + fb * m for fa, fb in zip(f0, f1)]
    lam = s01 * m
    pen = Pencil.from_forms(*forms)
    det = pen.det_binary_form()
    ok = all(det.evaluate([p, q]).is_zero for p, q in roots)
    ranks = [pen.member(p, q).rank() for p, q in roots]
    disc = pen.discriminant_quartic().form
    fs = [semi_invariant_factor(g, disc) for g in (h1, h2, h3)]
    print(f"eigen c={lam}: roots ok {ok} ranks {ranks} "
          f"factors h1={fs[0]} h2={fs[1]} h3={fs[2]}")

grp = closure([h1, h2, h3], cap=128)
fp = fingerprint(grp)
print("closure order", fp.order, "hist", dict(fp.element_order_histogram),
      "abelian", fp.abelian, "center", fp.center_order,
      "derived", fp.derived_order)
