"""Dev: eight-member pencils — generators, closures, printed-coefficient diff."""
from fractions import Fraction

from dev_pr13_solve import (PAIRS, incidence_kernel, vec_to_forms, flatten,
                            SWAP_ROWS, swapped)
from quarticverify.exactfield import PolyRing, TowerSpec, tower_sqrt
from quarticverify.linalg import Matrix
from quarticverify.multipoly import Form, proportionality
from quarticverify.projgeom import ProjPoint
from quarticverify.quadpencil import Pencil
from quarticverify.matgroup import (ProjTransform, closure, fingerprint,
                                    semi_invariant_factor)

F = Fraction


def mobius_s_map(spec, forms, mob, proj_rows):
    """S(Q) with member(p,q)∘h = member(m(p,q)) coefficient matching.

    mob = ((a,b),(c,d)) acting (p:q) -> (ap+bq : cp+dq); proj_rows = h.
    """
    (ma, mb), (mc, md) = mob
    q1, q2, q3 = forms
    combos = [
        q1 * (ma * ma) + q2 * (ma * mc) + q3 * (mc * mc),
        q1 * (ma * mb * 2) + q2 * (ma * md + mb * mc) + q3 * (mc * md * 2),
        q1 * (mb * mb) + q2 * (mb * md) + q3 * (md * md),
    ]
    return [c.substitute_linear(proj_rows) for c in combos]


def eigen_pencils(spec, kern, mob, proj_rows):
    """Split the 2-dim incidence space under the swap map; return eigenvectors."""
    cols = Matrix(spec, [[kern[j][i] for j in range(2)] for i in range(30)])
    f0 = vec_to_forms(spec, kern[0])
    f1 = vec_to_forms(spec, kern[1])
    s10 = cols.solve(flatten(mobius_s_map(spec, f0, mob, proj_rows)))[0][1]
    s01 = cols.solve(flatten(mobius_s_map(spec, f1, mob, proj_rows)))[0][0]
    musq = s10 / s01
    mu = tower_sqrt(musq)
    assert mu is not None, musq
    out = []
    for m in (mu, -mu):
        out.append(([fa + fb * m for fa, fb in zip(f0, f1)], s01 * m))
    return out


def check_members(spec, pen, roots, verts):
    det = pen.det_binary_form()
    assert all(det.evaluate([p, q]).is_zero for p, q in roots)
    for (p, q), v in zip(roots, verts):
        qf = pen.member(p, q)
        assert qf.rank() == 3
        vert = qf.vertex()
        vx = [c if not isinstance(c, (int, Fraction)) else spec.rational(c)
              for c in v]
        piv = next(i for i, c in enumerate(vx) if not c.is_zero)
        scl = vert.coords[piv] / vx[piv]
        assert all((vert.coords[i] - vx[i] * scl).is_zero for i in range(4))


def vert_permutation(spec, g, verts):
    """How g permutes the vertex list, as a 1-based image tuple."""
    vxs = [[c if not isinstance(c, (int, Fraction)) else spec.rational(c)
            for c in v] for v in verts]
    imgs = []
    for v in vxs:
        w = g.apply_point(ProjPoint(spec, v))
        hit = None
        for j, u in enumerate(vxs):
            piv = next(i for i, c in enumerate(u) if not c.is_zero)
            if w.coords[piv].is_zero:
                continue
            scl = w.coords[piv] / u[piv]
            if all((w.coords[i] - u[i] * scl).is_zero for i in range(4)):
                hit = j + 1
                break
        imgs.append(hit)
    return tuple(imgs)


print("=== eight singular members, dihedral case ===")
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
mob = ((zero, a), (one, zero))          # sigma: (p:q) -> (alpha*q : p)
swap_rows = [[F(c) for c in row] for row in SWAP_ROWS]
pair = eigen_pencils(spec, kern, mob, swap_rows)
for forms, lam in pair:
    print("eigenvalue (swap factor c):", lam)

# printed quadrics for comparison
c1 = (a * 2 - one) * (spec.rational(bval) - one) * bval
b_ = spec.rational(bval)
c2 = (a * 2 * (a - one + b_ * r) - (b_ - one) * r) / (a - r)
c3 = b_ * (a * (b_ - one) + r * (b_ + one))
fbr = b_ * r * 4
d1 = -((a - a * a) * (b_ - one) * 2 + r * (b_ + one))
d2 = -(b_ * (a * a * (b_ - one) * 2 + r * (b_ + one)))
printed = [
    Form(spec, 4, {(0, 2, 0, 0): c1, (0, 0, 2, 0): c2,
                   (0, 0, 0, 2): c3, (0, 0, 1, 1): -fbr}),
    Form(spec, 4, {(2, 0, 0, 0): d1, (0, 2, 0, 0): d2, (0, 0, 2, 0): d1,
                   (0, 0, 0, 2): d2, (1, 1, 0, 0): -fbr, (0, 0, 1, 1): -fbr}),
    Form(spec, 4, {(2, 0, 0, 0): a * c2, (0, 2, 0, 0): a * c3,
                   (0, 0, 0, 2): a * c1, (1, 1, 0, 0): -a * fbr}),
]

for forms, lam in pair:
    # scale derived so Q1's x1^2 coefficient matches printed c1
    kappa = c1 / forms[0].coefficient((0, 2, 0, 0))
    scaled = [f * kappa for f in forms]
    diffs = []
    for s, (df, pf) in enumerate(zip(scaled, printed)):
        for mono in sorted(set(m for m, _ in df.terms()) |
                           set(m for m, _ in pf.terms()), reverse=True):
            dv = df.coefficient(mono)
            pv = pf.coefficient(mono)
            if not (dv - pv).is_zero:
                diffs.append((s + 1, mono, str(pv), str(dv)))
    print(f"eigen c={lam}: coefficient differences vs printed: {len(diffs)}")
    for s, mono, pv, dv in diffs:
        print(f"  Q{s} {mono}: printed {pv}   derived {dv}")

# g3 needs i adjoined; sqrt(b)=3r, sqrt(b-1)=1
spec2 = spec.adjoin(spec.rational(-1), "i")
i_ = spec2.radical("i")
r2 = r.lift(spec2)
sb = r2 * 3                      # sqrt(2)
one2 = spec2.one()
zero2 = spec2.zero()
g3_rows = [
    [zero2, zero2, sb, -sb],
    [zero2, zero2, sb.inverse(), -sb],
    [i_, -i_ * 2, zero2, zero2],
    [i_, -i_, zero2, zero2],
]
g1 = ProjTransform.diagonal(spec2, [one2, one2, -one2, -one2])
g2 = ProjTransform.from_rows(spec2, swap_rows)
g3 = ProjTransform.from_rows(spec2, g3_rows)
print("g3 vertex action:", vert_permutation(spec2, g3,
      [[F(c) for c in v] for v in verts]))
print("g2 vertex action:", vert_permutation(spec2, g2,
      [[F(c) for c in v] for v in verts]))
for forms, lam in pair:
    disc = Pencil.from_forms(*forms).discriminant_quartic().form.lift(spec2)
    fg = semi_invariant_factor(g3, disc)
    print(f"eigen c={lam}: g3 factor on discriminant:", fg)
    if fg is not None:
        grp = closure([g1, g2, g3], cap=64)
        fp = fingerprint(grp)
        print("  closure order", fp.order, "hist", dict(fp.element_order_histogram),
              "abelian", fp.abelian, "center", fp.center_order,
              "derived", fp.derived_order)
