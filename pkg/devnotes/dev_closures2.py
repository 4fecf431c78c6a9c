"""Dev: closures and node data for the parametrized pencil families."""
import time
from fractions import Fraction

from quarticverify.exactfield import PolyRing, TowerSpec, tower_sqrt
from quarticverify.families import SysParams, sys_build, system_map
from quarticverify.linalg import Matrix
from quarticverify.matgroup import (
    ProjTransform, closure, fingerprint, orbits_on_points, semi_invariant_factor,
)
from quarticverify.multipoly import Form
from quarticverify.projgeom import ProjPoint, QuarticSurface, is_node
from quarticverify.quadpencil import Pencil

F = Fraction

# ===== two-parameter family at t=-1 (a23, c01) ===============================
t0 = time.time()
spec = TowerSpec(PolyRing(())).adjoin(TowerSpec(PolyRing(())).rational(-2), "i2")
spec = spec.adjoin(spec.rational(6), "r6")
i2, r6 = spec.radical("i2"), spec.radical("r6")
a23 = r6 * F(2, 3)
c01 = spec.rational(F(2, 3))
params = SysParams(spec, -1, a23=a23, c01=c01)
pencil = sys_build(params)
disc = pencil.discriminant_quartic()

# the four singular members sit at the standard roots; vertices are coords
verts = []
for (p, q) in [(1, 0), (0, 1), (1, 1), (-1, 1)]:
    qf = pencil.member(spec.rational(p), spec.rational(q))
    assert qf.rank() == 3, (p, q, qf.rank())
    verts.append(qf.vertex())
print("vertices:", [[str(c) for c in v.coords] for v in verts])

# base point from the quartic solve: x2=sqrt(3/2)=r6/2, x0=i2/2, x1=-3 i2/2
b0 = ProjPoint(spec, [i2 / 2, i2 * F(-3, 2), r6 / 2, spec.one()])
for q in pencil.quadrics:
    assert q.evaluate([c for c in b0.coords]).is_zero
pi = ProjTransform.diagonal(spec, (-1, -1, 1, 1))
sg = ProjTransform.from_rows(spec, [[0,1,0,0],[1,0,0,0],[0,0,1,0],[0,0,0,-1]])
# printed third generator (x0:x1:x3:-x2) does NOT preserve the quartic and has
# projective order 4; the sign-fixed (x0:-x1:x3:x2) negates Q2 and squares to 1
ta_printed = ProjTransform.from_rows(spec, [[1,0,0,0],[0,1,0,0],[0,0,0,1],[0,0,-1,0]])
print("printed tau semi-invariant on disc?",
      semi_invariant_factor(ta_printed, disc.form))
ta = ProjTransform.from_rows(spec, [[1,0,0,0],[0,-1,0,0],[0,0,0,1],[0,0,1,0]])
print("fixed tau semi-invariant on disc?",
      semi_invariant_factor(ta, disc.form))
grp = closure([pi, sg, ta], cap=64)
fp = fingerprint(grp)
print(f"two-param t=-1 group: order={fp.order} hist={fp.element_order_histogram} "
      f"abelian={fp.abelian} center={fp.center_order} derived={fp.derived_order}")

# orbit of b0 under the group = 8 base points; all are nodes of disc
orb_pts = []
seen = set()
for g in grp.elements:
    img = g.apply_point(b0)
    if img not in seen:
        seen.add(img)
        orb_pts.append(img)
print("base-point orbit size:", len(orb_pts))
for bp in orb_pts:
    for q in pencil.quadrics:
        assert q.evaluate(list(bp.coords)).is_zero
nodes = verts + orb_pts
assert len(nodes) == 12
for nd in nodes:
    v = is_node(disc, nd)
    assert v.is_node, nd
rep = orbits_on_points(grp, nodes)
print("orbit lengths on 12 nodes:", sorted(rep.lengths))
for g in (pi, sg, ta):
    lam = semi_invariant_factor(g, disc.form)
    assert lam is not None
print(f"two-param family done ({time.time()-t0:.1f}s)\n")

# ===== one-parameter family at t=omega (a,a,a,a,ta,-a) =======================
t0 = time.time()
wspec = TowerSpec(PolyRing(())).adjoin(TowerSpec(PolyRing(())).rational(-3), "r3")
omega = (wspec.rational(1) + wspec.radical("r3")) / 2
for aval, label in [(wspec.rational(1), "a=1")]:
    par = SysParams(wspec, omega, a12=aval, a13=aval, a23=aval,
                    b02=aval, b03=omega*aval, c01=-aval)
    pen = sys_build(par)
    dq = pen.discriminant_quartic()
    g1 = system_map(wspec, "order3-exact", omega).coord
    g2 = system_map(wspec, "swap-inf-t", omega).coord
    for g in (g1, g2):
        assert semi_invariant_factor(g, dq.form) is not None
    grp = closure([g1, g2], cap=128)
    fp = fingerprint(grp)
    print(f"omega family {label}: order={fp.order} hist={fp.element_order_histogram} "
          f"abelian={fp.abelian} center={fp.center_order} derived={fp.derived_order}")
print(f"omega family done ({time.time()-t0:.1f}s)\n")

# ===== eight-singular-member family, concrete (a,b)=(1/3,2) ==================
t0 = time.time()
base = TowerSpec(PolyRing(()))
aval, bval = F(1, 3), F(2)


def build_eight(spec, a, b, r, sb, sb1, ii):
    """Quadrics of the eight-member family from (a, b, r=sqrt(a-a^2))."""
    one = spec.one()
    a = spec.rational(a) if isinstance(a, (int, Fraction)) else a
    b = spec.rational(b) if isinstance(b, (int, Fraction)) else b
    c1 = (a*2 - 1) * (b - 1) * b                      # (2a-1)(b-1)b
    c2 = (a*2*(a - 1 + b*r) - (b - 1)*r) / (a - r)    # (2a(a-1+br)-(b-1)r)/(a-r)
    c3 = b * (a*(b - 1) + r*(b + 1))                  # b(a(b-1)+r(b+1))
    fbr = b * r * 4
    q1 = Form.from_terms(spec, 4, {
        (0,2,0,0): c1, (0,0,2,0): c2, (0,0,0,2): c3, (0,0,1,1): -fbr})
    d1 = -((a - a*a)*(b - 1)*2 + r*(b + 1))
    d2 = -(b * (a*a*(b - 1)*2 + r*(b + 1)))
    q2 = Form.from_terms(spec, 4, {
        (2,0,0,0): d1, (0,2,0,0): d2, (0,0,2,0): d1, (0,0,0,2): d2,
        (1,1,0,0): -fbr, (0,0,1,1): -fbr})
    q3 = Form.from_terms(spec, 4, {
        (2,0,0,0): a*c2, (0,2,0,0): a*c3, (0,0,0,2): a*c1, (1,1,0,0): -a*fbr})
    return Pencil.from_forms(q1, q2, q3)


spec8 = base.adjoin(base.rational(aval - aval*aval), "r")
spec8 = spec8.adjoin(spec8.rational(-1), "i")
r = spec8.radical("r")
ii = spec8.radical("i")
sb = tower_sqrt(spec8.rational(bval))          # sqrt(2) = 3r
sb1 = tower_sqrt(spec8.rational(bval - 1))     # sqrt(1) = 1
assert sb is not None and sb1 is not None
print("sqrt(b) =", sb, "| sqrt(b-1) =", sb1)
pen8 = build_eight(spec8, aval, bval, r, sb, sb1, ii)
d8 = pen8.discriminant_quartic()

a_e = spec8.rational(aval)
b_e = spec8.rational(bval)
one = spec8.one()
pq_list = [
    (one, spec8.zero()), (spec8.zero(), one), (a_e, one), (one, one),
    (a_e, a_e - r), (a_e - r, one), (a_e, a_e + r), (a_e + r, one),
]
v_list = [
    (1, 0, 0, 0), (0, 0, 1, 0), (0, 1, 0, 0), (0, 0, 0, 1),
    (1, 1, 0, 0), (0, 0, 1, 1), (bval, 1, 0, 0), (0, 0, bval, 1),
]
for (p, q), v in zip(pq_list, v_list):
    qf = pen8.member(p, q)
    assert qf.rank() == 3, ((str(p), str(q)), qf.rank())
    vert = qf.vertex()
    assert vert == ProjPoint(spec8, v), ((str(p), str(q)), v,
                                         [str(c) for c in vert.coords])
print("eight members each rank 3 with the listed vertices")

g1 = ProjTransform.diagonal(spec8, (1, 1, -1, -1))
g2 = ProjTransform.permutation(spec8, (2, 3, 0, 1))
den = sb * sb1
g3 = ProjTransform.from_rows(spec8, [
    [0, 0, sb/sb1, -sb/sb1],
    [0, 0, den.inverse(), -sb/sb1],
    [ii/sb1, -ii*b_e/sb1, 0, 0],
    [ii/sb1, -ii/sb1, 0, 0],
])
for g in (g1, g2, g3):
    lam = semi_invariant_factor(g, d8.form)
    assert lam is not None, "generator not semi-invariant"
grp8 = closure([g1, g2, g3], cap=128)
fp8 = fingerprint(grp8)
print(f"eight-member (1/3,2): order={fp8.order} hist={fp8.element_order_histogram} "
      f"abelian={fp8.abelian} center={fp8.center_order} derived={fp8.derived_order}")
print(f"eight-member family done ({time.time()-t0:.1f}s)\n")

# ===== fixed golden-ratio-of-unity family ====================================
t0 = time.time()
ws = TowerSpec(PolyRing(())).adjoin(TowerSpec(PolyRing(())).rational(-3), "r3")
r3 = ws.radical("r3")
alpha = (ws.rational(1) + r3) / 2
beta = (ws.rational(1) - r3) / 2
one = ws.one()
# Q1 = x1^2 + (x3 - x2)(x3 + beta x2)
q1 = Form.from_terms(ws, 4, {
    (0,2,0,0): one, (0,0,0,2): one, (0,0,1,1): beta - 1, (0,0,2,0): -beta})
# Q2 = alpha^2 x0^2 + x2((1+alpha)x3 + alpha x2)
q2 = Form.from_terms(ws, 4, {
    (2,0,0,0): alpha*alpha, (0,0,1,1): alpha + 1, (0,0,2,0): alpha})
# Q3 = -2 r3 i ... : -2*sqrt(-3) = -2 r3;  -(1+alpha)x1^2 + 2 alpha x0 x1 + x2^2
#      -(1+alpha)x3^2 + 2 alpha^2 x2 x3
q3 = Form.from_terms(ws, 4, {
    (2,0,0,0): r3*(-2), (0,2,0,0): -(alpha + 1), (1,1,0,0): alpha*2,
    (0,0,2,0): one, (0,0,0,2): -(alpha + 1), (0,0,1,1): alpha*alpha*2})
pen14 = Pencil.from_forms(q1, q2, q3)
d14 = pen14.discriminant_quartic()
pq14 = [
    (one, ws.zero()), (alpha*alpha, one), (ws.zero(), one), (alpha + 1, one),
    (one, one), ((ws.rational(2) - alpha).inverse(), one), (alpha, one), (beta, one),
]
v14 = [
    (1, 0, 0, 0), (0, 0, 1, 0), (0, 1, 0, 0), (0, 0, 0, 1),
    (1, 1, 0, 0), (0, 0, 1, 1), None, None,
]
for k, ((p, q), v) in enumerate(zip(pq14, v14)):
    qf = pen14.member(p, q)
    print(f"member {k}: rank {qf.rank()}", end="")
    if qf.rank() == 3:
        vert = qf.vertex()
        print(" vertex", [str(c) for c in vert.coords], end="")
        if v is not None:
            print(" expected", v, "match" if vert == ProjPoint(ws, v) else "DIFFER", end="")
    print()
h1 = ProjTransform.diagonal(ws, (1, 1, -1, -1))
h2 = ProjTransform.permutation(ws, (2, 3, 0, 1))
h3 = ProjTransform.from_rows(ws, [
    [1, -beta, 0, 0], [0, -beta, 0, 0], [0, 0, beta, alpha], [0, 0, 1, 0]])
for g in (h1, h2, h3):
    lam = semi_invariant_factor(g, d14.form)
    print("semi-invariant factor:", lam)
    assert lam is not None
grp14 = closure([h1, h2, h3], cap=128)
fp14 = fingerprint(grp14)
print(f"fixed family: order={fp14.order} hist={fp14.element_order_histogram} "
      f"abelian={fp14.abelian} center={fp14.center_order} derived={fp14.derived_order}")
print(f"fixed family done ({time.time()-t0:.1f}s)")
