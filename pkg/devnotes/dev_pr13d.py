"""Dev: symbolic-(a,b) verification of the corrected eight-member pencil."""
import time
from fractions import Fraction

from quarticverify.exactfield import PolyRing, TowerSpec
from quarticverify.multipoly import Form
from quarticverify.projgeom import ProjPoint
from quarticverify.quadpencil import Pencil
from quarticverify.matgroup import ProjTransform, semi_invariant_factor

F = Fraction
t0 = time.time()

ring = PolyRing(("a", "b"))
spec0 = TowerSpec(ring)
A = spec0.param("a")
B = spec0.param("b")
spec = spec0.adjoin(A - A * A, "r")
A = A.lift(spec)
B = B.lift(spec)
r = spec.radical("r")
one, zero = spec.one(), spec.zero()

c1 = (A * 2 - one) * (B - one) * B
c2 = (A * 2 * (A - one + B * r) - (B - one) * r) / (A - r)
c3 = B * (A * (B - one) + r * (B + one))
fbr = B * r * 4
d1 = -((A - A * A) * (B - one) * 2 + r * (B + one))
d2 = -(B * (A * A * (B - one) * 2 + r * (B + one)))

Q1 = Form(spec, 4, {(0, 2, 0, 0): c1, (0, 0, 2, 0): c2,
                    (0, 0, 0, 2): c3, (0, 0, 1, 1): -fbr})
Q2 = Form(spec, 4, {(2, 0, 0, 0): d1, (0, 2, 0, 0): d2, (0, 0, 2, 0): d1,
                    (0, 0, 0, 2): d2, (1, 1, 0, 0): fbr, (0, 0, 1, 1): fbr})
Q3 = Form(spec, 4, {(2, 0, 0, 0): A * c2, (0, 2, 0, 0): A * c3,
                    (0, 0, 0, 2): A * c1, (1, 1, 0, 0): -A * fbr})
pen = Pencil.from_forms(Q1, Q2, Q3)
print(f"[{time.time()-t0:6.1f}s] pencil built")

roots = [
    (one, zero), (zero, one), (A, one), (one, one),
    (A, A - r), (A - r, one), (A, A + r), (A + r, one),
]
verts = [
    (one, zero, zero, zero), (zero, zero, one, zero),
    (zero, one, zero, zero), (zero, zero, zero, one),
    (one, one, zero, zero), (zero, zero, one, one),
    (B, one, zero, zero), (zero, zero, B, one),
]
for i, ((p, q), v) in enumerate(zip(roots, verts)):
    m = pen.member(p, q).matrix()
    g = m.apply(list(v))
    assert all(c.is_zero for c in g), (i + 1, [str(c) for c in g])
print(f"[{time.time()-t0:6.1f}s] all 8 incidences hold symbolically")

disc = pen.discriminant_quartic().form
print(f"[{time.time()-t0:6.1f}s] discriminant quartic:",
      len(list(disc.terms())), "terms")

g1 = ProjTransform.diagonal(spec, [one, one, -one, -one])
f1 = semi_invariant_factor(g1, disc)
print(f"[{time.time()-t0:6.1f}s] g1 factor: {f1}")
g2 = ProjTransform.from_rows(spec, [[F(c) for c in row] for row in
                                    [[0, 0, 1, 0], [0, 0, 0, 1],
                                     [1, 0, 0, 0], [0, 1, 0, 0]]])
f2 = semi_invariant_factor(g2, disc)
print(f"[{time.time()-t0:6.1f}s] g2 factor: {f2}")

spec2 = spec.adjoin(B, "sb").adjoin(B.lift2 if False else None, "x") if False else None
sp = spec.adjoin(B, "sb")
sp = sp.adjoin((B - one).lift(sp), "sb1")
sp = sp.adjoin(sp.rational(-1), "i")
sb = sp.radical("sb")
sb1 = sp.radical("sb1")
i_ = sp.radical("i")
Bx = B.lift(sp)
z = sp.zero()
g3 = ProjTransform.from_rows(sp, [
    [z, z, sb / sb1, -(sb / sb1)],
    [z, z, (sb * sb1).inverse(), -(sb / sb1)],
    [i_ / sb1, -(i_ * Bx) / sb1, z, z],
    [i_ / sb1, -(i_ / sb1), z, z],
])
print(f"[{time.time()-t0:6.1f}s] g3 built")
disc2 = disc.lift(sp)
f3 = semi_invariant_factor(g3, disc2)
print(f"[{time.time()-t0:6.1f}s] g3 factor: {f3}")
