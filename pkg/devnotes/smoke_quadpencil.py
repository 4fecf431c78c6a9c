import time
from fractions import Fraction

from quarticverify.exactfield import PolyRing, TowerSpec
from quarticverify.multipoly import Form, variables
from quarticverify.projgeom import ProjPoint, QuarticSurface, is_node
from quarticverify.quadpencil import (
    Pencil,
    numeric_base_points,
    numeric_singular_points,
    projective_distance,
)
import numpy as np

ring = PolyRing(())
spec = TowerSpec(ring)

# Sys(2; 0,0,0,0,0,0): t=2, all parameters zero.
t = 2
q1 = Form.from_terms(spec, 4, {(0, 2, 0, 0): 1, (0, 0, 2, 0): 1, (0, 0, 0, 2): 1})
q3 = Form.from_terms(spec, 4, {(2, 0, 0, 0): 1, (0, 0, 2, 0): 1, (0, 0, 0, 2): t * t})
q2 = Form.from_terms(spec, 4, {(0, 0, 2, 0): -2, (0, 0, 0, 2): -2 * t})
pen = Pencil.from_forms(q1, q2, q3)

# Discriminant: Q2^2 - 4 Q1 Q3 = -4(x0^2x1^2 + x1^2x2^2 + 4x1^2x3^2 + x0^2x2^2 + x0^2x3^2 + x2^2x3^2)
disc = pen.discriminant_quartic()
expected = Form.from_terms(spec, 4, {
    (2, 2, 0, 0): -4, (0, 2, 2, 0): -4, (0, 2, 0, 2): -16,
    (2, 0, 2, 0): -4, (2, 0, 0, 2): -4, (0, 0, 2, 2): -4,
})
assert disc.form == expected, "discriminant mismatch"
print("discriminant ok")

# det binary form = const * p^2 q^2 (p-q)^2 (p-2q)^2
det = pen.det_binary_form()
members = pen.singular_members()
assert pen.double_root_count() == 4, pen.double_root_count()
roots = set()
for m in members:
    assert m.multiplicity == 2
    assert m.rank == 3
    assert m.vertex is not None
    pq = (m.root[0], m.root[1])
    roots.add((str(pq[0]), str(pq[1])))
    # vertex is a coordinate point
    nz = [c for c in m.vertex.coords if not c.is_zero]
    assert len(nz) == 1
print("singular members:", sorted(roots))

# vertex of the (1:0) member lies on Q2
for m in members:
    if not m.root[1].is_zero:
        continue
    val = pen.quadrics[1].evaluate(m.vertex.coords)
    assert val.is_zero, "vertex of (1:0) member not on Q2"
print("(1:0) vertex on Q2 ok")

# vertices are nodes of the discriminant
for m in members:
    v = is_node(disc, m.vertex)
    assert v.is_node, v.kind
print("vertices node-certified ok")

# 8 exact base points (+-i sqrt2 : +-1 : +-i sqrt2 : 1): need tower with i*sqrt2 = sqrt(-2)
spec2 = spec.adjoin(spec.rational(-2), "s")   # s = sqrt(-2)
s = spec2.radical("s")
pts = []
for e1 in (1, -1):
    for e2 in (1, -1):
        for e3 in (1, -1):
            if e1 * e2 * e3 != 1:  # only 8 of them? no - all 8 sign choices
                pass
            pts.append(ProjPoint(spec2, (s * spec2.rational(e1), spec2.rational(e2), s * spec2.rational(e3), spec2.one())))
# dedupe projectively (scaling by -1 identifies pairs)
uniq = []
for p in pts:
    if all(p != q for q in uniq):
        uniq.append(p)
print("exact candidate points:", len(uniq))
pen2 = pen.lift(spec2)
verdicts = pen2.verify_base_points(uniq[:8] if len(uniq) >= 8 else uniq)
n_ok = sum(1 for v in verdicts if v.on_pencil and v.transversal)
print("base points on pencil and transversal:", n_ok)
assert n_ok == 8, n_ok

t0 = time.time()
res = numeric_base_points(pen)
print(f"numeric base points: {len(res.points)} in {time.time()-t0:.2f}s, max res {max(res.residuals):.2e}")
assert len(res.points) == 8, len(res.points)
assert max(res.residuals) < 1e-9

# match the exact embeddings
embeds = [np.array([complex(c.embed({})) for c in p.coords]) for p in uniq]
for e in embeds:
    d = min(projective_distance(e, np.array(p)) for p in res.points)
    assert d < 1e-6, d
print("numeric/exact base point match ok")

t0 = time.time()
resn = numeric_singular_points(disc)
print(f"numeric singular points: {len(resn.points)} in {time.time()-t0:.2f}s diag: {resn.diagnostics}")
assert len(resn.points) == 12, len(resn.points)
assert max(resn.residuals) < 1e-9

# degenerate pencil: common line (positive-dimensional base locus)
d1 = Form.from_terms(spec, 4, {(2, 0, 0, 0): 1})
d2 = Form.from_terms(spec, 4, {(0, 2, 0, 0): 1})
d3 = Form.from_terms(spec, 4, {(2, 0, 0, 0): 1, (0, 2, 0, 0): 1})
resd = numeric_base_points(Pencil.from_forms(d1, d2, d3))
print("degenerate:", len(resd.points), "ndiags:", len(resd.diagnostics))
assert len(resd.points) < 8 and resd.diagnostics, (len(resd.points), resd.diagnostics)
print("degenerate diagnostics ok")
print("ALL QUADPENCIL SMOKE OK")
