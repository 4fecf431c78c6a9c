"""Dev: symmetric-quartic and diagonal-family closures, nodes, tropes."""
import time
from fractions import Fraction
from itertools import permutations

from quarticverify.exactfield import PolyRing, TowerSpec
from quarticverify.multipoly import Form
from quarticverify.projgeom import (ProjPoint, ProjPlane, QuarticSurface,
                                    is_node, trope_check)
from quarticverify.quadpencil import numeric_singular_points
from quarticverify.matgroup import (ProjTransform, closure, fingerprint,
                                    orbits_on_points, semi_invariant_factor)

F = Fraction
t0 = time.time()

print("=== five-letter symmetric quartic ===")
spec = TowerSpec(PolyRing(()))
one = spec.one()


def build_sym5(spec):
    x = [Form.monomial(spec, 4, tuple(1 if j == i else 0 for j in range(4)))
         for i in range(4)]
    e = Form.zero(spec, 4) - (x[0] + x[1] + x[2] + x[3])
    quart = Form.zero(spec, 4)
    sq = Form.zero(spec, 4)
    for f in x + [e]:
        quart = quart + (f * f) * (f * f)
        sq = sq + f * f
    return (quart * 4) - sq * sq


quartic = build_sym5(spec)
g_cycle = ProjTransform.permutation(spec, (1, 2, 3, 0))
g_swap = ProjTransform.from_rows(spec, [
    [F(1), F(0), F(0), F(0)],
    [F(0), F(1), F(0), F(0)],
    [F(0), F(0), F(1), F(0)],
    [F(-1), F(-1), F(-1), F(-1)],
])
for nm, g in (("4-cycle", g_cycle), ("last-swap", g_swap)):
    print(nm, "factor:", semi_invariant_factor(g, quartic))
grp = closure([g_cycle, g_swap], cap=256)
fp = fingerprint(grp)
print(f"[{time.time()-t0:6.1f}s] closure order", fp.order, "hist",
      dict(fp.element_order_histogram), "center", fp.center_order,
      "derived", fp.derived_order)

surface = QuarticSurface(quartic)
nodes = set()
for tup in set(permutations((1, 1, -1, -1, 0))):
    pt = tup[:4]
    neg = tuple(-c for c in pt)
    if neg in nodes:
        continue
    nodes.add(pt)
nodes = sorted(nodes, reverse=True)
print("distinct projective node candidates:", len(nodes))
assert len(nodes) == 15
certified = 0
for pt in nodes:
    v = is_node(surface, ProjPoint(spec, [F(c) for c in pt]))
    if v.kind == "NodeCertified":
        certified += 1
print(f"[{time.time()-t0:6.1f}s] certified nodes: {certified} / 15")
rep = orbits_on_points(grp, [ProjPoint(spec, [F(c) for c in pt])
                             for pt in nodes])
print("orbit lengths on nodes:", rep.lengths)

res = numeric_singular_points(surface)
print(f"[{time.time()-t0:6.1f}s] numeric singular points:",
      len(res.points), "max residual", max(res.residuals, default=0.0))

print("=== squared-sum plus monomial family ===")
spec_i = spec.adjoin(spec.rational(-1), "i")
i_ = spec_i.radical("i")
one_i = spec_i.one()
zero_i = spec_i.zero()
sq = Form.zero(spec_i, 4)
for k in range(4):
    mono = [0, 0, 0, 0]
    mono[k] = 2
    sq = sq + Form.monomial(spec_i, 4, tuple(mono))
quart6 = sq * sq + Form.monomial(spec_i, 4, (1, 1, 1, 1))
surf6 = QuarticSurface(quart6)
gens6 = [
    ProjTransform.permutation(spec_i, (1, 2, 3, 0)),
    ProjTransform.permutation(spec_i, (1, 0, 2, 3)),
    ProjTransform.diagonal(spec_i, [-one_i, -one_i, one_i, one_i]),
    ProjTransform.diagonal(spec_i, [-one_i, one_i, -one_i, one_i]),
]
for g in gens6:
    assert semi_invariant_factor(g, quart6) is not None
grp6 = closure(gens6, cap=256)
fp6 = fingerprint(grp6)
print(f"[{time.time()-t0:6.1f}s] closure order", fp6.order, "hist",
      dict(fp6.element_order_histogram), "center", fp6.center_order,
      "derived", fp6.derived_order)
nodes6 = []
for p in range(4):
    for q in range(p + 1, 4):
        for sgn in (i_, -i_):
            coords = [zero_i] * 4
            coords[p] = one_i
            coords[q] = sgn
            nodes6.append(ProjPoint(spec_i, coords))
assert len(nodes6) == 12
cert6 = sum(1 for pt in nodes6
            if is_node(surf6, pt).kind == "NodeCertified")
print("certified nodes:", cert6, "/ 12")
rep6 = orbits_on_points(grp6, nodes6)
print("orbit lengths:", rep6.lengths)
tropes = 0
for k in range(4):
    coeffs = [zero_i] * 4
    coeffs[k] = one_i
    tc = trope_check(surf6, ProjPlane(spec_i, coeffs))
    if tc is not None:
        tropes += 1
print(f"[{time.time()-t0:6.1f}s] double-conic tropes among coordinate planes:",
      tropes)
