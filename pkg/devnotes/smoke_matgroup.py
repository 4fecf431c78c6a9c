from quarticverify.exactfield import PolyRing, TowerSpec
from quarticverify.multipoly import Form
from quarticverify.projgeom import ProjPoint
from quarticverify.matgroup import (
    ProjTransform, closure, fingerprint, semi_invariant_factor,
    orbits_on_points, CapExceeded, NotInvariantSet,
)

ring = PolyRing(())
spec = TowerSpec(ring)

# Sym4 permutation matrices
cyc = ProjTransform.permutation(spec, (1, 2, 3, 0))
swap = ProjTransform.permutation(spec, (1, 0, 2, 3))
sym4 = closure([cyc, swap])
assert len(sym4) == 24, len(sym4)
fp = fingerprint(sym4)
assert fp.element_order_histogram == {1: 1, 2: 9, 3: 8, 4: 6}, fp
assert not fp.abelian and fp.center_order == 1 and fp.derived_order == 12, fp
print("Sym4 ok:", fp)

# C2^2
d1 = ProjTransform.diagonal(spec, (-1, 1, 1, 1))
d2 = ProjTransform.diagonal(spec, (1, -1, 1, 1))
c22 = closure([d1, d2])
fp = fingerprint(c22)
assert fp.order == 4 and fp.element_order_histogram == {1: 1, 2: 3} and fp.abelian, fp
print("C2^2 ok:", fp)

# Dih8: rotation of order 4 + reflection
rot = ProjTransform.from_rows(spec, [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
ref = ProjTransform.diagonal(spec, (1, -1, 1, 1))
dih8 = closure([rot, ref])
fp = fingerprint(dih8)
assert fp.order == 8 and fp.element_order_histogram == {1: 1, 2: 5, 4: 2}, fp
assert fp.center_order == 2 and fp.derived_order == 2 and not fp.abelian, fp
print("Dih8 ok:", fp)

# semi-invariance
F = Form.from_terms(spec, 4, {(1, 1, 1, 1): 1})
lam = semi_invariant_factor(ProjTransform.diagonal(spec, (1, 1, 1, -1)), F)
assert lam is not None and str(lam) == "-1", lam
assert str(semi_invariant_factor(ProjTransform.identity(spec), F)) == "1"
G = Form.from_terms(spec, 4, {(2, 0, 0, 0): 1, (0, 2, 0, 0): 1})
assert semi_invariant_factor(ProjTransform.permutation(spec, (1, 2, 3, 0)), G) is None
# multiplicativity on a shared semi-invariant form
g = ProjTransform.diagonal(spec, (1, 1, -1, -1))
h = ProjTransform.diagonal(spec, (1, -1, 1, -1))
lg, lh, lgh = (semi_invariant_factor(x, F) for x in (g, h, g @ h))
assert (lg * lh - lgh).is_zero
print("semi-invariance ok")

# orbits: trivial group on 3 coordinate points -> 3 fixed points (all forbidden length 1)
triv = closure([ProjTransform.identity(spec)])
pts3 = [ProjPoint(spec, [1 if i == k else 0 for i in range(4)]) for k in range(3)]
rep = orbits_on_points(triv, pts3)
assert rep.lengths == (1, 1, 1) and rep.forbidden_lengths == (1, 1, 1), rep

# C2^3 sign diagonals fix every coordinate point
d3 = ProjTransform.diagonal(spec, (1, 1, -1, 1))
c23 = closure([d1, d2, d3])
assert len(c23) == 8
pts4 = [ProjPoint(spec, [1 if i == k else 0 for i in range(4)]) for k in range(4)]
rep = orbits_on_points(c23, pts4)
assert rep.lengths == (1, 1, 1, 1), rep.lengths

# Sym4 on coordinate points: single orbit of 4, no forbidden lengths
rep = orbits_on_points(sym4, pts4)
assert rep.lengths == (4,) and rep.forbidden_lengths == (), rep
# permutation consistency: each element's images are a permutation; count distinct
assert len(set(rep.permutations)) == 24  # Sym4 acts faithfully here
print("orbits ok")

# NotInvariantSet
try:
    orbits_on_points(sym4, pts3)
    raise SystemExit("expected NotInvariantSet")
except NotInvariantSet as ex:
    print("NotInvariantSet ok:", str(ex)[:60], "...")

# CapExceeded on a shear of infinite order
shear = ProjTransform.from_rows(spec, [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
try:
    closure([shear], cap=50)
    raise SystemExit("expected CapExceeded")
except CapExceeded as ex:
    assert ex.cap == 50 and ex.partial_size == 51
    print("CapExceeded ok")

# direct product: Sym3 on coords (1,2,3) x C2 on coord 0
s3a = ProjTransform.permutation(spec, (0, 2, 3, 1))
s3b = ProjTransform.permutation(spec, (0, 2, 1, 3))
prod = closure([s3a, s3b, d1])
fp = fingerprint(prod)
assert fp.order == 12, fp
assert fp.element_order_histogram == {1: 1, 2: 7, 3: 2, 6: 2}, fp
assert fp.center_order == 2 and fp.derived_order == 3, fp
print("direct product ok:", fp)
print("ALL MATGROUP SMOKE OK")
