"""Dev: what does the printed tetrahedral triple actually satisfy?"""
from fractions import Fraction

from quarticverify.exactfield import PolyRing, TowerSpec
from quarticverify.multipoly import Form
from quarticverify.quadpencil import Pencil

F = Fraction
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
printed = [
    Form(spec, 4, {(0, 2, 0, 0): one, (0, 0, 0, 2): one,
                   (0, 0, 1, 1): be - one, (0, 0, 2, 0): -be}),
    Form(spec, 4, {(2, 0, 0, 0): al * al, (0, 0, 1, 1): al + one,
                   (0, 0, 2, 0): al}),
    Form(spec, 4, {(2, 0, 0, 0): -(r3 * 2), (0, 2, 0, 0): -(al + one),
                   (1, 1, 0, 0): al * 2, (0, 0, 2, 0): one,
                   (0, 0, 0, 2): -(al + one), (0, 0, 1, 1): al * al * 2}),
]
for label, triple in (("as printed", printed),
                      ("Q2/Q3 swapped", [printed[0], printed[2], printed[1]])):
    pen = Pencil.from_forms(*triple)
    try:
        det = pen.det_binary_form()
        vals = ["0" if det.evaluate([p, q]).is_zero else "x" for p, q in roots]
        sing = pen.singular_members()
        print(f"{label}: det at printed roots {' '.join(vals)}; "
              f"{len(sing)} singular members, det degree {det.degree}")
    except Exception as e:
        print(f"{label}: {type(e).__name__}: {e}")
