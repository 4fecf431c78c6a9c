"""Dev check: coefficient-space re-derivations for the printed quartic families."""
from fractions import Fraction

from quarticverify.exactfield import PolyRing, TowerSpec
from quarticverify.families import (
    solve_singularity_constraints,
    symmetric_quartic_basis,
)
from quarticverify.multipoly import power_sum_basis, power_sum_quartic
from quarticverify.projgeom import (
    ProjPlane,
    ProjPoint,
    QuarticSurface,
    is_node,
    trope_check,
)

spec = TowerSpec(PolyRing(()))
F = Fraction

# --- power-sum family singular at (0:0:0:1) ---------------------------------
basis = power_sum_basis(spec)
sol = solve_singularity_constraints(basis, [ProjPoint(spec, (0, 0, 0, 1))])
print("case A dim:", sol.dim)
assert sol.dim == 2
assert sol.contains((1, -2, 1, 0))
assert sol.contains((0, 2, -3, 1))
# particular normalized: c0 = 1 and lies on the printed line a=-2+2A, b=1-3A
p = sol.particular
assert p is not None and p[0].as_rational() == 1
A = p[3].as_rational()
assert p[1].as_rational() == -2 + 2 * A and p[2].as_rational() == 1 - 3 * A
assert len(sol.kernel) == 1
kv = [c.as_rational() for c in sol.kernel[0]]
scale = kv[3]
assert scale != 0 and [v / scale for v in kv] == [0, 2, -3, 1]
print("case A (singular at (0:0:0:1)): exact line a=-2+2A, b=1-3A, kernel ~ (0,2,-3,1)")

# --- power-sum family singular at (1:1:0:0) ----------------------------------
sol2 = solve_singularity_constraints(basis, [ProjPoint(spec, (1, 1, 0, 0))])
print("case B dim:", sol2.dim)
assert sol2.dim == 2
# derived line: a = -2+8c, b = 1/2-6c
assert sol2.contains((1, -2, F(1, 2), 0))
assert sol2.contains((0, 8, -6, 1))
p2 = sol2.particular
A2 = p2[3].as_rational()
assert p2[0].as_rational() == 1
assert p2[1].as_rational() == -2 + 8 * A2 and p2[2].as_rational() == F(1, 2) - 6 * A2
# printed coefficients (1, -1, 1/4, 0) are NOT in the space
assert not sol2.contains((1, -1, F(1, 4), 0))
# and indeed the printed form does not even vanish at the point
printed = power_sum_quartic(spec, (1, -1, F(1, 4), 0))
val = printed.evaluate([spec.one(), spec.one(), spec.zero(), spec.zero()])
print("case B: derived a=-2+8c, b=1/2-6c; printed (1,-1,1/4,0) excluded, F(1,1,0,0) =", val.as_rational())

# --- permutation-symmetric family singular at (1/2:1/2:0:1) with trope -------
sbasis = symmetric_quartic_basis(spec)
pt = ProjPoint(spec, (F(1, 2), F(1, 2), 0, 1))
plane = ProjPlane(spec, (1, F(-1, 3), F(-1, 3), F(-1, 3)))
sol3 = solve_singularity_constraints(sbasis, [pt], [plane])
print("case C dim:", sol3.dim)
assert sol3.dim == 2
# printed relations: e=-5b-7d, c=(-59b-37d)/36, a=(-29b+5d)/72 at (b,d)=(1,0),(0,1)
v10 = (F(-29, 72), 1, F(-59, 36), 0, -5)
v01 = (F(5, 72), 0, F(-37, 36), 1, -7)
assert sol3.contains(v10)
assert sol3.contains(v01)
print("case C: printed relations hold; trope added no conditions")

# same solve without the trope must already give the same space
sol3b = solve_singularity_constraints(sbasis, [pt])
assert sol3b.dim == 2 and sol3b.contains(v10) and sol3b.contains(v01)

# node certification + trope check at (b,d)=(1,0)
fm = Form = None
f10 = None
coeffs = v10
total = None
for c, b in zip(coeffs, sbasis):
    term = b * spec.rational(F(c)) if not hasattr(c, "coeffs") else b * c
    total = term if total is None else total + term
surf = QuarticSurface(total)
verdict = is_node(surf, pt)
print("case C node verdict at (b,d)=(1,0):", verdict.kind)
assert verdict.is_node
conic = trope_check(surf, plane)
print("case C trope:", "double conic found" if conic is not None else "NO trope")
assert conic is not None
print("all constraint-solver dev checks passed")
