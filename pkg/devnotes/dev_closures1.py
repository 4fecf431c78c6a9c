"""Dev: normal-form pencil with zero parameters -- groups at generic/special t."""
import time
from fractions import Fraction

from quarticverify.exactfield import PolyRing, TowerSpec, tower_sqrt
from quarticverify.families import SysParams, sys_build, system_map
from quarticverify.matgroup import (
    ProjTransform, closure, fingerprint, orbits_on_points, semi_invariant_factor,
)
from quarticverify.projgeom import ProjPoint

F = Fraction


def adjoin_sqrt(spec, elem, name):
    root = tower_sqrt(elem)
    if root is not None:
        return spec, root
    ext = spec.adjoin(elem, name)
    return ext, ext.radical(name)


def pr8_pieces(base, t):
    """(spec, pencil, gens dict) for the zero-parameter system at t over base."""
    spec, alpha = adjoin_sqrt(base, -t, "alpha")
    t = t.lift(spec) if t.spec != spec else t
    spec2, beta = adjoin_sqrt(spec, t - spec.one(), "beta")
    if spec2 != spec:
        t, alpha = t.lift(spec2), alpha.lift(spec2)
    spec = spec2
    params = SysParams(spec, t)
    pencil = sys_build(params)
    gens = {
        "sign1": ProjTransform.diagonal(spec, (1, -1, 1, 1)),
        "sign2": ProjTransform.diagonal(spec, (1, 1, -1, 1)),
        "sign3": ProjTransform.diagonal(spec, (1, 1, 1, -1)),
        "swap-inf-0": system_map(spec, "swap-inf-0", t).coord,
        "swap-inf-t-twisted": system_map(spec, "swap-inf-t-twisted", t).coord,
        "extra": ProjTransform.from_rows(spec, [
            [F(1,2), alpha/2, -beta/2, alpha*beta/2],
            [(alpha*2).inverse(), F(1,2), beta/(alpha*2), -beta/2],
            [(beta*2).inverse(), -alpha/(beta*2), F(-1,2), -alpha/2],
            [(alpha*beta*2).inverse(), -(beta*2).inverse(), (alpha*2).inverse(), F(1,2)],
        ]),
    }
    return spec, pencil, gens


# --- symbolic t: semi-invariance of every generator on the discriminant -----
base = TowerSpec(PolyRing(("t",)))
t = base.param("t")
t0 = time.time()
spec, pencil, gens = pr8_pieces(base, t)
disc = pencil.discriminant_quartic().form
for name, g in gens.items():
    lam = semi_invariant_factor(g, disc)
    print(f"symbolic t: {name} semi-invariant factor:", None if lam is None else lam)
    assert lam is not None, name
print(f"symbolic semi-invariance: {time.time()-t0:.1f}s")

# --- base points are (+-alpha*beta : +-beta : +-alpha : 1) -------------------
al, be = spec.radical("alpha"), spec.radical("beta")
for s0 in (1, -1):
    for s1 in (1, -1):
        for s2 in (1, -1):
            pt = [al*be*s0, be*s1, al*s2, spec.one()]
            assert all(q.evaluate(pt).is_zero for q in pencil.quadrics)
print("symbolic base points confirmed: (±αβ : ±β : ±α : 1)")


def run_case(label, base, tval, expect, extra_maps=()):
    t0 = time.time()
    spec, pencil, gens = pr8_pieces(base, tval)
    tl = tval.lift(spec) if tval.spec != spec else tval
    for name in extra_maps:
        gens[name] = system_map(spec, name, tl).coord
    grp = closure(list(gens.values()), cap=1024)
    fp = fingerprint(grp)
    dt = time.time() - t0
    print(f"{label}: order={fp.order} hist={fp.element_order_histogram} "
          f"abelian={fp.abelian} center={fp.center_order} derived={fp.derived_order} "
          f"({dt:.1f}s)")
    assert fp.order == expect, (label, fp.order)
    return fp

rat = TowerSpec(PolyRing(()))
fp3 = run_case("t=3", rat, rat.rational(3), 96)
fpm1 = run_case("t=-1", rat, rat.rational(-1), 192, ("order4",))

w_base = TowerSpec(PolyRing(())).adjoin(TowerSpec(PolyRing(())).rational(-3), "r3")
omega = (w_base.rational(1) + w_base.radical("r3")) / 2
assert (omega*omega - omega + w_base.one()).is_zero
fpw = run_case("t=omega", w_base, omega, 288, ("order3-exact",))
