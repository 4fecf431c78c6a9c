"""Dev check: system-map parameter rules, symbolic vs pinned t."""

from fractions import Fraction

from quarticverify.exactfield import PolyRing, TowerSpec
from quarticverify.families import (
    SysParams,
    apply_system_map,
    recognize_sys,
    sys_build,
    system_map,
)
from quarticverify.matgroup import ProjTransform

PARAMS = ("a12", "a13", "a23", "b02", "b03", "c01")


def sym_system(with_t: bool):
    names = (("t",) if with_t else ()) + PARAMS
    spec = TowerSpec(PolyRing(names))
    t = spec.param("t") if with_t else None
    vals = {n: spec.param(n) for n in PARAMS}
    return spec, t, vals


def show(tag, rec):
    if rec is None:
        print(f"{tag}: NOT RECOGNIZED")
    else:
        print(f"{tag}: t'={rec.t!r}")
        for n in PARAMS:
            print(f"    {n}' = {getattr(rec, n)!r}")


# --- symbolic t: which rules survive? ---------------------------------------
spec, t, v = sym_system(True)
P = sys_build(SysParams(spec, t, **v))

for label in ("order3", "order3-exact", "swap-inf-t", "swap-inf-0",
              "swap-inf-t-twisted", "order4", "swap-1-t", "swap-x2-x3",
              "swap-x0-x1"):
    m = system_map(spec, label, t)
    _, rec = apply_system_map(P, m)
    show(f"symbolic-t {label}", rec)

print()

# --- t = -1 exact ------------------------------------------------------------
spec1, _, v1 = sym_system(False)
Pm1 = sys_build(SysParams(spec1, -1, **v1))
for label in ("order4", "swap-1-t", "swap-x2-x3", "swap-x0-x1", "swap-inf-0",
              "swap-inf-t", "swap-inf-t-twisted", "order3", "order3-exact"):
    m = system_map(spec1, label, spec1.rational(-1))
    _, rec = apply_system_map(Pm1, m)
    show(f"t=-1 {label}", rec)

print()

# --- t = omega = (1+sqrt(-3))/2 (t^2 - t + 1 = 0) ----------------------------
ring = PolyRing(PARAMS)
base = TowerSpec(ring)
specw = base.adjoin(base.rational(-3), "r3")
omega = (specw.one() + specw.radical("r3")) / specw.rational(2)
assert (omega * omega - omega + specw.one()).is_zero
vw = {n: specw.param(n) for n in PARAMS}
Pw = sys_build(SysParams(specw, omega, **vw))
for label in ("order3", "order3-exact", "swap-inf-t"):
    m = system_map(specw, label, omega)
    _, rec = apply_system_map(Pw, m)
    show(f"t=omega {label}", rec)

# order3-exact cube: matrix identity + three applications recover params
m = system_map(specw, "order3-exact", omega)
c3 = m.coord @ m.coord @ m.coord
print("order3-exact coord^3 is identity matrix:", c3.is_identity)
pq3 = m.pq @ m.pq @ m.pq
print("order3-exact pq^3 rows:", pq3.rows)
cur = Pw
for _ in range(3):
    cur, rec = apply_system_map(cur, m)
print("order3-exact cubed on symbolic params returns original:",
      rec == SysParams(specw, omega, **vw))

mo = system_map(specw, "order3", omega)
co3 = mo.coord @ mo.coord @ mo.coord
print("order3 coord^3 rows:", co3.matrix.rows)
cur = Pw
for _ in range(3):
    cur, rec3 = apply_system_map(cur, mo)
show("order3 cubed", rec3)

# --- round trips -------------------------------------------------------------
for label in ("swap-inf-0", "swap-inf-t", "order3-exact"):
    m = system_map(specw, label, omega)
    mid, _ = apply_system_map(Pw, m)
    back, rec = apply_system_map(mid, m.inverse())
    ok = rec == SysParams(specw, omega, **vw)
    print(f"round trip {label}: {ok}")

print("DEV MAPS DONE")
