"""Dev: build every catalog family and check every claim."""
import time

from quarticverify.exactfield import PolyRing, TowerSpec
from quarticverify.families import (
    FAMILY_KEYS,
    build_family,
    check_claim,
    paper_comparison,
)

t0 = time.time()
failures = []
for key in FAMILY_KEYS:
    t1 = time.time()
    fam = build_family(key)
    print(f"[{time.time()-t0:7.1f}s] {key}: built ({time.time()-t1:.1f}s),"
          f" {len(fam.expected)} claims")
    for claim in fam.expected:
        t2 = time.time()
        out = check_claim(fam, claim)
        dt = time.time() - t2
        flag = "  " if out.ok else ("sk" if out.status == "skip" else "!!")
        print(f"  {flag} [{dt:6.1f}s] {claim.kind}: {out.detail[:100]}")
        if out.status == "fail":
            failures.append((key, claim.kind, out.detail))

print(f"\n[{time.time()-t0:7.1f}s] symbolic pr10 / pr11 instances")
ring_uv = TowerSpec(PolyRing(("u", "v")))
fam = build_family("pr10", {"a23": ring_uv.param("u"), "c01": ring_uv.param("v")})
for claim in fam.expected:
    t2 = time.time()
    out = check_claim(fam, claim)
    print(f"  {'  ' if out.ok else '!!'} [{time.time()-t2:6.1f}s]"
          f" pr10-sym {claim.kind}: {out.detail[:90]}")
    if out.status == "fail":
        failures.append(("pr10-sym", claim.kind, out.detail))
ring_u = TowerSpec(PolyRing(("u",)))
fam = build_family("pr11", {"a": ring_u.param("u")})
for claim in fam.expected:
    t2 = time.time()
    out = check_claim(fam, claim)
    print(f"  {'  ' if out.ok else '!!'} [{time.time()-t2:6.1f}s]"
          f" pr11-sym {claim.kind}: {out.detail[:90]}")
    if out.status == "fail":
        failures.append(("pr11-sym", claim.kind, out.detail))

print(f"\n[{time.time()-t0:7.1f}s] paper comparisons")
for key in ("eq4", "eq5", "pr5", "pr10", "pr13", "pr14", "sec11"):
    t2 = time.time()
    res = paper_comparison(key)
    print(f"  [{time.time()-t2:6.1f}s] {key}: {res['status']}")

print(f"\n[{time.time()-t0:7.1f}s] total; {len(failures)} failures")
for key, kind, detail in failures:
    print(f"  FAIL {key} {kind}: {detail}")
