"""Dev: re-derive the eight-member pencil from its singular-member incidences."""
from fractions import Fraction
from itertools import combinations_with_replacement

from quarticverify.exactfield import PolyRing, TowerSpec, tower_sqrt
from quarticverify.linalg import Matrix
from quarticverify.multipoly import Form, proportionality
from quarticverify.quadpencil import Pencil, QuadricForm
from quarticverify.matgroup import (ProjTransform, closure, fingerprint,
                                    semi_invariant_factor)

F = Fraction

PAIRS = list(combinations_with_replacement(range(4), 2))


def incidence_kernel(spec, roots, verts):
    zero = spec.zero()
    rows = []
    for (p, q), v in zip(roots, verts):
        vx = [spec.rational(c) if isinstance(c, (int, Fraction)) else c for c in v]
        fs = [p * p, p * q, q * q]
        for j in range(4):
            row = []
            for s in range(3):
                for (k, l) in PAIRS:
                    d = zero
                    if k == j:
                        d = d + vx[l]
                    if l == j:
                        d = d + vx[k]
                    row.append(fs[s] * d)
            rows.append(row)
    return Matrix(spec, rows).kernel_basis()


def vec_to_forms(spec, vec):
    forms = []
    for s in range(3):
        coeffs = {}
        for idx, (k, l) in enumerate(PAIRS):
            c = vec[10 * s + idx]
            if not c.is_zero:
                mono = [0, 0, 0, 0]
                mono[k] += 1
                mono[l] += 1
                coeffs[tuple(mono)] = c
        forms.append(Form(spec, 4, coeffs))
    return forms


def block_support(form):
    sup = set()
    for mono, _ in form.terms():
        for i, e in enumerate(mono):
            if e:
                sup.add(i)
    return sup


SWAP_ROWS = [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]


def swapped(form):
    """form with (x0,x1) <-> (x2,x3)."""
    return form.substitute_linear([[F(c) for c in row] for row in SWAP_ROWS])


if __name__ == "__main__":
    base = TowerSpec(PolyRing(()))
    aval, bval = F(1, 3), F(2)
    spec = base.adjoin(base.rational(aval - aval * aval), "r")
    r = spec.radical("r")
    a = spec.rational(aval)
    one, zero = spec.one(), spec.zero()
    roots = [
        (one, zero), (zero, one), (a, one), (one, one),
        (a, a - r), (a - r, one), (a, a + r), (a + r, one),
    ]
    verts = [
        (1, 0, 0, 0), (0, 0, 1, 0), (0, 1, 0, 0), (0, 0, 0, 1),
        (1, 1, 0, 0), (0, 0, 1, 1), (bval, 1, 0, 0), (0, 0, bval, 1),
    ]
    kern = incidence_kernel(spec, roots, verts)
    print("solution space dimension:", len(kern))
    flats = [vec_to_forms(spec, vec) for vec in kern]
    for fi, fs in enumerate(flats):
        print(f"vector {fi}: supports", [sorted(block_support(f)) for f in fs])
    # identify the (x0,x1)-block triple and the (x2,x3)-block triple
    ablock = next(fs for fs in flats if block_support(fs[0]) <= {0, 1})
    bblock = next(fs for fs in flats if block_support(fs[0]) <= {2, 3})
    A1, A2, A3 = ablock
    B1, B2, B3 = bblock
    # g2 = (x2:x3:x0:x1); equivariance member(p,q)∘g2 ∝ member(alpha*q, p)
    # needs Q1∘g2 = c*Q3, Q2∘g2 = c*alpha*Q2, Q3∘g2 = c*alpha^2*Q1 where
    # Q_s = A_s + mu*B_s.  In blocks:
    #   A1(x2,x3) = c*mu*B3,  mu*B1(x0,x1) = c*A3
    #   A2(x2,x3) = c*alpha*mu*B2,  mu*B2(x0,x1) = c*alpha*A2
    #   A3(x2,x3) = c*alpha^2*mu*B1, mu*B3(x0,x1) = c*alpha^2*A1
    lam1 = proportionality(swapped(A1), B3)     # = c*mu
    lam2 = proportionality(A3, swapped(B1))     # A3 = lam2 * B1(x0,x1) => c = mu/lam2... 
    lam3 = proportionality(swapped(A2), B2)     # = c*alpha*mu
    print("lam1 (A1 vs B3 swapped):", lam1)
    print("lam2 (A3 vs B1 swapped):", lam2)
    print("lam3 (A2 vs B2 swapped):", lam3)
    # mu*B1 = c*A3 = c*lam2*B1(swapped back)... consistent scalar algebra:
    # from A1 = c*mu*B3: c*mu = lam1; from mu*B1 = c*A3 with A3 = lam2*swap(B1):
    #   mu = c*lam2  =>  c = mu/lam2  =>  mu^2/lam2 = lam1  =>  mu^2 = lam1*lam2
    musq = lam1 * lam2
    print("mu^2 =", musq)
    mu = tower_sqrt(spec, musq)
    print("mu exact sqrt in tower:", mu)
    if mu is None:
        spec2 = spec.adjoin(musq, "m")
        mu = spec2.radical("m")
        emb = lambda f: f.embed(spec2)
        A1, A2, A3, B1, B2, B3 = map(emb, (A1, A2, A3, B1, B2, B3))
        spec = spec2
        a = a.embed(spec)
        r = r.embed(spec)
        one, zero = spec.one(), spec.zero()
        roots = [(p.embed(spec), q.embed(spec)) for p, q in roots]
    Q1 = A1 + B1 * mu
    Q2 = A2 + B2 * mu
    Q3 = A3 + B3 * mu
    for nm, q in (("Q1", Q1), ("Q2", Q2), ("Q3", Q3)):
        print(nm, "=", q)
    pen = Pencil.from_forms(Q1, Q2, Q3)
    det = pen.det_binary_form()
    print("det degree:", det.degree())
    ok = all(det.evaluate([p, q]).is_zero for p, q in roots)
    print("det vanishes at all 8 roots:", ok)
    print("double root count:", pen.double_root_count())
    for (p, q), v in zip(roots, verts):
        qf = pen.member(p, q)
        rk = qf.rank()
        vert = qf.vertex()
        vx = [spec.rational(c) for c in v]
        # projective match: vert ∝ vx
        piv = next(i for i, c in enumerate(vx) if not c.is_zero)
        scl = vert.coords[piv]
        match = all((vert.coords[i] - vx[i] * scl).is_zero for i in range(4))
        print(f"member rank {rk} vertex-match {match}")
    disc = pen.discriminant_quartic()
    g1 = ProjTransform.diagonal(spec, [one, one, -one, -one])
    g2 = ProjTransform.from_rows(spec, [[F(c) for c in row] for row in SWAP_ROWS])
    for nm, g in (("g1", g1), ("g2", g2)):
        print(nm, "semi-invariant factor:", semi_invariant_factor(g, disc))

# --- diagnostic: is the solution space stable under the swap map S? ---
def flatten(forms):
    vec = []
    for f in forms:
        for (k, l) in PAIRS:
            mono = [0, 0, 0, 0]
            mono[k] += 1
            mono[l] += 1
            vec.append(f.coefficient(tuple(mono)))
    return vec


def s_map(spec, forms, alpha):
    f1, f2, f3 = forms
    ia = alpha.inverse()
    return [swapped(f3) * (ia * ia), swapped(f2) * ia, swapped(f1)]


def diag_s(spec, kern, alpha):
    flats = [vec_to_forms(spec, vec) for vec in kern]
    cols = Matrix(spec, [[kern[j][i] for j in range(len(kern))]
                         for i in range(30)])
    for idx, fs in enumerate(flats):
        img = flatten(s_map(spec, fs, alpha))
        sol = cols.solve(img)
        print(f"S(k{idx}) in span:", "yes" if sol is not None else "NO",
              sol[0] if sol else "")


def check_incidences(spec, forms, roots, verts, label):
    pen = Pencil.from_forms(*forms)
    bad = []
    for i, ((p, q), v) in enumerate(zip(roots, verts)):
        m = pen.member(p, q).matrix()
        vx = [spec.rational(c) if isinstance(c, (int, Fraction)) else c
              for c in v]
        g = m.apply(vx)
        if not all(c.is_zero for c in g):
            bad.append(i + 1)
    print(f"{label}: incidence failures at pairs {bad or 'none'}")
