"""Pencils of quadrics p^2*Q1 + pq*Q2 + q^2*Q3.

Exact side: discriminant quartic, the degree-8 determinant binary form,
singular members with their vertices, and base-point transversality checks.
Numeric side: an independent floating-point oracle that actually searches
for base points (three-quadric systems) and for singular points of a
quartic surface, via resultant cascades, companion-matrix roots and Newton
refinement.
"""

from __future__ import annotations

import itertools
from typing import Sequence

import numpy as np

from .exactfield import TowerElem, TowerSpec
from .linalg import Matrix
from .multipoly import Form, binary_roots, binary_squarefree, monomials
from .projgeom import ProjPoint, QuarticSurface

__all__ = [
    "PencilError",
    "ZeroDiscriminant",
    "IdenticallyZeroDeterminant",
    "EliminationDegenerate",
    "QuadricForm",
    "Pencil",
    "SingularMember",
    "BasePointVerdict",
    "NumericResult",
    "projective_distance",
    "numeric_base_points",
    "numeric_singular_points",
]


class PencilError(ValueError):
    pass


class ZeroDiscriminant(PencilError):
    pass


class IdenticallyZeroDeterminant(PencilError):
    pass


class EliminationDegenerate(PencilError):
    pass


class QuadricForm:
    """A quadratic form in x0..x3 with its symmetric 4x4 matrix."""

    __slots__ = ("spec", "form")

    def __init__(self, form: Form):
        if form.nvars != 4:
            raise PencilError("quadrics here live in P^3")
        if not form.is_zero and form.degree != 2:
            raise PencilError("expected a quadratic form")
        self.spec = form.spec
        self.form = form

    @property
    def is_zero(self) -> bool:
        return self.form.is_zero

    def matrix(self) -> Matrix:
        spec = self.spec
        half = spec.rational(1) / spec.rational(2)
        rows = []
        for i in range(4):
            row = []
            for j in range(4):
                mono = tuple(
                    (2 if k == i else 0) if i == j else (1 if k in (i, j) else 0)
                    for k in range(4)
                )
                c = self.form.coefficient(mono)
                row.append(c if i == j else c * half)
            rows.append(row)
        return Matrix(spec, rows)

    def rank(self) -> int:
        return self.matrix().rank()

    def vertex(self) -> ProjPoint | None:
        """The singular point of a rank-3 quadric (kernel of its matrix)."""
        kernel = self.matrix().kernel_basis()
        if len(kernel) != 1:
            return None
        return ProjPoint(self.spec, kernel[0])

    def evaluate(self, point: Sequence) -> TowerElem:
        return self.form.evaluate(point)

    def __repr__(self) -> str:
        return f"Quadric<{self.form!r}>"


class SingularMember:
    """A multiple root of the determinant form with its member quadric.

    `root` is a (p, q) pair when the root lives in the tower; otherwise
    `factor` holds the opaque irreducible binary factor.
    """

    __slots__ = ("root", "factor", "multiplicity", "quadric", "rank", "vertex")

    def __init__(self, root, factor, multiplicity, quadric, rank, vertex):
        self.root = root
        self.factor = factor
        self.multiplicity = multiplicity
        self.quadric = quadric
        self.rank = rank
        self.vertex = vertex

    def __repr__(self) -> str:
        if self.root is not None:
            p, q = self.root
            head = f"({p!r}:{q!r}) x{self.multiplicity}"
        else:
            head = f"factor {self.factor!r} x{self.multiplicity}"
        return f"SingularMember<{head}, rank={self.rank}, vertex={self.vertex!r}>"


class BasePointVerdict:
    __slots__ = ("point", "on_pencil", "transversal")

    def __init__(self, point: ProjPoint, on_pencil: bool, transversal: bool):
        self.point = point
        self.on_pencil = on_pencil
        self.transversal = transversal

    def __repr__(self) -> str:
        return (
            f"BasePointVerdict<{self.point!r}, on={self.on_pencil},"
            f" transversal={self.transversal}>"
        )


class Pencil:
    """The family p^2*Q1 + pq*Q2 + q^2*Q3 of quadrics in P^3."""

    __slots__ = ("spec", "q1", "q2", "q3")

    def __init__(self, q1: QuadricForm, q2: QuadricForm, q3: QuadricForm):
        if not (q1.spec == q2.spec == q3.spec):
            raise PencilError("pencil quadrics live over different towers")
        if q1.is_zero and q2.is_zero and q3.is_zero:
            raise PencilError("all three quadrics vanish")
        self.spec = q1.spec
        self.q1 = q1
        self.q2 = q2
        self.q3 = q3

    @classmethod
    def from_forms(cls, f1: Form, f2: Form, f3: Form) -> "Pencil":
        return cls(QuadricForm(f1), QuadricForm(f2), QuadricForm(f3))

    @property
    def quadrics(self) -> tuple[QuadricForm, QuadricForm, QuadricForm]:
        return self.q1, self.q2, self.q3

    def member(self, p, q) -> QuadricForm:
        """The quadric at parameter (p:q)."""
        pe = p if isinstance(p, TowerElem) else self.spec.rational(p)
        qe = q if isinstance(q, TowerElem) else self.spec.rational(q)
        form = self.q1.form * (pe * pe) + self.q2.form * (pe * qe) + self.q3.form * (qe * qe)
        return QuadricForm(form)

    def lift(self, spec: TowerSpec) -> "Pencil":
        return Pencil(
            QuadricForm(self.q1.form.lift(spec)),
            QuadricForm(self.q2.form.lift(spec)),
            QuadricForm(self.q3.form.lift(spec)),
        )

    def specialize(self, assignment) -> "Pencil":
        return Pencil(
            QuadricForm(self.q1.form.specialize(assignment)),
            QuadricForm(self.q2.form.specialize(assignment)),
            QuadricForm(self.q3.form.specialize(assignment)),
        )

    def discriminant_quartic(self) -> QuarticSurface:
        """The quartic Q2^2 - 4*Q1*Q3 whose double cover is the threefold."""
        form = self.q2.form * self.q2.form - self.q1.form * self.q3.form * 4
        if form.is_zero:
            raise ZeroDiscriminant("discriminant Q2^2 - 4 Q1 Q3 vanishes identically")
        return QuarticSurface(form)

    def det_binary_form(self) -> Form:
        """det of M(p,q) = p^2 M1 + pq M2 + q^2 M3 as a degree-8 binary form."""
        spec = self.spec
        p2 = Form.monomial(spec, 2, (2, 0))
        pq = Form.monomial(spec, 2, (1, 1))
        q2 = Form.monomial(spec, 2, (0, 2))
        m1, m2, m3 = (q.matrix() for q in self.quadrics)
        entries = [
            [
                p2 * m1[i, j] + pq * m2[i, j] + q2 * m3[i, j]
                for j in range(4)
            ]
            for i in range(4)
        ]
        det = Form.zero(spec, 2)
        for perm in itertools.permutations(range(4)):
            sign = 1
            for i in range(4):
                for j in range(i + 1, 4):
                    if perm[i] > perm[j]:
                        sign = -sign
            term = entries[0][perm[0]] * entries[1][perm[1]]
            term = term * entries[2][perm[2]]
            term = term * entries[3][perm[3]]
            det = det + (term if sign == 1 else -term)
        if det.is_zero:
            raise IdenticallyZeroDeterminant("det M(p,q) vanishes identically")
        return det

    def singular_members(self) -> list[SingularMember]:
        """Multiple roots of the determinant form with member data.

        Roots expressible in the tower come with their member quadric, its
        rank and (when the rank is exactly 3) the vertex; irreducible
        leftover factors are reported opaquely.
        """
        det = self.det_binary_form()
        roots, leftovers = binary_roots(det)
        members = []
        for (p, q), mult in roots:
            member = self.member(p, q)
            if member.is_zero:
                members.append(SingularMember((p, q), None, mult, member, 0, None))
                continue
            rank = member.rank()
            vertex = member.vertex() if rank == 3 else None
            members.append(SingularMember((p, q), None, mult, member, rank, vertex))
        for factor, mult in leftovers:
            members.append(SingularMember(None, factor, mult, None, None, None))
        return members

    def double_root_count(self) -> int:
        """Number of (p:q) roots of D with multiplicity exactly 2.

        Opaque irreducible factors of multiplicity 2 contribute their degree
        (each of their roots is a double root of D).
        """
        total = 0
        for m in self.singular_members():
            if m.multiplicity != 2:
                continue
            total += 1 if m.root is not None else m.factor.degree
        return total

    def verify_base_points(self, points: Sequence[ProjPoint]) -> list[BasePointVerdict]:
        """Check membership on all three quadrics and Jacobian rank 3."""
        grads = [q.form.gradient() for q in self.quadrics]
        out = []
        for point in points:
            pt = point if point.spec == self.spec else point.lift(self.spec)
            on = all(q.evaluate(pt.coords).is_zero for q in self.quadrics)
            transversal = False
            if on:
                jac = Matrix(
                    self.spec,
                    [[g.evaluate(pt.coords) for g in row] for row in grads],
                )
                transversal = jac.rank() == 3
            out.append(BasePointVerdict(point, on, transversal))
        return out

    def __repr__(self) -> str:
        return f"Pencil<{self.q1.form!r}; {self.q2.form!r}; {self.q3.form!r}>"


# -- numeric oracle -----------------------------------------------------------------
#
# The exact routines above only certify supplied data.  The functions below
# do the searching: they embed coefficients into complex floats, eliminate
# variables chart by chart with resultants (evaluated on roots-of-unity
# grids and interpolated back by FFT), read roots off numpy companion
# matrices, refine with batched Newton iteration and keep solutions whose
# scale-free residuals beat the tolerance.


class NumericResult:
    """Points found by the numeric oracle plus per-chart diagnostics."""

    __slots__ = ("points", "residuals", "diagnostics")

    def __init__(self, points, residuals, diagnostics):
        self.points = points
        self.residuals = residuals
        self.diagnostics = diagnostics

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __repr__(self) -> str:
        return f"NumericResult<{len(self.points)} points, diagnostics={self.diagnostics!r}>"


def _coeff_array(poly: dict[tuple[int, ...], complex], nvars: int) -> np.ndarray:
    shape = tuple(max((m[i] for m in poly), default=0) + 1 for i in range(nvars))
    arr = np.zeros(shape, dtype=complex)
    for m, c in poly.items():
        arr[m] = c
    return arr


def _dehomogenize(form: Form, chart: int, values=None) -> dict[tuple[int, ...], complex]:
    """Numeric coefficients of F with x_chart = 1, in the remaining variables."""
    keep = [i for i in range(form.nvars) if i != chart]
    out: dict[tuple[int, ...], complex] = {}
    for m, c in form.embed_coeffs(values).items():
        key = tuple(m[i] for i in keep)
        out[key] = out.get(key, 0j) + c
    return out


def _rotate_poly(arr: np.ndarray, rot: np.ndarray) -> np.ndarray:
    """Coefficients of P(rot @ y) for a trivariate coefficient array."""
    n = _true_total_degree(arr) + 1
    lin = [
        {(1 if k == 0 else 0, 1 if k == 1 else 0, 1 if k == 2 else 0): rot[i, k] for k in range(3)}
        for i in range(3)
    ]

    def mul(a: dict, b: dict) -> dict:
        out: dict[tuple[int, int, int], complex] = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                key = (ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2])
                out[key] = out.get(key, 0j) + ca * cb
        return out

    powers: list[dict[int, dict]] = [{0: {(0, 0, 0): 1.0 + 0j}} for _ in range(3)]
    for i in range(3):
        cache = powers[i]
        for e in range(1, arr.shape[i]):
            cache[e] = mul(cache[e - 1], lin[i])
    total: dict[tuple[int, int, int], complex] = {}
    it = np.nditer(arr, flags=["multi_index"])
    for value in it:
        c = complex(value)
        if c == 0:
            continue
        e0, e1, e2 = it.multi_index
        term = {(0, 0, 0): c}
        for i, e in enumerate((e0, e1, e2)):
            if e:
                term = mul(term, powers[i][e])
        for m, v in term.items():
            total[m] = total.get(m, 0j) + v
    out = np.zeros((n, n, n), dtype=complex)
    for m, v in total.items():
        out[m] += v
    return out


def _normalize(arr: np.ndarray) -> np.ndarray:
    peak = np.max(np.abs(arr))
    return arr if peak == 0 else arr / peak


def _trim1d(vec: np.ndarray, rel: float = 1e-8) -> np.ndarray:
    peak = np.max(np.abs(vec)) if vec.size else 0.0
    if peak == 0:
        return vec[:1] * 0
    keep = np.nonzero(np.abs(vec) > rel * peak)[0]
    return vec[: keep[-1] + 1] if keep.size else vec[:1] * 0


def _true_total_degree(arr: np.ndarray, rel: float = 1e-12) -> int:
    peak = np.max(np.abs(arr))
    if peak == 0:
        return 0
    idx = np.argwhere(np.abs(arr) > rel * peak)
    return int(idx.sum(axis=1).max()) if idx.size else 0


def _poly3_wcoeffs(arr: np.ndarray) -> list[np.ndarray]:
    """Split a trivariate array P(u,v,w) into w-coefficient bivariate arrays."""
    coeffs = [arr[:, :, k] for k in range(arr.shape[2])]
    while len(coeffs) > 1 and np.max(np.abs(coeffs[-1])) <= 1e-8 * max(
        np.max(np.abs(arr)), 1e-300
    ):
        coeffs.pop()
    return coeffs


def _sylvester(rows_a: list, rows_b: list):
    """Sylvester matrix layout for polys with coefficient entries (any algebra)."""
    m, n = len(rows_a) - 1, len(rows_b) - 1
    if m < 1 or n < 1:
        return None
    size = m + n
    grid = [[None] * size for _ in range(size)]
    for s in range(n):
        for k, c in enumerate(rows_a):
            grid[s][s + (m - k)] = c
    for s in range(m):
        for k, c in enumerate(rows_b):
            grid[n + s][s + (n - k)] = c
    return grid


def _grid_resultant_w(pa: np.ndarray, pb: np.ndarray) -> np.ndarray | None:
    """Res_w of two trivariate coefficient arrays, as a bivariate array.

    Evaluated on a roots-of-unity grid large enough for the degree bound and
    interpolated back with a 2-D inverse FFT.
    """
    ca = _poly3_wcoeffs(pa)
    cb = _poly3_wcoeffs(pb)
    if len(ca) == 1 or len(cb) == 1:
        return None
    grid = _sylvester(ca, cb)
    size = len(grid)
    dega = max(_true_total_degree(c) for c in ca)
    degb = max(_true_total_degree(c) for c in cb)
    bound = (len(cb) - 1) * dega + (len(ca) - 1) * degb
    n = 1
    while n < bound + 1:
        n *= 2
    pts = np.exp(2j * np.pi * np.arange(n) / n)
    stacked = np.zeros((n, n, size, size), dtype=complex)
    for i in range(size):
        for j in range(size):
            c = grid[i][j]
            if c is None:
                continue
            vu = pts[:, None] ** np.arange(c.shape[0])[None, :]
            vv = pts[:, None] ** np.arange(c.shape[1])[None, :]
            stacked[:, :, i, j] = np.einsum("ua,ab,vb->uv", vu, c, vv)
    dets = np.linalg.det(stacked.reshape(n * n, size, size)).reshape(n, n)
    vscale = np.max(np.abs(dets))
    # Samples sit at positive-exponent roots of unity, so the forward FFT
    # over n^2 recovers the coefficients.
    coeffs = np.fft.fft2(dets) / (n * n)
    # The determinant values can dwarf the coefficients, so interpolation
    # noise is judged against the value scale, and everything beyond the
    # a-priori degree bound is aliasing junk by construction.
    if vscale == 0 or np.max(np.abs(coeffs)) <= 1e-8 * vscale:
        return None
    coeffs = coeffs[: min(bound, n - 1) + 1, : min(bound, n - 1) + 1].copy()
    a_idx, b_idx = np.indices(coeffs.shape)
    coeffs[a_idx + b_idx > bound] = 0
    peak = np.max(np.abs(coeffs))
    if peak == 0:
        return None
    coeffs[np.abs(coeffs) < 1e-8 * peak] = 0
    return coeffs


def _poly2_vcoeffs(arr: np.ndarray) -> list[np.ndarray]:
    peak = np.max(np.abs(arr))
    coeffs = [arr[:, k] for k in range(arr.shape[1])]
    while len(coeffs) > 1 and np.max(np.abs(coeffs[-1])) <= 1e-8 * max(peak, 1e-300):
        coeffs.pop()
    return [_trim1d(c) for c in coeffs]


def _grid_resultant_v(pa: np.ndarray, pb: np.ndarray) -> np.ndarray | None:
    """Res_v of two bivariate arrays as a univariate coefficient vector in u."""
    ca = _poly2_vcoeffs(pa)
    cb = _poly2_vcoeffs(pb)
    if len(ca) == 1 or len(cb) == 1:
        return None
    grid = _sylvester(ca, cb)
    size = len(grid)
    dega = max(c.shape[0] - 1 for c in ca)
    degb = max(c.shape[0] - 1 for c in cb)
    bound = (len(cb) - 1) * dega + (len(ca) - 1) * degb
    n = 1
    while n < bound + 1:
        n *= 2
    pts = np.exp(2j * np.pi * np.arange(n) / n)
    stacked = np.zeros((n, size, size), dtype=complex)
    for i in range(size):
        for j in range(size):
            c = grid[i][j]
            if c is None:
                continue
            vu = pts[:, None] ** np.arange(c.shape[0])[None, :]
            stacked[:, i, j] = vu @ c
    dets = np.linalg.det(stacked)
    vscale = np.max(np.abs(dets))
    coeffs = np.fft.fft(dets) / n
    if vscale == 0 or np.max(np.abs(coeffs)) <= 1e-8 * vscale:
        return None
    coeffs = coeffs[: min(bound, n - 1) + 1]
    return _trim1d(coeffs)


def _roots_u(vec: np.ndarray) -> np.ndarray:
    vec = _trim1d(vec)
    if vec.shape[0] <= 1:
        return np.zeros(0, dtype=complex)
    return np.roots(vec[::-1])


def _eval2(arr: np.ndarray, u: complex) -> np.ndarray:
    return (u ** np.arange(arr.shape[0])) @ arr


def _eval3_w(arr: np.ndarray, u: complex, v: complex) -> np.ndarray:
    vu = u ** np.arange(arr.shape[0])
    vv = v ** np.arange(arr.shape[1])
    return np.einsum("a,abk,b->k", vu, arr, vv)


def _batched_eval(arr: np.ndarray, pts: np.ndarray) -> np.ndarray:
    """Evaluate a trivariate coefficient array on an (n,3) point batch."""
    n = pts.shape[0]
    pu = pts[:, 0:1] ** np.arange(arr.shape[0])[None, :]
    pv = pts[:, 1:2] ** np.arange(arr.shape[1])[None, :]
    pw = pts[:, 2:3] ** np.arange(arr.shape[2])[None, :]
    return np.einsum("na,nb,nc,abc->n", pu, pv, pw, arr)


def _derivative(arr: np.ndarray, axis: int) -> np.ndarray:
    k = arr.shape[axis]
    if k <= 1:
        return np.zeros_like(arr.take(indices=[0], axis=axis))
    sl = [slice(None)] * arr.ndim
    sl[axis] = slice(1, None)
    scaled = arr[tuple(sl)] * np.arange(1, k).reshape(
        tuple(k - 1 if a == axis else 1 for a in range(arr.ndim))
    )
    return scaled


def _newton_refine(
    polys: list[np.ndarray], pts: np.ndarray, iters: int = 40
) -> tuple[np.ndarray, np.ndarray]:
    """Newton-refine a candidate batch; also returns normalized Jacobian dets.

    The second array holds |det J| scaled by the product of the *coefficient*
    scales of the Jacobian rows (with a max(1,|y|)^deg growth factor), so its
    noise floor stays near machine epsilon.  A solution on a
    positive-dimensional component has exactly-dependent Jacobian rows and
    shows up as a near-zero there; normalizing by the row norms instead would
    amplify evaluation noise once the rows themselves are tiny.
    """
    jac = [[_derivative(p, a) for a in range(3)] for p in polys]
    jscale = [
        [
            (float(np.max(np.abs(jac[i][a]))), _true_total_degree(jac[i][a]))
            if jac[i][a].size
            else (0.0, 0)
            for a in range(3)
        ]
        for i in range(3)
    ]
    cur = pts.copy()
    jnorm = np.zeros(len(pts))
    for _ in range(iters):
        fvals = np.stack([_batched_eval(p, cur) for p in polys], axis=1)
        jvals = np.stack(
            [np.stack([_batched_eval(jac[i][a], cur) for a in range(3)], axis=1) for i in range(3)],
            axis=1,
        )
        dets = np.linalg.det(jvals)
        ym = np.maximum(1.0, np.max(np.abs(cur), axis=1))
        scale = np.ones(len(cur))
        for i in range(3):
            rowscale = np.zeros(len(cur))
            for c, d in jscale[i]:
                if c > 0.0:
                    rowscale = np.maximum(rowscale, c * ym ** max(d, 0))
            scale = scale * np.maximum(rowscale, 1e-300)
        jnorm = np.abs(dets) / scale
        bad = np.abs(dets) < 1e-300
        if np.any(bad):
            jvals[bad] = np.eye(3)
            fvals[bad] = 0
        step = np.linalg.solve(jvals, fvals[:, :, None])[:, :, 0]
        cur = cur - step
        if np.max(np.abs(step)) < 1e-15:
            break
    return cur, jnorm


def _solve_chart(
    polys: list[np.ndarray], diagnostics: list[str], tag: str
) -> tuple[np.ndarray, np.ndarray]:
    """Solve three trivariate polynomial equations.

    Returns an (n,3) refined batch plus the normalized Jacobian determinant
    per solution (near-zero = non-isolated).
    """
    order = sorted(range(3), key=lambda i: len(_poly3_wcoeffs(polys[i])), reverse=True)
    base = polys[order[0]]
    r1 = _grid_resultant_w(base, polys[order[1]])
    r2 = _grid_resultant_w(base, polys[order[2]])
    if r1 is None or r2 is None:
        diagnostics.append(f"{tag}: w-elimination degenerated (resultant vanished)")
        return np.zeros((0, 3), dtype=complex), np.zeros(0)
    ru = _grid_resultant_v(r1, r2)
    if ru is None:
        diagnostics.append(f"{tag}: v-elimination degenerated (resultant vanished)")
        return np.zeros((0, 3), dtype=complex), np.zeros(0)
    candidates = []
    wpolys = [base, polys[order[1]], polys[order[2]]]
    for u in _roots_u(ru):
        vroots = np.concatenate(
            [_roots_u(_trim1d(_eval2(r1, u))), _roots_u(_trim1d(_eval2(r2, u)))]
        )
        for v in vroots:
            # Union the w-candidates of all three equations: losing a root
            # here loses a solution, while junk candidates are cheap (the
            # residual filter removes them after Newton).
            for wp in wpolys:
                for w in _roots_u(_trim1d(_eval3_w(wp, u, v))):
                    candidates.append((u, v, w))
    if not candidates:
        diagnostics.append(f"{tag}: no candidate roots survived elimination")
        return np.zeros((0, 3), dtype=complex), np.zeros(0)
    pts = np.array(candidates, dtype=complex)
    # Collapse near-duplicates before Newton to keep the batch small.
    rounded = np.round(pts, 6)
    _, idx = np.unique(rounded, axis=0, return_index=True)
    pts = pts[np.sort(idx)]
    return _newton_refine(polys, pts)


def _canonical_projective(vec: np.ndarray) -> np.ndarray:
    k = int(np.argmax(np.abs(vec)))
    return vec / vec[k]


def projective_distance(a: np.ndarray, b: np.ndarray) -> float:
    """Sine of the angle between the lines spanned by a and b."""
    na = np.linalg.norm(a)
    nb = np.linalg.norm(b)
    c = abs(np.vdot(a, b)) / (na * nb)
    return float(np.sqrt(max(0.0, 1.0 - min(c, 1.0) ** 2)))


def _dedup_projective(vecs: list[np.ndarray], tol: float) -> list[np.ndarray]:
    out: list[np.ndarray] = []
    for v in vecs:
        if all(projective_distance(v, w) > tol for w in out):
            out.append(_canonical_projective(v))
    return out


def _scalefree_residual(coeff_dicts, vec: np.ndarray) -> float:
    worst = 0.0
    scale = np.max(np.abs(vec))
    unit = vec / scale
    for poly in coeff_dicts:
        peak = max(abs(c) for c in poly.values())
        total = 0j
        for m, c in poly.items():
            term = c
            for x, e in zip(unit, m):
                if e:
                    term *= x**e
            total += term
        worst = max(worst, abs(total) / peak)
    return worst


def _seeded_rotation(n: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    while True:
        mat = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        if abs(np.linalg.det(mat)) > 1e-3:
            return mat


def numeric_base_points(
    pencil: Pencil,
    values=None,
    residual_tol: float = 1e-9,
    dedup_tol: float = 1e-6,
    seed: int = 1,
) -> NumericResult:
    """Search for the common zeros of Q1, Q2, Q3 in complex floats.

    Charts x3=1, x2=1, x1=1, x0=1 are all processed (a point is found in
    every chart where its coordinate is nonzero) and the union is
    deduplicated projectively.  Each chart works in seeded randomly rotated
    affine coordinates so that sparse systems still eliminate generically.
    Raises EliminationDegenerate only if every chart collapses.
    """
    forms = [q.form for q in pencil.quadrics]
    homog = [f.embed_coeffs(values) for f in forms]
    diagnostics: list[str] = []
    found: list[np.ndarray] = []
    ok_charts = 0
    for chart in (3, 2, 1, 0):
        tag = f"chart x{chart}=1"
        rot = _seeded_rotation(3, seed + chart)
        polys = []
        for f in forms:
            arr = _coeff_array(_dehomogenize(f, chart, values), 3)
            polys.append(_normalize(_rotate_poly(arr, rot)))
        before = len(diagnostics)
        sols, jnorms = _solve_chart(polys, diagnostics, tag)
        if len(diagnostics) == before:
            ok_charts += 1
        nonisolated = 0
        for y, jn in zip(sols, jnorms):
            affine = rot @ y
            vec = np.zeros(4, dtype=complex)
            keep = [i for i in range(4) if i != chart]
            for pos, i in enumerate(keep):
                vec[i] = affine[pos]
            vec[chart] = 1.0
            if not np.all(np.isfinite(vec)):
                continue
            if _scalefree_residual(homog, vec) < residual_tol:
                if jn < 1e-12:
                    nonisolated += 1
                    continue
                found.append(vec)
        if nonisolated:
            diagnostics.append(
                f"{tag}: {nonisolated} non-isolated solutions excluded"
                " (positive-dimensional intersection?)"
            )
    if ok_charts == 0 and not found:
        if diagnostics:
            return NumericResult([], [], diagnostics)
        raise EliminationDegenerate("every chart failed to eliminate")
    points = _dedup_projective(found, dedup_tol)
    residuals = [_scalefree_residual(homog, v) for v in points]
    return NumericResult([tuple(v) for v in points], residuals, diagnostics)


def numeric_singular_points(
    surface: QuarticSurface,
    values=None,
    residual_tol: float = 1e-9,
    dedup_tol: float = 1e-6,
    seed: int = 1,
) -> NumericResult:
    """Search for the singular points of a quartic surface numerically.

    Works in a seeded random projective frame (so no singular point hides
    at infinity), eliminates the gradient system by resultants in the
    chart y3=1, Newton-refines, and keeps points whose scale-free residual
    on all four original partials beats the tolerance.
    """
    grads = [surface.form.partial(i) for i in range(4)]
    homog = [g.embed_coeffs(values) for g in grads]
    rot4 = _seeded_rotation(4, seed)
    # Coefficient arrays of the composed partials g_i(R y), dehomogenized at y3=1.
    diagnostics: list[str] = []
    found: list[np.ndarray] = []
    composed = []
    for g in grads:
        arr4 = _compose4(_coeff_array(g.embed_coeffs(values), 4), rot4)
        composed.append(_normalize(arr4.sum(axis=3)))
    for drop in range(4):
        # Each three-of-four gradient subsystem contains every singular
        # point; the union over drops makes up for roots an individual
        # cascade loses to conditioning.
        polys = [composed[i] for i in range(4) if i != drop]
        sols, jnorms = _solve_chart(polys, diagnostics, f"frame drop g{drop}")
        nonisolated = 0
        for y, jn in zip(sols, jnorms):
            vec = rot4 @ np.array([y[0], y[1], y[2], 1.0 + 0j])
            if not np.all(np.isfinite(vec)):
                continue
            if _scalefree_residual(homog, vec) < residual_tol:
                if jn < 1e-12:
                    # A node can present a singular 3-of-4 subsystem for one
                    # drop yet a regular one for another; the union over
                    # drops recovers it, so per-drop exclusion is safe.
                    nonisolated += 1
                    continue
                found.append(vec)
        if nonisolated:
            diagnostics.append(
                f"frame drop g{drop}: {nonisolated} non-isolated solutions excluded"
                " (positive-dimensional singular locus?)"
            )
    if not found and diagnostics:
        return NumericResult([], [], diagnostics)
    points = _dedup_projective(found, dedup_tol)
    residuals = [_scalefree_residual(homog, v) for v in points]
    return NumericResult([tuple(v) for v in points], residuals, diagnostics)


def _compose4(arr: np.ndarray, rot: np.ndarray) -> np.ndarray:
    """Coefficients of P(rot @ y) for a 4-variable coefficient array."""
    lin = [{tuple(1 if k == a else 0 for a in range(4)): rot[i, k] for k in range(4)} for i in range(4)]

    def mul(a: dict, b: dict) -> dict:
        out: dict[tuple[int, ...], complex] = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                key = tuple(x + y for x, y in zip(ma, mb))
                out[key] = out.get(key, 0j) + ca * cb
        return out

    powers: list[dict[int, dict]] = [{0: {(0, 0, 0, 0): 1.0 + 0j}} for _ in range(4)]
    for i in range(4):
        for e in range(1, arr.shape[i]):
            powers[i][e] = mul(powers[i][e - 1], lin[i])
    total: dict[tuple[int, ...], complex] = {}
    it = np.nditer(arr, flags=["multi_index"])
    for value in it:
        c = complex(value)
        if c == 0:
            continue
        term = {(0, 0, 0, 0): c}
        for i, e in enumerate(it.multi_index):
            if e:
                term = mul(term, powers[i][e])
        for m, v in term.items():
            total[m] = total.get(m, 0j) + v
    n = _true_total_degree(arr) + 1
    out = np.zeros((n, n, n, n), dtype=complex)
    for m, v in total.items():
        out[m] += v
    return out
