"""Catalog of explicit nodal-quartic families and their normal forms.

This module holds the concrete data the verifier operates on:

* the three-quadric normal form ``Sys(t; a12, a13, a23, b02, b03, c01)``
  whose discriminant quartic has singular pencil members exactly at
  (1:0), (0:1), (1:1) and (t:1), plus a recognizer that pattern-matches a
  pencil back onto that shape;
* the transformation maps between such systems (a (p:q) substitution paired
  with a coordinate change), with the parameter rules they induce;
* power-sum and symmetric quartic bases, and a linear solver for
  "singular at these points, double conic on these planes" constraints;
* the exponent-complement Cremona transformation on quartics of
  per-variable degree at most two;
* diagonal-weight monomial selection and the twisted-cubic singularity
  machinery;
* ``build_family``: named fixtures bundling a payload (quartic or pencil)
  with the claims expected to hold for it.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Mapping, Sequence

from .exactfield import (
    PolyRing,
    TowerElem,
    TowerSpec,
    extend_ring,
    specialization_plan,
    tower_sqrt,
)
from .linalg import Matrix, SingularMatrix
from .matgroup import (
    ProjTransform,
    closure,
    fingerprint,
    orbits_on_points,
    semi_invariant_factor,
)
from .multipoly import (
    Form,
    monomials,
    power_sum,
    power_sum_basis,
    power_sum_quartic,
    proportionality,
)
from .projgeom import ProjPlane, ProjPoint, QuarticSurface, is_node, trope_check
from .quadpencil import Pencil, numeric_base_points, numeric_singular_points

__all__ = [
    "FamilyError",
    "DegenerateT",
    "UnknownFamily",
    "ConstraintViolated",
    "DegreeTooHighInVariable",
    "NonlinearTropeCondition",
    "SysParams",
    "sys_build",
    "recognize_sys",
    "SystemMap",
    "system_map",
    "SYSTEM_MAP_LABELS",
    "apply_system_map",
    "power_sum",
    "power_sum_basis",
    "power_sum_quartic",
    "symmetric_quartic_basis",
    "ConstraintSolution",
    "solve_singularity_constraints",
    "cremona_quartic",
    "weight_monomials",
    "vanish_on_twisted_cubic",
    "twisted_cubic_singular_space",
    "adjoin_sqrt",
    "Claim",
    "FamilySpec",
    "build_family",
    "check_claim",
    "CheckOutcome",
    "paper_comparison",
    "FAMILY_KEYS",
]


class FamilyError(ValueError):
    """Base error for catalog construction problems."""


class DegenerateT(FamilyError):
    """The pencil parameter t collides with 0 or 1, merging singular members."""


class UnknownFamily(FamilyError):
    """No catalog entry under the requested key."""


class ConstraintViolated(FamilyError):
    """A family parameter violates a declared constraint."""

    def __init__(self, constraint: str):
        super().__init__(f"constraint violated: {constraint}")
        self.constraint = constraint


class DegreeTooHighInVariable(FamilyError):
    """The Cremona substitution needs per-variable degree at most two."""

    def __init__(self, variable: str):
        super().__init__(f"degree exceeds 2 in {variable}")
        self.variable = variable


class NonlinearTropeCondition(FamilyError):
    """A double-conic condition did not reduce to linear coefficient data."""


def _as_tower(spec: TowerSpec, value) -> TowerElem:
    if isinstance(value, TowerElem):
        if value.spec != spec:
            return value.lift(spec)
        return value
    return spec.rational(value)


# ---------------------------------------------------------------------------
# The Sys(t; ...) normal form
# ---------------------------------------------------------------------------


class SysParams:
    """Parameters (t; a12, a13, a23, b02, b03, c01) of the pencil normal form.

    The four singular members of the associated pencil sit at (1:0), (0:1),
    (1:1) and (t:1); t must avoid 0 and 1 so that they stay distinct.
    """

    __slots__ = ("spec", "t", "a12", "a13", "a23", "b02", "b03", "c01")

    def __init__(self, spec: TowerSpec, t, a12=0, a13=0, a23=0, b02=0, b03=0, c01=0):
        t = _as_tower(spec, t)
        if t.is_zero or (t - spec.one()).is_zero:
            raise DegenerateT("t must avoid 0 and 1")
        self.spec = spec
        self.t = t
        self.a12 = _as_tower(spec, a12)
        self.a13 = _as_tower(spec, a13)
        self.a23 = _as_tower(spec, a23)
        self.b02 = _as_tower(spec, b02)
        self.b03 = _as_tower(spec, b03)
        self.c01 = _as_tower(spec, c01)

    def as_tuple(self) -> tuple[TowerElem, ...]:
        return (self.t, self.a12, self.a13, self.a23, self.b02, self.b03, self.c01)

    def _key(self):
        return (self.spec, self.as_tuple())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SysParams):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        t, a12, a13, a23, b02, b03, c01 = self.as_tuple()
        return (
            f"Sys(t={t!r}; a12={a12!r}, a13={a13!r}, a23={a23!r}, "
            f"b02={b02!r}, b03={b03!r}, c01={c01!r})"
        )

    def lift(self, spec: TowerSpec) -> "SysParams":
        return SysParams(spec, *(v.lift(spec) for v in self.as_tuple()))

    def specialize(self, assignment) -> "SysParams":
        from .exactfield import specialization_plan

        plan = specialization_plan(self.spec, assignment)
        return SysParams(plan.new_spec, *(plan.apply(v) for v in self.as_tuple()))


def _sys_forms(params: SysParams) -> tuple[Form, Form, Form]:
    spec = params.spec
    t, a12, a13, a23, b02, b03, c01 = params.as_tuple()
    one = spec.one()
    two = spec.rational(2)
    f1 = Form(
        spec,
        4,
        {
            (0, 2, 0, 0): one,
            (0, 0, 2, 0): one,
            (0, 0, 0, 2): one,
            (0, 1, 1, 0): a12,
            (0, 1, 0, 1): a13,
            (0, 0, 1, 1): a23,
        },
    )
    f2 = Form(
        spec,
        4,
        {
            (0, 0, 2, 0): -two,
            (0, 0, 0, 2): -two * t,
            (1, 1, 0, 0): c01,
            (1, 0, 1, 0): -b02,
            (1, 0, 0, 1): -(b03 / t),
            (0, 1, 1, 0): -a12,
            (0, 1, 0, 1): -t * a13,
            (0, 0, 1, 1): -(one + t) * a23,
        },
    )
    f3 = Form(
        spec,
        4,
        {
            (2, 0, 0, 0): one,
            (0, 0, 2, 0): one,
            (0, 0, 0, 2): t * t,
            (1, 0, 1, 0): b02,
            (1, 0, 0, 1): b03,
            (0, 0, 1, 1): t * a23,
        },
    )
    return f1, f2, f3


def sys_build(params: SysParams) -> Pencil:
    """The pencil p^2*Q1 + pq*Q2 + q^2*Q3 in the normal form of ``params``."""
    f1, f2, f3 = _sys_forms(params)
    return Pencil.from_forms(f1, f2, f3)


def recognize_sys(pencil: Pencil) -> SysParams | None:
    """Pattern-match a pencil onto the normal form, up to the allowed rescaling.

    The triple (Q1, Q2, Q3) may be scaled by (u, v, w) with u*w = v^2 without
    changing the discriminant quartic projectively; the match fixes u from the
    x1^2 coefficient of Q1 and v from the x2^2 coefficient of Q2, then checks
    every coefficient of all three quadrics.  Returns None when the pencil is
    not of the normal-form shape.
    """
    spec = pencil.spec
    lead1 = pencil.q1.form.coefficient((0, 2, 0, 0))
    if lead1.is_zero:
        return None
    s1 = pencil.q1.form / lead1
    lead2 = pencil.q2.form.coefficient((0, 0, 2, 0))
    if lead2.is_zero:
        return None
    v = -(lead2 / spec.rational(2))
    s2 = pencil.q2.form / v
    t = -(s2.coefficient((0, 0, 0, 2)) / spec.rational(2))
    if t.is_zero or (t - spec.one()).is_zero:
        return None
    w = v * v / lead1
    s3 = pencil.q3.form / w
    candidate = SysParams(
        spec,
        t,
        a12=s1.coefficient((0, 1, 1, 0)),
        a13=s1.coefficient((0, 1, 0, 1)),
        a23=s1.coefficient((0, 0, 1, 1)),
        b02=s3.coefficient((1, 0, 1, 0)),
        b03=s3.coefficient((1, 0, 0, 1)),
        c01=s2.coefficient((1, 1, 0, 0)),
    )
    f1, f2, f3 = _sys_forms(candidate)
    if s1 == f1 and s2 == f2 and s3 == f3:
        return candidate
    return None


# ---------------------------------------------------------------------------
# Transformation maps between systems
# ---------------------------------------------------------------------------


class SystemMap:
    """A (p:q) substitution paired with a coordinate change of P^3.

    Applying the map rewrites p^2*Q1 + pq*Q2 + q^2*Q3 with (p, q) replaced by
    the pq-matrix image and all quadrics pulled back along the coordinate
    transform.
    """

    __slots__ = ("label", "pq", "coord")

    def __init__(self, label: str, pq: Matrix, coord: ProjTransform):
        if pq.shape != (2, 2):
            raise FamilyError("pq matrix must be 2x2")
        if pq.det().is_zero:
            raise SingularMatrix("pq matrix is singular")
        if pq.spec != coord.spec:
            raise FamilyError("pq and coordinate matrices live over different towers")
        self.label = label
        self.pq = pq
        self.coord = coord

    @property
    def spec(self) -> TowerSpec:
        return self.pq.spec

    def __repr__(self) -> str:
        return f"SystemMap<{self.label}>"

    def inverse(self) -> "SystemMap":
        return SystemMap(self.label + "^-1", self.pq.inverse(), self.coord.inverse())

    def lift(self, spec: TowerSpec) -> "SystemMap":
        return SystemMap(self.label, self.pq.lift(spec), self.coord.lift(spec))


def _map_table(spec: TowerSpec, t: TowerElem | None) -> dict[str, tuple[list, list]]:
    one = spec.one()
    table: dict[str, tuple[list, list]] = {}

    def entry(label, pq_rows, coord_rows):
        table[label] = (pq_rows, coord_rows)

    if t is not None:
        tv = t
        tm1 = tv - one
        # fixes (1:0); sends (0:1) -> (1:1) -> (t:1) -> (t^2-t+1 : 1),
        # a 3-cycle of the singular members exactly when t^2 - t + 1 = 0
        entry(
            "order3",
            [[one, tm1.inverse()], [spec.zero(), tm1.inverse()]],
            [
                [tv.inverse(), 0, 0, 0],
                [0, 0, 0, one],
                [0, one, 0, 0],
                [0, 0, one, 0],
            ],
        )
        # same (p:q) action with the sign of x0 flipped: the variant whose
        # cube is the identity matrix, not merely a diagonal rescaling
        entry(
            "order3-exact",
            [[one, tm1.inverse()], [spec.zero(), tm1.inverse()]],
            [
                [-tv.inverse(), 0, 0, 0],
                [0, 0, 0, one],
                [0, one, 0, 0],
                [0, 0, one, 0],
            ],
        )
        # swaps (1:0) <-> (t:1) and (0:1) <-> (1:1); lands back on the
        # normal form when t^2 - t + 1 = 0
        entry(
            "swap-inf-t",
            [[one, -one], [tv.inverse(), -one]],
            [
                [0, 0, 0, (tv * tv).inverse()],
                [0, 0, one, 0],
                [0, tv.inverse(), 0, 0],
                [tv, 0, 0, 0],
            ],
        )
        # swaps (1:0) <-> (0:1) and (1:1) <-> (t:1); parameter rule
        # (b03/t, b02, a23, a13, t*a12, c01) holds for every t
        entry(
            "swap-inf-0",
            [[spec.zero(), tv], [one, spec.zero()]],
            [
                [0, one, 0, 0],
                [tv.inverse(), 0, 0, 0],
                [0, 0, 0, one],
                [0, 0, tv.inverse(), 0],
            ],
        )
        # swaps (1:0) <-> (t:1) and (0:1) <-> (1:1) through a different
        # coordinate change than swap-inf-t; parameter rule
        # (a12, b02, -c01, a13, b03, -a23) holds for every t
        entry(
            "swap-inf-t-twisted",
            [[tv, -tv], [one, -tv]],
            [
                [0, 0, 0, one],
                [0, 0, -tv.inverse(), 0],
                [0, -tm1.inverse(), 0, 0],
                [(tv * tm1).inverse(), 0, 0, 0],
            ],
        )
    # 4-cycle (1:0) -> (-1:1) -> (0:1) -> (1:1) -> (1:0); the first image is
    # the member (t:1) exactly when t = -1
    entry(
        "order4",
        [[one, one], [-one, one]],
        [
            [0, 0, one, 0],
            [0, 0, 0, one],
            [0, Fraction(1, 2), 0, 0],
            [Fraction(1, 2), 0, 0, 0],
        ],
    )
    # fixes (1:0), (0:1); sends (1:1) <-> (-1:1), a swap of the last two
    # members exactly when t = -1
    entry(
        "swap-1-t",
        [[-one, spec.zero()], [spec.zero(), one]],
        [
            [-one, 0, 0, 0],
            [0, one, 0, 0],
            [0, 0, 0, one],
            [0, 0, one, 0],
        ],
    )
    # same (p:q) action realized by exchanging x2 and x3
    entry(
        "swap-x2-x3",
        [[-one, spec.zero()], [spec.zero(), one]],
        [
            [one, 0, 0, 0],
            [0, one, 0, 0],
            [0, 0, 0, one],
            [0, 0, one, 0],
        ],
    )
    # swaps (1:0) <-> (0:1) by exchanging x0 and x1
    entry(
        "swap-x0-x1",
        [[spec.zero(), one], [one, spec.zero()]],
        [
            [0, one, 0, 0],
            [one, 0, 0, 0],
            [0, 0, one, 0],
            [0, 0, 0, one],
        ],
    )
    return table


SYSTEM_MAP_LABELS = (
    "order3",
    "order3-exact",
    "swap-inf-t",
    "swap-inf-0",
    "swap-inf-t-twisted",
    "order4",
    "swap-1-t",
    "swap-x2-x3",
    "swap-x0-x1",
)


def system_map(spec: TowerSpec, label: str, t=None) -> SystemMap:
    """Build a named transformation map over ``spec``.

    ``t`` is the pencil parameter of the system the map is aimed at; maps
    whose matrices involve t require it, the purely rational ones ignore it.
    """
    tval = None if t is None else _as_tower(spec, t)
    table = _map_table(spec, tval)
    if label not in table:
        if label in SYSTEM_MAP_LABELS:
            raise FamilyError(f"map {label!r} needs the pencil parameter t")
        raise FamilyError(f"unknown system map {label!r}")
    pq_rows, coord_rows = table[label]
    return SystemMap(label, Matrix(spec, pq_rows), ProjTransform.from_rows(spec, coord_rows))


def apply_system_map(pencil: Pencil, m: SystemMap) -> tuple[Pencil, SysParams | None]:
    """Rewrite a pencil under a system map and try to recognize the result.

    Returns the transformed pencil together with its normal-form parameters
    when the result matches the normal-form shape, else None in that slot.
    """
    spec = pencil.spec
    mm = m if m.spec == spec else m.lift(spec)
    (alpha, beta), (gamma, delta) = mm.pq.rows
    f1, f2, f3 = (q.form for q in pencil.quadrics)
    g1 = f1 * (alpha * alpha) + f2 * (alpha * gamma) + f3 * (gamma * gamma)
    g2 = (
        f1 * (alpha * beta * 2)
        + f2 * (alpha * delta + beta * gamma)
        + f3 * (gamma * delta * 2)
    )
    g3 = f1 * (beta * beta) + f2 * (beta * delta) + f3 * (delta * delta)
    rows = [list(r) for r in mm.coord.matrix.rows]
    out = Pencil.from_forms(
        g1.substitute_linear(rows),
        g2.substitute_linear(rows),
        g3.substitute_linear(rows),
    )
    return out, recognize_sys(out)


# ---------------------------------------------------------------------------
# coefficient solving: families singular at prescribed points / tangent planes
# ---------------------------------------------------------------------------


def symmetric_quartic_basis(spec: TowerSpec) -> list[Form]:
    """Orbit sums of quartic monomials under coordinate permutations.

    Returns [m4, m31, m22, m211, m1111]: each is the sum of the distinct
    monomials with exponent signature (4), (3,1), (2,2), (2,1,1), (1,1,1,1),
    each monomial appearing exactly once.
    """
    buckets: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for m in monomials(4, 4):
        buckets.setdefault(tuple(sorted(m, reverse=True)), []).append(m)
    order = [(4, 0, 0, 0), (3, 1, 0, 0), (2, 2, 0, 0), (2, 1, 1, 0), (1, 1, 1, 1)]
    one = spec.one()
    return [Form(spec, 4, {m: one for m in buckets[sig]}) for sig in order]


class ConstraintSolution:
    """The solution space of a linear coefficient-constraint system.

    The space is presented as an affine slice: ``particular`` is the
    representative scaled to first coefficient 1 (None when every solution
    has first coefficient 0) and ``kernel`` spans the solutions with first
    coefficient 0.  Together they span the full homogeneous solution space.
    """

    __slots__ = ("basis", "particular", "kernel")

    def __init__(self, basis: Sequence[Form], particular, kernel) -> None:
        self.basis = tuple(basis)
        self.particular = None if particular is None else tuple(particular)
        self.kernel = tuple(tuple(v) for v in kernel)

    @property
    def spec(self) -> TowerSpec:
        return self.basis[0].spec

    @property
    def dim(self) -> int:
        """Dimension of the homogeneous solution space."""
        return len(self.kernel) + (0 if self.particular is None else 1)

    def _generators(self) -> list[tuple[TowerElem, ...]]:
        gens = list(self.kernel)
        if self.particular is not None:
            gens.append(self.particular)
        return gens

    def combination(self, weights: Sequence) -> list[TowerElem]:
        """particular + sum of weighted kernel vectors (pure span if no
        particular)."""
        spec = self.spec
        ws = [_as_tower(spec, w) for w in weights]
        if len(ws) != len(self.kernel):
            raise ValueError("one weight per kernel vector expected")
        n = len(self.basis)
        out = (
            [spec.zero()] * n
            if self.particular is None
            else list(self.particular)
        )
        for w, vec in zip(ws, self.kernel):
            out = [c + w * v for c, v in zip(out, vec)]
        return out

    def build_form(self, weights: Sequence) -> Form:
        """The basis combination at the given kernel weights."""
        coeffs = self.combination(weights)
        total = Form.zero(self.spec, self.basis[0].nvars)
        for c, b in zip(coeffs, self.basis):
            total = total + b * c
        return total

    def contains(self, vector: Sequence) -> bool:
        """Whether the vector lies in the homogeneous solution space."""
        spec = self.spec
        vec = [_as_tower(spec, v) for v in vector]
        if len(vec) != len(self.basis):
            raise ValueError("one coordinate per basis form expected")
        gens = self._generators()
        if not gens:
            return all(v.is_zero for v in vec)
        cols = Matrix(
            spec, [[g[i] for g in gens] for i in range(len(self.basis))]
        )
        return cols.solve(vec) is not None


def _split_by_pivot(g: Form, zpos: int) -> tuple[TowerElem, list[Form]]:
    """(leading z^4 coefficient, [G0..G3] as forms with the pivot zeroed)."""
    parts: dict[int, dict[tuple[int, ...], TowerElem]] = {}
    for m, c in g.coeffs.items():
        rest = tuple(0 if k == zpos else v for k, v in enumerate(m))
        parts.setdefault(m[zpos], {})[rest] = c
    lead = parts.get(4, {}).get((0,) * g.nvars, g.spec.zero())
    return lead, [Form(g.spec, g.nvars, parts.get(e, {})) for e in range(4)]


def _square_defects(g: Form) -> list[TowerElem] | None:
    """Coefficient conditions for a ternary quartic to be a perfect square.

    Completes the square in a pivot variable with a nonzero fourth-power
    coefficient: with G = G4 z^4 + G3 z^3 + G2 z^2 + G1 z + G0, the defect
    polynomials 8*G4^2*G1 - 4*G4*G2*G3 + G3^3 and
    64*G4^3*G0 - (4*G4*G2 - G3^2)^2 vanish iff G is a scalar multiple of the
    square of a quadric (given G4 != 0).  Returns their coefficients, or
    None when no variable has a nonzero fourth-power coefficient.
    """
    for zpos in range(g.nvars):
        g4, (g0, g1, g2, g3) = _split_by_pivot(g, zpos)
        if g4.is_zero:
            continue
        p1 = g1 * (g4 * g4 * 8) - (g3 * g2) * (g4 * 4) + g3 * g3 * g3
        s = g2 * (g4 * 4) - g3 * g3
        p0 = g0 * (g4 * g4 * g4 * 64) - s * s
        return [c for _, c in p1.terms()] + [c for _, c in p0.terms()]
    return None


def solve_singularity_constraints(
    basis: Sequence[Form],
    points: Sequence[ProjPoint],
    tropes: Sequence[ProjPlane] = (),
) -> ConstraintSolution:
    """Coefficient vectors whose basis combination is singular at the points
    and restricts to a perfect square on each trope plane.

    Every point contributes five linear rows (value plus four partials).
    Tropes are handled by completing the square on the restriction over the
    solution parameters: when the square-defect conditions vanish identically
    the trope adds nothing, otherwise NonlinearTropeCondition is raised (the
    conditions are cubic and quartic in the parameters, so a residual
    condition cannot be folded into the linear system).
    """
    basis = list(basis)
    if not basis:
        raise ValueError("empty basis")
    spec = basis[0].spec
    nvars = basis[0].nvars
    degree = basis[0].degree
    for b in basis[1:]:
        if b.spec != spec or b.nvars != nvars or b.degree != degree:
            raise ValueError("basis forms must share spec, arity and degree")

    rows: list[list[TowerElem]] = []
    grads = [b.gradient() for b in basis]
    for p in points:
        coords = p.coords if isinstance(p, ProjPoint) else [
            _as_tower(spec, c) for c in p
        ]
        rows.append([b.evaluate(coords) for b in basis])
        for i in range(nvars):
            rows.append([g[i].evaluate(coords) for g in grads])

    if rows:
        kern = Matrix(spec, rows).kernel_basis()
    else:
        one, zero = spec.one(), spec.zero()
        kern = [
            [one if j == i else zero for j in range(len(basis))]
            for i in range(len(basis))
        ]

    if tropes and kern:
        names = [f"u{i}" for i in range(len(kern))]
        while set(names) & set(spec.ring.names):
            names = ["_" + n for n in names]
        ext, carry, _ = extend_ring(spec, tuple(names))
        uvals = [ext.param(n) for n in names]
        cvec = [ext.zero()] * len(basis)
        for u, vec in zip(uvals, kern):
            cvec = [c + u * carry(v) for c, v in zip(cvec, vec)]
        fu = Form.zero(ext, nvars)
        for c, b in zip(cvec, basis):
            bext = Form(ext, nvars, {m: carry(cc) for m, cc in b.coeffs.items()})
            fu = fu + bext * c
        for idx, plane in enumerate(tropes):
            pcoeffs = (
                plane.coeffs
                if isinstance(plane, ProjPlane)
                else [_as_tower(spec, c) for c in plane]
            )
            g, _ = fu.restrict_to_hyperplane([carry(c) for c in pcoeffs])
            conds = _square_defects(g)
            if conds is None:
                raise NonlinearTropeCondition(
                    f"trope {idx}: no pivot with a fourth-power term"
                )
            bad = [c for c in conds if not c.is_zero]
            if bad:
                raise NonlinearTropeCondition(
                    f"trope {idx}: {len(bad)} square-defect conditions do not "
                    "vanish on the point-solution space"
                )

    return _normalized_solution(basis, kern)


def _normalized_solution(
    basis: Sequence[Form], kern: Sequence[Sequence[TowerElem]]
) -> ConstraintSolution:
    """Present a homogeneous solution space as (first-coeff-1, rest-0) slice."""
    particular = None
    reduced: list[list[TowerElem]] = []
    for v in kern:
        if particular is None and not v[0].is_zero:
            inv = v[0].inverse()
            particular = [c * inv for c in v]
        else:
            reduced.append(list(v))
    if particular is not None:
        reduced = [
            [c - v[0] * p for c, p in zip(v, particular)] for v in reduced
        ]
    return ConstraintSolution(basis, particular, reduced)


# ---------------------------------------------------------------------------
# exponent-complement involution and weighted monomial filters
# ---------------------------------------------------------------------------


def cremona_quartic(q: QuarticSurface | Form) -> QuarticSurface:
    """The quartic with every monomial exponent complemented to 2.

    Monomial x^e maps to x^(2-e0, 2-e1, 2-e2, 2-e3); defined exactly when
    the input has degree at most 2 in each variable, and an involution on
    that domain.
    """
    form = q.form if isinstance(q, QuarticSurface) else q
    if form.nvars != 4 or form.degree != 4:
        raise FamilyError("exponent complement needs a quartic in x0..x3")
    out: dict[tuple[int, ...], TowerElem] = {}
    for m, c in form.coeffs.items():
        for i, e in enumerate(m):
            if e > 2:
                raise DegreeTooHighInVariable(f"x{i}")
        out[tuple(2 - e for e in m)] = c
    return QuarticSurface(Form(form.spec, form.nvars, out))


def weight_monomials(
    n: int, weights: Sequence[int], target: int
) -> list[tuple[int, ...]]:
    """Degree-4 exponent tuples whose weighted degree is target modulo n."""
    if n < 1:
        raise ValueError("modulus must be positive")
    w = tuple(weights)
    return [
        m
        for m in monomials(len(w), 4)
        if sum(e * wi for e, wi in zip(m, w)) % n == target % n
    ]


def _on_twisted_cubic(form: Form) -> bool:
    """Whether the form vanishes identically on (u^3 : u^2 v : u v^2 : v^3)."""
    acc: dict[tuple[int, int], TowerElem] = {}
    for m, c in form.coeffs.items():
        eu = sum(e * (3 - i) for i, e in enumerate(m))
        ev = sum(e * i for i, e in enumerate(m))
        cur = acc.get((eu, ev))
        cur = c if cur is None else cur + c
        if cur.is_zero:
            acc.pop((eu, ev), None)
        else:
            acc[(eu, ev)] = cur
    return not acc


def vanish_on_twisted_cubic(f: Form | QuarticSurface) -> bool:
    """Whether f and its whole gradient vanish along (u^3:u^2 v:u v^2:v^3)."""
    form = f.form if isinstance(f, QuarticSurface) else f
    if form.nvars != 4:
        raise FamilyError("the twisted cubic here lives in P^3")
    return _on_twisted_cubic(form) and all(
        _on_twisted_cubic(p) for p in form.gradient()
    )


def twisted_cubic_singular_space(
    spec: TowerSpec, monos: Sequence[tuple[int, ...]]
) -> ConstraintSolution:
    """Combinations of the monomials singular along the whole twisted cubic.

    Imposes that the combination and each partial derivative restrict to the
    zero binary form on (u^3 : u^2 v : u v^2 : v^3); one linear row per
    surviving (u, v) bidegree per derivative.
    """
    basis = [Form.monomial(spec, 4, tuple(m)) for m in monos]
    zero = spec.zero()
    k = len(basis)
    rowmap: dict[tuple[int, tuple[int, int]], list[TowerElem]] = {}
    for j, b in enumerate(basis):
        for d, f in enumerate([b] + b.gradient()):
            for m, c in f.coeffs.items():
                eu = sum(e * (3 - i) for i, e in enumerate(m))
                ev = sum(e * i for i, e in enumerate(m))
                row = rowmap.setdefault((d, (eu, ev)), [zero] * k)
                row[j] = row[j] + c
    rows = [rowmap[key] for key in sorted(rowmap)]
    if rows:
        kern = Matrix(spec, rows).kernel_basis()
    else:
        one = spec.one()
        kern = [
            [one if j == i else zero for j in range(k)] for i in range(k)
        ]
    return _normalized_solution(basis, kern)


# ---------------------------------------------------------------------------
# the catalog
# ---------------------------------------------------------------------------


def adjoin_sqrt(spec: TowerSpec, elem, name: str) -> tuple[TowerSpec, TowerElem]:
    """A square root of ``elem``, reusing an exact root if the tower has one.

    Returns ``(spec2, root)`` where ``spec2`` is ``spec`` itself when a root
    already exists in the tower, otherwise the tower extended by one level
    named ``name``.
    """
    elem = _as_tower(spec, elem)
    root = tower_sqrt(elem)
    if root is not None:
        return spec, root
    ext = spec.adjoin(elem, name)
    return ext, ext.radical(name)


class Claim:
    """One expected fact about a family: a kind tag plus a data payload.

    Kinds used by the catalog (data keys in parentheses):

    * ``node`` (point) — the point is a certified ordinary double point.
    * ``trope`` (plane) — the plane meets the quartic in a double conic.
    * ``generator`` (label, transform) — a projective map preserving the
      family up to scalar; the same transforms back every group claim.
    * ``semi_invariant`` (label, transform) — the transform rescales the
      quartic by an exact scalar (transform.spec may extend the payload's
      tower; lift the form before checking).
    * ``group_order`` (order, labels) — closure size of the generators.
    * ``fingerprint`` (order, histogram) — closure fingerprint data.
    * ``orbit_lengths`` (lengths) — orbit sizes on the family's node claims.
    * ``singular_member`` (root, vertex) — pencil member at root=(p, q) has
      rank 3 with the given vertex.
    * ``double_roots`` (count) — double-root count of the determinant form.
    * ``det_form`` (form) — the exact binary determinant form.
    * ``base_points`` (points) — exact transversal base points of the pencil.
    * ``base_points_numeric`` (count) — base-point count the numeric search
      must reproduce with no extras.
    * ``nodes_numeric`` (count) — singular-point count the numeric search
      must reproduce.
    * ``monomials`` (monomials) — expected diagonal-weight monomial list.
    * ``solution_dimension`` (dim) — dimension of the singularity-constraint
      solution space over the monomial claim.
    * ``vanishes_on_twisted_cubic`` — the payload is singular along the
      twisted cubic.
    """

    __slots__ = ("kind", "data")

    def __init__(self, kind: str, data: Mapping[str, object] | None = None):
        self.kind = str(kind)
        self.data = dict(data or {})

    def __repr__(self) -> str:
        keys = ", ".join(sorted(self.data))
        return f"Claim({self.kind!r}, {{{keys}}})"


class FamilySpec:
    """A catalog fixture: a payload plus the claims expected to hold for it."""

    __slots__ = ("name", "parameters", "payload", "expected", "_surface")

    def __init__(self, name, parameters, payload, expected):
        if not isinstance(payload, (QuarticSurface, Pencil)):
            raise FamilyError("payload must be a quartic surface or a pencil")
        self.name = str(name)
        self.parameters = dict(parameters)
        self.payload = payload
        self.expected = tuple(expected)
        self._surface = payload if isinstance(payload, QuarticSurface) else None

    @property
    def spec(self) -> TowerSpec:
        return self.payload.spec

    @property
    def surface(self) -> QuarticSurface:
        """The quartic: the payload itself, or the pencil discriminant."""
        if self._surface is None:
            self._surface = self.payload.discriminant_quartic()
        return self._surface

    def claims(self, kind: str | None = None) -> tuple[Claim, ...]:
        if kind is None:
            return self.expected
        return tuple(c for c in self.expected if c.kind == kind)

    def __repr__(self) -> str:
        ps = ", ".join(f"{k}={v}" for k, v in sorted(self.parameters.items()))
        return f"FamilySpec<{self.name}({ps}), {len(self.expected)} claims>"


def _reject_unknown_params(params, allowed, name):
    for key in params or {}:
        if key not in allowed:
            raise FamilyError(f"family {name!r} takes no parameter {key!r}")


def _param_or(params, key, default):
    if params is None:
        return default
    value = params.get(key, default)
    return default if value is None else value


def _shared_spec(values) -> TowerSpec:
    """The tower shared by any TowerElem values, or a fresh rational tower."""
    spec = None
    for v in values:
        if isinstance(v, TowerElem):
            if spec is None:
                spec = v.spec
            elif spec != v.spec:
                raise FamilyError("parameters live over different towers")
    return spec if spec is not None else TowerSpec(PolyRing(()))


def _is_concrete(spec: TowerSpec) -> bool:
    return spec.ring.nvars == 0


def _build_eq4(params):
    _reject_unknown_params(params, {"A"}, "eq4")
    a_val = _param_or(params, "A", Fraction(0))
    spec = _shared_spec([a_val])
    A = _as_tower(spec, a_val)
    two = spec.rational(2)
    three = spec.rational(3)
    coeffs = (spec.one(), A * 2 - two, spec.one() - A * 3, A)
    surface = QuarticSurface(power_sum_quartic(spec, coeffs))
    node = ProjPoint(spec, (0, 0, 0, 1))
    claims = [Claim("node", {"point": node})]
    return FamilySpec("eq4", {"A": A}, surface, claims)


def _build_eq5(params):
    _reject_unknown_params(params, {"A"}, "eq5")
    a_val = _param_or(params, "A", Fraction(0))
    spec = _shared_spec([a_val])
    A = _as_tower(spec, a_val)
    coeffs = (
        spec.one(),
        A * 8 - spec.rational(2),
        spec.rational(Fraction(1, 2)) - A * 6,
        A,
    )
    surface = QuarticSurface(power_sum_quartic(spec, coeffs))
    node = ProjPoint(spec, (1, 1, 0, 0))
    claims = [Claim("node", {"point": node})]
    return FamilySpec("eq5", {"A": A}, surface, claims)


def _build_pr5(params):
    _reject_unknown_params(params, {"b", "d"}, "pr5")
    b_val = _param_or(params, "b", Fraction(1))
    d_val = _param_or(params, "d", Fraction(0))
    spec = _shared_spec([b_val, d_val])
    b = _as_tower(spec, b_val)
    d = _as_tower(spec, d_val)
    if _is_concrete(spec) and b.is_zero and d.is_zero:
        raise ConstraintViolated("pr5 needs (b, d) != (0, 0)")
    a = (b * (-29) + d * 5) / 72
    c = (b * (-59) + d * (-37)) / 36
    e = b * (-5) + d * (-7)
    basis = symmetric_quartic_basis(spec)
    form = Form.zero(spec, 4)
    for coeff, member in zip((a, b, c, d, e), basis):
        form = form + member * coeff
    surface = QuarticSurface(form)
    half = Fraction(1, 2)
    node = ProjPoint(spec, (half, half, 0, 1))
    plane = ProjPlane(
        spec, (1, Fraction(-1, 3), Fraction(-1, 3), Fraction(-1, 3))
    )
    claims = [
        Claim("node", {"point": node}),
        Claim("trope", {"plane": plane}),
    ]
    return FamilySpec("pr5", {"b": b, "d": d}, surface, claims)


def _build_pr6(params):
    names = ("a", "a01", "a02", "a03", "a12", "a13", "a23")
    _reject_unknown_params(params, set(names), "pr6")
    defaults = {"a": Fraction(1)}
    vals = {k: _param_or(params, k, defaults.get(k, Fraction(0))) for k in names}
    spec = _shared_spec(list(vals.values()))
    elems = {k: _as_tower(spec, v) for k, v in vals.items()}
    a = elems["a"]
    if _is_concrete(spec) and a.is_zero:
        raise ConstraintViolated("pr6 needs a != 0")
    quad = Form.zero(spec, 4)
    for i in range(4):
        mono = [0, 0, 0, 0]
        mono[i] = 2
        quad = quad + Form.monomial(spec, 4, tuple(mono), 1)
    for i in range(4):
        for j in range(i + 1, 4):
            cross = elems[f"a{i}{j}"]
            if cross.is_zero:
                continue
            mono = [0, 0, 0, 0]
            mono[i] = 1
            mono[j] = 1
            quad = quad + Form.monomial(spec, 4, tuple(mono), cross)
    form = quad * quad + Form.monomial(spec, 4, (1, 1, 1, 1), a)
    surface = QuarticSurface(form)
    claims = []
    generic = all(elems[k].is_zero for k in names[1:])
    if generic:
        node_spec, i_unit = adjoin_sqrt(spec, spec.rational(-1), "i")
        for p in range(4):
            for q in range(p + 1, 4):
                for sign in (1, -1):
                    coords = [node_spec.zero()] * 4
                    coords[p] = node_spec.one()
                    coords[q] = i_unit * sign
                    claims.append(
                        Claim("node", {"point": ProjPoint(node_spec, coords)})
                    )
        for i in range(4):
            plane_coeffs = [0, 0, 0, 0]
            plane_coeffs[i] = 1
            claims.append(
                Claim("trope", {"plane": ProjPlane(spec, plane_coeffs)})
            )
        gens = [
            ("cycle", ProjTransform.permutation(spec, (1, 2, 3, 0))),
            ("swap01", ProjTransform.permutation(spec, (1, 0, 2, 3))),
            ("sign01", ProjTransform.diagonal(spec, (-1, -1, 1, 1))),
            ("sign02", ProjTransform.diagonal(spec, (-1, 1, -1, 1))),
        ]
        for label, g in gens:
            claims.append(Claim("generator", {"label": label, "transform": g}))
            claims.append(
                Claim("semi_invariant", {"label": label, "transform": g})
            )
        if _is_concrete(spec):
            labels = tuple(label for label, _ in gens)
            claims.append(Claim("group_order", {"order": 96, "labels": labels}))
            claims.append(
                Claim(
                    "fingerprint",
                    {"order": 96, "histogram": {1: 1, 2: 27, 3: 32, 4: 36}},
                )
            )
            claims.append(Claim("orbit_lengths", {"lengths": (12,)}))
            claims.append(Claim("nodes_numeric", {"count": 12}))
    return FamilySpec("pr6", dict(elems), surface, claims)


def _build_pr8(params):
    _reject_unknown_params(params, {"t"}, "pr8")
    t_val = _param_or(params, "t", None)
    if t_val is None:
        spec0 = TowerSpec(PolyRing(("t",)))
        t0 = spec0.param("t")
    else:
        spec0 = _shared_spec([t_val])
        t0 = _as_tower(spec0, t_val)
    sys_params = SysParams(spec0, t0)
    pencil = sys_build(sys_params)
    spec1, alpha = adjoin_sqrt(spec0, -t0, "alpha")
    spec2, beta = adjoin_sqrt(spec1, t0.lift(spec1) - spec1.one(), "beta")
    t2 = t0.lift(spec2)
    alpha = alpha.lift(spec2)
    half = spec2.rational(Fraction(1, 2))
    extra_rows = [
        [half, alpha / 2, -(beta / 2), alpha * beta / 2],
        [(alpha * 2).inverse(), half, beta / (alpha * 2), -(beta / 2)],
        [(beta * 2).inverse(), -(alpha / (beta * 2)), -half, -(alpha / 2)],
        [
            (alpha * beta * 2).inverse(),
            -((beta * 2).inverse()),
            (alpha * 2).inverse(),
            half,
        ],
    ]
    gens = [
        ("sign-x1", ProjTransform.diagonal(spec2, (1, -1, 1, 1))),
        ("sign-x2", ProjTransform.diagonal(spec2, (1, 1, -1, 1))),
        ("sign-x3", ProjTransform.diagonal(spec2, (1, 1, 1, -1))),
        ("swap-inf-0", system_map(spec2, "swap-inf-0", t=t2).coord),
        (
            "swap-inf-t-twisted",
            system_map(spec2, "swap-inf-t-twisted", t=t2).coord,
        ),
        ("extra", ProjTransform.from_rows(spec2, extra_rows)),
    ]
    order = 96
    hist = {1: 1, 2: 27, 3: 32, 4: 36}
    concrete = _is_concrete(spec2)
    if concrete:
        if (t2 + spec2.one()).is_zero:
            gens.append(("order4", system_map(spec2, "order4", t=t2).coord))
            order, hist = 192, {1: 1, 2: 43, 3: 32, 4: 84, 6: 32}
        elif (t2 * t2 - t2 + spec2.one()).is_zero:
            gens.append(
                ("order3-exact", system_map(spec2, "order3-exact", t=t2).coord)
            )
            order, hist = 288, {1: 1, 2: 27, 3: 80, 4: 36, 6: 144}
    claims = []
    for label, g in gens:
        claims.append(Claim("generator", {"label": label, "transform": g}))
        claims.append(Claim("semi_invariant", {"label": label, "transform": g}))
    if concrete:
        pts = []
        one2 = spec2.one()
        for s0 in (1, -1):
            for s1 in (1, -1):
                for s2 in (1, -1):
                    pts.append(
                        ProjPoint(
                            spec2,
                            [alpha * beta * s0, beta * s1, alpha * s2, one2],
                        )
                    )
        claims.append(Claim("base_points", {"points": tuple(pts)}))
        labels = tuple(label for label, _ in gens)
        claims.append(Claim("group_order", {"order": order, "labels": labels}))
        claims.append(Claim("fingerprint", {"order": order, "histogram": hist}))
    return FamilySpec("pr8", {"t": t0}, pencil, claims)


def _build_pr10(params):
    _reject_unknown_params(params, {"a23", "c01"}, "pr10")
    defaulted = not params
    if defaulted:
        base = TowerSpec(PolyRing(()))
        spec, i2 = adjoin_sqrt(base, base.rational(-2), "i2")
        spec, r6 = adjoin_sqrt(spec, spec.rational(6), "r6")
        i2 = i2.lift(spec)
        a23 = r6 * Fraction(2, 3)
        c01 = spec.rational(Fraction(2, 3))
    else:
        vals = [v for v in params.values() if v is not None]
        spec = _shared_spec(vals)
        a23 = _as_tower(spec, _param_or(params, "a23", Fraction(1)))
        c01 = _as_tower(spec, _param_or(params, "c01", Fraction(2, 3)))
    if _is_concrete(spec):
        if (a23 * c01).is_zero:
            raise ConstraintViolated("pr10 needs a23 * c01 != 0")
        if (c01 - a23).is_zero or (c01 + a23).is_zero:
            raise ConstraintViolated("pr10 needs c01 != a23 and c01 != -a23")
    sys_params = SysParams(spec, -1, a23=a23, c01=c01)
    pencil = sys_build(sys_params)
    gens = [
        ("sign-x0-x1", ProjTransform.diagonal(spec, (-1, -1, 1, 1))),
        (
            "swap-x0-x1-twisted",
            ProjTransform.from_rows(
                spec, [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]]
            ),
        ),
        (
            "swap-x2-x3-twisted",
            ProjTransform.from_rows(
                spec, [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
            ),
        ),
    ]
    claims = []
    for label, g in gens:
        claims.append(Claim("generator", {"label": label, "transform": g}))
        claims.append(Claim("semi_invariant", {"label": label, "transform": g}))
    if _is_concrete(spec):
        labels = tuple(label for label, _ in gens)
        claims.append(Claim("group_order", {"order": 8, "labels": labels}))
        claims.append(
            Claim("fingerprint", {"order": 8, "histogram": {1: 1, 2: 7}})
        )
    if defaulted:
        for root, vertex_slot in (((1, 0), 0), ((0, 1), 1), ((1, 1), 2), ((-1, 1), 3)):
            coords = [0, 0, 0, 0]
            coords[vertex_slot] = 1
            claims.append(
                Claim(
                    "singular_member",
                    {"root": root, "vertex": ProjPoint(spec, coords)},
                )
            )
            claims.append(Claim("node", {"point": ProjPoint(spec, coords)}))
        group = closure([g for _, g in gens], cap=16)
        base_point = ProjPoint(
            spec, [i2 / 2, i2 * Fraction(-3, 2), r6 / 2, spec.one()]
        )
        orbit = {}
        for g in group:
            image = g.apply_point(base_point)
            orbit[image.coords] = image
        for image in orbit.values():
            claims.append(Claim("node", {"point": image}))
        claims.append(Claim("base_points", {"points": tuple(orbit.values())}))
        claims.append(Claim("orbit_lengths", {"lengths": (2, 2, 8)}))
        claims.append(Claim("nodes_numeric", {"count": 12}))
    return FamilySpec("pr10", {"a23": a23, "c01": c01}, pencil, claims)


def _build_pr11(params):
    _reject_unknown_params(params, {"a"}, "pr11")
    a_val = _param_or(params, "a", Fraction(1))
    if isinstance(a_val, TowerElem):
        spec, r3 = adjoin_sqrt(a_val.spec, a_val.spec.rational(-3), "r3")
        a = a_val.lift(spec)
    else:
        base = TowerSpec(PolyRing(()))
        spec, r3 = adjoin_sqrt(base, base.rational(-3), "r3")
        a = spec.rational(Fraction(a_val))
    omega = (spec.one() + r3) / 2
    if _is_concrete(spec):
        if a.is_zero:
            raise ConstraintViolated("pr11 needs a != 0")
        if (a + spec.one()).is_zero:
            raise ConstraintViolated("pr11 needs a != -1")
    sys_params = SysParams(
        spec, omega, a12=a, a13=a, a23=a, b02=a, b03=omega * a, c01=-a
    )
    pencil = sys_build(sys_params)
    gens = [
        ("order3-exact", system_map(spec, "order3-exact", t=omega).coord),
        ("swap-inf-t", system_map(spec, "swap-inf-t", t=omega).coord),
    ]
    claims = []
    for label, g in gens:
        claims.append(Claim("generator", {"label": label, "transform": g}))
        claims.append(Claim("semi_invariant", {"label": label, "transform": g}))
    if _is_concrete(spec):
        labels = tuple(label for label, _ in gens)
        claims.append(Claim("group_order", {"order": 12, "labels": labels}))
        claims.append(
            Claim("fingerprint", {"order": 12, "histogram": {1: 1, 2: 3, 3: 8}})
        )
    return FamilySpec("pr11", {"a": a}, pencil, claims)


def _build_pr13(params):
    _reject_unknown_params(params, {"a", "b"}, "pr13")
    a_val = _param_or(params, "a", None)
    b_val = _param_or(params, "b", None)
    if a_val is None and b_val is None:
        spec0 = TowerSpec(PolyRing(("a", "b")))
        a0 = spec0.param("a")
        b0 = spec0.param("b")
    else:
        spec0 = _shared_spec([v for v in (a_val, b_val) if v is not None])
        a0 = _as_tower(spec0, a_val if a_val is not None else Fraction(1, 3))
        b0 = _as_tower(spec0, b_val if b_val is not None else Fraction(2))
    spec, r = adjoin_sqrt(spec0, a0 - a0 * a0, "r")
    a = a0.lift(spec)
    b = b0.lift(spec)
    one, zero = spec.one(), spec.zero()
    if _is_concrete(spec):
        if (a * (a - one)).is_zero:
            raise ConstraintViolated("pr13 needs a not in {0, 1}")
        if (a * 2 - one).is_zero:
            raise ConstraintViolated("pr13 needs a != 1/2")
        if (b * (b - one)).is_zero:
            raise ConstraintViolated("pr13 needs b not in {0, 1}")
        if (b * (r * 2 + one) - (r * 2 - one)).is_zero:
            raise ConstraintViolated(
                "pr13 needs b != (2*sqrt(a - a^2) - 1)/(2*sqrt(a - a^2) + 1)"
            )
    c1 = (a * 2 - one) * (b - one) * b
    c2 = (a * 2 * (a - one + b * r) - (b - one) * r) / (a - r)
    c3 = b * (a * (b - one) + r * (b + one))
    fbr = b * r * 4
    d1 = -((a - a * a) * (b - one) * 2 + r * (b + one))
    d2 = -(b * (a * a * (b - one) * 2 + r * (b + one)))
    q1 = Form(
        spec,
        4,
        {(0, 2, 0, 0): c1, (0, 0, 2, 0): c2, (0, 0, 0, 2): c3, (0, 0, 1, 1): -fbr},
    )
    q2 = Form(
        spec,
        4,
        {
            (2, 0, 0, 0): d1,
            (0, 2, 0, 0): d2,
            (0, 0, 2, 0): d1,
            (0, 0, 0, 2): d2,
            (1, 1, 0, 0): fbr,
            (0, 0, 1, 1): fbr,
        },
    )
    q3 = Form(
        spec,
        4,
        {
            (2, 0, 0, 0): a * c2,
            (0, 2, 0, 0): a * c3,
            (0, 0, 0, 2): a * c1,
            (1, 1, 0, 0): -(a * fbr),
        },
    )
    pencil = Pencil.from_forms(q1, q2, q3)
    roots = [
        (one, zero), (zero, one), (a, one), (one, one),
        (a, a - r), (a - r, one), (a, a + r), (a + r, one),
    ]
    verts = [
        (one, zero, zero, zero), (zero, zero, one, zero),
        (zero, one, zero, zero), (zero, zero, zero, one),
        (one, one, zero, zero), (zero, zero, one, one),
        (b, one, zero, zero), (zero, zero, b, one),
    ]
    claims = []
    for root, vert in zip(roots, verts):
        claims.append(
            Claim(
                "singular_member",
                {"root": root, "vertex": ProjPoint(spec, vert)},
            )
        )
    g1 = ProjTransform.diagonal(spec, (1, 1, -1, -1))
    g2 = ProjTransform.permutation(spec, (2, 3, 0, 1))
    sp2, sb = adjoin_sqrt(spec, b, "sb")
    sp3, sb1 = adjoin_sqrt(sp2, (b - one).lift(sp2), "sb1")
    sp4, i_unit = adjoin_sqrt(sp3, sp3.rational(-1), "i")
    sb = sb.lift(sp4)
    sb1 = sb1.lift(sp4)
    b4 = b.lift(sp4)
    z4 = sp4.zero()
    g3 = ProjTransform.from_rows(
        sp4,
        [
            [z4, z4, sb / sb1, -(sb / sb1)],
            [z4, z4, (sb * sb1).inverse(), -(sb / sb1)],
            [i_unit / sb1, -(i_unit * b4) / sb1, z4, z4],
            [i_unit / sb1, -(i_unit / sb1), z4, z4],
        ],
    )
    gens = [("sign-x2-x3", g1), ("swap-blocks", g2), ("four-cycle", g3)]
    for label, g in gens:
        claims.append(Claim("generator", {"label": label, "transform": g}))
        claims.append(Claim("semi_invariant", {"label": label, "transform": g}))
    if _is_concrete(spec):
        labels = tuple(label for label, _ in gens)
        claims.append(Claim("group_order", {"order": 16, "labels": labels}))
        claims.append(
            Claim(
                "fingerprint",
                {"order": 16, "histogram": {1: 1, 2: 11, 4: 4}},
            )
        )
    return FamilySpec("pr13", {"a": a, "b": b}, pencil, claims)


def _build_pr14(params):
    _reject_unknown_params(params, set(), "pr14")
    base = TowerSpec(PolyRing(()))
    spec, r3 = adjoin_sqrt(base, base.rational(-3), "r3")
    one, zero = spec.one(), spec.zero()
    al = (one + r3) / 2
    be = (one - r3) / 2
    q1 = Form(
        spec,
        4,
        {(0, 2, 0, 0): one, (0, 0, 2, 0): -be, (0, 0, 1, 1): be - one, (0, 0, 0, 2): one},
    )
    q2 = Form(
        spec,
        4,
        {
            (2, 0, 0, 0): -r3,
            (1, 1, 0, 0): al * 2,
            (0, 2, 0, 0): -(al + one),
            (0, 0, 2, 0): one,
            (0, 0, 1, 1): al * al * 2,
            (0, 0, 0, 2): -(al + one),
        },
    )
    q3 = Form(
        spec,
        4,
        {(2, 0, 0, 0): al * al, (0, 0, 2, 0): -al, (0, 0, 1, 1): al + one},
    )
    pencil = Pencil.from_forms(q1, q2, q3)
    roots = [
        (one, zero), (al * al, one), (zero, one), (al + one, one),
        (one, one), ((spec.rational(2) - al).inverse(), one), (al, one), (be, one),
    ]
    verts = [
        (one, zero, zero, zero), (zero, zero, one, zero),
        (zero, one, zero, zero), (zero, zero, zero, one),
        (one, one, zero, zero), (zero, zero, one, one),
        (be, one, zero, zero), (zero, zero, be, one),
    ]
    claims = []
    for root, vert in zip(roots, verts):
        claims.append(
            Claim(
                "singular_member",
                {"root": root, "vertex": ProjPoint(spec, vert)},
            )
        )
    h1 = ProjTransform.diagonal(spec, (1, 1, -1, -1))
    h2 = ProjTransform.permutation(spec, (2, 3, 0, 1))
    h3 = ProjTransform.from_rows(
        spec,
        [
            [one, -be, zero, zero],
            [zero, -be, zero, zero],
            [zero, zero, be, al],
            [zero, zero, one, zero],
        ],
    )
    gens = [("sign-x2-x3", h1), ("swap-blocks", h2), ("three-cycle", h3)]
    for label, g in gens:
        claims.append(Claim("generator", {"label": label, "transform": g}))
        claims.append(Claim("semi_invariant", {"label": label, "transform": g}))
    labels = tuple(label for label, _ in gens)
    claims.append(Claim("group_order", {"order": 48, "labels": labels}))
    claims.append(
        Claim(
            "fingerprint",
            {"order": 48, "histogram": {1: 1, 2: 19, 3: 8, 4: 12, 6: 8}},
        )
    )
    return FamilySpec("pr14", {}, pencil, claims)


def _build_sec11(params):
    _reject_unknown_params(params, {"alpha", "beta"}, "sec11")
    a_val = _param_or(params, "alpha", None)
    b_val = _param_or(params, "beta", None)
    if a_val is None and b_val is None:
        spec = TowerSpec(PolyRing(("alpha", "beta")))
        al = spec.param("alpha")
        be = spec.param("beta")
    else:
        spec = _shared_spec([v for v in (a_val, b_val) if v is not None])
        al = _as_tower(spec, a_val if a_val is not None else 1)
        be = _as_tower(spec, b_val if b_val is not None else 0)
    if _is_concrete(spec) and al.is_zero and be.is_zero:
        raise ConstraintViolated("sec11 needs (alpha, beta) != (0, 0)")
    va = Form(
        spec,
        4,
        {
            (2, 0, 0, 2): spec.one(),
            (0, 2, 2, 0): spec.rational(3),
            (1, 0, 3, 0): spec.rational(-2),
            (0, 3, 0, 1): spec.rational(-2),
        },
    )
    vb = Form(
        spec,
        4,
        {
            (2, 0, 0, 2): spec.one(),
            (1, 1, 1, 1): spec.rational(-2),
            (0, 2, 2, 0): spec.one(),
        },
    )
    surface = QuarticSurface(va * al + vb * be)
    monos = tuple(weight_monomials(11, (0, 1, 2, 3), 6))
    claims = [
        Claim(
            "monomials",
            {
                "monomials": monos,
                "modulus": 11,
                "weights": (0, 1, 2, 3),
                "target": 6,
            },
        ),
        Claim("solution_dimension", {"dim": 2}),
        Claim("vanishes_on_twisted_cubic", {}),
    ]
    return FamilySpec("sec11", {"alpha": al, "beta": be}, surface, claims)


def _build_syszero(params):
    _reject_unknown_params(params, {"t"}, "sysZero")
    t_val = _param_or(params, "t", Fraction(2))
    spec = _shared_spec([t_val])
    t = _as_tower(spec, t_val)
    sys_params = SysParams(spec, t)
    pencil = sys_build(sys_params)
    one, zero = spec.one(), spec.zero()
    lin_p = Form.monomial(spec, 2, (1, 0))
    lin_q = Form.monomial(spec, 2, (0, 1))
    quartic = lin_p * lin_q * (lin_p - lin_q) * (lin_p - lin_q * t)
    claims = [
        Claim("det_form", {"form": quartic * quartic}),
        Claim("double_roots", {"count": 4}),
    ]
    roots = [(one, zero), (zero, one), (one, one), (t, one)]
    for slot, root in enumerate(roots):
        coords = [0, 0, 0, 0]
        coords[slot] = 1
        claims.append(
            Claim(
                "singular_member",
                {"root": root, "vertex": ProjPoint(spec, coords)},
            )
        )
        claims.append(Claim("node", {"point": ProjPoint(spec, coords)}))
    spec1, alpha = adjoin_sqrt(spec, -t, "alpha")
    spec2, beta = adjoin_sqrt(spec1, t.lift(spec1) - spec1.one(), "beta")
    alpha = alpha.lift(spec2)
    one2 = spec2.one()
    pts = []
    for s0 in (1, -1):
        for s1 in (1, -1):
            for s2 in (1, -1):
                pts.append(
                    ProjPoint(
                        spec2, [alpha * beta * s0, beta * s1, alpha * s2, one2]
                    )
                )
    claims.append(Claim("base_points", {"points": tuple(pts)}))
    if _is_concrete(spec):
        for pt in pts:
            claims.append(Claim("node", {"point": pt}))
        claims.append(Claim("base_points_numeric", {"count": 8}))
        claims.append(Claim("nodes_numeric", {"count": 12}))
    return FamilySpec("sysZero", {"t": t}, pencil, claims)


def _build_pr2(params):
    _reject_unknown_params(params, set(), "pr2")
    spec = TowerSpec(PolyRing(()))
    squares = Form.zero(spec, 4)
    for i in range(4):
        mono = [0, 0, 0, 0]
        mono[i] = 2
        squares = squares + Form.monomial(spec, 4, tuple(mono))
    last = Form.zero(spec, 4)
    for i in range(4):
        for j in range(4):
            mono = [0, 0, 0, 0]
            mono[i] += 1
            mono[j] += 1
            last = last + Form.monomial(spec, 4, tuple(mono))
    sum_sq = squares + last
    quads = Form.zero(spec, 4)
    for i in range(4):
        mono = [0, 0, 0, 0]
        mono[i] = 4
        quads = quads + Form.monomial(spec, 4, tuple(mono))
    quartics = quads + last * last
    form = quartics * 4 - sum_sq * sum_sq
    surface = QuarticSurface(form)
    gens = [
        ("cycle", ProjTransform.permutation(spec, (1, 2, 3, 0))),
        (
            "reflection",
            ProjTransform.from_rows(
                spec,
                [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [-1, -1, -1, -1]],
            ),
        ),
    ]
    claims = []
    for label, g in gens:
        claims.append(Claim("generator", {"label": label, "transform": g}))
        claims.append(Claim("semi_invariant", {"label": label, "transform": g}))
    labels = tuple(label for label, _ in gens)
    claims.append(Claim("group_order", {"order": 120, "labels": labels}))
    claims.append(
        Claim(
            "fingerprint",
            {
                "order": 120,
                "histogram": {1: 1, 2: 25, 3: 20, 4: 30, 5: 24, 6: 20},
            },
        )
    )
    nodes = {}
    for perm in permutations((1, 1, -1, -1, 0)):
        point = ProjPoint(spec, perm[:4])
        nodes[point.coords] = point
    for point in nodes.values():
        claims.append(Claim("node", {"point": point}))
    claims.append(Claim("orbit_lengths", {"lengths": (len(nodes),)}))
    claims.append(Claim("nodes_numeric", {"count": len(nodes)}))
    return FamilySpec("pr2", {}, surface, claims)


_BUILDERS = {
    "eq4": _build_eq4,
    "eq5": _build_eq5,
    "pr2": _build_pr2,
    "pr5": _build_pr5,
    "pr6": _build_pr6,
    "pr8": _build_pr8,
    "pr10": _build_pr10,
    "pr11": _build_pr11,
    "pr13": _build_pr13,
    "pr14": _build_pr14,
    "sec11": _build_sec11,
    "sysZero": _build_syszero,
}

FAMILY_KEYS = tuple(sorted(_BUILDERS))


def build_family(name: str, params: Mapping[str, object] | None = None) -> FamilySpec:
    """The catalog fixture called ``name``, optionally at explicit parameters.

    Each key has safe defaults; parameter values may be ints, Fractions, or
    TowerElems (all TowerElem parameters must share one tower, which then
    hosts the family). Keys whose published instance is parameter-free
    reject parameters. Degenerate parameter choices raise
    ConstraintViolated; group-theoretic claims are only attached when the
    parameters are concrete (no free ring variables).
    """
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise UnknownFamily(f"no family under key {name!r}") from None
    return builder(params)


def _compare_eq4() -> dict:
    spec = TowerSpec(PolyRing(()))
    basis = power_sum_basis(spec)
    sol = solve_singularity_constraints(
        basis, [ProjPoint(spec, (0, 0, 0, 1))]
    )
    printed = (1, -2, 1, 0)
    status = "MATCH" if sol.contains(printed) else "MISMATCH"
    return {
        "printed": "s1^4 - 2*s1^2*s2 + s2^2",
        "derived": f"solution space of dimension {sol.dim}"
        " through s1^4 - 2*s1^2*s2 + s2^2",
        "status": status,
        "detail": "printed coefficient vector (1, -2, 1, 0) lies in the"
        " solution space of the node-at-(0:0:0:1) constraints",
    }


def _compare_eq5() -> dict:
    spec = TowerSpec(PolyRing(()))
    basis = power_sum_basis(spec)
    point = ProjPoint(spec, (1, 1, 0, 0))
    sol = solve_singularity_constraints(basis, [point])
    printed = (1, -1, Fraction(1, 4), 0)
    inside = sol.contains(printed)
    form = power_sum_quartic(spec, printed)
    value = form.evaluate([spec.rational(c) for c in (1, 1, 0, 0)])
    status = "MATCH" if inside else "MISMATCH"
    return {
        "printed": "s2^2 - s1^2*s2 + 1/4*s1^4",
        "derived": "s2^2 - 2*s1*s3 + 1/2*s1^2*s2"
        " + A*(s1^4 - 6*s1^2*s2 + 8*s1*s3)",
        "status": status,
        "detail": "printed quartic does not pass through the claimed node:"
        f" value at (1:1:0:0) is {value}, and the vector (1, -1, 1/4, 0)"
        " is outside the constraint solution space",
    }


def _compare_pr5() -> dict:
    spec = TowerSpec(PolyRing(()))
    basis = symmetric_quartic_basis(spec)
    half = Fraction(1, 2)
    point = ProjPoint(spec, (half, half, 0, 1))
    plane = ProjPlane(
        spec, (1, Fraction(-1, 3), Fraction(-1, 3), Fraction(-1, 3))
    )
    sol = solve_singularity_constraints(basis, [point], tropes=(plane,))
    v_b = (Fraction(-29, 72), 1, Fraction(-59, 36), 0, -5)
    v_d = (Fraction(5, 72), 0, Fraction(-37, 36), 1, -7)
    inside = sol.contains(v_b) and sol.contains(v_d)
    status = "MATCH" if inside else "MISMATCH"
    return {
        "printed": "a = (-29b + 5d)/72, c = (-59b - 37d)/36, e = -5b - 7d",
        "derived": f"solution space of dimension {sol.dim}"
        " containing both printed basis vectors",
        "status": status,
        "detail": "printed two-parameter family solves the node and trope"
        " constraints exactly; the trope adds no new conditions",
    }


def _compare_pr10() -> dict:
    fam = _build_pr10(None)
    spec = fam.spec
    disc = fam.payload.discriminant_quartic().form
    printed_tau = ProjTransform.from_rows(
        spec, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]
    )
    corrected_tau = ProjTransform.from_rows(
        spec, [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
    )
    printed_factor = semi_invariant_factor(printed_tau, disc)
    corrected_factor = semi_invariant_factor(corrected_tau, disc)
    bad = printed_factor is None and corrected_factor is not None
    status = "MISMATCH" if bad else "MATCH"
    return {
        "printed": "tau = (x0 : x1 : x3 : -x2)",
        "derived": "tau = (x0 : -x1 : x3 : x2)",
        "status": status,
        "detail": "the printed involution does not preserve the quartic"
        " (no semi-invariance scalar exists; it has order 4, not 2);"
        " negating the x1 slot fixes it",
    }


def _compare_pr13() -> dict:
    fam = _build_pr13(None)
    pencil = fam.payload
    spec = fam.spec
    q2 = pencil.quadrics[1]
    flipped = dict(q2.form.coeffs)
    for mono in ((1, 1, 0, 0), (0, 0, 1, 1)):
        flipped[mono] = -flipped[mono]
    printed_q2 = Form(spec, 4, flipped)
    printed = Pencil.from_forms(pencil.quadrics[0].form, printed_q2,
                                pencil.quadrics[2].form)
    failures = 0
    checked = 0
    for claim in fam.claims("singular_member"):
        p, q = claim.data["root"]
        vertex = claim.data["vertex"]
        image = printed.member(p, q).matrix().apply(list(vertex.coords))
        checked += 1
        if not all(c.is_zero for c in image):
            failures += 1
    status = "MISMATCH" if failures else "MATCH"
    return {
        "printed": "middle quadric cross terms -4b*sqrt(a - a^2)*x0*x1"
        " and -4b*sqrt(a - a^2)*x2*x3",
        "derived": "middle quadric cross terms +4b*sqrt(a - a^2)*x0*x1"
        " and +4b*sqrt(a - a^2)*x2*x3",
        "status": status,
        "detail": "with the printed signs the members at"
        f" {failures} of {checked} claimed roots fail to be singular at"
        " their vertices; flipping both cross-term signs repairs every"
        " incidence, and all other printed coefficients agree",
    }


def _compare_pr14() -> dict:
    fam = _build_pr14(None)
    spec = fam.spec
    one = spec.one()
    r3 = spec.radical("r3")
    al = (one + r3) / 2
    be = (one - r3) / 2
    printed = Pencil.from_forms(
        Form(
            spec,
            4,
            {
                (0, 2, 0, 0): one,
                (0, 0, 2, 0): -be,
                (0, 0, 1, 1): be - one,
                (0, 0, 0, 2): one,
            },
        ),
        Form(
            spec,
            4,
            {(2, 0, 0, 0): al * al, (0, 0, 2, 0): al, (0, 0, 1, 1): al + one},
        ),
        Form(
            spec,
            4,
            {
                (2, 0, 0, 0): -(r3 * 2),
                (1, 1, 0, 0): al * 2,
                (0, 2, 0, 0): -(al + one),
                (0, 0, 2, 0): one,
                (0, 0, 1, 1): al * al * 2,
                (0, 0, 0, 2): -(al + one),
            },
        ),
    )
    failures = 0
    checked = 0
    for claim in fam.claims("singular_member"):
        p, q = claim.data["root"]
        vertex = claim.data["vertex"]
        image = printed.member(p, q).matrix().apply(list(vertex.coords))
        checked += 1
        if not all(c.is_zero for c in image):
            failures += 1
    status = "MISMATCH" if failures else "MATCH"
    return {
        "printed": "middle quadric alpha^2*x0^2 + alpha*x2^2 +"
        " (1 + alpha)*x2*x3; last quadric with -2*sqrt(-3)*x0^2",
        "derived": "middle and last quadrics exchanged, with"
        " -sqrt(-3)*x0^2 and -alpha*x2^2 in place of the printed"
        " coefficients",
        "status": status,
        "detail": "as printed the members at"
        f" {failures} of {checked} claimed roots fail to be singular at"
        " their vertices; swapping the two quadrics and correcting the"
        " two coefficients repairs every incidence",
    }


def _compare_sec11() -> dict:
    spec = TowerSpec(PolyRing(()))
    monos = weight_monomials(11, (0, 1, 2, 3), 6)
    sol = twisted_cubic_singular_space(spec, monos)
    idx = {m: i for i, m in enumerate(monos)}
    vec_a = [0] * len(monos)
    vec_a[idx[(2, 0, 0, 2)]] = 1
    vec_a[idx[(0, 2, 2, 0)]] = 3
    vec_a[idx[(1, 0, 3, 0)]] = -2
    vec_a[idx[(0, 3, 0, 1)]] = -2
    vec_b = [0] * len(monos)
    vec_b[idx[(2, 0, 0, 2)]] = 1
    vec_b[idx[(1, 1, 1, 1)]] = -2
    vec_b[idx[(0, 2, 2, 0)]] = 1
    inside = sol.contains(vec_a) and sol.contains(vec_b)
    status = "MATCH" if (inside and sol.dim == 2) else "MISMATCH"
    return {
        "printed": "x0^2*x3^2 + 3*x1^2*x2^2 - 2*x0*x2^3 - 2*x1^3*x3 and"
        " x0^2*x3^2 - 2*x0*x1*x2*x3 + x1^2*x2^2",
        "derived": f"solution space of dimension {sol.dim}"
        " over the five admissible monomials",
        "status": status,
        "detail": "both printed quartics lie in the twisted-cubic"
        " singularity space, which is exactly two-dimensional",
    }


_COMPARISONS = {
    "eq4": _compare_eq4,
    "eq5": _compare_eq5,
    "pr5": _compare_pr5,
    "pr10": _compare_pr10,
    "pr13": _compare_pr13,
    "pr14": _compare_pr14,
    "sec11": _compare_sec11,
}


def paper_comparison(key: str) -> dict:
    """Recompute a recorded published-versus-derived comparison.

    Returns a dict with keys ``key``, ``status`` (MATCH or MISMATCH),
    ``printed``, ``derived`` and ``detail``. The status is recomputed live
    from the stated constraints, never read from a stored verdict. Raises
    UnknownFamily for keys with no recorded comparison.
    """
    try:
        compare = _COMPARISONS[key]
    except KeyError:
        raise UnknownFamily(f"no recorded comparison under {key!r}") from None
    result = {"key": key}
    result.update(compare())
    return result


class CheckOutcome:
    """Result of checking one claim: a pass/fail/skip status plus detail."""

    __slots__ = ("status", "detail")

    def __init__(self, status: str, detail: str):
        if status not in ("pass", "fail", "skip"):
            raise ValueError(f"unknown outcome status {status!r}")
        self.status = status
        self.detail = detail

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def __repr__(self) -> str:
        return f"CheckOutcome<{self.status}: {self.detail}>"


def _join_spec(specs: Sequence[TowerSpec]) -> TowerSpec:
    best = specs[0]
    for spec in specs[1:]:
        if best.is_prefix_of(spec):
            best = spec
        elif not spec.is_prefix_of(best):
            raise FamilyError("claim data lives over incompatible towers")
    return best


def _family_group(family: FamilySpec, labels=None, cap: int = 1024):
    gens = {}
    for claim in family.claims("generator"):
        gens[claim.data["label"]] = claim.data["transform"]
    if labels is None:
        labels = tuple(gens)
    try:
        chosen = [gens[label] for label in labels]
    except KeyError as exc:
        raise FamilyError(f"no generator labeled {exc.args[0]!r}") from None
    if not chosen:
        raise FamilyError("family carries no generator claims")
    spec = _join_spec([g.matrix.spec for g in chosen])
    return closure([g.lift(spec) for g in chosen], cap=cap), spec


def check_claim(
    family: FamilySpec,
    claim: Claim,
    numeric: bool = True,
    closure_cap: int = 1024,
    residual_tol: float = 1e-9,
    dedup_tol: float = 1e-6,
    seed: int = 1,
) -> CheckOutcome:
    """Check one catalog claim against the family payload.

    Numeric claims (``nodes_numeric``, ``base_points_numeric``) are skipped
    when ``numeric`` is false. Everything else is exact arithmetic.
    """
    kind = claim.kind
    data = claim.data
    if kind == "node":
        point = data["point"]
        form = family.surface.form
        if form.spec != point.spec:
            form = form.lift(point.spec)
        verdict = is_node(QuarticSurface(form), point)
        if verdict.kind == "NodeCertified":
            return CheckOutcome("pass", f"certified node at {point}")
        return CheckOutcome("fail", f"{verdict.kind} at {point}")
    if kind == "trope":
        plane = data["plane"]
        form = family.surface.form
        if form.spec != plane.spec:
            form = form.lift(plane.spec)
        conic = trope_check(QuarticSurface(form), plane)
        if conic is None:
            return CheckOutcome("fail", f"no double conic on {plane}")
        return CheckOutcome("pass", f"double conic on {plane}")
    if kind == "generator":
        g = data["transform"]
        g.inverse()
        return CheckOutcome("pass", f"generator {data['label']} invertible")
    if kind == "semi_invariant":
        g = data["transform"]
        form = family.surface.form
        if form.spec != g.matrix.spec:
            form = form.lift(g.matrix.spec)
        factor = semi_invariant_factor(g, form)
        if factor is None:
            return CheckOutcome(
                "fail", f"{data['label']} does not rescale the quartic"
            )
        return CheckOutcome(
            "pass", f"{data['label']} rescales the quartic by {factor}"
        )
    if kind == "group_order":
        group, _ = _family_group(family, data["labels"], cap=closure_cap)
        if len(group) == data["order"]:
            return CheckOutcome("pass", f"closure order {len(group)}")
        return CheckOutcome(
            "fail", f"closure order {len(group)} != {data['order']}"
        )
    if kind == "fingerprint":
        group, _ = _family_group(family, cap=closure_cap)
        fp = fingerprint(group)
        hist = dict(fp.element_order_histogram)
        if fp.order == data["order"] and hist == dict(data["histogram"]):
            return CheckOutcome(
                "pass", f"order {fp.order}, element orders {hist}"
            )
        return CheckOutcome(
            "fail",
            f"order {fp.order} with element orders {hist};"
            f" expected {data['order']} with {dict(data['histogram'])}",
        )
    if kind == "orbit_lengths":
        points = [c.data["point"] for c in family.claims("node")]
        if not points:
            return CheckOutcome("fail", "no node claims to act on")
        gens = [c.data["transform"] for c in family.claims("generator")]
        if not gens:
            return CheckOutcome("fail", "no generator claims to act with")
        spec = _join_spec(
            [g.matrix.spec for g in gens] + [p.spec for p in points]
        )
        group = closure([g.lift(spec) for g in gens], cap=closure_cap)
        lifted = [
            p
            if p.spec == spec
            else ProjPoint(spec, [c.lift(spec) for c in p.coords])
            for p in points
        ]
        report = orbits_on_points(group, lifted)
        got = tuple(sorted(report.lengths))
        want = tuple(sorted(data["lengths"]))
        if got == want:
            return CheckOutcome("pass", f"orbit lengths {got}")
        return CheckOutcome("fail", f"orbit lengths {got} != {want}")
    if kind == "singular_member":
        p, q = data["root"]
        member = family.payload.member(p, q)
        rank = member.rank()
        if rank != 3:
            return CheckOutcome(
                "fail", f"member at ({p} : {q}) has rank {rank}"
            )
        vertex = member.vertex()
        if vertex != data["vertex"]:
            return CheckOutcome(
                "fail",
                f"member at ({p} : {q}) is singular at {vertex},"
                f" not {data['vertex']}",
            )
        return CheckOutcome(
            "pass", f"member at ({p} : {q}) has rank 3 with vertex {vertex}"
        )
    if kind == "double_roots":
        count = family.payload.double_root_count()
        if count == data["count"]:
            return CheckOutcome("pass", f"{count} double roots")
        return CheckOutcome(
            "fail", f"{count} double roots != {data['count']}"
        )
    if kind == "det_form":
        det = family.payload.det_binary_form()
        diff = det - data["form"]
        if any(not c.is_zero for _, c in diff.terms()):
            return CheckOutcome("fail", "determinant form differs")
        return CheckOutcome("pass", "determinant form matches exactly")
    if kind == "base_points":
        points = list(data["points"])
        spec = _join_spec([family.spec] + [p.spec for p in points])
        pencil = family.payload
        if pencil.spec != spec:
            pencil = pencil.lift(spec)
        verdicts = pencil.verify_base_points(points)
        bad = [
            v for v in verdicts if not (v.on_pencil and v.transversal)
        ]
        if bad:
            return CheckOutcome(
                "fail", f"{len(bad)} of {len(points)} base points fail"
            )
        return CheckOutcome(
            "pass", f"all {len(points)} base points exact and transversal"
        )
    if kind == "base_points_numeric":
        if not numeric:
            return CheckOutcome("skip", "numeric oracle disabled")
        result = numeric_base_points(
            family.payload,
            residual_tol=residual_tol,
            dedup_tol=dedup_tol,
            seed=seed,
        )
        found = len(result.points)
        worst = max(result.residuals) if result.residuals else 0.0
        if found == data["count"] and worst < residual_tol:
            return CheckOutcome(
                "pass",
                f"{found} base points, max residual {worst:.3e}",
            )
        return CheckOutcome(
            "fail",
            f"{found} base points (expected {data['count']}),"
            f" max residual {worst:.3e}",
        )
    if kind == "nodes_numeric":
        if not numeric:
            return CheckOutcome("skip", "numeric oracle disabled")
        result = numeric_singular_points(
            family.surface,
            residual_tol=residual_tol,
            dedup_tol=dedup_tol,
            seed=seed,
        )
        found = len(result.points)
        worst = max(result.residuals) if result.residuals else 0.0
        if found == data["count"] and worst < residual_tol:
            return CheckOutcome(
                "pass", f"{found} singular points, max residual {worst:.3e}"
            )
        return CheckOutcome(
            "fail",
            f"{found} singular points (expected {data['count']}),"
            f" max residual {worst:.3e}",
        )
    if kind == "monomials":
        recomputed = tuple(
            weight_monomials(data["modulus"], data["weights"], data["target"])
        )
        support = set(m for m, _ in family.surface.form.terms())
        claimed = set(data["monomials"])
        if set(recomputed) != claimed:
            return CheckOutcome("fail", "weight selection changed")
        if not support <= claimed:
            return CheckOutcome(
                "fail", "payload uses monomials outside the claimed list"
            )
        return CheckOutcome(
            "pass", f"{len(claimed)} admissible monomials, payload inside"
        )
    if kind == "solution_dimension":
        mono_claims = family.claims("monomials")
        if not mono_claims:
            return CheckOutcome("fail", "no monomials claim to solve over")
        monos = mono_claims[0].data["monomials"]
        base = TowerSpec(PolyRing(()))
        space = twisted_cubic_singular_space(base, monos)
        if space.dim == data["dim"]:
            return CheckOutcome("pass", f"solution dimension {space.dim}")
        return CheckOutcome(
            "fail", f"solution dimension {space.dim} != {data['dim']}"
        )
    if kind == "vanishes_on_twisted_cubic":
        if vanish_on_twisted_cubic(family.surface):
            return CheckOutcome("pass", "singular along the twisted cubic")
        return CheckOutcome("fail", "not singular along the twisted cubic")
    return CheckOutcome("fail", f"unknown claim kind {kind!r}")
