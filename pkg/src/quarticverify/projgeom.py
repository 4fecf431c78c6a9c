"""Projective geometry predicates on P^3.

Points, planes, quartic surfaces, node certification through local Hessians,
double-conic (trope) detection, conic spaces through point sets, and
configuration ranks.  Everything is exact over a quadratic tower.
"""

from __future__ import annotations

from typing import Sequence

from .exactfield import TowerElem, TowerSpec
from .linalg import Matrix
from .multipoly import Form, monomials

__all__ = [
    "GeometryError",
    "PointOffPlane",
    "IdenticallyZeroRestriction",
    "ProjPoint",
    "ProjPlane",
    "QuarticSurface",
    "Smooth",
    "NodeCertified",
    "DegenerateSingular",
    "is_node",
    "trope_check",
    "TropeConic",
    "conic_space_through",
    "configuration_rank",
]


class GeometryError(ValueError):
    pass


class PointOffPlane(GeometryError):
    pass


class IdenticallyZeroRestriction(GeometryError):
    pass


def _as_elem(spec: TowerSpec, value) -> TowerElem:
    if isinstance(value, TowerElem):
        return value if value.spec == spec else value.lift(spec)
    return spec.rational(value)


class ProjPoint:
    """A point of P^3 stored by its canonical representative.

    The first nonzero coordinate is scaled to 1, so equality and hashing
    are projective.
    """

    __slots__ = ("spec", "coords", "pivot")

    def __init__(self, spec: TowerSpec, coords: Sequence):
        raw = [_as_elem(spec, c) for c in coords]
        if len(raw) != 4:
            raise GeometryError("projective points here live in P^3")
        pivot = next((i for i, c in enumerate(raw) if not c.is_zero), None)
        if pivot is None:
            raise GeometryError("all-zero coordinates")
        inv = raw[pivot].inverse()
        self.spec = spec
        self.coords = tuple(c * inv for c in raw)
        self.pivot = pivot

    def _key(self):
        return (self.spec, self.coords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return "(" + " : ".join(repr(c) for c in self.coords) + ")"

    def lift(self, spec: TowerSpec) -> "ProjPoint":
        return ProjPoint(spec, [c.lift(spec) for c in self.coords])

    def specialize(self, assignment) -> "ProjPoint":
        from .exactfield import specialization_plan

        plan = specialization_plan(self.spec, assignment)
        return ProjPoint(plan.new_spec, [plan.apply(c) for c in self.coords])

    def embed(self, values=None) -> tuple[complex, ...]:
        return tuple(c.embed(values) for c in self.coords)


class ProjPlane:
    """A hyperplane sum_i a_i x_i = 0 of P^3."""

    __slots__ = ("spec", "coeffs", "form")

    def __init__(self, spec: TowerSpec, coeffs: Sequence):
        raw = tuple(_as_elem(spec, c) for c in coeffs)
        if len(raw) != 4:
            raise GeometryError("planes here live in P^3")
        if all(c.is_zero for c in raw):
            raise GeometryError("zero plane")
        self.spec = spec
        self.coeffs = raw
        self.form = Form(
            spec,
            4,
            {
                tuple(1 if j == i else 0 for j in range(4)): c
                for i, c in enumerate(raw)
                if not c.is_zero
            },
        )

    @classmethod
    def from_form(cls, form: Form) -> "ProjPlane":
        if form.degree != 1 or form.nvars != 4:
            raise GeometryError("plane needs a linear form in four variables")
        coeffs = [form.coefficient(tuple(1 if j == i else 0 for j in range(4))) for i in range(4)]
        return cls(form.spec, coeffs)

    def contains(self, point: ProjPoint) -> bool:
        total = self.spec.zero()
        for a, x in zip(self.coeffs, point.coords):
            total = total + a * x
        return total.is_zero

    def __repr__(self) -> str:
        return f"Plane<{self.form!r}>"


class QuarticSurface:
    """A quartic surface in P^3 (not assumed reduced)."""

    __slots__ = ("spec", "form", "_grad", "_hess")

    def __init__(self, form: Form):
        if form.nvars != 4:
            raise GeometryError("quartic surfaces here live in P^3")
        if form.is_zero or form.degree != 4:
            raise GeometryError("surface needs a nonzero degree-4 form")
        self.spec = form.spec
        self.form = form
        self._grad = None
        self._hess = None

    def gradient(self) -> list[Form]:
        if self._grad is None:
            self._grad = self.form.gradient()
        return self._grad

    def second_partials(self) -> list[list[Form]]:
        if self._hess is None:
            grad = self.gradient()
            hess = [[None] * 4 for _ in range(4)]
            for i in range(4):
                for j in range(i, 4):
                    hess[i][j] = hess[j][i] = grad[i].partial(j)
            self._hess = hess
        return self._hess

    def __repr__(self) -> str:
        return f"Quartic<{self.form!r}>"


class Smooth:
    """The surface is nonsingular at the point (on or off the surface)."""

    __slots__ = ("on_surface",)
    kind = "Smooth"

    def __init__(self, on_surface: bool):
        self.on_surface = on_surface

    @property
    def is_node(self) -> bool:
        return False

    def __repr__(self) -> str:
        where = "on" if self.on_surface else "off"
        return f"Smooth({where} surface)"


class NodeCertified:
    """Vanishing gradient with nondegenerate local 3x3 Hessian."""

    __slots__ = ("hessian",)
    kind = "NodeCertified"

    def __init__(self, hessian: Matrix):
        self.hessian = hessian

    @property
    def is_node(self) -> bool:
        return True

    def __repr__(self) -> str:
        return "NodeCertified"


class DegenerateSingular:
    """Singular point whose local Hessian drops rank (not an ordinary node)."""

    __slots__ = ("hessian_rank",)
    kind = "DegenerateSingular"

    def __init__(self, hessian_rank: int):
        self.hessian_rank = hessian_rank

    @property
    def is_node(self) -> bool:
        return False

    def __repr__(self) -> str:
        return f"DegenerateSingular(rank {self.hessian_rank})"


def is_node(surface: QuarticSurface, point: ProjPoint):
    """Certify an ordinary double point.

    Verdicts: in the affine chart x_k = 1 around the point (k its pivot
    coordinate) the local equation has the same second partials as the
    homogeneous form, so the 3x3 Hessian is read off the rows and columns
    complementary to k.  NodeCertified iff that matrix is nonsingular.
    """
    spec = surface.spec
    p = point if point.spec == spec else point.lift(spec)
    grad = [g.evaluate(p.coords) for g in surface.gradient()]
    if any(not g.is_zero for g in grad):
        return Smooth(on_surface=surface.form.evaluate(p.coords).is_zero)
    # Euler's identity forces F(p) = 0 once the gradient vanishes.
    k = p.pivot
    hess = surface.second_partials()
    keep = [i for i in range(4) if i != k]
    local = Matrix(spec, [[hess[i][j].evaluate(p.coords) for j in keep] for i in keep])
    rank = local.rank()
    if rank == 3:
        return NodeCertified(local)
    return DegenerateSingular(rank)


class TropeConic:
    """A conic C with Q|_P = scalar * C^2 in the plane chart omitting `pivot`."""

    __slots__ = ("conic", "scalar", "pivot", "kept")

    def __init__(self, conic: Form, scalar: TowerElem, pivot: int):
        self.conic = conic
        self.scalar = scalar
        self.pivot = pivot
        self.kept = tuple(i for i in range(4) if i != pivot)

    def __repr__(self) -> str:
        return f"TropeConic({self.conic!r}, scalar={self.scalar!r}, chart drops x{self.pivot})"


def trope_check(surface: QuarticSurface, plane: ProjPlane) -> TropeConic | None:
    """Detect a double conic: Q restricted to the plane is a perfect square."""
    restricted, pivot = surface.form.restrict_to_hyperplane(plane.coeffs)
    if restricted.is_zero:
        raise IdenticallyZeroRestriction(
            "the plane is a component of the quartic; restriction vanishes identically"
        )
    result = restricted.perfect_square_root()
    if result is None:
        return None
    conic, scalar = result
    if conic.degree != 2:
        return None
    return TropeConic(conic, scalar, pivot)


def conic_matrix(conic: Form) -> Matrix:
    """The symmetric 3x3 matrix of a ternary quadratic form."""
    if conic.nvars != 3 or (not conic.is_zero and conic.degree != 2):
        raise GeometryError("expected a ternary quadratic form")
    spec = conic.spec
    half = spec.rational(1) / spec.rational(2)
    rows = []
    for i in range(3):
        row = []
        for j in range(3):
            mono = tuple(
                (2 if k == i else 0) if i == j else (1 if k in (i, j) else 0)
                for k in range(3)
            )
            c = conic.coefficient(mono)
            row.append(c if i == j else c * half)
        rows.append(row)
    return Matrix(spec, rows)


def conic_space_through(
    plane: ProjPlane, points: Sequence[ProjPoint]
) -> tuple[int, list[Form], list[int]]:
    """Conics in the plane through all the points.

    The plane is charted by dropping its first-nonzero coefficient
    coordinate (matching restrict_to_hyperplane).  Returns (dimension,
    basis conics as ternary quadratic Forms, rank of each basis conic's
    symmetric matrix).
    """
    spec = plane.spec
    pivot = next(i for i, c in enumerate(plane.coeffs) if not c.is_zero)
    keep = [i for i in range(4) if i != pivot]
    monos = monomials(3, 2)
    rows = []
    for point in points:
        pt = point if point.spec == spec else point.lift(spec)
        if not plane.contains(pt):
            raise PointOffPlane(f"{point!r} is not on the plane")
        chart = [pt.coords[i] for i in keep]
        row = []
        for m in monos:
            v = spec.one()
            for coord, e in zip(chart, m):
                for _ in range(e):
                    v = v * coord
            row.append(v)
        rows.append(row)
    if not rows:
        vectors = [[spec.one() if i == j else spec.zero() for j in range(6)] for i in range(6)]
    else:
        vectors = Matrix(spec, rows).kernel_basis()
    conics = []
    ranks = []
    for vec in vectors:
        conic = Form(spec, 3, {m: c for m, c in zip(monos, vec) if not c.is_zero})
        conics.append(conic)
        ranks.append(conic_matrix(conic).rank())
    return len(vectors), conics, ranks


def configuration_rank(points: Sequence[ProjPoint]) -> int:
    """Rank of the 4-column coordinate matrix: 2 collinear, 3 coplanar, 4 spanning."""
    if not points:
        raise GeometryError("empty point list")
    spec = points[0].spec
    rows = [[c for c in (p if p.spec == spec else p.lift(spec)).coords] for p in points]
    return Matrix(spec, rows).rank()
