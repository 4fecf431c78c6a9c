"""Finite subgroups of PGL4 over exact tower fields.

A projective transformation is a 4x4 invertible matrix up to scalars; we
store the canonical representative whose first nonzero entry (in row-major
order) is 1.  Groups are built as breadth-first closures of generator
lists, with a cap against runaway (infinite or mistyped) generator sets.
Structure is summarized by a fingerprint -- order, element-order histogram,
abelianness, center and derived-subgroup orders -- which separates all the
groups this package needs to tell apart without a small-group database.
"""

from __future__ import annotations

from typing import Sequence

from .exactfield import TowerElem, TowerSpec
from .linalg import Matrix
from .multipoly import Form, proportionality
from .projgeom import ProjPoint

__all__ = [
    "MatGroupError",
    "CapExceeded",
    "NotInvariantSet",
    "ProjTransform",
    "GroupClosure",
    "Fingerprint",
    "OrbitReport",
    "closure",
    "fingerprint",
    "semi_invariant_factor",
    "orbits_on_points",
]


class MatGroupError(ValueError):
    """Base error for projective group computations."""


class CapExceeded(MatGroupError):
    """Closure grew past the element cap; carries the partial size."""

    def __init__(self, cap: int, partial_size: int):
        super().__init__(f"group closure exceeded cap {cap} (partial size {partial_size})")
        self.cap = cap
        self.partial_size = partial_size


class NotInvariantSet(MatGroupError):
    """A group element mapped a point outside the candidate point set."""

    def __init__(self, element: "ProjTransform", point: ProjPoint):
        super().__init__(f"element {element!r} maps {point!r} outside the point set")
        self.element = element
        self.point = point


class ProjTransform:
    """An invertible 4x4 matrix normalized projectively.

    The stored matrix has its first nonzero entry in row-major order equal
    to 1, so equality and hashing compare projective transformations, not
    their scalar lifts.
    """

    __slots__ = ("matrix",)

    def __init__(self, matrix: Matrix):
        if matrix.shape != (4, 4):
            raise MatGroupError(f"expected a 4x4 matrix, got {matrix.shape}")
        pivot = None
        for i in range(4):
            for j in range(4):
                if not matrix[i, j].is_zero:
                    pivot = matrix[i, j]
                    break
            if pivot is not None:
                break
        if pivot is None:
            raise MatGroupError("zero matrix is not a projective transformation")
        if matrix.det().is_zero:
            raise MatGroupError("matrix is singular")
        inv = pivot.inverse()
        rows = [[matrix[i, j] * inv for j in range(4)] for i in range(4)]
        object.__setattr__(self, "matrix", Matrix(matrix.spec, rows))

    def __setattr__(self, name, value):
        raise AttributeError("ProjTransform is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rows(cls, spec: TowerSpec, rows: Sequence[Sequence]) -> "ProjTransform":
        return cls(Matrix(spec, rows))

    @classmethod
    def identity(cls, spec: TowerSpec) -> "ProjTransform":
        return cls(Matrix.identity(spec, 4))

    @classmethod
    def diagonal(cls, spec: TowerSpec, entries: Sequence) -> "ProjTransform":
        if len(entries) != 4:
            raise MatGroupError("need exactly 4 diagonal entries")
        rows = [[entries[i] if i == j else 0 for j in range(4)] for i in range(4)]
        return cls.from_rows(spec, rows)

    @classmethod
    def permutation(cls, spec: TowerSpec, images: Sequence[int]) -> "ProjTransform":
        """The map sending coordinate i to coordinate images[i]."""
        if sorted(images) != [0, 1, 2, 3]:
            raise MatGroupError(f"{images} is not a permutation of 0..3")
        rows = [[1 if images[j] == i else 0 for j in range(4)] for i in range(4)]
        return cls.from_rows(spec, rows)

    # -- identity -----------------------------------------------------------

    @property
    def spec(self) -> TowerSpec:
        return self.matrix.spec

    def __eq__(self, other) -> bool:
        return isinstance(other, ProjTransform) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        rows = "; ".join(
            "[" + ", ".join(str(self.matrix[i, j]) for j in range(4)) + "]" for i in range(4)
        )
        return f"ProjTransform({rows})"

    @property
    def is_identity(self) -> bool:
        return self.matrix == Matrix.identity(self.spec, 4)

    # -- arithmetic ----------------------------------------------------------

    def __matmul__(self, other: "ProjTransform") -> "ProjTransform":
        return ProjTransform(self.matrix @ other.matrix)

    def inverse(self) -> "ProjTransform":
        return ProjTransform(self.matrix.inverse())

    def order(self, cap: int = 1024) -> int:
        """Projective order by iterated multiplication."""
        power = self
        for n in range(1, cap + 1):
            if power.is_identity:
                return n
            power = power @ self
        raise CapExceeded(cap, cap)

    # -- actions -------------------------------------------------------------

    def apply_point(self, point: ProjPoint) -> ProjPoint:
        return ProjPoint(self.spec, self.matrix.apply(point.coords))

    def act_on_form(self, form: Form) -> Form:
        """The pullback F(M x)."""
        rows = [[self.matrix[i, j] for j in range(4)] for i in range(4)]
        return form.substitute_linear(rows)

    # -- tower plumbing --------------------------------------------------------

    def lift(self, spec: TowerSpec) -> "ProjTransform":
        return ProjTransform(self.matrix.lift(spec))

    def specialize(self, assignment) -> "ProjTransform":
        return ProjTransform(self.matrix.specialize(assignment))


class GroupClosure:
    """An explicitly enumerated finite subgroup of PGL4.

    Elements are stored in breadth-first discovery order (deterministic for
    a fixed generator list), the first element being the identity.
    """

    __slots__ = ("elements", "generators", "multiplication_certificate", "_index")

    def __init__(
        self,
        elements: Sequence[ProjTransform],
        generators: Sequence[ProjTransform],
        multiplication_certificate: bool,
    ):
        object.__setattr__(self, "elements", tuple(elements))
        object.__setattr__(self, "generators", tuple(generators))
        object.__setattr__(self, "multiplication_certificate", multiplication_certificate)
        object.__setattr__(self, "_index", {e: k for k, e in enumerate(self.elements)})

    def __setattr__(self, name, value):
        raise AttributeError("GroupClosure is immutable")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, item) -> bool:
        return item in self._index

    @property
    def order(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"GroupClosure(order={len(self.elements)}, ngens={len(self.generators)})"


class Fingerprint:
    """Structure summary of a finite group: strong enough to separate all
    the groups that appear in this package without a group database."""

    __slots__ = ("order", "element_order_histogram", "abelian", "center_order", "derived_order")

    def __init__(
        self,
        order: int,
        element_order_histogram: dict[int, int],
        abelian: bool,
        center_order: int,
        derived_order: int,
    ):
        self.order = order
        self.element_order_histogram = dict(element_order_histogram)
        self.abelian = abelian
        self.center_order = center_order
        self.derived_order = derived_order
        if sum(self.element_order_histogram.values()) != order:
            raise MatGroupError("histogram does not sum to the group order")
        if order % max(center_order, 1) != 0:
            raise MatGroupError("center order must divide the group order")

    def _key(self):
        return (
            self.order,
            tuple(sorted(self.element_order_histogram.items())),
            self.abelian,
            self.center_order,
            self.derived_order,
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, Fingerprint) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        hist = ", ".join(f"{k}:{v}" for k, v in sorted(self.element_order_histogram.items()))
        return (
            f"Fingerprint(order={self.order}, histogram={{{hist}}}, "
            f"abelian={self.abelian}, center={self.center_order}, derived={self.derived_order})"
        )


class OrbitReport:
    """Orbit partition of a group acting on a finite point set."""

    __slots__ = ("points", "orbits", "lengths", "forbidden_lengths", "permutations")

    def __init__(
        self,
        points: tuple[ProjPoint, ...],
        orbits: tuple[tuple[int, ...], ...],
        permutations: tuple[tuple[int, ...], ...],
    ):
        self.points = points
        self.orbits = orbits
        self.lengths = tuple(len(o) for o in orbits)
        # Short orbits that a nodal-orbit argument rules out downstream.
        self.forbidden_lengths = tuple(n for n in self.lengths if n in (1, 2, 3, 5))
        self.permutations = permutations

    def orbit_points(self) -> tuple[tuple[ProjPoint, ...], ...]:
        return tuple(tuple(self.points[i] for i in orbit) for orbit in self.orbits)

    def __repr__(self) -> str:
        return f"OrbitReport(lengths={sorted(self.lengths)})"


def closure(gens: Sequence[ProjTransform], cap: int = 1024) -> GroupClosure:
    """Breadth-first closure of a generator list under multiplication.

    Every element is a word in the generators; for a finite set that is
    automatically a group.  Inverse membership is verified explicitly and
    recorded in the multiplication certificate.  Raises CapExceeded as soon
    as more than ``cap`` distinct elements appear.
    """
    if cap < 1:
        raise MatGroupError("cap must be at least 1")
    gens = list(gens)
    if not gens:
        raise MatGroupError("need at least one generator")
    spec = gens[0].spec
    for g in gens:
        if g.spec != spec:
            raise MatGroupError("generators live over different towers")
    identity = ProjTransform.identity(spec)
    elements = [identity]
    seen = {identity}
    queue = [identity]
    while queue:
        e = queue.pop(0)
        for g in gens:
            h = e @ g
            if h not in seen:
                if len(seen) + 1 > cap:
                    raise CapExceeded(cap, len(seen) + 1)
                seen.add(h)
                elements.append(h)
                queue.append(h)
    certificate = all(e.inverse() in seen for e in elements)
    return GroupClosure(elements, gens, certificate)


def _subgroup_closure(seed: Sequence[ProjTransform], spec: TowerSpec, cap: int) -> list[ProjTransform]:
    identity = ProjTransform.identity(spec)
    elements = [identity]
    seen = {identity}
    queue = [identity]
    gens = [g for g in seed if not g.is_identity]
    while queue:
        e = queue.pop(0)
        for g in gens:
            h = e @ g
            if h not in seen:
                if len(seen) + 1 > cap:
                    raise CapExceeded(cap, len(seen) + 1)
                seen.add(h)
                elements.append(h)
                queue.append(h)
    return elements


def fingerprint(group: GroupClosure, cap: int = 1024) -> Fingerprint:
    """Order statistics, center and derived subgroup of a closed group."""
    histogram: dict[int, int] = {}
    for e in group.elements:
        n = e.order(cap)
        histogram[n] = histogram.get(n, 0) + 1
    gens = group.generators
    abelian = all(
        (gens[i] @ gens[j]) == (gens[j] @ gens[i])
        for i in range(len(gens))
        for j in range(i + 1, len(gens))
    )
    # Commuting with every generator is the same as commuting with the group.
    center = [e for e in group.elements if all((e @ g) == (g @ e) for g in gens)]
    spec = gens[0].spec
    commutators = [
        g.inverse() @ h.inverse() @ g @ h for g in gens for h in gens if not (g @ h) == (h @ g)
    ]
    derived = _subgroup_closure(commutators, spec, cap)
    # Normal closure: conjugate the current subgroup by the generators and
    # re-close until stable.
    while True:
        current = set(derived)
        extra = []
        for g in gens:
            ginv = g.inverse()
            for e in derived:
                c = ginv @ e @ g
                if c not in current:
                    extra.append(c)
        if not extra:
            break
        derived = _subgroup_closure(derived + extra, spec, cap)
    return Fingerprint(len(group), histogram, abelian, len(center), len(derived))


def semi_invariant_factor(g: ProjTransform, form: Form) -> TowerElem | None:
    """The scalar lambda with F(g x) = lambda * F(x), if one exists."""
    pulled = g.act_on_form(form)
    return proportionality(pulled, form)


def orbits_on_points(group: GroupClosure, points: Sequence[ProjPoint]) -> OrbitReport:
    """Orbit partition of a closed group on a finite set of points.

    Every element must permute the set; the first offender raises
    NotInvariantSet naming the element and the point it moves off-set.
    """
    pts = tuple(points)
    index = {p: k for k, p in enumerate(pts)}
    if len(index) != len(pts):
        raise MatGroupError("duplicate points in the candidate set")
    permutations = []
    for e in group.elements:
        images = []
        for p in pts:
            q = e.apply_point(p)
            k = index.get(q)
            if k is None:
                raise NotInvariantSet(e, p)
            images.append(k)
        if sorted(images) != list(range(len(pts))):
            raise NotInvariantSet(e, pts[0])
        permutations.append(tuple(images))
    # Union-find over the generator permutations gives the orbit partition.
    parent = list(range(len(pts)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for perm in permutations:
        for a, b in enumerate(perm):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[rb] = ra
    buckets: dict[int, list[int]] = {}
    for a in range(len(pts)):
        buckets.setdefault(find(a), []).append(a)
    orbits = tuple(tuple(sorted(v)) for _, v in sorted(buckets.items()))
    return OrbitReport(pts, orbits, tuple(permutations))
