"""Homogeneous forms with tower-field coefficients.

A :class:`Form` is a sparse homogeneous polynomial in ``nvars`` projective
coordinates, with coefficients in one :class:`~quarticverify.exactfield.TowerSpec`.
Everything a form can do is exact: evaluation, partial derivatives, pullback
along a linear substitution, restriction to a hyperplane, exact division,
perfect-square detection (up to a scalar), and -- for binary forms -- Yun
squarefree decomposition, rational factorization (numerically guided, exactly
verified), and root extraction over the tower.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exactfield import (
    DivisionByZero,
    ParamFunction,
    TowerElem,
    TowerSpec,
    specialization_plan,
    tower_sqrt,
)

__all__ = [
    "Form",
    "monomials",
    "variables",
    "power_sum",
    "power_sum_basis",
    "power_sum_quartic",
    "proportionality",
    "binary_squarefree",
    "binary_roots",
]


def _mono_key(mono: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    return (sum(mono), mono)


def monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent tuples of the given total degree, graded-lex descending."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], remaining: int) -> None:
        if len(prefix) == nvars - 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e)

    if nvars == 0:
        return [()] if degree == 0 else []
    rec((), degree)
    return out


class Form:
    """Sparse homogeneous polynomial; zero form has ``degree is None``."""

    __slots__ = ("spec", "nvars", "degree", "coeffs", "_hash")

    def __init__(self, spec: TowerSpec, nvars: int, coeffs: Mapping[tuple[int, ...], TowerElem]):
        clean: dict[tuple[int, ...], TowerElem] = {}
        degree = None
        for mono, c in coeffs.items():
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} has arity != {nvars}")
            if c.is_zero:
                continue
            d = sum(mono)
            if degree is None:
                degree = d
            elif d != degree:
                raise ValueError(f"not homogeneous: degrees {degree} and {d}")
            clean[mono] = c
        self.spec = spec
        self.nvars = nvars
        self.degree = degree
        self.coeffs = clean
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_terms(
        cls, spec: TowerSpec, nvars: int, terms: Mapping[tuple[int, ...], object]
    ) -> "Form":
        return cls(spec, nvars, {m: _as_elem(spec, c) for m, c in terms.items()})

    @classmethod
    def zero(cls, spec: TowerSpec, nvars: int) -> "Form":
        return cls(spec, nvars, {})

    @classmethod
    def monomial(cls, spec: TowerSpec, nvars: int, mono: tuple[int, ...], coeff=1) -> "Form":
        return cls(spec, nvars, {tuple(mono): _as_elem(spec, coeff)})

    # -- inspection ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, mono: tuple[int, ...]) -> TowerElem:
        c = self.coeffs.get(tuple(mono))
        return c if c is not None else self.spec.zero()

    def terms(self) -> Iterable[tuple[tuple[int, ...], TowerElem]]:
        return sorted(self.coeffs.items(), key=lambda t: _mono_key(t[0]), reverse=True)

    def leading(self) -> tuple[tuple[int, ...], TowerElem]:
        mono = max(self.coeffs, key=_mono_key)
        return mono, self.coeffs[mono]

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        names = [f"x{i}" for i in range(self.nvars)]
        parts = []
        for mono, c in self.terms():
            facs = []
            for n, e in zip(names, mono):
                if e == 1:
                    facs.append(n)
                elif e:
                    facs.append(f"{n}^{e}")
            body = "*".join(facs)
            cs = repr(c)
            if not body:
                parts.append(cs)
            elif cs == "1":
                parts.append(body)
            elif cs == "-1":
                parts.append(f"-{body}")
            else:
                if "+" in cs or ("-" in cs[1:]) or "*" in cs:
                    cs = f"({cs})"
                parts.append(f"{cs}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def _key(self):
        return (self.nvars, tuple(sorted(self.coeffs.items())))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        return (
            self.spec == other.spec
            and self.nvars == other.nvars
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    # -- ring operations ------------------------------------------------------

    def _check_compat(self, other: "Form") -> None:
        if self.nvars != other.nvars or self.spec != other.spec:
            raise ValueError("forms live in different polynomial rings")

    def __add__(self, other) -> "Form":
        if not isinstance(other, Form):
            return NotImplemented
        self._check_compat(other)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s.is_zero:
                out.pop(m, None)
            else:
                out[m] = s
        return Form(self.spec, self.nvars, out)

    def __neg__(self) -> "Form":
        return Form(self.spec, self.nvars, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other) -> "Form":
        if not isinstance(other, Form):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "Form":
        if isinstance(other, Form):
            self._check_compat(other)
            out: dict[tuple[int, ...], TowerElem] = {}
            for m1, c1 in self.coeffs.items():
                for m2, c2 in other.coeffs.items():
                    m = tuple(a + b for a, b in zip(m1, m2))
                    c = c1 * c2
                    s = out.get(m)
                    s = c if s is None else s + c
                    if s.is_zero:
                        out.pop(m, None)
                    else:
                        out[m] = s
            return Form(self.spec, self.nvars, out)
        scalar = _as_elem(self.spec, other)
        if scalar is None:
            return NotImplemented
        return Form(self.spec, self.nvars, {m: c * scalar for m, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "Form":
        s = _as_elem(self.spec, scalar)
        if s is None:
            return NotImplemented
        inv = s.inverse()
        return Form(self.spec, self.nvars, {m: c * inv for m, c in self.coeffs.items()})

    def __pow__(self, n: int) -> "Form":
        if n < 0:
            raise ValueError("negative power of a form")
        out = Form.monomial(self.spec, self.nvars, (0,) * self.nvars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- calculus -------------------------------------------------------------

    def partial(self, i: int) -> "Form":
        out: dict[tuple[int, ...], TowerElem] = {}
        for m, c in self.coeffs.items():
            e = m[i]
            if not e:
                continue
            mm = m[:i] + (e - 1,) + m[i + 1 :]
            out[mm] = c * e
        return Form(self.spec, self.nvars, out)

    def gradient(self) -> list["Form"]:
        return [self.partial(i) for i in range(self.nvars)]

    def evaluate(self, point: Sequence) -> TowerElem:
        if len(point) != self.nvars:
            raise ValueError("point arity mismatch")
        pt = [_as_elem(self.spec, p) for p in point]
        powers: list[dict[int, TowerElem]] = [{0: self.spec.one()} for _ in range(self.nvars)]
        total = self.spec.zero()
        for m, c in self.coeffs.items():
            term = c
            for i, e in enumerate(m):
                if not e:
                    continue
                cache = powers[i]
                if e not in cache:
                    p = max(cache)
                    v = cache[p]
                    while p < e:
                        v = v * pt[i]
                        p += 1
                        cache[p] = v
                term = term * cache[e]
            total = total + term
        return total

    # -- substitutions ----------------------------------------------------------

    def substitute_linear(self, matrix: Sequence[Sequence]) -> "Form":
        """The pullback F(M x): variable i is replaced by sum_j M[i][j] x_j."""
        if len(matrix) != self.nvars:
            raise ValueError("matrix must have one row per variable")
        rows = []
        for row in matrix:
            if len(row) != self.nvars:
                raise ValueError("matrix must be square in the form's variables")
            rows.append(
                Form(
                    self.spec,
                    self.nvars,
                    {
                        tuple(1 if j == k else 0 for k in range(self.nvars)): _as_elem(
                            self.spec, entry
                        )
                        for j, entry in enumerate(row)
                    },
                )
            )
        powcache: list[dict[int, Form]] = [
            {0: Form.monomial(self.spec, self.nvars, (0,) * self.nvars)} for _ in range(self.nvars)
        ]
        total = Form.zero(self.spec, self.nvars)
        for m, c in self.coeffs.items():
            term = Form.monomial(self.spec, self.nvars, (0,) * self.nvars, c)
            for i, e in enumerate(m):
                if not e:
                    continue
                cache = powcache[i]
                if e not in cache:
                    p = max(cache)
                    v = cache[p]
                    while p < e:
                        v = v * rows[i]
                        p += 1
                        cache[p] = v
                term = term * cache[e]
            total = total + term
        return total

    def restrict_to_hyperplane(self, plane: Sequence) -> tuple["Form", int]:
        """Restrict to the hyperplane sum_i plane[i]*x_i = 0.

        The first variable with a nonzero plane coefficient is eliminated;
        returns the restricted form in the remaining nvars-1 variables
        (original order preserved) together with the eliminated index.
        """
        coeffs = [_as_elem(self.spec, p) for p in plane]
        pivot = next((i for i, c in enumerate(coeffs) if not c.is_zero), None)
        if pivot is None:
            raise ValueError("zero plane")
        inv = coeffs[pivot].inverse()
        # x_pivot = sum_{j != pivot} s_j x_j with s_j = -a_j / a_pivot
        subs = [-(c * inv) for c in coeffs]
        keep = [j for j in range(self.nvars) if j != pivot]
        n = self.nvars - 1
        lin = Form(
            self.spec,
            n,
            {
                tuple(1 if k == pos else 0 for k in range(n)): subs[j]
                for pos, j in enumerate(keep)
                if not subs[j].is_zero
            },
        )
        powcache: dict[int, Form] = {0: Form.monomial(self.spec, n, (0,) * n)}
        total = Form.zero(self.spec, n)
        for m, c in self.coeffs.items():
            e = m[pivot]
            if e not in powcache:
                p = max(powcache)
                v = powcache[p]
                while p < e:
                    v = v * lin
                    p += 1
                    powcache[p] = v
            rest = tuple(m[j] for j in keep)
            total = total + Form.monomial(self.spec, n, rest, c) * powcache[e]
        return total, pivot

    def divide_exact(self, divisor: "Form") -> "Form | None":
        """The quotient self/divisor if division is exact, else None."""
        self._check_compat(divisor)
        if divisor.is_zero:
            raise DivisionByZero("form division by zero")
        if self.is_zero:
            return self
        if self.degree < divisor.degree:
            return None
        lm, lc = divisor.leading()
        lcinv = lc.inverse()
        rest = dict(self.coeffs)
        out: dict[tuple[int, ...], TowerElem] = {}
        while rest:
            m = max(rest, key=_mono_key)
            c = rest[m]
            if any(a < b for a, b in zip(m, lm)):
                return None
            t = tuple(a - b for a, b in zip(m, lm))
            f = c * lcinv
            out[t] = f
            for m2, c2 in divisor.coeffs.items():
                mm = tuple(a + b for a, b in zip(t, m2))
                s = rest.get(mm)
                s = -(f * c2) if s is None else s - f * c2
                if s.is_zero:
                    rest.pop(mm, None)
                else:
                    rest[mm] = s
        return Form(self.spec, self.nvars, out)

    def perfect_square_root(self) -> "tuple[Form, TowerElem] | None":
        """(R, lam) with self == lam * R^2 and R monic, or None.

        The zero form returns (0, 1).
        """
        if self.is_zero:
            return Form.zero(self.spec, self.nvars), self.spec.one()
        if self.degree % 2:
            return None
        lm, lam = self.leading()
        if any(e % 2 for e in lm):
            return None
        rlead = tuple(e // 2 for e in lm)
        laminv = lam.inverse()
        half = self.degree // 2
        roots: dict[tuple[int, ...], TowerElem] = {rlead: self.spec.one()}
        two_inv = self.spec.rational(Fraction(1, 2))
        for v in monomials(self.nvars, half):
            if _mono_key(v) >= _mono_key(rlead):
                continue
            target_mono = tuple(a + b for a, b in zip(rlead, v))
            target = self.coeffs.get(target_mono)
            acc = target * laminv if target is not None else self.spec.zero()
            for u1, r1 in roots.items():
                u2 = tuple(a - b for a, b in zip(target_mono, u1))
                if u2 == rlead or any(e < 0 for e in u2):
                    continue
                r2 = roots.get(u2)
                if r2 is not None and _mono_key(u1) > _mono_key(u2):
                    acc = acc - 2 * (r1 * r2)
                elif u2 == u1:
                    acc = acc - r1 * r1
            rv = acc * two_inv
            if not rv.is_zero:
                roots[v] = rv
        root = Form(self.spec, self.nvars, roots)
        if (root * root) * lam == self:
            return root, lam
        return None

    # -- coefficient maps ---------------------------------------------------------

    def specialize(self, assignment: Mapping[str, Fraction]) -> "Form":
        plan = specialization_plan(self.spec, assignment)
        return Form(plan.new_spec, self.nvars, {m: plan.apply(c) for m, c in self.coeffs.items()})

    def lift(self, spec: TowerSpec) -> "Form":
        if spec == self.spec:
            return self
        return Form(spec, self.nvars, {m: c.lift(spec) for m, c in self.coeffs.items()})

    def embed_coeffs(self, values: Mapping[str, complex] | None = None) -> dict[tuple[int, ...], complex]:
        return {m: c.embed(values) for m, c in self.coeffs.items()}

    def evaluate_numeric(
        self, point: Sequence[complex], values: Mapping[str, complex] | None = None
    ) -> complex:
        total = 0j
        for m, c in self.embed_coeffs(values).items():
            term = c
            for p, e in zip(point, m):
                if e:
                    term *= p**e
            total += term
        return total


def _as_elem(spec: TowerSpec, value) -> TowerElem | None:
    if isinstance(value, TowerElem):
        if value.spec == spec:
            return value
        if value.spec.is_prefix_of(spec):
            return value.lift(spec)
        raise ValueError("coefficient from an incompatible tower")
    if isinstance(value, (int, Fraction)):
        return spec.rational(value)
    if isinstance(value, ParamFunction):
        return spec.from_paramfunction(value)
    return None


def variables(spec: TowerSpec, nvars: int) -> list[Form]:
    """The coordinate forms x_0 .. x_{nvars-1}."""
    return [
        Form.monomial(spec, nvars, tuple(1 if j == i else 0 for j in range(nvars)))
        for i in range(nvars)
    ]


def power_sum(spec: TowerSpec, nvars: int, j: int) -> Form:
    """The power sum s_j = x_0^j + ... + x_{nvars-1}^j."""
    if j < 1:
        raise ValueError("power sum exponent must be >= 1")
    return Form(
        spec,
        nvars,
        {
            tuple(j if k == i else 0 for k in range(nvars)): spec.one()
            for i in range(nvars)
        },
    )


def power_sum_basis(spec: TowerSpec, nvars: int = 4) -> list[Form]:
    """The quartic power-sum products [s2^2, s1*s3, s1^2*s2, s1^4]."""
    s1 = power_sum(spec, nvars, 1)
    s2 = power_sum(spec, nvars, 2)
    s3 = power_sum(spec, nvars, 3)
    s1s1 = s1 * s1
    return [s2 * s2, s1 * s3, s1s1 * s2, s1s1 * s1s1]


def power_sum_quartic(spec: TowerSpec, coeffs: Sequence) -> Form:
    """c0*s2^2 + c1*s1*s3 + c2*s1^2*s2 + c3*s1^4, expanded in x_0..x_3."""
    if len(coeffs) != 4:
        raise ValueError("expected four coefficients")
    basis = power_sum_basis(spec)
    total = Form.zero(spec, 4)
    for c, b in zip(coeffs, basis):
        total = total + b * _as_elem(spec, c)
    return total


def proportionality(f: Form, g: Form) -> TowerElem | None:
    """lam with g == lam * f, or None (f must be nonzero)."""
    if f.is_zero:
        raise ValueError("proportionality against the zero form")
    if g.is_zero:
        return f.spec.zero()
    if set(f.coeffs) != set(g.coeffs):
        return None
    mono = next(iter(f.coeffs))
    lam = g.coeffs[mono] * f.coeffs[mono].inverse()
    for m, c in f.coeffs.items():
        if not (g.coeffs[m] - lam * c).is_zero:
            return None
    return lam


# ---------------------------------------------------------------------------
# binary forms: squarefree structure, factorization, roots
# ---------------------------------------------------------------------------
#
# Binary forms are Forms with nvars == 2 in coordinates (u : v).  Internally
# they are dehomogenized to univariate polynomials in u (dicts degree -> coeff);
# the lost multiplicity at (1 : 0) is the degree deficit.


def _uni_from_form(f: Form) -> dict[int, TowerElem]:
    if f.nvars != 2:
        raise ValueError("binary form expected")
    return {m[0]: c for m, c in f.coeffs.items()}


def _uni_degree(p: dict) -> int:
    return max(p) if p else -1


def _uni_normalize(p: dict) -> dict:
    return {d: c for d, c in p.items() if not c.is_zero}


def _uni_monic(p: dict) -> dict:
    if not p:
        return p
    lead = p[_uni_degree(p)]
    inv = lead.inverse()
    return {d: c * inv for d, c in p.items()}


def _uni_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for d1, c1 in p.items():
        for d2, c2 in q.items():
            d = d1 + d2
            c = c1 * c2
            s = out.get(d)
            s = c if s is None else s + c
            if s.is_zero:
                out.pop(d, None)
            else:
                out[d] = s
    return out


def _uni_sub(p: dict, q: dict) -> dict:
    out = dict(p)
    for d, c in q.items():
        s = out.get(d)
        s = -c if s is None else s - c
        if s.is_zero:
            out.pop(d, None)
        else:
            out[d] = s
    return out


def _uni_divmod(p: dict, q: dict) -> tuple[dict, dict]:
    if not q:
        raise DivisionByZero("univariate division by zero")
    dq = _uni_degree(q)
    inv = q[dq].inverse()
    quo: dict = {}
    rem = dict(p)
    while rem:
        dr = _uni_degree(rem)
        if dr < dq:
            break
        f = rem[dr] * inv
        quo[dr - dq] = f
        rem = _uni_sub(rem, {d + dr - dq: c * f for d, c in q.items()})
    return quo, rem


def _uni_gcd(p: dict, q: dict) -> dict:
    p, q = _uni_normalize(p), _uni_normalize(q)
    while q:
        _, r = _uni_divmod(p, q)
        p, q = q, r
    return _uni_monic(p)


def _uni_derivative(p: dict) -> dict:
    return {d - 1: c * d for d, c in p.items() if d}


def _uni_exact_div(p: dict, q: dict) -> dict:
    quo, rem = _uni_divmod(p, q)
    if rem:
        raise ArithmeticError("expected exact univariate division")
    return quo


def _form_from_uni(spec: TowerSpec, p: dict, vpow: int = 0) -> Form:
    d = _uni_degree(p)
    return Form(spec, 2, {(k, d - k + vpow): c for k, c in p.items()})


def binary_squarefree(f: Form) -> list[tuple[Form, int]]:
    """Yun decomposition of a nonzero binary form: [(factor, multiplicity)].

    Factors are monic (leading u-coefficient 1), pairwise coprime, squarefree;
    a root at (1 : 0) appears as the factor v (monomial (0, 1)).  The product
    of factor^multiplicity equals the input up to a scalar.
    """
    if f.is_zero:
        raise ValueError("squarefree decomposition of the zero form")
    spec = f.spec
    out: list[tuple[Form, int]] = []
    p = _uni_from_form(f)
    inf_mult = f.degree - _uni_degree(p)
    if inf_mult:
        out.append((Form.monomial(spec, 2, (0, 1)), inf_mult))
    if _uni_degree(p) == 0:
        return out
    p = _uni_monic(p)
    dp = _uni_derivative(p)
    g = _uni_gcd(p, dp)
    v = _uni_exact_div(p, g)
    w = _uni_exact_div(dp, g)
    i = 1
    while _uni_degree(v) > 0:
        wv = _uni_sub(w, _uni_derivative(v))
        h = _uni_gcd(v, wv)
        if _uni_degree(h) > 0:
            out.append((_form_from_uni(spec, h), i))
        v = _uni_exact_div(v, h)
        w = _uni_exact_div(wv, h)
        i += 1
    return out


def _quadratic_roots(spec: TowerSpec, a: TowerElem, b: TowerElem, c: TowerElem):
    """Roots of a*u^2 + b*u + c inside the tower, or None if the needed
    square root is not found."""
    disc = b * b - 4 * a * c
    s = tower_sqrt(disc)
    if s is None:
        return None
    inv2a = (2 * a).inverse()
    return ((-b + s) * inv2a, (-b - s) * inv2a)


def binary_roots(f: Form) -> tuple[list[tuple[tuple[TowerElem, TowerElem], int]], list[tuple[Form, int]]]:
    """Roots of a binary form over its tower.

    Returns ``(roots, unresolved)`` where roots is a list of
    ``((u, v), multiplicity)`` projective points and unresolved collects
    squarefree factors of degree >= 2 that could not be split inside the
    tower (each with its multiplicity).  Rational coefficients are factored
    exactly; tower coefficients are handled for factors of degree <= 2.
    """
    spec = f.spec
    roots: list[tuple[tuple[TowerElem, TowerElem], int]] = []
    unresolved: list[tuple[Form, int]] = []
    one = spec.one()
    for factor, mult in binary_squarefree(f):
        p = _uni_from_form(factor)
        if factor.degree - _uni_degree(p) > 0:
            roots.append(((one, spec.zero()), mult))
            p = _uni_normalize(p)
            if _uni_degree(p) <= 0:
                continue
        pieces = [p]
        rational = _rational_coeff_list(spec, p)
        if rational is not None and _uni_degree(p) > 2:
            split = _split_rational_squarefree(rational)
            if split is not None:
                pieces = [
                    {d: spec.rational(c) for d, c in enumerate(q) if c}
                    for q in split
                ]
        for piece in pieces:
            d = _uni_degree(piece)
            if d == 1:
                root = -(piece[0] * piece[1].inverse()) if 0 in piece else spec.zero()
                roots.append(((root, one), mult))
            elif d == 2:
                pair = _quadratic_roots(
                    spec, piece[2], piece.get(1, spec.zero()), piece.get(0, spec.zero())
                )
                if pair is None:
                    unresolved.append((_form_from_uni(spec, piece), mult))
                elif pair[0] == pair[1]:
                    roots.append(((pair[0], one), 2 * mult))
                else:
                    roots.append(((pair[0], one), mult))
                    roots.append(((pair[1], one), mult))
            else:
                unresolved.append((_form_from_uni(spec, piece), mult))
    return roots, unresolved


def _rational_coeff_list(spec: TowerSpec, p: dict) -> list[Fraction] | None:
    d = _uni_degree(p)
    out = [Fraction(0)] * (d + 1)
    for k, c in p.items():
        r = c.as_rational()
        if r is None:
            return None
        out[k] = r
    return out


def _split_rational_squarefree(coeffs: list[Fraction]) -> list[list[Fraction]] | None:
    """Factor a squarefree rational polynomial into irreducible-over-Q pieces
    of degree <= 2, or None if some factor of degree >= 3 remains.

    Numeric roots guide the guesses; every accepted factor is verified by
    exact division, so wrong guesses cannot corrupt the result.
    """
    import numpy as np

    d = len(coeffs) - 1
    if d <= 2:
        return [coeffs]
    lead = coeffs[-1]
    monic = [c / lead for c in coeffs]
    out: list[list[Fraction]] = []
    rem = list(monic)

    def poly_eval(p: list[Fraction], x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(p):
            acc = acc * x + c
        return acc

    def exact_div(p: list[Fraction], q: list[Fraction]) -> list[Fraction] | None:
        dp, dq = len(p) - 1, len(q) - 1
        if dp < dq:
            return None
        rem2 = list(p)
        quo = [Fraction(0)] * (dp - dq + 1)
        for k in range(dp - dq, -1, -1):
            f = rem2[k + dq] / q[dq]
            quo[k] = f
            for j in range(dq + 1):
                rem2[k + j] -= f * q[j]
        if any(rem2):
            return None
        return quo

    # rational roots first: candidates from numeric roots
    while len(rem) - 1 > 2:
        zs = np.roots([float(c) for c in reversed(rem)])
        done = False
        for z in zs:
            if abs(z.imag) > 1e-8:
                continue
            cand = Fraction(z.real).limit_denominator(10**6)
            if poly_eval(rem, cand) == 0:
                quo = exact_div(rem, [-cand, Fraction(1)])
                if quo is not None:
                    out.append([-cand, Fraction(1)])
                    rem = quo
                    done = True
                    break
        if done:
            continue
        # quadratic factors from root pairs
        for i in range(len(zs)):
            for j in range(i + 1, len(zs)):
                s = zs[i] + zs[j]
                q = zs[i] * zs[j]
                if abs(s.imag) > 1e-8 or abs(q.imag) > 1e-8:
                    continue
                sc = Fraction(s.real).limit_denominator(10**6)
                qc = Fraction(q.real).limit_denominator(10**6)
                quo = exact_div(rem, [qc, -sc, Fraction(1)])
                if quo is not None:
                    out.append([qc, -sc, Fraction(1)])
                    rem = quo
                    done = True
                    break
            if done:
                break
        if not done:
            return None
    if len(rem) - 1 > 0:
        out.append(rem)
    return out
