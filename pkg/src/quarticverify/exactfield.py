"""Exact scalar arithmetic: rationals, parameter functions, radical towers.

Three layers, each exact (no floating point anywhere):

``Rational``
    re-export of :class:`fractions.Fraction`.

``ParamFunction``
    a multivariate rational function over Q in a fixed tuple of named
    parameters, kept reduced (gcd of numerator and denominator is 1) with a
    monic denominator under graded-lex order, so equal values have equal
    representations.

``TowerSpec`` / ``TowerElem``
    a tower Q(params)(sqrt(r0))(sqrt(r1))... of quadratic extensions.  Each
    radicand ``r_k`` is an element of the subtower below level ``k``.  An
    element is a sparse coefficient vector on the 2^k square-free basis
    monomials prod(sqrt(r_k)^{b_k}); equality is coefficient-wise.  The tower
    is treated formally: if a radicand is secretly a square of the field
    below, the extension is reducible and division can hit a nonzero element
    of zero norm -- that raises :class:`ZeroDivisor` loudly instead of
    returning garbage.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Mapping, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "ExactFieldError",
    "DivisionByZero",
    "ZeroDivisor",
    "DenominatorVanishes",
    "InconsistentCollapse",
    "UnknownParameter",
    "PolyRing",
    "ParamFunction",
    "TowerSpec",
    "TowerElem",
    "tower_sqrt",
    "specialization_plan",
    "extend_ring",
]


class ExactFieldError(ArithmeticError):
    """Base class for exact-arithmetic failures."""


class DivisionByZero(ExactFieldError, ZeroDivisionError):
    """Division by an exact zero."""


class ZeroDivisor(ExactFieldError):
    """A nonzero element has zero conjugate norm.

    This means some declared radicand is already a square in the field below
    it, so the formal quadratic extension is reducible.  The toolkit never
    constructs such towers on purpose; failing loudly beats silently wrong
    arithmetic.
    """


class DenominatorVanishes(ExactFieldError):
    """A parameter assignment zeroed the denominator of some coefficient."""


class InconsistentCollapse(ExactFieldError):
    """A parameter assignment zeroed a radicand that is still referenced."""


class UnknownParameter(ExactFieldError):
    """A name that is not declared in the parameter ring."""


# ---------------------------------------------------------------------------
# sparse multivariate polynomials over Q (internal representation: dict
# mapping exponent tuples to nonzero Fractions)
# ---------------------------------------------------------------------------


def _mono_key(mono: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    # graded lex: compare total degree first, then exponents left to right
    return (sum(mono), mono)


def _poly_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for m, c in b.items():
        s = out.get(m)
        if s is None:
            out[m] = c
        else:
            s = s + c
            if s:
                out[m] = s
            else:
                del out[m]
    return out


def _poly_neg(a: dict) -> dict:
    return {m: -c for m, c in a.items()}


def _poly_scale(a: dict, c: Fraction) -> dict:
    if not c:
        return {}
    return {m: cc * c for m, cc in a.items()}


def _poly_mul(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            c = ca * cb
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
    return out


def _poly_lead(a: dict) -> tuple[tuple[int, ...], Fraction]:
    m = max(a, key=_mono_key)
    return m, a[m]


def _mono_divides(m: tuple[int, ...], n: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(m, n))


def _mono_sub(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b))


def _poly_divmod(a: dict, b: dict) -> tuple[dict, dict]:
    """Single-divisor multivariate division: a = q*b + r, no monomial of r
    divisible by the graded-lex leading monomial of b."""
    if not b:
        raise DivisionByZero("polynomial division by zero")
    lm, lc = _poly_lead(b)
    q: dict = {}
    r: dict = {}
    rest = dict(a)
    while rest:
        m, c = _poly_lead(rest)
        if _mono_divides(lm, m):
            t = _mono_sub(m, lm)
            f = c / lc
            q[t] = q.get(t, Fraction(0)) + f
            rest = _poly_add(rest, _poly_mul({t: -f}, b))
        else:
            r[m] = c
            del rest[m]
    return q, r


def _poly_exact_div(a: dict, b: dict) -> dict | None:
    q, r = _poly_divmod(a, b)
    return q if not r else None


def _poly_mono_content(a: dict) -> tuple[int, ...]:
    """Largest monomial dividing every term."""
    it = iter(a)
    first = next(it)
    mins = list(first)
    for m in it:
        for i, e in enumerate(m):
            if e < mins[i]:
                mins[i] = e
    return tuple(mins)


def _poly_shift_down(a: dict, mono: tuple[int, ...]) -> dict:
    if not any(mono):
        return a
    return {_mono_sub(m, mono): c for m, c in a.items()}


def _active_vars(a: dict, b: dict) -> list[int]:
    n = len(next(iter(a))) if a else (len(next(iter(b))) if b else 0)
    active = [False] * n
    for d in (a, b):
        for m in d:
            for i, e in enumerate(m):
                if e:
                    active[i] = True
    return [i for i, f in enumerate(active) if f]


def _poly_monic(a: dict) -> dict:
    if not a:
        return a
    _, lc = _poly_lead(a)
    if lc == 1:
        return a
    return {m: c / lc for m, c in a.items()}


def _to_univar(a: dict, v: int) -> dict[int, dict]:
    """View a as univariate in variable v; coefficients keep full arity with
    slot v zeroed."""
    out: dict[int, dict] = {}
    for m, c in a.items():
        d = m[v]
        mm = m[:v] + (0,) + m[v + 1 :]
        out.setdefault(d, {})[mm] = c
    return out


def _from_univar(u: dict[int, dict], v: int) -> dict:
    out: dict = {}
    for d, coeff in u.items():
        for m, c in coeff.items():
            out[m[:v] + (d,) + m[v + 1 :]] = c
    return out


def _univar_degree(u: dict[int, dict]) -> int:
    return max(u) if u else -1


def _content(u: dict[int, dict]) -> dict:
    """gcd of the coefficient polynomials of a univariate view."""
    g: dict = {}
    for coeff in u.values():
        g = _poly_gcd(g, coeff)
        if g and max(sum(m) for m in g) == 0:
            break
    return g if g else {}


def _univar_scale(u: dict[int, dict], f: dict) -> dict[int, dict]:
    return {d: _poly_mul(c, f) for d, c in u.items()}


def _univar_exact_div_content(u: dict[int, dict], g: dict) -> dict[int, dict]:
    out = {}
    for d, c in u.items():
        q = _poly_exact_div(c, g)
        assert q is not None
        out[d] = q
    return out


def _univar_sub(a: dict[int, dict], b: dict[int, dict]) -> dict[int, dict]:
    out = {d: dict(c) for d, c in a.items()}
    for d, c in b.items():
        s = _poly_add(out.get(d, {}), _poly_neg(c))
        if s:
            out[d] = s
        elif d in out:
            del out[d]
    return out


def _pseudo_rem(a: dict[int, dict], b: dict[int, dict]) -> dict[int, dict]:
    """Pseudo-remainder of univariate views (coefficients in Q[rest])."""
    db = _univar_degree(b)
    lb = b[db]
    r = {d: dict(c) for d, c in a.items()}
    while True:
        dr = _univar_degree(r)
        if dr < db:
            return r
        lr = r[dr]
        # r <- lb*r - lr*x^(dr-db)*b
        r = _univar_scale(r, lb)
        t = {d + dr - db: _poly_mul(c, lr) for d, c in b.items()}
        r = _univar_sub(r, t)


def _poly_gcd(a: dict, b: dict) -> dict:
    """gcd over Q[params], normalized monic under graded lex."""
    if not a:
        return _poly_monic(b)
    if not b:
        return _poly_monic(a)
    # quick monomial-content split
    ca, cb = _poly_mono_content(a), _poly_mono_content(b)
    shared = tuple(min(x, y) for x, y in zip(ca, cb))
    a = _poly_shift_down(a, ca)
    b = _poly_shift_down(b, cb)
    g = _poly_gcd_core(a, b)
    if any(shared):
        g = {tuple(x + y for x, y in zip(m, shared)): c for m, c in g.items()}
    return _poly_monic(g)


def _poly_gcd_core(a: dict, b: dict) -> dict:
    active = _active_vars(a, b)
    if not active:
        return {next(iter(a)): Fraction(1)}
    v = active[0]
    if len(active) == 1:
        # plain Euclid over the field Q
        ua, ub = _to_univar(a, v), _to_univar(b, v)
        while ub:
            ua, ub = ub, _univar_mod_field(ua, ub)
        return _from_univar(ua, v)
    # primitive PRS in the main variable
    ua, ub = _to_univar(a, v), _to_univar(b, v)
    conta, contb = _content(ua), _content(ub)
    gcont = _poly_gcd(conta, contb)
    ua = _univar_exact_div_content(ua, conta)
    ub = _univar_exact_div_content(ub, contb)
    if _univar_degree(ua) < _univar_degree(ub):
        ua, ub = ub, ua
    while True:
        if not ub:
            break
        if _univar_degree(ub) == 0:
            ub = {}
            ua = {0: {tuple(0 for _ in next(iter(a))): Fraction(1)}}
            break
        r = _pseudo_rem(ua, ub)
        if r:
            cr = _content(r)
            r = _univar_exact_div_content(r, cr)
        ua, ub = ub, r
    g = _from_univar(ua, v)
    return _poly_mul(g, gcont)


def _univar_mod_field(a: dict[int, dict], b: dict[int, dict]) -> dict[int, dict]:
    """Remainder for univariate polys whose coefficients are constants."""
    db = _univar_degree(b)
    lb = next(iter(b[db].values()))
    r = {d: dict(c) for d, c in a.items()}
    while True:
        dr = _univar_degree(r)
        if dr < db:
            return r
        lr = next(iter(r[dr].values()))
        f = lr / lb
        t = {d + dr - db: _poly_scale(c, f) for d, c in b.items()}
        r = _univar_sub(r, t)


def _frac_sqrt(c: Fraction) -> Fraction | None:
    if c < 0:
        return None
    if c == 0:
        return Fraction(0)
    n, d = c.numerator, c.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _poly_sqrt(a: dict) -> dict | None:
    """Exact square root of a polynomial over Q, or None."""
    if not a:
        return {}
    lm, lc = _poly_lead(a)
    if any(e % 2 for e in lm):
        return None
    rc = _frac_sqrt(lc)
    if rc is None:
        return None
    rlead = tuple(e // 2 for e in lm)
    root = {rlead: rc}
    residue = _poly_add(a, _poly_neg(_poly_mul(root, root)))
    guard = _mono_key(lm)
    while residue:
        m, c = _poly_lead(residue)
        if _mono_key(m) >= guard:
            return None
        if not _mono_divides(rlead, m):
            return None
        t = _mono_sub(m, rlead)
        if _mono_key(t) >= _mono_key(rlead):
            return None
        root[t] = c / (2 * rc)
        residue = _poly_add(a, _poly_neg(_poly_mul(root, root)))
    return root


def _poly_eval(a: dict, idx_vals: dict[int, Fraction], nvars: int) -> dict:
    """Substitute rational values for the given variable slots."""
    out: dict = {}
    for m, c in a.items():
        coef = c
        mm = list(m)
        for i, val in idx_vals.items():
            e = m[i]
            if e:
                coef = coef * val**e
            mm[i] = 0
        mt = tuple(mm)
        s = out.get(mt)
        if s is None:
            if coef:
                out[mt] = coef
        else:
            s = s + coef
            if s:
                out[mt] = s
            else:
                del out[mt]
    return out


def _poly_embed(a: dict, values: Sequence[complex]) -> complex:
    total = 0j
    for m, c in a.items():
        term = complex(c)
        for i, e in enumerate(m):
            if e:
                term *= values[i] ** e
        total += term
    return total


def _poly_str(a: dict, names: Sequence[str]) -> str:
    if not a:
        return "0"
    parts = []
    for m in sorted(a, key=_mono_key, reverse=True):
        c = a[m]
        factors = []
        for name, e in zip(names, m):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{e}")
        body = "*".join(factors)
        if not body:
            parts.append(str(c))
        elif c == 1:
            parts.append(body)
        elif c == -1:
            parts.append(f"-{body}")
        else:
            parts.append(f"{c}*{body}")
    out = " + ".join(parts)
    return out.replace("+ -", "- ")


# ---------------------------------------------------------------------------
# ParamFunction: reduced fraction of two polynomials in a shared ring
# ---------------------------------------------------------------------------


class PolyRing:
    """A fixed tuple of parameter names; all ParamFunctions carry their ring."""

    __slots__ = ("names", "nvars", "_zero_mono", "_index")

    def __init__(self, names: Sequence[str] = ()):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate parameter names: {names}")
        self.names = names
        self.nvars = len(names)
        self._zero_mono = (0,) * self.nvars
        self._index = {n: i for i, n in enumerate(names)}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PolyRing) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"PolyRing{self.names!r}"

    def const(self, c) -> ParamFunction:
        c = Fraction(c)
        num = {self._zero_mono: c} if c else {}
        return ParamFunction(self, num, {self._zero_mono: Fraction(1)}, _reduced=True)

    def param(self, name: str) -> ParamFunction:
        if name not in self._index:
            raise UnknownParameter(name)
        mono = tuple(1 if i == self._index[name] else 0 for i in range(self.nvars))
        return ParamFunction(
            self, {mono: Fraction(1)}, {self._zero_mono: Fraction(1)}, _reduced=True
        )


class ParamFunction:
    """Reduced num/den pair over a :class:`PolyRing`; hashable and canonical."""

    __slots__ = ("ring", "num", "den", "_hash")

    def __init__(self, ring: PolyRing, num: dict, den: dict, _reduced: bool = False):
        self.ring = ring
        if not _reduced:
            num, den = _reduce_fraction(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # -- constructors and inspection ------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.num

    def as_rational(self) -> Fraction | None:
        """The value as a plain rational, if constant."""
        if self.den != {self.ring._zero_mono: Fraction(1)}:
            return None
        if not self.num:
            return Fraction(0)
        if len(self.num) == 1 and self.ring._zero_mono in self.num:
            return self.num[self.ring._zero_mono]
        return None

    def _coerce(self, other) -> "ParamFunction | None":
        if isinstance(other, ParamFunction):
            if other.ring != self.ring:
                raise ValueError("mixed parameter rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return None

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other) -> "ParamFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return ParamFunction(self.ring, _poly_add(self.num, other.num), self.den)
        num = _poly_add(
            _poly_mul(self.num, other.den), _poly_mul(other.num, self.den)
        )
        return ParamFunction(self.ring, num, _poly_mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self) -> "ParamFunction":
        return ParamFunction(self.ring, _poly_neg(self.num), self.den, _reduced=True)

    def __sub__(self, other) -> "ParamFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "ParamFunction":
        return (-self) + other

    def __mul__(self, other) -> "ParamFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.num or not other.num:
            return self.ring.const(0)
        return ParamFunction(
            self.ring,
            _poly_mul(self.num, other.num),
            _poly_mul(self.den, other.den),
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "ParamFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            raise DivisionByZero("division by zero ParamFunction")
        return ParamFunction(
            self.ring,
            _poly_mul(self.num, other.den),
            _poly_mul(self.den, other.num),
        )

    def __rtruediv__(self, other) -> "ParamFunction":
        other = self._coerce(other)
        return other / self

    def __pow__(self, n: int) -> "ParamFunction":
        if n < 0:
            return (self.ring.const(1) / self) ** (-n)
        out = self.ring.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparison and hashing ------------------------------------------

    def _key(self):
        return (
            tuple(sorted(self.num.items())),
            tuple(sorted(self.den.items())),
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, ParamFunction):
            return NotImplemented
        return self.ring == other.ring and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self) -> str:
        names = self.ring.names
        ns = _poly_str(self.num, names)
        if self.den == {self.ring._zero_mono: Fraction(1)}:
            return ns
        return f"({ns})/({_poly_str(self.den, names)})"

    # -- specialization and embedding --------------------------------------

    def evaluate(self, assignment: Mapping[str, Fraction]) -> "ParamFunction":
        """Substitute rational values for (a subset of) parameters."""
        idx_vals = {}
        for name, val in assignment.items():
            if name not in self.ring._index:
                raise UnknownParameter(name)
            idx_vals[self.ring._index[name]] = Fraction(val)
        if not idx_vals:
            return self
        den = _poly_eval(self.den, idx_vals, self.ring.nvars)
        if not den:
            raise DenominatorVanishes(
                f"denominator {_poly_str(self.den, self.ring.names)} vanishes at {assignment}"
            )
        num = _poly_eval(self.num, idx_vals, self.ring.nvars)
        return ParamFunction(self.ring, num, den)

    def embed(self, values: Mapping[str, complex]) -> complex:
        vals = []
        for name in self.ring.names:
            vals.append(complex(values.get(name, 0)) if name in values else None)
        missing = [n for n, v in zip(self.ring.names, vals) if v is None and self._uses(n)]
        if missing:
            raise UnknownParameter(f"no numeric value for parameters {missing}")
        vals = [0j if v is None else v for v in vals]
        d = _poly_embed(self.den, vals)
        if d == 0:
            raise DenominatorVanishes("denominator embeds to zero")
        return _poly_embed(self.num, vals) / d

    def _uses(self, name: str) -> bool:
        i = self.ring._index[name]
        return any(m[i] for m in self.num) or any(m[i] for m in self.den)


def _reduce_fraction(num: dict, den: dict) -> tuple[dict, dict]:
    if not den:
        raise DivisionByZero("zero denominator")
    if not num:
        return {}, _one_like(den)
    # monomial content shared by num and den
    cn, cd = _poly_mono_content(num), _poly_mono_content(den)
    shared = tuple(min(x, y) for x, y in zip(cn, cd))
    if any(shared):
        num = _poly_shift_down(num, shared)
        den = _poly_shift_down(den, shared)
    if len(den) == 1:
        (m, c), = den.items()
        if not any(m):
            if c != 1:
                num = _poly_scale(num, 1 / c)
            return num, {m: Fraction(1)}
    g = _poly_gcd(num, den)
    if len(g) > 1 or any(next(iter(g))):
        num = _poly_exact_div(num, g)
        den = _poly_exact_div(den, g)
        assert num is not None and den is not None
    _, lc = _poly_lead(den)
    if lc != 1:
        num = _poly_scale(num, 1 / lc)
        den = _poly_scale(den, 1 / lc)
    return num, den


def _one_like(den: dict) -> dict:
    m = next(iter(den))
    return {tuple(0 for _ in m): Fraction(1)}


# ---------------------------------------------------------------------------
# towers of quadratic extensions
# ---------------------------------------------------------------------------


_CoeffMap = tuple  # tuple of (mask, ParamFunction), sorted by mask


def _freeze(coeffs: dict) -> _CoeffMap:
    return tuple(sorted(coeffs.items()))


class TowerSpec:
    """An ordered list of quadratic adjunctions over a parameter ring.

    ``radicands[k]`` is the frozen coefficient map of an element of the
    subtower with levels < k.  Basis monomials are indexed by bitmasks: bit k
    set means the monomial contains sqrt(radicands[k]).
    """

    __slots__ = ("ring", "radicands", "radical_names", "_prodcache", "_raddicts", "_hash")

    def __init__(
        self,
        ring: PolyRing,
        radicands: Sequence[_CoeffMap] = (),
        radical_names: Sequence[str] = (),
    ):
        self.ring = ring
        self.radicands = tuple(radicands)
        self.radical_names = tuple(radical_names)
        if len(self.radicands) != len(self.radical_names):
            raise ValueError("radicand/name count mismatch")
        for k, rad in enumerate(self.radicands):
            for mask, _ in rad:
                if mask >> k:
                    raise ValueError(f"radicand {k} references level >= {k}")
        self._prodcache: dict = {}
        self._raddicts = [dict(r) for r in self.radicands]
        self._hash = None

    # -- identity ---------------------------------------------------------

    def _key(self):
        return (self.ring.names, self.radicands, self.radical_names)

    def __eq__(self, other) -> bool:
        return isinstance(other, TowerSpec) and self._key() == other._key()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring.names, self.radical_names, len(self.radicands)))
        return self._hash

    def __repr__(self) -> str:
        if not self.radicands:
            return f"TowerSpec(Q{self.ring.names!r})"
        return f"TowerSpec(Q{self.ring.names!r}; {', '.join(self.radical_names)})"

    @property
    def height(self) -> int:
        return len(self.radicands)

    @property
    def dim(self) -> int:
        return 1 << len(self.radicands)

    def is_prefix_of(self, other: "TowerSpec") -> bool:
        return (
            self.ring == other.ring
            and self.height <= other.height
            and other.radicands[: self.height] == self.radicands
        )

    # -- element constructors ----------------------------------------------

    def zero(self) -> "TowerElem":
        return TowerElem(self, {})

    def one(self) -> "TowerElem":
        return TowerElem(self, {0: self.ring.const(1)})

    def rational(self, c) -> "TowerElem":
        pf = self.ring.const(c)
        return TowerElem(self, {0: pf} if not pf.is_zero else {})

    def param(self, name: str) -> "TowerElem":
        return TowerElem(self, {0: self.ring.param(name)})

    def from_paramfunction(self, pf: ParamFunction) -> "TowerElem":
        if pf.ring != self.ring:
            raise ValueError("ParamFunction from a different ring")
        return TowerElem(self, {0: pf} if not pf.is_zero else {})

    def radical(self, which: int | str) -> "TowerElem":
        if isinstance(which, str):
            try:
                which = self.radical_names.index(which)
            except ValueError:
                raise UnknownParameter(f"no radical named {which!r}") from None
        if not 0 <= which < self.height:
            raise IndexError(f"no radical level {which}")
        return TowerElem(self, {1 << which: self.ring.const(1)})

    def adjoin(self, radicand: "TowerElem", name: str) -> "TowerSpec":
        """New spec with sqrt(radicand) on top; radicand must live in self."""
        if radicand.spec != self:
            raise ValueError("radicand must be an element of this tower")
        if radicand.is_zero:
            raise ValueError("cannot adjoin sqrt(0)")
        if name in self.radical_names:
            raise ValueError(f"duplicate radical name {name!r}")
        return TowerSpec(
            self.ring,
            self.radicands + (_freeze(radicand.coeffs),),
            self.radical_names + (name,),
        )

    # -- core raw arithmetic on coefficient dicts ---------------------------

    def _basis_product(self, m1: int, m2: int) -> tuple:
        """Product of two basis monomials as a frozen coefficient map."""
        if m1 > m2:
            m1, m2 = m2, m1
        key = (m1, m2)
        cached = self._prodcache.get(key)
        if cached is not None:
            return cached
        elem = {m1 ^ m2: self.ring.const(1)}
        common = m1 & m2
        while common:
            k = common.bit_length() - 1
            common ^= 1 << k
            elem = self._raw_mul(elem, self._raddicts[k])
        frozen = _freeze(elem)
        self._prodcache[key] = frozen
        return frozen

    def _raw_mul(self, a: dict, b: dict) -> dict:
        out: dict = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                c = ca * cb
                if c.is_zero:
                    continue
                for m, w in self._basis_product(ma, mb):
                    s = out.get(m)
                    s = c * w if s is None else s + c * w
                    if s.is_zero:
                        out.pop(m, None)
                    else:
                        out[m] = s
        return out

    def _raw_inv(self, a: dict, height: int) -> dict:
        """Inverse via iterated conjugation by the top radical."""
        if not a:
            raise DivisionByZero("inverse of zero tower element")
        if height == 0:
            pf = a[0]
            one = self.ring.const(1)
            return {0: one / pf}
        bit = 1 << (height - 1)
        lo = {m: c for m, c in a.items() if not m & bit}
        hi = {m ^ bit: c for m, c in a.items() if m & bit}
        if not hi:
            return self._raw_inv(lo, height - 1)
        # norm = lo^2 - hi^2 * radicand  (an element of the subtower)
        hi2 = self._raw_mul(hi, hi)
        norm = _raw_sub(self._raw_mul(lo, lo), self._raw_mul(hi2, self._raddicts[height - 1]))
        if not norm:
            raise ZeroDivisor(
                f"nonzero element has zero norm at level {height - 1} "
                f"(radical {self.radical_names[height - 1]!r}); the tower is reducible"
            )
        ninv = self._raw_inv(norm, height - 1)
        conj = dict(lo)
        for m, c in hi.items():
            conj[m | bit] = -c
        return self._raw_mul(conj, ninv)


def _raw_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for m, c in b.items():
        s = out.get(m)
        s = c if s is None else s + c
        if s.is_zero:
            out.pop(m, None)
        else:
            out[m] = s
    return out


def _raw_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for m, c in b.items():
        s = out.get(m)
        s = -c if s is None else s - c
        if s.is_zero:
            out.pop(m, None)
        else:
            out[m] = s
    return out


class TowerElem:
    """Sparse coefficient vector on the square-free radical basis."""

    __slots__ = ("spec", "coeffs", "_hash")

    def __init__(self, spec: TowerSpec, coeffs: dict):
        self.spec = spec
        self.coeffs = coeffs
        self._hash = None

    # -- inspection ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def as_rational(self) -> Fraction | None:
        if not self.coeffs:
            return Fraction(0)
        if len(self.coeffs) == 1 and 0 in self.coeffs:
            return self.coeffs[0].as_rational()
        return None

    def as_paramfunction(self) -> ParamFunction | None:
        if not self.coeffs:
            return self.spec.ring.const(0)
        if len(self.coeffs) == 1 and 0 in self.coeffs:
            return self.coeffs[0]
        return None

    def lift(self, spec: TowerSpec) -> "TowerElem":
        """Reinterpret in a taller tower with the same lower levels."""
        if self.spec == spec:
            return self
        if not self.spec.is_prefix_of(spec):
            raise ValueError("target tower does not extend this one")
        return TowerElem(spec, dict(self.coeffs))

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> "TowerElem | None":
        if isinstance(other, TowerElem):
            if other.spec != self.spec:
                if other.spec.is_prefix_of(self.spec):
                    return other.lift(self.spec)
                raise ValueError("mixed tower specs")
            return other
        if isinstance(other, (int, Fraction)):
            return self.spec.rational(other)
        if isinstance(other, ParamFunction):
            return self.spec.from_paramfunction(other)
        return None

    def __add__(self, other) -> "TowerElem":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return TowerElem(self.spec, _raw_add(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self) -> "TowerElem":
        return TowerElem(self.spec, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other) -> "TowerElem":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return TowerElem(self.spec, _raw_sub(self.coeffs, other.coeffs))

    def __rsub__(self, other) -> "TowerElem":
        return (-self) + other

    def __mul__(self, other) -> "TowerElem":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return TowerElem(self.spec, self.spec._raw_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "TowerElem":
        return TowerElem(self.spec, self.spec._raw_inv(self.coeffs, self.spec.height))

    def __truediv__(self, other) -> "TowerElem":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "TowerElem":
        other = self._coerce(other)
        return other * self.inverse()

    def __pow__(self, n: int) -> "TowerElem":
        if n < 0:
            return self.inverse() ** (-n)
        out = self.spec.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparison -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, ParamFunction)):
            other = self._coerce(other)
        if not isinstance(other, TowerElem):
            return NotImplemented
        return self.spec == other.spec and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(_freeze(self.coeffs))
        return self._hash

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for m in sorted(self.coeffs):
            c = self.coeffs[m]
            rads = "*".join(
                self.spec.radical_names[k] for k in range(self.spec.height) if m >> k & 1
            )
            cs = repr(c)
            if rads:
                if cs == "1":
                    parts.append(rads)
                elif cs == "-1":
                    parts.append(f"-{rads}")
                else:
                    body = cs if cs.startswith("(") else f"({cs})"
                    parts.append(f"{body}*{rads}")
            else:
                parts.append(cs)
        return " + ".join(parts).replace("+ -", "- ")

    # -- specialization ---------------------------------------------------------

    def specialize(self, assignment: Mapping[str, Fraction]) -> "TowerElem":
        """Assign rational values to parameters, collapsing radicals whose
        radicand becomes a perfect rational square.

        sqrt(-1) is kept as a symbol; other non-square rationals stay formal.
        Raises :class:`InconsistentCollapse` if a radicand specializes to zero
        while the level is still used (by this element or a higher radicand).
        """
        plan = _specialize_plan(self.spec, assignment)
        return plan.apply(self)

    def embed(self, values: Mapping[str, complex] | None = None) -> complex:
        """Numeric embedding: principal square roots taken recursively."""
        values = dict(values or {})
        radvals = _radical_values(self.spec, values)
        total = 0j
        for m, c in self.coeffs.items():
            term = c.embed(values)
            for k in range(self.spec.height):
                if m >> k & 1:
                    term *= radvals[k]
            total += term
        return total


def _radical_values(spec: TowerSpec, values: Mapping[str, complex]) -> list[complex]:
    radvals: list[complex] = []
    for rad in spec.radicands:
        v = 0j
        for m, c in rad:
            term = c.embed(values)
            for k in range(len(radvals)):
                if m >> k & 1:
                    term *= radvals[k]
            v += term
        radvals.append(cmath.sqrt(v))
    return radvals


class _SpecializePlan:
    """Per-level actions for one (spec, assignment) pair."""

    __slots__ = ("old_spec", "new_spec", "assignment", "actions")

    def __init__(self, old_spec: TowerSpec, assignment: Mapping[str, Fraction]):
        self.old_spec = old_spec
        self.assignment = dict(assignment)
        # action per level: ("keep", new_bit_index) | ("collapse", Fraction) | ("zero",)
        actions: list[tuple] = []
        new_rads: list[_CoeffMap] = []
        new_names: list[str] = []
        ring = old_spec.ring
        for k, rad in enumerate(old_spec.radicands):
            mapped: dict[int, ParamFunction] = {}
            for mask, pf in rad:
                pf2 = pf.evaluate(self.assignment)
                if pf2.is_zero:
                    continue
                new_mask = 0
                scale = ring.const(1)
                for j in range(k):
                    if not mask >> j & 1:
                        continue
                    act = actions[j]
                    if act[0] == "keep":
                        new_mask |= 1 << act[1]
                    elif act[0] == "collapse":
                        scale = scale * act[1]
                    else:  # zero level referenced by a higher radicand
                        raise InconsistentCollapse(
                            f"radicand of {old_spec.radical_names[k]!r} references "
                            f"{old_spec.radical_names[j]!r}, which specialized to zero"
                        )
                val = pf2 * scale
                cur = mapped.get(new_mask)
                cur = val if cur is None else cur + val
                if cur.is_zero:
                    mapped.pop(new_mask, None)
                else:
                    mapped[new_mask] = cur
            const = None
            if not mapped:
                actions.append(("zero",))
                continue
            if len(mapped) == 1 and 0 in mapped:
                const = mapped[0].as_rational()
            if const is not None and const != -1:
                root = _frac_sqrt(const)
                if root is not None:
                    actions.append(("collapse", root))
                    continue
            actions.append(("keep", len(new_rads)))
            new_rads.append(_freeze(mapped))
            new_names.append(old_spec.radical_names[k])
        self.actions = actions
        self.new_spec = TowerSpec(ring, tuple(new_rads), tuple(new_names))

    def apply(self, elem: TowerElem) -> TowerElem:
        ring = self.old_spec.ring
        out: dict[int, ParamFunction] = {}
        for mask, pf in elem.coeffs.items():
            pf2 = pf.evaluate(self.assignment)
            if pf2.is_zero:
                continue
            new_mask = 0
            scale = ring.const(1)
            for k in range(self.old_spec.height):
                if not mask >> k & 1:
                    continue
                act = self.actions[k]
                if act[0] == "keep":
                    new_mask |= 1 << act[1]
                elif act[0] == "collapse":
                    scale = scale * act[1]
                else:
                    raise InconsistentCollapse(
                        f"element uses radical {self.old_spec.radical_names[k]!r}, "
                        f"whose radicand specialized to zero"
                    )
            val = pf2 * scale
            cur = out.get(new_mask)
            cur = val if cur is None else cur + val
            if cur.is_zero:
                out.pop(new_mask, None)
            else:
                out[new_mask] = cur
        return TowerElem(self.new_spec, out)


_plan_cache: dict = {}


def _specialize_plan(spec: TowerSpec, assignment: Mapping[str, Fraction]) -> _SpecializePlan:
    key = (id(spec), tuple(sorted((k, Fraction(v)) for k, v in assignment.items())))
    plan = _plan_cache.get(key)
    if plan is None:
        plan = _SpecializePlan(spec, {k: Fraction(v) for k, v in assignment.items()})
        _plan_cache[key] = plan
    return plan


def specialization_plan(spec: TowerSpec, assignment: Mapping[str, Fraction]) -> _SpecializePlan:
    """The reusable plan mapping elements of ``spec`` into the collapsed tower.

    Exposes ``.new_spec`` and ``.apply(elem)``; useful when many coefficients
    must land in one shared target spec.
    """
    return _specialize_plan(spec, assignment)


# ---------------------------------------------------------------------------
# square roots inside a tower (best effort)
# ---------------------------------------------------------------------------


def _paramfunction_sqrt(pf: ParamFunction) -> ParamFunction | None:
    """sqrt of num/den exists in the rational function field iff num*den is a
    square polynomial; then sqrt = sqrt(num*den)/den."""
    if pf.is_zero:
        return pf.ring.const(0)
    prod = _poly_mul(pf.num, pf.den)
    root = _poly_sqrt(prod)
    if root is None:
        return None
    return ParamFunction(pf.ring, root, pf.den)


def tower_sqrt(x: TowerElem) -> TowerElem | None:
    """An element y with y*y == x, or None if the search fails.

    The search covers single basis-monomial roots (coefficient times one
    radical product) and nested two-part splits at each level.  ``None``
    means no root was found, not a proof that none exists.
    """
    spec = x.spec
    if x.is_zero:
        return spec.zero()
    # single-monomial candidates: y = c * B_m  =>  y^2 = c^2 * (B_m)^2
    for m in range(spec.dim):
        sq = dict(spec._basis_product(m, m))
        try:
            ratio = TowerElem(spec, spec._raw_mul(x.coeffs, spec._raw_inv(sq, spec.height)))
        except (ZeroDivisor, DivisionByZero):
            continue
        pf = ratio.as_paramfunction()
        if pf is None:
            continue
        c = _paramfunction_sqrt(pf)
        if c is not None:
            y = TowerElem(spec, spec._raw_mul({m: spec.ring.const(1)}, {0: c}))
            if (y * y).coeffs == x.coeffs:
                return y
    return _tower_sqrt_split(x, spec.height)


def _tower_sqrt_split(x: TowerElem, height: int) -> TowerElem | None:
    """Try y = u + v*sqrt(r) at the given level (r = radicand of level-1)."""
    if height == 0:
        return None
    spec = x.spec
    bit = 1 << (height - 1)
    lo = {m: c for m, c in x.coeffs.items() if not m & bit}
    hi = {m ^ bit: c for m, c in x.coeffs.items() if m & bit}
    if not hi:
        y = _tower_sqrt_split(x, height - 1)
        if y is not None and (y * y).coeffs == x.coeffs:
            return y
        return None
    a = TowerElem(spec, lo)
    b = TowerElem(spec, hi)
    r = TowerElem(spec, dict(spec._raddicts[height - 1]))
    # (u + v sqrt(r))^2 = u^2 + v^2 r + 2uv sqrt(r):  u^2+v^2 r = a, 2uv = b
    norm = a * a - b * b * r
    s = tower_sqrt(norm) if not norm.is_zero else spec.zero()
    if s is None:
        return None
    two = spec.rational(2)
    for sign in (1, -1):
        usq = (a + (s if sign == 1 else -s)) / two
        if usq.is_zero:
            continue
        u = tower_sqrt(usq)
        if u is None:
            continue
        try:
            v = b / (two * u)
        except (ZeroDivisor, DivisionByZero):
            continue
        y = u + v * TowerElem(spec, {bit: spec.ring.const(1)})
        if (y * y).coeffs == x.coeffs:
            return y
    return None


# ---------------------------------------------------------------------------
# ring extension (fresh parameters appended to an existing tower)
# ---------------------------------------------------------------------------


def extend_ring(spec: TowerSpec, extra_names: Sequence[str]):
    """The same radical tower over a ring with extra parameters appended.

    Returns ``(new_spec, carry, retract)`` where ``carry`` maps elements of
    ``spec`` into ``new_spec`` and ``retract`` maps elements of ``new_spec``
    that do not involve the extra parameters back to ``spec`` (raising
    ``UnknownParameter`` if they do).  Radical levels are preserved in order,
    so carried arithmetic agrees with the original.
    """
    extra = tuple(extra_names)
    ring = spec.ring
    clash = set(extra) & set(ring.names)
    if clash:
        raise ValueError(f"parameter names already in use: {sorted(clash)}")
    if len(set(extra)) != len(extra):
        raise ValueError("duplicate extra parameter names")
    new_ring = PolyRing(ring.names + extra)
    k = len(extra)
    pad = (0,) * k

    def carry_poly(d: dict) -> dict:
        return {mono + pad: c for mono, c in d.items()}

    def carry_pf(pf: ParamFunction) -> ParamFunction:
        return ParamFunction(
            new_ring, carry_poly(pf.num), carry_poly(pf.den), _reduced=True
        )

    new_spec = TowerSpec(
        new_ring,
        tuple(
            _freeze({mask: carry_pf(pf) for mask, pf in rad})
            for rad in spec.radicands
        ),
        spec.radical_names,
    )

    def carry(elem: TowerElem) -> TowerElem:
        if elem.spec != spec:
            raise ValueError("element lives over a different tower")
        return TowerElem(
            new_spec, {m: carry_pf(pf) for m, pf in elem.coeffs.items()}
        )

    def strip_poly(d: dict) -> dict:
        out = {}
        for mono, c in d.items():
            if any(mono[-k:]):
                raise UnknownParameter(
                    "element involves the extended parameters"
                )
            out[mono[:-k]] = c
        return out

    def retract(elem: TowerElem) -> TowerElem:
        if elem.spec != new_spec:
            raise ValueError("element lives over a different tower")
        return TowerElem(
            spec,
            {
                m: ParamFunction(
                    ring, strip_poly(pf.num), strip_poly(pf.den), _reduced=True
                )
                for m, pf in elem.coeffs.items()
            },
        )

    return new_spec, carry, retract
