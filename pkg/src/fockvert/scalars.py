"""Exact scalar arithmetic: multivariate rational functions over Q or Q(i).

A polynomial is a dict mapping exponent tuples to nonzero coefficients, the
zero polynomial being the empty dict.  A :class:`Scalar` is a quotient of two
such polynomials over a fixed :class:`Ring`, kept in a normalized form so
that the string serialization is reproducible run to run.  All arithmetic is
exact; there are no floats anywhere in this module.

Coefficients are ``gmpy2.mpq`` when gmpy2 is available (``fractions.Fraction``
otherwise), wrapped in :class:`GaussianRational` for rings extended by a
square root of -1.
"""

from __future__ import annotations

import dataclasses
import re as _re
from typing import Iterable, Mapping, Union

try:
    from gmpy2 import mpq as _mpq

    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as _mpq

    HAVE_GMPY2 = False

QQ = _mpq

Exps = tuple


class PoleError(ArithmeticError):
    """Raised when a specialization lands on a zero denominator."""


def as_qq(x) -> QQ:
    """Coerce an int, string, Fraction or mpq to the rational type in use."""
    return _mpq(x)


class GaussianRational:
    """An element a + b*i of Q(i) with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _mpq(re))
        object.__setattr__(self, "im", _mpq(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _coerce(x) -> "GaussianRational | None":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, type(_mpq(0)))):
            return GaussianRational(x, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"


GAUSSIAN_I = GaussianRational(0, 1)

Coeff = Union[QQ, GaussianRational]
Poly = dict  # Exps -> Coeff ; zero polynomial == {}


# ---------------------------------------------------------------------------
# raw polynomial helpers (dict of exponent tuples)
# ---------------------------------------------------------------------------

def poly_add(p: Poly, q: Poly) -> Poly:
    out = dict(p)
    for e, c in q.items():
        s = out.get(e, 0) + c
        if s == 0:
            out.pop(e, None)
        else:
            out[e] = s
    return out


def poly_neg(p: Poly) -> Poly:
    return {e: -c for e, c in p.items()}


def poly_mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            s = out.get(e, 0) + c1 * c2
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
    return out


def poly_scale(p: Poly, c: Coeff) -> Poly:
    if c == 0:
        return {}
    return {e: v * c for e, v in p.items()}


def _grlex_key(e: Exps):
    return (sum(e), e)


def poly_lead(p: Poly) -> Exps:
    """Leading exponent under graded lexicographic order."""
    return max(p, key=_grlex_key)


# ---------------------------------------------------------------------------
# ring and scalar
# ---------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class Ring:
    """A coefficient ring Q(vars) or Q(i)(vars), shared by compatible scalars."""

    variables: tuple = ()
    gaussian: bool = False

    def _coeff(self, x) -> Coeff:
        if isinstance(x, GaussianRational):
            if not self.gaussian:
                if x.im != 0:
                    raise ValueError("imaginary coefficient in a rational ring")
                return x.re
            return x
        if self.gaussian:
            return GaussianRational(x, 0)
        return _mpq(x)

    def _zero_exps(self) -> Exps:
        return (0,) * len(self.variables)

    def zero(self) -> "Scalar":
        return Scalar(self, {}, {self._zero_exps(): self._coeff(1)}, _normalized=True)

    def one(self) -> "Scalar":
        return self.from_coeff(1)

    def from_coeff(self, c) -> "Scalar":
        c = self._coeff(c)
        num = {} if c == 0 else {self._zero_exps(): c}
        return Scalar(self, num, {self._zero_exps(): self._coeff(1)}, _normalized=True)

    from_int = from_coeff

    def i(self) -> "Scalar":
        return self.from_coeff(GAUSSIAN_I)

    def var(self, name: str) -> "Scalar":
        return self.monomial(1, {name: 1})

    def monomial(self, coeff, exps: Mapping[str, int]) -> "Scalar":
        e = [0] * len(self.variables)
        for name, k in exps.items():
            e[self.variables.index(name)] = k
        return self.poly({tuple(e): coeff})

    def poly(self, terms: Mapping[Exps, object]) -> "Scalar":
        num = {}
        for e, c in terms.items():
            c = self._coeff(c)
            if c != 0:
                num[tuple(e)] = c
        return Scalar(self, num, {self._zero_exps(): self._coeff(1)})


# the three rings the rest of the package works over
RING_T = Ring(("t",))
RING_TI = Ring(("t",), gaussian=True)
RING_T1T2C1 = Ring(("t1", "t2", "c1"))
RING_Q = Ring(())


def _active_vars(num: Poly, den: Poly, nvars: int) -> list:
    active = []
    for i in range(nvars):
        if any(e[i] for e in num) or any(e[i] for e in den):
            active.append(i)
    return active


def _to_dense(p: Poly, i: int) -> list:
    """Univariate dense coefficient list (low to high) for variable index i."""
    deg = max(e[i] for e in p)
    out = [0] * (deg + 1)
    for e, c in p.items():
        out[e[i]] = out[e[i]] + c
    return out


def _dense_trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _dense_divmod(a: list, b: list):
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    for k in range(len(a) - len(b), -1, -1):
        f = a[k + len(b) - 1] * inv
        q[k] = f
        if f != 0:
            for j, bc in enumerate(b):
                a[k + j] = a[k + j] - f * bc
    return q, _dense_trim(a)


def _dense_gcd(a: list, b: list) -> list:
    a, b = _dense_trim(list(a)), _dense_trim(list(b))
    while b:
        _, r = _dense_divmod(a, b)
        a, b = b, r
    if a:
        inv = 1 / a[-1]
        a = [c * inv for c in a]
    return a


class Scalar:
    """An exact rational function num/den over a :class:`Ring`.

    Normalization: common monomial factors are cancelled variable by
    variable; when at most one variable is active and the denominator is a
    true polynomial, the full univariate gcd is cancelled; finally the
    denominator is made monic under graded-lex.  Denominators occurring in
    this package are monomials, for which this form is canonical, so equal
    values serialize identically.  Equality itself never relies on canonical
    form: it cross-multiplies.
    """

    __slots__ = ("ring", "num", "den")
    __hash__ = None

    def __init__(self, ring: Ring, num: Poly, den: Poly, _normalized=False):
        if not den:
            raise ZeroDivisionError("scalar with zero denominator")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        if not _normalized:
            self._normalize()

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _set(self, num, den):
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def _normalize(self):
        ring = self.ring
        num = {e: c for e, c in self.num.items() if c != 0}
        den = {e: c for e, c in self.den.items() if c != 0}
        if not den:
            raise ZeroDivisionError("scalar with zero denominator")
        nvars = len(ring.variables)
        if not num:
            self._set({}, {ring._zero_exps(): ring._coeff(1)})
            return
        # cancel monomial content shared by numerator and denominator
        for i in range(nvars):
            m = min(min(e[i] for e in num), min(e[i] for e in den))
            if m > 0:
                num = {e[:i] + (e[i] - m,) + e[i + 1:]: c for e, c in num.items()}
                den = {e[:i] + (e[i] - m,) + e[i + 1:]: c for e, c in den.items()}
        # full gcd when effectively univariate and the denominator is not
        # just a monomial
        if len(den) > 1:
            active = _active_vars(num, den, nvars)
            if len(active) == 1:
                i = active[0]
                g = _dense_gcd(_to_dense(num, i), _to_dense(den, i))
                if len(g) > 1:
                    qn, rn = _dense_divmod(_to_dense(num, i), g)
                    qd, rd = _dense_divmod(_to_dense(den, i), g)
                    assert not rn and not rd
                    z = [0] * nvars

                    def undense(coeffs):
                        out = {}
                        for k, c in enumerate(coeffs):
                            if c != 0:
                                e = list(z)
                                e[i] = k
                                out[tuple(e)] = c
                        return out

                    num, den = undense(qn), undense(qd)
        # monic denominator
        lead = den[poly_lead(den)]
        if lead != 1:
            num = {e: c / lead for e, c in num.items()}
            den = {e: c / lead for e, c in den.items()}
        self._set(num, den)

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_one(self) -> bool:
        return self == 1

    def is_polynomial(self) -> bool:
        return len(self.den) == 1 and not any(poly_lead(self.den))

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Scalar | None":
        if isinstance(other, Scalar):
            if other.ring != self.ring:
                raise ValueError("scalars from different rings")
            return other
        if isinstance(other, (int, type(_mpq(0)), GaussianRational)):
            return self.ring.from_coeff(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(
            self.ring,
            poly_add(poly_mul(self.num, o.den), poly_mul(o.num, self.den)),
            poly_mul(self.den, o.den),
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Scalar(self.ring, poly_neg(self.num), self.den, _normalized=True)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(
            self.ring, poly_mul(self.num, o.num), poly_mul(self.den, o.den)
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by zero scalar")
        return Scalar(
            self.ring, poly_mul(self.num, o.den), poly_mul(self.den, o.num)
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self.num:
                raise ZeroDivisionError("zero scalar to a negative power")
            return Scalar(self.ring, self.den, self.num) ** (-n)
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return poly_mul(self.num, o.den) == poly_mul(o.num, self.den)

    # -- structure ----------------------------------------------------------

    def conjugate(self) -> "Scalar":
        """Bar involution: conjugate coefficients and negate every variable."""

        def flip(p: Poly) -> Poly:
            out = {}
            for e, c in p.items():
                if self.ring.gaussian:
                    c = c.conjugate()
                if sum(e) % 2:
                    c = -c
                out[e] = c
            return out

        return Scalar(self.ring, flip(self.num), flip(self.den))

    def evaluate(self, target: Ring, images: Mapping[str, "Scalar"]) -> "Scalar":
        """Apply the ring map sending each variable to its image scalar."""
        for v in self.ring.variables:
            if v not in images:
                raise KeyError(f"no image given for variable {v!r}")

        def ev(p: Poly) -> Scalar:
            total = target.zero()
            for e, c in p.items():
                term = target.from_coeff(c)
                for i, v in enumerate(self.ring.variables):
                    if e[i]:
                        term = term * images[v] ** e[i]
                total = total + term
            return total

        den_val = ev(self.den)
        if den_val.is_zero():
            raise PoleError("denominator vanishes under this specialization")
        return ev(self.num) / den_val

    def as_coeff(self) -> Coeff:
        """The value of a constant scalar, as a bare coefficient."""
        if not self.is_polynomial():
            raise ValueError("not a constant: nontrivial denominator")
        if not self.num:
            return self.ring._coeff(0)
        ((e, c),) = self.num.items()
        if any(e):
            raise ValueError("not a constant: nonconstant numerator")
        return c

    # -- serialization ------------------------------------------------------

    def __str__(self):
        return serialize(self)

    def __repr__(self):
        return f"<Scalar {serialize(self)}>"


# ---------------------------------------------------------------------------
# canonical serialization and parsing
# ---------------------------------------------------------------------------

def _rat_str(c) -> str:
    return f"{c.numerator}/{c.denominator}"


def _coeff_str(c: Coeff) -> str:
    if isinstance(c, GaussianRational):
        if not c.im:
            return _rat_str(c.re)
        if not c.re:
            return f"{_rat_str(c.im)}i"
        sign = "+" if c.im > 0 else "-"
        return f"{_rat_str(c.re)}{sign}{_rat_str(abs(c.im))}i"
    return _rat_str(c)


def _monomial_str(e: Exps, variables: tuple) -> str:
    parts = []
    for v, k in zip(variables, e):
        if k == 1:
            parts.append(v)
        elif k != 0:
            parts.append(f"{v}^{k}")
    return "*".join(parts)


def _poly_str(p: Poly, variables: tuple) -> str:
    if not p:
        return "(0)"
    terms = []
    for e in sorted(p, key=_grlex_key, reverse=True):
        mon = _monomial_str(e, variables)
        head = f"({_coeff_str(p[e])})"
        terms.append(f"{head}*{mon}" if mon else head)
    return " + ".join(terms)


def serialize(s: Scalar) -> str:
    """Canonical string form; :func:`parse` is its exact inverse."""
    if not s.num:
        return "0"
    num = _poly_str(s.num, s.ring.variables)
    if s.is_polynomial():
        return num
    den = _poly_str(s.den, s.ring.variables)
    return f"({num}) / ({den})"


_RAT = r"-?\d+(?:/\d+)?"
_COEFF_RE = _re.compile(
    rf"^(?:(?P<re>{_RAT})(?=$|[+-]))?(?:(?P<im>[+-]?{_RAT})i)?$"
)


def _parse_coeff(ring: Ring, s: str) -> Coeff:
    m = _COEFF_RE.match(s)
    if not m or (m.group("re") is None and m.group("im") is None):
        raise ValueError(f"bad coefficient {s!r}")
    re_part = _mpq(m.group("re")) if m.group("re") else _mpq(0)
    im_part = _mpq(m.group("im")) if m.group("im") else _mpq(0)
    if im_part != 0 and not ring.gaussian:
        raise ValueError(f"imaginary coefficient {s!r} in a rational ring")
    return ring._coeff(GaussianRational(re_part, im_part) if ring.gaussian else re_part)


def _parse_poly(ring: Ring, s: str) -> Poly:
    out: Poly = {}
    for term in s.split(" + "):
        term = term.strip()
        if not (term.startswith("(")):
            raise ValueError(f"bad term {term!r}")
        close = term.index(")")
        coeff = _parse_coeff(ring, term[1:close])
        rest = term[close + 1:]
        e = [0] * len(ring.variables)
        if rest:
            if not rest.startswith("*"):
                raise ValueError(f"bad term {term!r}")
            for factor in rest[1:].split("*"):
                if "^" in factor:
                    v, k = factor.split("^")
                    k = int(k)
                else:
                    v, k = factor, 1
                if v not in ring.variables:
                    raise ValueError(f"unknown variable {v!r}")
                e[ring.variables.index(v)] += k
        if coeff != 0:
            key = tuple(e)
            prev = out.get(key, 0) + coeff
            if prev == 0:
                out.pop(key, None)
            else:
                out[key] = prev
    return out


def parse(ring: Ring, s: str) -> Scalar:
    """Parse the canonical form produced by :func:`serialize`."""
    s = s.strip()
    if s == "0":
        return ring.zero()
    if " / " in s:
        num_s, den_s = s.split(" / ")
        if not (num_s.startswith("(") and num_s.endswith(")")):
            raise ValueError(f"bad rational form {s!r}")
        if not (den_s.startswith("(") and den_s.endswith(")")):
            raise ValueError(f"bad rational form {s!r}")
        num = _parse_poly(ring, num_s[1:-1])
        den = _parse_poly(ring, den_s[1:-1])
        return Scalar(ring, num, den)
    return Scalar(ring, _parse_poly(ring, s), {ring._zero_exps(): ring._coeff(1)})


def product(ring: Ring, factors: Iterable) -> Scalar:
    """Product of scalars/ints over a ring (empty product is one)."""
    out = ring.one()
    for f in factors:
        out = out * f
    return out
