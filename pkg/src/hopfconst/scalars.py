"""Exact scalar fields: the rationals, prime fields GF(p) and cyclotomic fields Q(zeta_n).

Every value is held in a canonical representation so that equality (and hashing)
is structural:

* rationals are :class:`fractions.Fraction` (always reduced, positive denominator);
* prime-field residues are ints in ``[0, p)``;
* cyclotomic elements are tuples of ``phi(n)`` Fractions, the coefficients of a
  polynomial in ``zeta_n`` of degree ``< phi(n)``, reduced modulo the n-th
  cyclotomic polynomial.

Scalars from different fields never mix; plain ``int`` and ``Fraction`` operands
are coerced into the field of the other operand.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache

from sympy import isprime, primitive_root
from sympy.ntheory import sqrt_mod

from .errors import FieldMismatchError, HopfError, ParseError

__all__ = [
    "Field",
    "RationalField",
    "PrimeField",
    "CyclotomicField",
    "Scalar",
    "QQ",
    "field_make",
    "field_from_text",
    "cyclotomic_polynomial",
    "root_of_unity",
    "scalar_sqrt",
]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")
_CYCLO_RE = re.compile(r"^\s*\[(.*)\]\s*@\s*zeta\(\s*(\d+)\s*\)\s*$")


def _parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ParseError(f"not a rational number: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def _reject_cyclotomic_text(field, text: str):
    if _CYCLO_RE.match(text):
        raise FieldMismatchError(f"scalar {text!r} is not in the {field} field")


def _format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients (lowest degree first) of the n-th cyclotomic polynomial.

    Obtained by exact division of ``x^n - 1`` by ``Phi_d`` for every proper divisor d.
    """
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _poly_exact_div(num, cyclotomic_polynomial(d))
    return tuple(num)


def _poly_exact_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    # den is monic
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for m in range(len(num) - 1, dd - 1, -1):
        c = num[m]
        if c:
            quot[m - dd] = c
            for r, dc in enumerate(den):
                num[m - dd + r] -= c * dc
    assert not any(num), "inexact polynomial division"
    return quot


class Field:
    """Base class of the three supported field kinds."""

    characteristic: int = 0

    # -- construction of elements -------------------------------------------------
    def __call__(self, value) -> "Scalar":
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatchError(f"{value!r} does not belong to {self}")
            return value
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, (int, Fraction)):
            return Scalar(self, self._from_rational(Fraction(value)))
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot convert {type(value).__name__} into {self}")

    @property
    def zero(self) -> "Scalar":
        return self(0)

    @property
    def one(self) -> "Scalar":
        return self(1)

    def parse(self, text: str) -> "Scalar":
        raise NotImplementedError

    # raw-value arithmetic, overridden per kind
    def _from_rational(self, x: Fraction):
        raise NotImplementedError

    def _add(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _inv(self, a):
        raise NotImplementedError

    def _is_zero(self, a) -> bool:
        raise NotImplementedError

    def _format(self, a) -> str:
        raise NotImplementedError

    def _pretty(self, a) -> str:
        return self._format(a)


@dataclass(frozen=True)
class RationalField(Field):
    def __str__(self):
        return "rational"

    def parse(self, text):
        _reject_cyclotomic_text(self, text)
        return Scalar(self, _parse_rational(text))

    def _from_rational(self, x):
        return x

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _inv(self, a):
        return 1 / a

    def _is_zero(self, a):
        return a == 0

    def _format(self, a):
        return _format_rational(a)


@dataclass(frozen=True)
class PrimeField(Field):
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 2 or not isprime(self.p):
            raise HopfError(f"prime field needs a prime modulus, got {self.p!r}")

    @property
    def characteristic(self):  # type: ignore[override]
        return self.p

    def __str__(self):
        return f"prime {self.p}"

    def parse(self, text):
        _reject_cyclotomic_text(self, text)
        t = text.strip()
        if not t.isdigit():
            raise ParseError(f"not a residue mod {self.p}: {text!r}")
        v = int(t)
        if v >= self.p:
            raise ParseError(f"residue {v} out of range [0, {self.p})")
        return Scalar(self, v)

    def _from_rational(self, x):
        if x.denominator % self.p == 0:
            raise ZeroDivisionError(f"{x} is not defined in GF({self.p})")
        return x.numerator * pow(x.denominator, -1, self.p) % self.p

    def _add(self, a, b):
        return (a + b) % self.p

    def _neg(self, a):
        return -a % self.p

    def _mul(self, a, b):
        return a * b % self.p

    def _inv(self, a):
        return pow(a, -1, self.p)

    def _is_zero(self, a):
        return a == 0

    def _format(self, a):
        return str(a)


@dataclass(frozen=True)
class CyclotomicField(Field):
    """Q(zeta_n) as Q[x] / Phi_n(x).  n = 1 and n = 2 give degree-one copies of Q."""

    n: int
    phi: tuple[int, ...] = dc_field(init=False, repr=False, compare=False)
    degree: int = dc_field(init=False, repr=False, compare=False)
    _reduced_powers: tuple = dc_field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise HopfError(f"cyclotomic order must be a positive integer, got {self.n!r}")
        phi = cyclotomic_polynomial(self.n)
        d = len(phi) - 1
        # x^m mod Phi_n for m < max(2d - 1, 2), as integer vectors
        powers = []
        vec = [1] + [0] * (d - 1)
        for _ in range(max(2 * d - 1, 2)):
            powers.append(tuple(vec))
            top = vec[-1]
            vec = [0] + vec[:-1]
            if top:
                vec = [v - top * c for v, c in zip(vec, phi[:-1])]
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "degree", d)
        object.__setattr__(self, "_reduced_powers", tuple(powers))

    def __str__(self):
        return f"cyclotomic {self.n}"

    @property
    def zeta(self) -> "Scalar":
        return Scalar(self, tuple(Fraction(c) for c in self._reduced_powers[1]))

    def from_coefficients(self, coeffs) -> "Scalar":
        """Element sum_m coeffs[m] * zeta^m; any length, reduced on the way in."""
        acc = [Fraction(0)] * self.degree
        z_m = [Fraction(1)] + [Fraction(0)] * (self.degree - 1)
        z = self.zeta.v
        for c in coeffs:
            c = Fraction(c)
            if c:
                acc = [a + c * b for a, b in zip(acc, z_m)]
            z_m = list(self._mul(tuple(z_m), z))
        return Scalar(self, tuple(acc))

    def parse(self, text):
        m = _CYCLO_RE.match(text)
        if m is None:
            # plain rationals are accepted as a convenience
            return self(_parse_rational(text))
        if int(m.group(2)) != self.n:
            raise FieldMismatchError(f"scalar {text!r} is not in Q(zeta_{self.n})")
        parts = [p for p in m.group(1).split(",")]
        if len(parts) != self.degree:
            raise ParseError(
                f"expected {self.degree} coefficients for Q(zeta_{self.n}), got {len(parts)}"
            )
        return Scalar(self, tuple(_parse_rational(p) for p in parts))

    def _from_rational(self, x):
        return (x,) + (Fraction(0),) * (self.degree - 1)

    def _add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def _neg(self, a):
        return tuple(-x for x in a)

    def _mul(self, a, b):
        # integer numerators over a common denominator; Fraction arithmetic is the hot spot
        d = self.degree
        da, na = _integer_form(a)
        db, nb = _integer_form(b)
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(na):
            if x:
                for j, y in enumerate(nb):
                    if y:
                        prod[i + j] += x * y
        out = prod[:d]
        for m in range(d, 2 * d - 1):
            c = prod[m]
            if c:
                for t, r in enumerate(self._reduced_powers[m]):
                    if r:
                        out[t] += c * r
        den = da * db
        return tuple(Fraction(c, den) for c in out)

    def _inv(self, a):
        # a^-1 = (product of the other Galois conjugates) / norm(a)
        if self._is_zero(a):
            raise ZeroDivisionError("division by zero in cyclotomic field")
        others = self._from_rational(Fraction(1))
        for k in range(2, self.n):
            if math.gcd(k, self.n) == 1:
                others = self._mul(others, self._conjugate(a, k))
        norm = self._mul(a, others)[0]
        return tuple(c / norm for c in others)

    def _conjugate(self, a, k):
        """Image of ``a`` under zeta -> zeta^k."""
        table = self._zeta_powers
        out = [Fraction(0)] * self.degree
        for m, c in enumerate(a):
            if c:
                for t, r in enumerate(table[m * k % self.n]):
                    if r:
                        out[t] += c * r
        return tuple(out)

    @property
    def _zeta_powers(self):
        cached = self.__dict__.get("_zeta_power_cache")
        if cached is None:
            d = self.degree
            vec = [1] + [0] * (d - 1)
            cached = []
            for _ in range(self.n):
                cached.append(tuple(vec))
                top = vec[-1]
                vec = [0] + vec[:-1]
                if top:
                    vec = [v - top * c for v, c in zip(vec, self.phi[:-1])]
            cached = tuple(cached)
            object.__setattr__(self, "_zeta_power_cache", cached)
        return cached

    def _is_zero(self, a):
        return not any(a)

    def _format(self, a):
        return "[" + ", ".join(_format_rational(c) for c in a) + f"] @ zeta({self.n})"

    def _pretty(self, a):
        if not any(a[1:]):
            return _format_rational(a[0])
        z = f"z{self.n}"
        terms = []
        for m in range(len(a) - 1, -1, -1):
            c = a[m]
            if not c:
                continue
            mono = "" if m == 0 else (z if m == 1 else f"{z}^{m}")
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{_format_rational(mag)}*{mono}"
            else:
                body = _format_rational(mag)
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _integer_form(a) -> tuple[int, list[int]]:
    den = 1
    for x in a:
        if x.denominator != 1:
            den = math.lcm(den, x.denominator)
    return den, [x.numerator * (den // x.denominator) for x in a]


QQ = RationalField()


class Scalar:
    """An immutable element of one of the exact fields."""

    __slots__ = ("field", "v")

    def __init__(self, field: Field, v):
        self.field = field
        self.v = v

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(f"cannot combine {self.field} and {other.field} scalars")
            return other.v
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.field._from_rational(Fraction(other))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, self.field._add(self.v, o))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.field, self.field._neg(self.v))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, self.field._add(self.v, self.field._neg(o)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, self.field._add(o, self.field._neg(self.v)))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, self.field._mul(self.v, o))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.field._is_zero(self.v):
            raise ZeroDivisionError("division by zero scalar")
        return Scalar(self.field, self.field._inv(self.v))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.field._is_zero(o):
            raise ZeroDivisionError("division by zero scalar")
        return Scalar(self.field, self.field._mul(self.v, self.field._inv(o)))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, o) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        acc = self.field.one
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def is_zero(self) -> bool:
        return self.field._is_zero(self.v)

    def __bool__(self):
        return not self.field._is_zero(self.v)

    def is_rational(self) -> bool:
        """True when the value lies in the prime subfield Q (always true for Q itself)."""
        if isinstance(self.field, CyclotomicField):
            return not any(self.v[1:])
        return isinstance(self.field, RationalField)

    def to_fraction(self) -> Fraction:
        if isinstance(self.field, RationalField):
            return self.v
        if isinstance(self.field, CyclotomicField) and self.is_rational():
            return self.v[0]
        raise ValueError(f"{self} is not a rational number")

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.v == other.v
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            try:
                return self.v == self.field._from_rational(Fraction(other))
            except ZeroDivisionError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.v))

    def to_text(self) -> str:
        """Canonical serialization text (exact, round-trips through ``field.parse``)."""
        return self.field._format(self.v)

    def pretty(self) -> str:
        """Human-oriented rendering used in tables (cyclotomic values as polynomials in zN)."""
        return self.field._pretty(self.v)

    __str__ = to_text

    def __repr__(self):
        return f"Scalar({self.to_text()!r}, {self.field})"


def field_make(kind: str, parameter: int | None = None) -> Field:
    """Build a field from a kind name (``rational``, ``prime``, ``cyclotomic``) and parameter."""
    k = kind.strip().lower()
    if k in ("rational", "q", "qq"):
        return QQ
    if k in ("prime", "primefield", "gf", "fp"):
        if parameter is None:
            raise HopfError("prime field needs a modulus")
        return PrimeField(int(parameter))
    if k in ("cyclotomic", "cyclo"):
        if parameter is None:
            raise HopfError("cyclotomic field needs an order")
        return CyclotomicField(int(parameter))
    raise HopfError(f"unknown field kind {kind!r}")


def field_from_text(text: str) -> Field:
    """Parse ``rational``, ``prime 5`` / ``prime:5`` or ``cyclotomic 8`` / ``cyclotomic:8``."""
    parts = text.replace(":", " ").split()
    if not parts or len(parts) > 2:
        raise ParseError(f"bad field description {text!r}")
    param = None
    if len(parts) == 2:
        if not parts[1].isdigit():
            raise ParseError(f"bad field parameter in {text!r}")
        param = int(parts[1])
    try:
        return field_make(parts[0], param)
    except HopfError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from None


def root_of_unity(field: Field, k: int = 1, order: int | None = None) -> Scalar:
    """Return w**k for a fixed primitive ``order``-th root of unity w in ``field``.

    For Q(zeta_n) the default order is n and w = zeta_n; a smaller order must divide n.
    For GF(p) the order is required, must divide p - 1, and w = g**((p-1)/order) for the
    least primitive root g.  Over Q only orders 1 and 2 exist.
    """
    if isinstance(field, CyclotomicField):
        order = field.n if order is None else order
        if field.n % order:
            raise HopfError(f"Q(zeta_{field.n}) has no primitive {order}-th root of unity")
        return field.zeta ** ((field.n // order) * k % field.n)
    if order is None:
        raise HopfError(f"root_of_unity over {field} needs an explicit order")
    if isinstance(field, PrimeField):
        p = field.p
        if (p - 1) % order:
            raise HopfError(f"GF({p}) has no primitive {order}-th root of unity")
        g = primitive_root(p) if p > 2 else 1
        w = pow(g, (p - 1) // order, p)
        return Scalar(field, pow(w, k % order, p))
    if order not in (1, 2):
        raise HopfError(f"Q has no primitive {order}-th root of unity")
    return field(-1) ** k if order == 2 else field.one


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    rn, rd = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def scalar_sqrt(a: Scalar) -> Scalar | None:
    """A square root of ``a`` from a deliberately partial table, or ``None``.

    Covered: rational perfect squares; r * zeta^k with r a rational square and k even
    (mod n, or any k when n is odd); and, when 8 | n, r * zeta^k with r twice a rational
    square, via sqrt(2) = zeta_8 + zeta_8^-1.  In GF(p) every quadratic residue is covered.
    """
    field = a.field
    if a.is_zero():
        return field.zero
    if isinstance(field, PrimeField):
        roots = sqrt_mod(a.v, field.p, all_roots=True)
        return Scalar(field, min(roots)) if roots else None
    if isinstance(field, RationalField):
        r = _rational_sqrt(a.v)
        return None if r is None else field(r)
    n = field.n
    zeta_inv = field.zeta.inverse()
    b = a
    for k in range(n):
        if b.is_rational():
            root = _sqrt_r_zeta_k(field, b.v[0], k)
            if root is not None:
                return root
        b = b * zeta_inv
    return None


def _sqrt_r_zeta_k(field: CyclotomicField, r: Fraction, k: int) -> Scalar | None:
    n = field.n
    if k % 2:
        if n % 2 == 0:
            return None
        k += n
    half = field.zeta ** (k // 2)
    s = _rational_sqrt(r)
    if s is not None:
        return half * s
    if n % 8 == 0:
        s = _rational_sqrt(r / 2)
        if s is not None:
            z8 = root_of_unity(field, 1, 8)
            return half * (z8 + z8.inverse()) * s
    return None
