"""
Exact arithmetic in GF(q), q = p^m.

Elements are plain integers in ``[0, q)``.  The base-p digits of an element
are the coefficients of its polynomial representative, least significant
digit first (the constant term).  So over GF(4) with modulus x^2 + x + 1 the
element ``2`` is ``x`` and ``3`` is ``x + 1``.

Moduli are given as coefficient sequences in the same order, constant term
first, e.g. ``(1, 1, 1)`` for x^2 + x + 1.  In code-file headers the modulus is
written as a single integer in the digit encoding (x^2 + x + 1 over GF(2) is
``7``).
"""

from __future__ import annotations

import functools
import itertools
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DivisionByZero,
    FieldMismatch,
    InvalidParams,
    NotPrime,
    ReduciblePolynomial,
    UnsupportedOrder,
)

__all__ = [
    "DEFAULT_MODULI",
    "Field",
    "FieldElement",
    "GF",
    "field_new",
    "is_prime",
    "is_irreducible",
]

# Smallest monic irreducible polynomial of degree m over GF(p), for every
# non-prime q = p^m <= 256, in digit encoding (leading term included).
DEFAULT_MODULI = {
    4: 7,
    8: 11,
    9: 10,
    16: 19,
    25: 27,
    27: 34,
    32: 37,
    49: 50,
    64: 67,
    81: 86,
    121: 122,
    125: 131,
    128: 131,
    169: 171,
    243: 250,
    256: 283,
}

MAX_ORDER = 1 << 16
# Full q*q addition/multiplication tables are kept up to this order.
TABLE_LIMIT = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, m)`` with ``q == p**m`` or raise NotPrime."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    p = next(d for d in itertools.count(2) if q % d == 0)
    if not is_prime(p):
        raise NotPrime(f"{q} is not a prime power")
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise NotPrime(f"{q} is not a prime power")
    return p, m


def _digits(value: int, p: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        value, r = divmod(value, p)
        out.append(r)
    return out


def _from_digits(digits: Sequence[int], p: int) -> int:
    value = 0
    for d in reversed(digits):
        value = value * p + d
    return value


def _poly_rem(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a by monic b over GF(p); coefficient lists low-to-high."""
    a = list(a)
    db = len(b) - 1
    while len(a) > db:
        c = a.pop() % p
        if c:
            s = len(a) - db
            for i in range(db):
                a[s + i] = (a[s + i] - c * b[i]) % p
    return a


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..m//2."""
    m = len(modulus) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    for deg in range(1, m // 2 + 1):
        for v in range(p**deg):
            g = _digits(v, p, deg) + [1]
            if not any(_poly_rem(modulus, g, p)):
                return False
    return True


class Field:
    """A finite field GF(p^m) with an explicit irreducible modulus.

    Instances are immutable; construct them with :func:`field_new` or
    :func:`GF`, which cache by parameters.
    """

    __slots__ = (
        "p", "m", "q", "modulus", "poly",
        "_add", "_mul", "_neg", "_inv", "_exp", "_log",
        "_add_np", "_mul_np", "_neg_np", "_exp_np", "_log_np",
    )

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus
        self.poly = _from_digits(modulus, p)
        self._build_tables()

    def _poly_mul(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        if m == 1:
            return a * b % p
        da, db = _digits(a, p, m), _digits(b, p, m)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return _from_digits(_poly_rem([c % p for c in prod], self.modulus, p), p)

    def _digit_add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        p, out, scale = self.p, 0, 1
        for _ in range(self.m):
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += (ra + rb) % p * scale
            scale *= p
        return out

    def _build_tables(self) -> None:
        q = self.q
        # Discrete log/exp from a primitive element; also proves the modulus
        # yields a field, since a primitive element exists only then.
        for g in range(2 if q > 2 else 1, q):
            exp = [1]
            x = g
            while x != 1:
                exp.append(x)
                x = self._poly_mul(x, g)
            if len(exp) == q - 1:
                break
        else:
            raise ReduciblePolynomial(f"modulus {self.modulus} does not define a field")
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp = exp
        self._log = log
        self._neg = [0] * q
        for a in range(q):
            digits = _digits(a, self.p, self.m)
            self._neg[a] = _from_digits([(-d) % self.p for d in digits], self.p)
        self._inv = [0] + [exp[(-log[a]) % (q - 1)] for a in range(1, q)]
        if q <= TABLE_LIMIT:
            self._add = [[self._digit_add(a, b) for b in range(q)] for a in range(q)]
            mul = [[0] * q for _ in range(q)]
            for a in range(1, q):
                la = log[a]
                row = mul[a]
                for b in range(1, q):
                    row[b] = exp[(la + log[b]) % (q - 1)]
            self._mul = mul
            self._add_np = np.array(self._add, dtype=np.int64)
            self._mul_np = np.array(self._mul, dtype=np.int64)
        else:
            self._add = None
            self._mul = None
            self._add_np = None
            self._mul_np = None
        self._neg_np = np.array(self._neg, dtype=np.int64)
        self._exp_np = np.array(exp + exp, dtype=np.int64)
        self._log_np = np.array(log, dtype=np.int64)

    # -- scalar arithmetic -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self._add is not None:
            return self._add[a][b]
        return self._digit_add(a, b)

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if self._mul is not None:
            return self._mul[a][b]
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of 0")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, value)

    def __iter__(self):
        return iter(range(self.q))

    def __len__(self) -> int:
        return self.q

    def check(self, value: int) -> int:
        if not (isinstance(value, (int, np.integer)) and 0 <= value < self.q):
            raise InvalidParams(f"{value!r} is not an element of GF({self.q})")
        return int(value)

    # -- vectorized arithmetic on integer numpy arrays ---------------------

    def vadd(self, a, b):
        if self._add_np is not None:
            return self._add_np[a, b]
        a, b = np.asarray(a), np.asarray(b)
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        scale = 1
        for _ in range(self.m):
            out += ((a // scale) % self.p + (b // scale) % self.p) % self.p * scale
            scale *= self.p
        return out

    def vmul(self, a, b):
        if self._mul_np is not None:
            return self._mul_np[a, b]
        a, b = np.asarray(a), np.asarray(b)
        out = self._exp_np[self._log_np[a] + self._log_np[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def vneg(self, a):
        return self._neg_np[a]

    # -- identity ----------------------------------------------------------

    def _key(self):
        return (self.p, self.m, self.modulus)

    def __eq__(self, other):
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.q})"
        return f"GF({self.q}, poly={self.poly})"

    def __reduce__(self):
        return (field_new, (self.p, self.m, self.modulus))


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, m: int, modulus: tuple[int, ...]) -> Field:
    return Field(p, m, modulus)


def field_new(p: int, m: int = 1, modulus: Iterable[int] | None = None) -> Field:
    """Validated field GF(p^m).

    ``modulus`` lists the coefficients constant term first and must be monic
    of degree ``m``.  When omitted, a built-in table supplies one for q <= 256.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise InvalidParams(f"degree must be >= 1, got {m}")
    q = p**m
    if q > MAX_ORDER:
        raise UnsupportedOrder(f"q = {q} exceeds the supported maximum {MAX_ORDER}")
    if modulus is None:
        if m == 1:
            coeffs = (0, 1)
        elif q in DEFAULT_MODULI:
            coeffs = tuple(_digits(DEFAULT_MODULI[q], p, m + 1))
        else:
            raise UnsupportedOrder(f"no built-in modulus for q = {q}; supply one")
    else:
        coeffs = tuple(int(c) % p for c in modulus)
        if len(coeffs) != m + 1 or coeffs[-1] != 1:
            raise InvalidParams(f"modulus {tuple(modulus)} is not monic of degree {m}")
        if m == 1:
            # arithmetic is mod p regardless of the degree-1 modulus chosen
            coeffs = (0, 1)
        elif not is_irreducible(coeffs, p):
            raise ReduciblePolynomial(f"modulus {coeffs} is reducible over GF({p})")
    return _cached_field(p, m, coeffs)


def GF(q: int, poly: int | None = None) -> Field:
    """Field of order ``q``; ``poly`` is the modulus in digit encoding."""
    p, m = _prime_power(q)
    if poly is None:
        return field_new(p, m)
    if not 0 <= poly < p ** (m + 1):
        raise InvalidParams(f"poly={poly} is not a degree-{m} polynomial over GF({p})")
    return field_new(p, m, _digits(poly, p, m + 1))


class FieldElement:
    """Operator-friendly wrapper around an integer element of a Field.

    Library internals work on raw ints; this class exists for interactive
    use and enforces that both operands come from the same field.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: int):
        self.field = field
        self.value = field.check(value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, int):
            return self.field.check(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.div(self.value, b))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value}@{self.field!r}"
