"""Arithmetic in small finite fields GF(p^m).

Elements are stored as integers ``0 .. q-1``: the integer ``sum(c_i * p**i)``
stands for the residue class of ``sum(c_i * x**i)`` modulo the defining
polynomial.  Multiplication and division go through log/antilog tables built
from a primitive element ``z``.  Every arithmetic method accepts plain ints or
numpy integer arrays, so matrix code can stay vectorized.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    DivisionByZero,
    FieldMismatch,
    NotPrime,
    ReduciblePolynomial,
    ZeroElement,
)

MAX_ORDER = 1 << 16

# Primitive polynomials for GF(2^m), highest coefficient first.
CONWAY_LIKE_BINARY = {
    1: (1, 1),
    2: (1, 1, 1),
    3: (1, 0, 1, 1),
    4: (1, 0, 0, 1, 1),
    5: (1, 0, 0, 1, 0, 1),
    6: (1, 0, 0, 0, 0, 1, 1),
    7: (1, 0, 0, 0, 0, 0, 1, 1),
    8: (1, 0, 0, 0, 1, 1, 1, 0, 1),
}


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


# -- polynomials over GF(p), lowest coefficient first -------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * c) % p
        _trim(a)
    return a


def _monic_polys(p: int, degree: int):
    for idx in range(p**degree):
        coeffs = []
        for _ in range(degree):
            coeffs.append(idx % p)
            idx //= p
        yield coeffs + [1]


def is_irreducible(p: int, poly_high_first) -> bool:
    """Trial division by every monic polynomial of degree <= m/2."""
    a = list(reversed([int(c) % p for c in poly_high_first]))
    a = _trim(a)
    m = len(a) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        for f in _monic_polys(p, d):
            if not _poly_mod(a, f, p):
                return False
    return True


def parse_poly(text: str, p: int) -> tuple[int, ...]:
    """Parse ``"x^3+x+1"`` into high-first coefficients ``(1, 0, 1, 1)``."""
    terms: dict[int, int] = {}
    for raw in text.replace(" ", "").replace("-", "+-").split("+"):
        if not raw:
            continue
        sign = -1 if raw.startswith("-") else 1
        raw = raw.lstrip("-")
        m = re.fullmatch(r"(\d*)\*?(x(?:\^(\d+))?)?", raw)
        if m is None:
            raise ValueError(f"cannot parse polynomial term {raw!r}")
        coef = int(m.group(1)) if m.group(1) else 1
        if m.group(2) is None:
            deg = 0
        else:
            deg = int(m.group(3)) if m.group(3) else 1
        terms[deg] = (terms.get(deg, 0) + sign * coef) % p
    deg = max(d for d, c in terms.items() if c) if any(terms.values()) else 0
    return tuple(terms.get(d, 0) for d in range(deg, -1, -1))


# -- the field ----------------------------------------------------------------

class FieldSpec:
    """GF(p^m) with an explicit defining polynomial.

    ``poly`` lists coefficients from x^m down to x^0 (or is a string such as
    ``"x^3+x+1"``).  ``primitive`` optionally designates the integer value of
    the primitive element used for logs and for ``z^i`` notation; by default
    the smallest primitive element is used (the class of ``x`` whenever the
    polynomial is primitive).
    """

    def __init__(self, p: int, m: int, poly, primitive: int | None = None):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        if isinstance(poly, str):
            poly = parse_poly(poly, p)
        poly = tuple(int(c) % p for c in poly)
        if len(poly) != m + 1 or poly[0] != 1:
            raise ValueError(f"defining polynomial must be monic of degree {m}: {poly}")
        if p**m > MAX_ORDER:
            raise ValueError("field order above 2^16 is not supported")
        if not is_irreducible(p, poly):
            raise ReduciblePolynomial(f"{poly} is reducible over GF({p})")
        self.p = p
        self.m = m
        self.poly = poly
        self.q = p**m
        self._build_tables(primitive)

    def _mulx_mod(self, a: int, b: int) -> int:
        # schoolbook product of two residues, used only while building tables
        p, m = self.p, self.m
        da = [(a // p**i) % p for i in range(m)]
        db = [(b // p**i) % p for i in range(m)]
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        red = _poly_mod(prod, list(reversed(self.poly)), p) if m > 1 else [prod[0] % p]
        return sum(c * p**i for i, c in enumerate(red))

    def _powers(self, g: int) -> list[int]:
        out = [1]
        x = g
        while x != 1:
            out.append(x)
            x = self._mulx_mod(x, g)
            if len(out) > self.q:
                break
        return out

    def _build_tables(self, primitive):
        q = self.q
        candidates = [primitive] if primitive is not None else range(1, q)
        for g in candidates:
            if not 0 < g < q:
                raise ValueError(f"primitive element {g} outside field")
            powers = self._powers(g)
            if len(powers) == q - 1:
                break
        else:
            raise ValueError(f"{primitive} is not a primitive element")
        if len(powers) != q - 1:
            raise ValueError(f"{primitive} is not a primitive element")
        self.primitive = g
        exp = np.array(powers + powers, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        log[exp[: q - 1]] = np.arange(q - 1)
        self._exp = exp
        self._log = log
        self._exp.setflags(write=False)
        self._log.setflags(write=False)

    # identity -----------------------------------------------------------
    def _key(self):
        return (self.p, self.m, self.poly, self.primitive)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"FieldSpec({self.literal!r})"

    @property
    def literal(self) -> str:
        coeffs = ",".join(str(c) for c in self.poly)
        return f"GF({self.p}^{self.m}):poly=[{coeffs}]"

    @classmethod
    def parse(cls, literal: str) -> "FieldSpec":
        """Inverse of :attr:`literal`; ``GF(16)`` alone picks a default polynomial."""
        text = literal.replace(" ", "")
        m = re.fullmatch(r"GF\((\d+)(?:\^(\d+))?\)(?::poly=\[([\d,]+)\])?", text)
        if m is None:
            raise ValueError(f"bad field literal {literal!r}")
        p, deg = int(m.group(1)), m.group(2)
        if m.group(3) is not None:
            coeffs = [int(c) for c in m.group(3).split(",")]
            return cls(p, len(coeffs) - 1 if deg is None else int(deg), coeffs)
        if deg is None:
            # GF(8) style: split prime power
            q = p
            for base in range(2, q + 1):
                if is_prime(base):
                    e, t = 0, q
                    while t % base == 0:
                        t //= base
                        e += 1
                    if t == 1:
                        return default_field(base, e)
            raise ValueError(f"{q} is not a prime power")
        return default_field(p, int(deg))

    # elements -------------------------------------------------------------
    @cached_property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @cached_property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(self, int(value))

    def z(self, i: int = 1) -> "FieldElement":
        return FieldElement(self, int(self._exp[i % (self.q - 1)]))

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, v) for v in range(self.q)]

    def log(self, a):
        a = np.asarray(a)
        if np.any(a == 0):
            raise ZeroElement("log of zero")
        out = self._log[a]
        return int(out) if out.ndim == 0 else out

    def exp(self, i):
        out = self._exp[np.asarray(i) % (self.q - 1)]
        return int(out) if out.ndim == 0 else out

    def format_element(self, v: int) -> str:
        v = int(v)
        if v == 0:
            return "0"
        i = int(self._log[v])
        if i == 0:
            return "1"
        return "z" if i == 1 else f"z^{i}"

    def parse_element(self, text: str) -> int:
        text = text.strip()
        if text == "0":
            return 0
        if text == "1":
            return 1
        m = re.fullmatch(r"z(?:\^(-?\d+))?", text)
        if m:
            return int(self._exp[int(m.group(1) or 1) % (self.q - 1)])
        v = int(text)
        if not 0 <= v < self.q:
            raise ValueError(f"element {text!r} outside GF({self.q})")
        return v

    # vectorized arithmetic ------------------------------------------------
    def add(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self.m == 1:
            return (np.asarray(a) + b) % self.p
        return self._digitwise(a, b, 1)

    def sub(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self.m == 1:
            return (np.asarray(a) - b) % self.p
        return self._digitwise(a, b, -1)

    def neg(self, a):
        if self.p == 2:
            return a
        return self.sub(np.zeros_like(a), a)

    def _digitwise(self, a, b, sign):
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        base = 1
        for _ in range(self.m):
            da = (a // base) % self.p
            db = (b // base) % self.p
            out = out + ((da + sign * db) % self.p) * base
            base *= self.p
        return out

    def mul(self, a, b):
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        nz = (a != 0) & (b != 0)
        out = np.where(nz, self._exp[self._log[a] + self._log[b]], 0)
        return int(out) if out.ndim == 0 else out

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero")
        out = self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return int(out) if out.ndim == 0 else out

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            out = np.ones_like(a)
        else:
            if e < 0 and np.any(a == 0):
                raise DivisionByZero("negative power of zero")
            out = np.where(a != 0, self._exp[(self._log[a] * e) % (self.q - 1)], 0)
        return int(out) if out.ndim == 0 else out


def make_field(p: int, m: int, poly, primitive: int | None = None) -> FieldSpec:
    return FieldSpec(p, m, poly, primitive)


def default_field(p: int, m: int) -> FieldSpec:
    """Field with a fixed default polynomial (primitive where tabulated)."""
    if p == 2 and m in CONWAY_LIKE_BINARY:
        return FieldSpec(2, m, CONWAY_LIKE_BINARY[m])
    if m == 1:
        return FieldSpec(p, 1, (1, 0))
    for tail in _monic_polys(p, m):
        poly = tuple(reversed(tail))
        if is_irreducible(p, poly):
            return FieldSpec(p, m, poly)
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


@dataclass(frozen=True)
class FieldElement:
    """A single field value; thin wrapper for readable scalar arithmetic."""

    field: FieldSpec
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise ValueError(f"{self.value} outside GF({self.field.q})")

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch("operands live in different fields")
            return other.value
        if isinstance(other, (int, np.integer)):
            return int(other) % self.field.p
        raise TypeError(f"cannot combine a field element with {type(other).__name__}")

    def __add__(self, other):
        return FieldElement(self.field, int(self.field.add(self.value, self._other(other))))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, int(self.field.sub(self.value, self._other(other))))

    def __rsub__(self, other):
        return FieldElement(self.field, int(self.field.sub(self._other(other), self.value)))

    def __neg__(self):
        return FieldElement(self.field, int(self.field.neg(self.value)))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b == 0:
            raise DivisionByZero("division by zero field element")
        return FieldElement(self.field, self.field.div(self.value, b))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self._other(other)) / self

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.power(self.value, int(e)))

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise DivisionByZero("inverse of zero")
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return self.field.format_element(self.value)


def arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    if a.field != b.field:
        raise FieldMismatch("operands live in different fields")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def element_order(a: FieldElement) -> int:
    """Smallest e >= 1 with a**e == 1, found by repeated multiplication."""
    if a.value == 0:
        raise ZeroElement("zero has no multiplicative order")
    f = a.field
    x, e = a.value, 1
    while x != 1:
        x = f.mul(x, a.value)
        e += 1
    return e
