"""Arithmetic in GF(2^n), the trace map, bases and dual bases.

Elements are stored as integers whose bit ``j`` is the coordinate of
``alpha**j`` over the polynomial basis, where ``alpha`` is a root of the
field modulus.  The same integer doubles as the index of the point in a
truth table, which is how ``F_2^n`` is identified with ``F_{2^n}``
throughout the package.

Bulk operations (``FieldSpec.mul_array`` and friends) work on numpy arrays
of such integers through log/antilog tables built lazily per field.
"""

from __future__ import annotations

import random as _random
from functools import cached_property, lru_cache

import numpy as np

MAX_N = 16

# Numerically smallest irreducible polynomial with constant term 1, per degree.
DEFAULT_MODULI = {
    1: 0x3,
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11B,
    9: 0x203,
    10: 0x409,
    11: 0x805,
    12: 0x1009,
    13: 0x201B,
    14: 0x4021,
    15: 0x8003,
    16: 0x1002B,
}


class FieldMismatchError(ValueError):
    """Raised when values from two different fields are combined."""


# ---------- carry-less polynomial arithmetic over F_2


def clmul(a: int, b: int) -> int:
    """Carry-less product of two F_2[x] bit vectors."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def polymod(a: int, m: int) -> int:
    dm = m.bit_length() - 1
    while a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def is_irreducible(poly: int) -> bool:
    """Trial division by every polynomial of degree at most deg/2."""
    d = poly.bit_length() - 1
    if d < 1:
        return False
    for q in range(2, 1 << (d // 2 + 1)):
        if polymod(poly, q) == 0:
            return False
    return True


def _prime_factors(m: int) -> list[int]:
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def format_poly(poly: int) -> str:
    terms = []
    for k in range(poly.bit_length() - 1, -1, -1):
        if poly >> k & 1:
            terms.append("1" if k == 0 else "x" if k == 1 else f"x^{k}")
    return " + ".join(terms) or "0"


# ---------- field description


class FieldSpec:
    """GF(2^n) defined by an irreducible modulus.

    Instances are immutable and compare equal when ``n`` and ``modulus``
    agree.  Lookup tables are computed on first use.
    """

    __slots__ = ("n", "modulus", "__dict__")

    def __init__(self, n: int, modulus: int | None = None):
        if not isinstance(n, int) or not 1 <= n <= MAX_N:
            raise ValueError(f"n must be an integer in [1, {MAX_N}], got {n!r}")
        if modulus is None:
            modulus = DEFAULT_MODULI[n]
        if modulus.bit_length() - 1 != n:
            raise ValueError(f"modulus {modulus:#x} does not have degree {n}")
        if not modulus & 1 or not is_irreducible(modulus):
            raise ValueError(f"modulus {format_poly(modulus)} is reducible over F_2")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "modulus", modulus)

    def __setattr__(self, name, value):
        raise AttributeError("FieldSpec is immutable")

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return self.n == other.n and self.modulus == other.modulus

    def __hash__(self):
        return hash((self.n, self.modulus))

    def __repr__(self):
        return f"FieldSpec(n={self.n}, modulus={self.modulus:#x})"

    def __reduce__(self):
        return (FieldSpec, (self.n, self.modulus))

    @property
    def order(self) -> int:
        return 1 << self.n

    # -- scalar arithmetic on raw integers

    def mul_int(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[int(self.log[a]) + int(self.log[b])])

    def pow_int(self, a: int, k: int) -> int:
        if k < 0:
            raise ValueError("negative exponent")
        if k == 0:
            return 1
        if a == 0:
            return 0
        return int(self.exp[(int(self.log[a]) * k) % (self.order - 1)])

    def inv_int(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(2^n)")
        return int(self.exp[(-int(self.log[a])) % (self.order - 1)])

    def _slow_mul(self, a: int, b: int) -> int:
        return polymod(clmul(a, b), self.modulus)

    def _slow_pow(self, a: int, k: int) -> int:
        r = 1
        while k:
            if k & 1:
                r = self._slow_mul(r, a)
            a = self._slow_mul(a, a)
            k >>= 1
        return r

    # -- tables

    @cached_property
    def generator(self) -> int:
        """Smallest-index element of multiplicative order 2^n - 1."""
        m = self.order - 1
        if m == 1:
            return 1
        factors = _prime_factors(m)
        for a in range(2, self.order):
            if all(self._slow_pow(a, m // p) != 1 for p in factors):
                return a
        raise AssertionError("no primitive element found")

    @cached_property
    def exp(self) -> np.ndarray:
        """``exp[k] = g**k`` for ``0 <= k < 2(2^n - 1)``, ``g`` the generator."""
        m = self.order - 1
        out = np.empty(2 * m, dtype=np.int64)
        x = 1
        g = self.generator
        for k in range(m):
            out[k] = x
            x = self._slow_mul(x, g)
        out[m:] = out[:m]
        out.setflags(write=False)
        return out

    @cached_property
    def log(self) -> np.ndarray:
        """Inverse of ``exp``; ``log[0]`` is -1 and must never be used."""
        out = np.full(self.order, -1, dtype=np.int64)
        out[self.exp[: self.order - 1]] = np.arange(self.order - 1)
        out.setflags(write=False)
        return out

    @cached_property
    def trace_table(self) -> np.ndarray:
        x = np.arange(self.order, dtype=np.int64)
        s = np.zeros_like(x)
        for _ in range(self.n):
            s ^= x
            x = self.mul_array(x, x)
        if not np.all((s == 0) | (s == 1)):
            raise AssertionError("trace left the prime field; modulus tables are broken")
        tab = s.astype(np.uint8)
        tab.setflags(write=False)
        return tab

    # -- vectorized arithmetic on integer arrays

    def mul_array(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        nz = (a != 0) & (b != 0)
        la = np.where(a != 0, self.log[a], 0)
        lb = np.where(b != 0, self.log[b], 0)
        return np.where(nz, self.exp[la + lb], 0)

    def pow_array(self, a, k: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if k == 0:
            return np.ones_like(a)
        la = np.where(a != 0, self.log[a], 0)
        return np.where(a != 0, self.exp[(la * k) % (self.order - 1)], 0)

    def trace_array(self, a) -> np.ndarray:
        return self.trace_table[np.asarray(a, dtype=np.int64)]

    # -- convenience

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, value)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def alpha(self) -> "FieldElement":
        """The root of the modulus (index 2); equals 1 when n == 1."""
        return FieldElement(self, 2 % self.order if self.n > 1 else 1)

    def elements(self):
        return [FieldElement(self, v) for v in range(self.order)]


def field_new(n: int, modulus: int | None = None) -> FieldSpec:
    """Validated field spec; ``modulus`` defaults to ``DEFAULT_MODULI[n]``."""
    return FieldSpec(n, modulus)


# ---------- elements


class FieldElement:
    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value: int):
        value = int(value)
        if not 0 <= value < spec.order:
            raise ValueError(f"{value} is not an element index of GF(2^{spec.n})")
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def __reduce__(self):
        return (FieldElement, (self.spec, self.value))

    def _check(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise FieldMismatchError(f"cannot combine {self.spec} and {other.spec}")
            return other.value
        if isinstance(other, int) and other in (0, 1):
            return other
        raise TypeError(f"unsupported operand {other!r}")

    @property
    def coeffs(self) -> list[int]:
        return [(self.value >> j) & 1 for j in range(self.spec.n)]

    def __add__(self, other):
        return FieldElement(self.spec, self.value ^ self._check(other))

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        return FieldElement(self.spec, self.spec.mul_int(self.value, self._check(other)))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return FieldElement(self.spec, self.spec.pow_int(self.value, k))

    def __truediv__(self, other):
        return self * FieldElement(self.spec, self._check(other)).inverse()

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv_int(self.value))

    def trace(self) -> int:
        return int(self.spec.trace_table[self.value])

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.value == other.value
        if isinstance(other, int):
            return self.value == other and other in (0, 1)
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def hex(self) -> str:
        return format(self.value, "x")

    def __repr__(self):
        return f"GF(2^{self.spec.n})({self.value:#x})"


def _spec_of(a: FieldElement, b: FieldElement) -> FieldSpec:
    if a.spec != b.spec:
        raise FieldMismatchError(f"cannot combine {a.spec} and {b.spec}")
    return a.spec


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return FieldElement(_spec_of(a, b), a.value ^ b.value)


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    spec = _spec_of(a, b)
    return FieldElement(spec, spec.mul_int(a.value, b.value))


def pow(a: FieldElement, k: int) -> FieldElement:  # noqa: A001
    return FieldElement(a.spec, a.spec.pow_int(a.value, k))


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def trace(a: FieldElement) -> int:
    """Absolute trace ``a + a^2 + ... + a^(2^(n-1))`` as a bit."""
    return a.trace()


def index_to_element(spec: FieldSpec, i: int) -> FieldElement:
    if not 0 <= i < spec.order:
        raise IndexError(f"point index {i} out of range for n={spec.n}")
    return FieldElement(spec, i)


def element_to_index(a: FieldElement) -> int:
    return a.value


def find_primitive(spec: FieldSpec) -> FieldElement:
    return FieldElement(spec, spec.generator)


def element_from_hex(spec: FieldSpec, text: str) -> FieldElement:
    return FieldElement(spec, int(text, 16))


# ---------- bases


def _gf2_rank(rows: list[int]) -> int:
    from .linalg import gf2_rank

    return gf2_rank(rows)


class Basis:
    """An ordered F_2-basis of GF(2^n)."""

    __slots__ = ("spec", "elements")

    def __init__(self, elements):
        elements = tuple(elements)
        if not elements:
            raise ValueError("empty basis")
        spec = elements[0].spec
        for e in elements:
            if e.spec != spec:
                raise FieldMismatchError("basis elements from different fields")
        if len(elements) != spec.n or _gf2_rank([e.value for e in elements]) != spec.n:
            raise ValueError("elements are not an F_2-basis")
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "elements", elements)

    def __setattr__(self, name, value):
        raise AttributeError("Basis is immutable")

    @classmethod
    def polynomial(cls, spec: FieldSpec) -> "Basis":
        return cls(FieldElement(spec, 1 << j) for j in range(spec.n))

    @classmethod
    def random(cls, spec: FieldSpec, rng: _random.Random) -> "Basis":
        while True:
            vals = [rng.randrange(1, spec.order) for _ in range(spec.n)]
            if _gf2_rank(vals) == spec.n:
                return cls(FieldElement(spec, v) for v in vals)

    @classmethod
    def from_values(cls, spec: FieldSpec, values) -> "Basis":
        return cls(FieldElement(spec, v) for v in values)

    @property
    def values(self) -> list[int]:
        return [e.value for e in self.elements]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __eq__(self, other):
        if not isinstance(other, Basis):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"Basis([{', '.join(e.hex() for e in self.elements)}], n={self.spec.n})"

    def coordinates(self, a: FieldElement) -> int:
        """Coordinates of ``a`` over this basis, packed as bit k <-> element k."""
        if a.spec != self.spec:
            raise FieldMismatchError("element and basis from different fields")
        return int(self.coordinate_table()[a.value])

    def coordinate_table(self) -> np.ndarray:
        """``table[v]`` = packed coordinates of the element with index ``v``."""
        return _coordinate_table(self)

    def span_table(self) -> np.ndarray:
        """``table[mask]`` = index of ``sum(b_k for k in mask)``."""
        return _span_table(self)


@lru_cache(maxsize=256)
def _span_table(b: Basis) -> np.ndarray:
    out = np.zeros(b.spec.order, dtype=np.int64)
    for k, v in enumerate(b.values):
        step = 1 << k
        out[step : 2 * step] = out[:step] ^ v
    out.setflags(write=False)
    return out


@lru_cache(maxsize=256)
def _coordinate_table(b: Basis) -> np.ndarray:
    span = _span_table(b)
    out = np.empty_like(span)
    out[span] = np.arange(b.spec.order)
    out.setflags(write=False)
    return out


def trace_gram_matrix(b: Basis) -> list[list[int]]:
    spec = b.spec
    v = b.values
    return [[int(spec.trace_table[spec.mul_int(x, y)]) for y in v] for x in v]


def dual_basis(b: Basis) -> Basis:
    """Basis ``b*`` with ``tr(b_i * b*_j) = [i == j]``, via the inverse trace Gram matrix."""
    from .linalg import gf2_inverse

    gram = trace_gram_matrix(b)
    rows = [sum(bit << k for k, bit in enumerate(row)) for row in gram]
    inv_rows = gf2_inverse(rows, b.spec.n)
    out = []
    for j in range(b.spec.n):
        v = 0
        for k, bk in enumerate(b.values):
            if inv_rows[j] >> k & 1:
                v ^= bk
        out.append(v)
    return Basis.from_values(b.spec, out)


def self_dual_basis(spec: FieldSpec) -> Basis:
    """An orthonormal basis for the trace form, found by F_2 Gram-Schmidt.

    The trace form is symmetric and not alternating (``tr(x^2) = tr(x)``),
    so an orthonormal basis exists; hyperbolic pairs left at the end are
    absorbed using an already chosen unit vector.
    """
    tr = spec.trace_table

    def form(x, y):
        return int(tr[spec.mul_int(x, y)])

    rest = [1 << j for j in range(spec.n)]
    units: list[int] = []
    while rest:
        pivot = next((x for x in rest if form(x, x)), None)
        if pivot is None:
            # rest spans an alternating (symplectic) block: split off a pair
            u = rest[0]
            w = next(x for x in rest[1:] if form(u, x))
            v = units.pop()
            rest = [x for x in rest if x not in (u, w)]
            # project the remaining vectors off span(u, w)
            rest = [x ^ (form(x, w) and u) ^ (form(x, u) and w) for x in rest]
            units.extend([v ^ u ^ w, v ^ u, v ^ w])
            continue
        rest.remove(pivot)
        rest = [x ^ pivot if form(x, pivot) else x for x in rest]
        units.append(pivot)
    return Basis.from_values(spec, units)
