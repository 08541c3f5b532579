"""Boolean functions as truth tables and as ANF over F_2.

Bit ``i`` of a truth table is the value at the point whose index is ``i``,
i.e. variable ``x_{j+1}`` is bit ``j`` of the index.  This matches the
point numbering of :mod:`boolai.gf2n`, so a truth table can be read both
as a map on ``F_2^n`` and as a map on ``GF(2^n)``.
"""

from __future__ import annotations

import random as _random
import re

import numpy as np

ZERO_DEGREE = -1  # degree of the zero polynomial


def popcount(x: int) -> int:
    return bin(x).count("1")


def mobius(values) -> np.ndarray:
    """Binary Moebius transform (its own inverse) along the last axis.

    Works for any integer array whose addition is XOR, so it also
    transforms GF(2^n)-valued tables stored as element indices.
    """
    a = np.array(values, copy=True)
    size = a.shape[-1]
    if size & (size - 1):
        raise ValueError("length must be a power of two")
    lead = a.shape[:-1]
    step = 1
    while step < size:
        view = a.reshape(lead + (-1, 2, step))
        view[..., 1, :] ^= view[..., 0, :]
        step <<= 1
    return a


class TruthTable:
    """An n-variable Boolean function stored as 2^n bits."""

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits):
        bits = np.array(bits, dtype=np.uint8).ravel()
        if bits.size != 1 << n:
            raise ValueError(f"truth table for n={n} needs {1 << n} bits, got {bits.size}")
        if np.any(bits > 1):
            raise ValueError("truth table entries must be 0 or 1")
        bits.setflags(write=False)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("TruthTable is immutable")

    @classmethod
    def zeros(cls, n: int) -> "TruthTable":
        return cls(n, np.zeros(1 << n, dtype=np.uint8))

    @classmethod
    def ones(cls, n: int) -> "TruthTable":
        return cls(n, np.ones(1 << n, dtype=np.uint8))

    @classmethod
    def from_int(cls, n: int, value: int) -> "TruthTable":
        if not 0 <= value < 1 << (1 << n):
            raise ValueError(f"value does not fit a {1 << n}-bit truth table")
        size = 1 << n
        raw = np.frombuffer(value.to_bytes((size + 7) // 8, "little"), dtype=np.uint8)
        return cls(n, np.unpackbits(raw, bitorder="little")[:size])

    @classmethod
    def from_hex(cls, n: int, text: str) -> "TruthTable":
        """Parse the big-endian hex form; the digit count must match ``n`` exactly."""
        text = text.strip().lower()
        if text.startswith("0x"):
            text = text[2:]
        want = hex_digits(n)
        if len(text) != want or not re.fullmatch(r"[0-9a-f]+", text):
            raise ValueError(
                f"truth table for n={n} must be {want} hex digit(s) "
                f"({1 << n} bits), got {text!r}"
            )
        return cls.from_int(n, int(text, 16))

    @classmethod
    def from_function(cls, n: int, func) -> "TruthTable":
        return cls(n, [func(i) & 1 for i in range(1 << n)])

    @classmethod
    def random(cls, n: int, rng: _random.Random) -> "TruthTable":
        return cls.from_int(n, rng.getrandbits(1 << n))

    def to_int(self) -> int:
        return int.from_bytes(np.packbits(self.bits, bitorder="little").tobytes(), "little")

    def hex(self) -> str:
        return format(self.to_int(), f"0{hex_digits(self.n)}x")

    def support(self) -> np.ndarray:
        return np.flatnonzero(self.bits)

    def __getitem__(self, i):
        return int(self.bits[i])

    def __len__(self):
        return self.bits.size

    def __eq__(self, other):
        if not isinstance(other, TruthTable):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.bits, other.bits)

    def __hash__(self):
        return hash((self.n, self.bits.tobytes()))

    def __and__(self, other):
        return multiply(self, other)

    def __xor__(self, other):
        _same_n(self, other)
        return TruthTable(self.n, self.bits ^ other.bits)

    def __invert__(self):
        return complement(self)

    def __repr__(self):
        return f"TruthTable(n={self.n}, hex={self.hex()!r})"


def hex_digits(n: int) -> int:
    return max(1, (1 << n) // 4)


def _same_n(f: TruthTable, g: TruthTable):
    if f.n != g.n:
        raise ValueError(f"dimension mismatch: n={f.n} vs n={g.n}")


class AnfPoly:
    """Multilinear polynomial over F_2 as a set of monomial masks.

    Bit ``j`` of a mask means ``x_{j+1}`` occurs; mask 0 is the constant 1.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=()):
        terms = frozenset(int(t) for t in terms)
        if any(not 0 <= t < 1 << n for t in terms):
            raise ValueError(f"monomial mask out of range for n={n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", terms)

    def __setattr__(self, name, value):
        raise AttributeError("AnfPoly is immutable")

    @classmethod
    def parse(cls, n: int, text: str) -> "AnfPoly":
        """Parse ``"x1*x2 + x3 + 1"``; ``"0"`` or empty is the zero polynomial."""
        terms: set[int] = set()
        text = text.strip()
        if text in ("", "0"):
            return cls(n)
        for part in text.split("+"):
            mask = parse_monomial(part, n)
            terms ^= {mask}
        return cls(n, terms)

    def degree(self) -> int:
        return degree(self)

    def monomials(self) -> list[str]:
        return [monomial_str(m) for m in sorted(self.terms, key=lambda m: (popcount(m), m))]

    def __str__(self):
        return " + ".join(self.monomials()) or "0"

    def __eq__(self, other):
        if not isinstance(other, AnfPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.terms))

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return AnfPoly(self.n, self.terms ^ other.terms)

    def __repr__(self):
        return f"AnfPoly(n={self.n}, {str(self)!r})"


def monomial_str(mask: int) -> str:
    if mask == 0:
        return "1"
    return "*".join(f"x{j + 1}" for j in range(mask.bit_length()) if mask >> j & 1)


def parse_monomial(text: str, n: int) -> int:
    text = text.strip()
    if text == "1":
        return 0
    mask = 0
    for factor in text.split("*"):
        m = re.fullmatch(r"x(\d+)", factor.strip())
        if not m or not 1 <= int(m.group(1)) <= n:
            raise ValueError(f"bad monomial {text!r} for n={n}")
        mask |= 1 << (int(m.group(1)) - 1)
    return mask


def anf_from_tt(f: TruthTable) -> AnfPoly:
    coeffs = mobius(f.bits)
    return AnfPoly(f.n, np.flatnonzero(coeffs))


def tt_from_anf(p: AnfPoly) -> TruthTable:
    coeffs = np.zeros(1 << p.n, dtype=np.uint8)
    coeffs[list(p.terms)] = 1
    return TruthTable(p.n, mobius(coeffs))


def degree(p: AnfPoly) -> int:
    """Algebraic degree; -1 for the zero polynomial."""
    return max((popcount(m) for m in p.terms), default=ZERO_DEGREE)


def tt_degree(f: TruthTable) -> int:
    return degree(anf_from_tt(f))


def weight(f: TruthTable) -> int:
    return int(f.bits.sum())


def is_balanced(f: TruthTable) -> bool:
    return 2 * weight(f) == 1 << f.n


def multiply(f: TruthTable, g: TruthTable) -> TruthTable:
    _same_n(f, g)
    return TruthTable(f.n, f.bits & g.bits)


def complement(f: TruthTable) -> TruthTable:
    return TruthTable(f.n, 1 - f.bits)


def monomial_values(n: int) -> np.ndarray:
    """``table[mask, i]`` = value of monomial ``mask`` at point ``i``."""
    idx = np.arange(1 << n)
    return ((idx[None, :] & idx[:, None]) == idx[:, None]).astype(np.uint8)
