"""Univariate view of functions on GF(2^n).

A function ``F_{2^n} -> F_{2^n}`` is a polynomial ``sum a_i x^i`` reduced
modulo ``x^(2^n) + x``, stored densely as ``2^n`` coefficient indices.  The
same functions also live in ``F_{2^n}[x_1..x_n] / (x_k^2 + x_k)``
(:class:`ExtMultivariatePoly`); a basis of the field over ``F_2`` fixes the
correspondence between the two, and the polynomial basis makes the
multivariate variables coincide with truth-table index bits.
"""

from __future__ import annotations

import json
import random as _random

import numpy as np

from .boolfun import ZERO_DEGREE, TruthTable, anf_from_tt, degree, mobius, monomial_str, parse_monomial, popcount
from .gf2n import Basis, FieldElement, FieldMismatchError, FieldSpec, dual_basis

_CHUNK = 1 << 22  # cap on temporary array size in the transforms


def _check_spec(a: FieldSpec, b: FieldSpec):
    if a != b:
        raise FieldMismatchError(f"{a} vs {b}")


# ---------- dense transforms between coefficients and point values


def _xor_reduce_chunks(spec: FieldSpec, logs_a: np.ndarray, exps: np.ndarray, ts: np.ndarray, sign: int) -> np.ndarray:
    """``out[t] = XOR_k exp[logs_a[k] + sign * exps[k] * ts[t]]``."""
    m = spec.order - 1
    out = np.zeros(ts.size, dtype=np.int64)
    step = max(1, _CHUNK // max(1, ts.size))
    for lo in range(0, exps.size, step):
        e = exps[lo : lo + step, None]
        la = logs_a[lo : lo + step, None]
        idx = (la + sign * e * ts[None, :]) % m
        out ^= np.bitwise_xor.reduce(spec.exp[idx], axis=0)
    return out


def values_from_coeffs(spec: FieldSpec, coeffs) -> np.ndarray:
    """Evaluate ``sum a_i x^i`` at every point index (``0^0 = 1``)."""
    coeffs = np.asarray(coeffs, dtype=np.int64)
    q = spec.order
    out = np.zeros(q, dtype=np.int64)
    out[0] = coeffs[0]
    nz = np.flatnonzero(coeffs)
    if nz.size == 0:
        return out
    ts = np.arange(q - 1)
    # nonzero points are g^t; log of their index in exp order
    vals = _xor_reduce_chunks(spec, spec.log[coeffs[nz]], nz, ts, +1)
    out[spec.exp[ts]] = vals
    return out


def coeffs_from_values(spec: FieldSpec, values) -> np.ndarray:
    """Inverse of :func:`values_from_coeffs` (interpolation over all points).

    ``a_0 = v(0)``, ``a_{q-1} = sum_c v(c)`` and
    ``a_i = sum_{c != 0} v(c) c^{-i}`` for ``0 < i < q-1``.
    """
    values = np.asarray(values, dtype=np.int64)
    q = spec.order
    if values.size != q:
        raise ValueError(f"expected {q} values, got {values.size}")
    out = np.zeros(q, dtype=np.int64)
    out[0] = values[0]
    out[q - 1] ^= np.bitwise_xor.reduce(values)
    if q > 2:
        pts = np.flatnonzero(values[1:]) + 1
        if pts.size:
            ts = np.arange(1, q - 1)
            out[1 : q - 1] = _xor_reduce_chunks(spec, spec.log[values[pts]], spec.log[pts], ts, -1)
    return out


# ---------- univariate polynomials


class UnivariatePoly:
    """``sum a_i x^i`` in ``GF(2^n)[x] / (x^(2^n) + x)``."""

    __slots__ = ("spec", "values")

    def __init__(self, spec: FieldSpec, coeffs):
        arr = np.array([int(c) for c in coeffs], dtype=np.int64)
        if arr.size != spec.order:
            raise ValueError(f"need exactly {spec.order} coefficients, got {arr.size}")
        if np.any((arr < 0) | (arr >= spec.order)):
            raise ValueError("coefficient out of field range")
        for c in coeffs:
            if isinstance(c, FieldElement):
                _check_spec(c.spec, spec)
        arr.setflags(write=False)
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "values", arr)

    def __setattr__(self, name, value):
        raise AttributeError("UnivariatePoly is immutable")

    @classmethod
    def zero(cls, spec: FieldSpec) -> "UnivariatePoly":
        return cls(spec, np.zeros(spec.order, dtype=np.int64))

    @classmethod
    def monomial(cls, spec: FieldSpec, i: int, coeff: int = 1) -> "UnivariatePoly":
        arr = np.zeros(spec.order, dtype=np.int64)
        arr[i] = int(coeff)
        return cls(spec, arr)

    @classmethod
    def from_values(cls, spec: FieldSpec, values) -> "UnivariatePoly":
        """Interpolate a table of field values indexed by point."""
        return cls(spec, coeffs_from_values(spec, values))

    @classmethod
    def random(cls, spec: FieldSpec, rng: _random.Random, max_wt: int | None = None, density: float = 1.0):
        """Random polynomial with exponents of weight <= ``max_wt``."""
        arr = np.zeros(spec.order, dtype=np.int64)
        for i in range(spec.order):
            if (max_wt is None or popcount(i) <= max_wt) and rng.random() < density:
                arr[i] = rng.randrange(spec.order)
        return cls(spec, arr)

    @property
    def coeffs(self) -> list[FieldElement]:
        return [FieldElement(self.spec, v) for v in self.values]

    def point_values(self) -> np.ndarray:
        """Values at every point index, as field-element indices."""
        return values_from_coeffs(self.spec, self.values)

    def __call__(self, c: FieldElement) -> FieldElement:
        return evaluate(self, c)

    def __add__(self, other: "UnivariatePoly") -> "UnivariatePoly":
        _check_spec(self.spec, other.spec)
        return UnivariatePoly(self.spec, self.values ^ other.values)

    def scale(self, c: int) -> "UnivariatePoly":
        return UnivariatePoly(self.spec, self.spec.mul_array(self.values, int(c)))

    def __mul__(self, other: "UnivariatePoly") -> "UnivariatePoly":
        """Product as functions (i.e. modulo ``x^(2^n) + x``)."""
        _check_spec(self.spec, other.spec)
        prod = self.spec.mul_array(self.point_values(), other.point_values())
        return UnivariatePoly.from_values(self.spec, prod)

    def __eq__(self, other):
        if not isinstance(other, UnivariatePoly):
            return NotImplemented
        return self.spec == other.spec and np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash((self.spec, self.values.tobytes()))

    def is_zero(self) -> bool:
        return not self.values.any()

    def to_json(self) -> str:
        return json.dumps([format(int(v), "x") for v in self.values])

    @classmethod
    def from_json(cls, spec: FieldSpec, text: str) -> "UnivariatePoly":
        items = json.loads(text)
        if not isinstance(items, list):
            raise ValueError("univariate polynomial must be a JSON list of hex strings")
        return cls(spec, [int(str(h), 16) for h in items])

    def __repr__(self):
        terms = [
            (f"{v:#x}*" if v != 1 else "") + ("1" if i == 0 else f"x^{i}")
            for i, v in enumerate(self.values)
            if v
        ]
        return f"UnivariatePoly(n={self.spec.n}, {' + '.join(terms) or '0'})"


def interpolate(f: TruthTable, spec: FieldSpec) -> UnivariatePoly:
    """Univariate representation of a Boolean function."""
    if f.n != spec.n:
        raise ValueError(f"dimension mismatch: truth table n={f.n}, field n={spec.n}")
    return UnivariatePoly.from_values(spec, f.bits.astype(np.int64))


def evaluate(G: UnivariatePoly, c: FieldElement) -> FieldElement:
    """Horner evaluation at a single point."""
    _check_spec(G.spec, c.spec)
    spec = G.spec
    r = 0
    for a in G.values[::-1]:
        r = spec.mul_int(r, c.value) ^ int(a)
    return FieldElement(spec, r)


def wt_degree(G: UnivariatePoly) -> int:
    """Largest binary weight of an exponent with nonzero coefficient; -1 for 0."""
    return max((popcount(int(i)) for i in np.flatnonzero(G.values)), default=ZERO_DEGREE)


def is_boolean(G: UnivariatePoly) -> bool:
    """True iff G takes only the values 0 and 1."""
    return bool(np.all(G.point_values() <= 1))


def is_boolean_frobenius(G: UnivariatePoly) -> bool:
    """Booleanness read off the coefficients: ``G^2 = G`` as polynomials.

    Squaring maps ``a_i x^i`` to ``a_i^2 x^{2i mod (q-1)}``, with ``x^0`` and
    ``x^{q-1}`` fixed, so ``G`` is Boolean iff ``a_0, a_{q-1}`` lie in ``F_2``
    and ``a_{2i mod (q-1)} = a_i^2`` for ``0 < i < q-1``.
    """
    spec = G.spec
    q = spec.order
    a = G.values
    if a[0] > 1 or a[q - 1] > 1:
        return False
    if q == 2:
        return True
    i = np.arange(1, q - 1)
    return bool(np.array_equal(a[(2 * i) % (q - 1)], spec.mul_array(a[i], a[i])))


def to_truth_table(G: UnivariatePoly) -> TruthTable:
    """Truth table of a Boolean univariate polynomial.

    Raises ValueError naming the first point where G leaves ``{0, 1}``.
    """
    vals = G.point_values()
    bad = np.flatnonzero(vals > 1)
    if bad.size:
        c = int(bad[0])
        raise ValueError(
            f"polynomial is not Boolean: value {int(vals[c]):#x} at point {c:#x}"
        )
    return TruthTable(G.spec.n, vals)


def _basis_spec(b: Basis, spec: FieldSpec):
    if b.spec != spec:
        raise FieldMismatchError("basis and polynomial are over different fields")


def decompose(G: UnivariatePoly, b: Basis) -> list[TruthTable]:
    """Boolean components ``g_i(c) = tr(b*_i G(c))``, so that ``G = sum g_i b_i``."""
    _basis_spec(b, G.spec)
    spec = G.spec
    vals = G.point_values()
    return [
        TruthTable(spec.n, spec.trace_array(spec.mul_array(vals, d)))
        for d in dual_basis(b).values
    ]


def recompose(parts, b: Basis, spec: FieldSpec) -> UnivariatePoly:
    """Interpolate ``c -> sum parts_i(c) b_i``."""
    _basis_spec(b, spec)
    parts = list(parts)
    if len(parts) != spec.n:
        raise ValueError(f"need {spec.n} components, got {len(parts)}")
    vals = np.zeros(spec.order, dtype=np.int64)
    for p, beta in zip(parts, b.values):
        if not isinstance(p, TruthTable) or p.n != spec.n:
            raise ValueError(f"components must be truth tables with n={spec.n}")
        vals ^= p.bits.astype(np.int64) * beta
    return UnivariatePoly.from_values(spec, vals)


# ---------- multivariate polynomials over GF(2^n)


class ExtMultivariatePoly:
    """Multilinear polynomial in ``x_1..x_n`` with GF(2^n) coefficients.

    ``terms`` maps a monomial mask (bit ``k`` <-> ``x_{k+1}``) to a nonzero
    coefficient index.
    """

    __slots__ = ("spec", "terms")

    def __init__(self, spec: FieldSpec, terms=None):
        clean = {}
        for m, c in (terms or {}).items():
            c = int(c)
            m = int(m)
            if not 0 <= m < spec.order:
                raise ValueError(f"monomial mask {m} out of range for n={spec.n}")
            if not 0 <= c < spec.order:
                raise ValueError("coefficient out of field range")
            if c:
                clean[m] = c
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ExtMultivariatePoly is immutable")

    @classmethod
    def from_dense(cls, spec: FieldSpec, coeffs) -> "ExtMultivariatePoly":
        coeffs = np.asarray(coeffs, dtype=np.int64)
        return cls(spec, {int(m): int(coeffs[m]) for m in np.flatnonzero(coeffs)})

    @classmethod
    def from_values(cls, spec: FieldSpec, values) -> "ExtMultivariatePoly":
        """Polynomial whose value at bit-vector ``mask`` is ``values[mask]``."""
        return cls.from_dense(spec, mobius(np.asarray(values, dtype=np.int64)))

    def dense(self) -> np.ndarray:
        out = np.zeros(self.spec.order, dtype=np.int64)
        for m, c in self.terms.items():
            out[m] = c
        return out

    def values(self) -> np.ndarray:
        """Value at every bit-vector, indexed by mask (coefficients add by XOR)."""
        return mobius(self.dense())

    def degree(self) -> int:
        return ext_degree(self)

    def __add__(self, other):
        _check_spec(self.spec, other.spec)
        return ExtMultivariatePoly.from_dense(self.spec, self.dense() ^ other.dense())

    def __eq__(self, other):
        if not isinstance(other, ExtMultivariatePoly):
            return NotImplemented
        return self.spec == other.spec and self.terms == other.terms

    def __hash__(self):
        return hash((self.spec, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def to_dict(self) -> dict[str, str]:
        keys = sorted(self.terms, key=lambda m: (popcount(m), m))
        return {monomial_str(m): format(self.terms[m], "x") for m in keys}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, spec: FieldSpec, data: dict) -> "ExtMultivariatePoly":
        terms: dict[int, int] = {}
        for mono, coeff in data.items():
            m = parse_monomial(mono, spec.n)
            terms[m] = terms.get(m, 0) ^ int(str(coeff), 16)
        return cls(spec, terms)

    @classmethod
    def from_json(cls, spec: FieldSpec, text: str) -> "ExtMultivariatePoly":
        return cls.from_dict(spec, json.loads(text))

    def __repr__(self):
        body = " + ".join(f"{c}*{m}" if m != "1" else c for m, c in self.to_dict().items())
        return f"ExtMultivariatePoly(n={self.spec.n}, {body or '0'})"


def ext_degree(H: ExtMultivariatePoly) -> int:
    return max((popcount(m) for m in H.terms), default=ZERO_DEGREE)


def _linear_mul(spec: FieldSpec, poly: dict[int, int], form: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for m1, c1 in poly.items():
        for m2, c2 in form.items():
            m = m1 | m2  # x_k^2 = x_k
            out[m] = out.get(m, 0) ^ spec.mul_int(c1, c2)
    return {m: c for m, c in out.items() if c}


def to_multivariate(G: UnivariatePoly, b: Basis) -> ExtMultivariatePoly:
    """Substitute ``x = sum_k x_k b_k`` and expand.

    Each ``x^i`` with ``i = sum_j i_j 2^j`` becomes
    ``prod_{j : i_j = 1} (sum_k x_k b_k^(2^j))``, a product of ``wt(i)``
    linear forms, reduced with ``x_k^2 = x_k``.
    """
    _basis_spec(b, G.spec)
    spec = G.spec
    n = spec.n
    forms = [
        {1 << k: spec.pow_int(beta, 1 << j) for k, beta in enumerate(b.values)}
        for j in range(n)
    ]
    total: dict[int, int] = {}
    for i in np.flatnonzero(G.values):
        i = int(i)
        prod = {0: int(G.values[i])}
        for j in range(n):
            if i >> j & 1:
                prod = _linear_mul(spec, prod, forms[j])
        for m, c in prod.items():
            total[m] = total.get(m, 0) ^ c
    return ExtMultivariatePoly(spec, total)


def from_multivariate(H: ExtMultivariatePoly, b: Basis) -> UnivariatePoly:
    """Univariate G with ``G(sum_k x_k b_k) = H(x)`` for every bit-vector x."""
    _basis_spec(b, H.spec)
    by_mask = H.values()
    # point index v has coordinates coord[v] over b
    return UnivariatePoly.from_values(H.spec, by_mask[b.coordinate_table()])


def boolean_part_anf_degrees(parts) -> list[int]:
    return [degree(anf_from_tt(p)) for p in parts]
