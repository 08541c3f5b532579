"""Annihilators, algebraic immunity and perfect algebraic immunity.

Two notions of annihilator are supported.  In *base-field* mode a
candidate ``g`` is a Boolean function (ANF over F_2); in *extension-field*
mode ``g`` is allowed coefficients in GF(2^n), i.e. it ranges over
``B_n (x) GF(2^n)``.  Extension-field spaces can be built from two
independent coordinate systems:

* ``"multivariate"`` - ANF monomials ``x^m`` in the index bits, scalars in
  GF(2^n) (entries of the evaluation matrix are 0/1);
* ``"univariate"`` - powers ``x^i`` of the field variable with
  ``wt(i) <= d`` (entries are genuine field elements ``c^i``).

Both describe the same space of functions of degree at most ``d``, which
is what makes the second one a useful cross-check of the first.
"""

from __future__ import annotations

import enum
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

import numpy as np

from .boolfun import (
    ZERO_DEGREE,
    AnfPoly,
    TruthTable,
    anf_from_tt,
    complement,
    degree,
    mobius,
    popcount,
    tt_from_anf,
)
from .gf2n import Basis, FieldSpec
from .linalg import ext_nullspace, gf2_nullspace, lex_smallest_nonzero
from .univariate import (
    ExtMultivariatePoly,
    UnivariatePoly,
    coeffs_from_values,
    decompose,
    from_multivariate,
    to_multivariate,
    wt_degree,
)


class Mode(str, enum.Enum):
    BASE = "base_field"
    EXTENSION = "extension_field"


class Side(str, enum.Enum):
    F = "annihilates_f"
    F_PLUS_1 = "annihilates_f_plus_1"


REPRESENTATIONS = ("multivariate", "univariate")


# ---------- monomial bases


@dataclass(frozen=True)
class MonomialBasis:
    """All masks of popcount <= d, ordered by popcount then numerically."""

    n: int
    d: int
    masks: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        if not 0 <= self.d <= self.n:
            raise ValueError(f"degree bound {self.d} outside [0, {self.n}]")
        object.__setattr__(self, "masks", _masks(self.n, self.d))

    def __len__(self):
        return len(self.masks)

    @property
    def expected_size(self) -> int:
        return sum(comb(self.n, k) for k in range(self.d + 1))


@lru_cache(maxsize=None)
def _masks(n: int, d: int) -> tuple[int, ...]:
    return tuple(sorted((m for m in range(1 << n) if popcount(m) <= d), key=lambda m: (popcount(m), m)))


def monomial_basis(n: int, d: int) -> MonomialBasis:
    return MonomialBasis(n, d)


# ---------- evaluation matrices


def _support_masks_bits(f: TruthTable, masks) -> list[int]:
    """Rows of the F_2 evaluation matrix as bit-sliced ints (bit k <-> masks[k])."""
    rows = []
    for c in f.support():
        c = int(c)
        r = 0
        for k, m in enumerate(masks):
            if c & m == m:
                r |= 1 << k
        rows.append(r)
    return rows


def _evaluation_matrix(f: TruthTable, masks) -> np.ndarray:
    pts = f.support()
    mk = np.asarray(masks, dtype=np.int64)
    return ((pts[:, None] & mk[None, :]) == mk[None, :]).astype(np.int64)


def _power_matrix(f: TruthTable, spec: FieldSpec, exponents) -> np.ndarray:
    """``M[r, k] = c_r ** exponents[k]`` over the support points ``c_r``."""
    pts = f.support().astype(np.int64)
    out = np.empty((pts.size, len(exponents)), dtype=np.int64)
    for k, e in enumerate(exponents):
        out[:, k] = spec.pow_array(pts, e)
    return out


def _check_inputs(f: TruthTable, d: int, spec: FieldSpec | None) -> FieldSpec:
    if not 0 <= d <= f.n:
        raise ValueError(f"degree bound {d} outside [0, {f.n}]")
    if spec is None:
        spec = FieldSpec(f.n)
    if spec.n != f.n:
        raise ValueError(f"field n={spec.n} does not match truth table n={f.n}")
    return spec


def _kernel(f: TruthTable, d: int, mode: Mode, spec: FieldSpec | None, representation: str):
    """Kernel basis of the evaluation map, in the raw form of each path."""
    masks = _masks(f.n, d)
    if mode == Mode.BASE:
        return masks, gf2_nullspace(_support_masks_bits(f, masks), len(masks))
    if representation == "multivariate":
        return masks, ext_nullspace(_evaluation_matrix(f, masks), spec, len(masks))
    if representation == "univariate":
        return masks, ext_nullspace(_power_matrix(f, spec, masks), spec, len(masks))
    raise ValueError(f"unknown representation {representation!r}")


def annihilator_space(
    f: TruthTable,
    d: int,
    mode: Mode | str = Mode.BASE,
    spec: FieldSpec | None = None,
    representation: str = "multivariate",
) -> list:
    """Basis of the nonzero ``g`` with ``deg g <= d`` and ``g f = 0``.

    Returns AnfPoly objects in base mode, ExtMultivariatePoly objects in
    extension mode with the multivariate representation, and
    UnivariatePoly objects with the univariate one.  The list is empty when
    only ``g = 0`` qualifies.  Pass ``complement(f)`` for the ``f + 1`` side.
    """
    mode = Mode(mode)
    spec = _check_inputs(f, d, spec)
    masks, kernel = _kernel(f, d, mode, spec, representation)
    if mode == Mode.BASE:
        return [AnfPoly(f.n, (masks[k] for k in range(len(masks)) if v >> k & 1)) for v in kernel]
    if representation == "multivariate":
        return [ExtMultivariatePoly(spec, dict(zip(masks, row.tolist()))) for row in kernel]
    out = []
    for row in kernel:
        coeffs = np.zeros(spec.order, dtype=np.int64)
        coeffs[list(masks)] = row
        out.append(UnivariatePoly(spec, coeffs))
    return out


def annihilator_dimension(f: TruthTable, d: int, mode: Mode | str = Mode.BASE, spec=None, representation="multivariate") -> int:
    mode = Mode(mode)
    spec = _check_inputs(f, d, spec)
    return len(_kernel(f, d, mode, spec, representation)[1])


# ---------- algebraic immunity


@dataclass(frozen=True)
class AiReport:
    n: int
    ai: int
    side: Side
    witness: AnfPoly | ExtMultivariatePoly
    mode: Mode
    elapsed_ms: float = 0.0

    def witness_values(self) -> np.ndarray:
        """Witness value at every point index (0/1, or field-element indices)."""
        if isinstance(self.witness, AnfPoly):
            return tt_from_anf(self.witness).bits.astype(np.int64)
        return self.witness.values()

    def to_dict(self) -> dict:
        if isinstance(self.witness, AnfPoly):
            witness = str(self.witness)
        else:
            witness = self.witness.to_dict()
        return {
            "n": self.n,
            "ai": self.ai,
            "mode": self.mode.value,
            "side": self.side.value,
            "witness": witness,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict, spec: FieldSpec | None = None) -> "AiReport":
        n = int(data["n"])
        mode = Mode(data["mode"])
        if mode == Mode.BASE:
            witness = AnfPoly.parse(n, data["witness"])
        else:
            witness = ExtMultivariatePoly.from_dict(spec or FieldSpec(n), data["witness"])
        return cls(n, int(data["ai"]), Side(data["side"]), witness, mode, float(data.get("elapsed_ms", 0.0)))

    @classmethod
    def from_json(cls, text: str, spec: FieldSpec | None = None) -> "AiReport":
        return cls.from_dict(json.loads(text), spec)


def _witness(f: TruthTable, d: int, mode: Mode, spec: FieldSpec, representation: str):
    """Canonical nonzero annihilator of degree <= d, or None."""
    masks, kernel = _kernel(f, d, mode, spec, representation)
    if len(kernel) == 0:
        return None
    if mode == Mode.BASE:
        v = lex_smallest_nonzero(kernel, len(masks))
        return AnfPoly(f.n, (masks[k] for k in range(len(masks)) if v >> k & 1))
    row = kernel[0]  # first free column set to 1
    if representation == "multivariate":
        return ExtMultivariatePoly(spec, dict(zip(masks, row.tolist())))
    coeffs = np.zeros(spec.order, dtype=np.int64)
    coeffs[list(masks)] = row
    return to_multivariate(UnivariatePoly(spec, coeffs), Basis.polynomial(spec))


def _immunity(f: TruthTable, mode: Mode, spec: FieldSpec, representation: str) -> AiReport:
    start = time.perf_counter()
    g = complement(f)
    for d in range(f.n + 1):
        for side, target in ((Side.F, f), (Side.F_PLUS_1, g)):
            w = _witness(target, d, mode, spec, representation)
            if w is not None:
                ms = (time.perf_counter() - start) * 1e3
                return AiReport(f.n, d, side, w, mode, ms)
    raise AssertionError("no annihilator up to degree n; elimination is broken")


def algebraic_immunity(f: TruthTable) -> AiReport:
    """Smallest degree of a nonzero Boolean annihilator of ``f`` or ``f + 1``.

    The witness is the lexicographically smallest kernel vector under the
    monomial ordering, with the ``f`` side preferred on ties.
    """
    return _immunity(f, Mode.BASE, FieldSpec(f.n), "multivariate")


def algebraic_immunity_ext(f: TruthTable, spec: FieldSpec | None = None, representation: str = "multivariate") -> AiReport:
    """Same search with annihilators allowed GF(2^n) coefficients.

    The witness comes from the first free column of the reduced kernel
    (unit entry there, zeros at the other free columns).  With
    ``representation="univariate"`` the space is spanned by powers ``x^i``
    with ``wt(i) <= d`` and the witness is converted to multivariate form in
    the index bits.
    """
    spec = _check_inputs(f, 0, spec)
    return _immunity(f, Mode.EXTENSION, spec, representation)


def verify_report(f: TruthTable, report: AiReport) -> bool:
    """Witness is nonzero, has degree ``ai`` and annihilates the reported side."""
    target = f if report.side == Side.F else complement(f)
    vals = report.witness_values()
    wdeg = degree(report.witness) if isinstance(report.witness, AnfPoly) else report.witness.degree()
    return bool(vals.any()) and wdeg == report.ai and not np.any(vals[target.bits == 1])


def verify_equivalence(f: TruthTable, spec: FieldSpec | None = None, reports: list | None = None) -> bool:
    """Base-field and extension-field immunity agree.

    Both extension representations are computed, so this returns True only
    when all three values coincide.  If ``reports`` is a list, the three
    reports are appended to it.
    """
    spec = _check_inputs(f, 0, spec)
    base = algebraic_immunity(f)
    ext = algebraic_immunity_ext(f, spec, "multivariate")
    uni = algebraic_immunity_ext(f, spec, "univariate")
    if reports is not None:
        reports.extend([base, ext, uni])
    return base.ai == ext.ai == uni.ai


def component_check(f: TruthTable, g, b: Basis) -> bool:
    """Split an annihilator of ``f`` into Boolean components along ``b``.

    Returns True iff every component ``g_i = tr(b*_i g)`` annihilates ``f``
    and the largest component degree equals the degree of ``g``.
    Raises ValueError when ``g`` does not annihilate ``f``.
    """
    if isinstance(g, ExtMultivariatePoly):
        G = from_multivariate(g, Basis.polynomial(g.spec))
    elif isinstance(g, UnivariatePoly):
        G = g
    else:
        raise TypeError("expected ExtMultivariatePoly or UnivariatePoly")
    if G.spec != b.spec or f.n != G.spec.n:
        raise ValueError("function, annihilator and basis must share one field")
    if np.any(G.point_values()[f.bits == 1]):
        raise ValueError("g does not annihilate f")
    parts = decompose(G, b)
    if any(np.any(p.bits & f.bits) for p in parts):
        return False
    top = max(degree(anf_from_tt(p)) for p in parts)
    return top == wt_degree(G)


# ---------- perfect algebraic immunity


def _pai_orders(n: int):
    return [e for e in range(1, n) if 2 * e < n]


def _pai_map_base(f: TruthTable, e: int) -> tuple[np.ndarray, list[int]]:
    """0/1 matrix: candidates (columns) -> ANF coefficients of g f of degree >= n - e."""
    n = f.n
    cands = _masks(n, e)
    idx = np.arange(1 << n)
    mk = np.asarray(cands, dtype=np.int64)
    products = ((idx[None, :] & mk[:, None]) == mk[:, None]).astype(np.uint8) & f.bits[None, :]
    anf = mobius(products)  # rows: candidates, columns: monomials of the product
    high = [m for m in range(1 << n) if popcount(m) >= n - e]
    return anf[:, high].T.astype(np.int64), list(cands)


def _pai_map_univariate(f: TruthTable, e: int, spec: FieldSpec) -> np.ndarray:
    """Field matrix: ``x^i`` (wt i <= e) -> coefficients of ``x^i f`` at exponents of wt >= n - e."""
    n = f.n
    cands = _masks(n, e)
    pts = np.arange(spec.order, dtype=np.int64)
    fb = f.bits.astype(np.int64)
    high = [i for i in range(spec.order) if popcount(i) >= n - e]
    cols = [coeffs_from_values(spec, spec.pow_array(pts, i) * fb)[high] for i in cands]
    return np.stack(cols, axis=1)


def is_pai(
    f: TruthTable,
    mode: Mode | str = Mode.BASE,
    spec: FieldSpec | None = None,
    representation: str = "multivariate",
) -> bool:
    """Perfect algebraic immunity test.

    For every positive ``e < n/2``, no nonzero ``g`` of degree ``<= e`` may
    make ``deg(g f) <= n - e - 1`` (``g f = 0`` included).  Such a ``g`` is
    exactly a nonzero kernel vector of the linear map sending ``g`` to the
    coefficients of ``g f`` on monomials of degree ``>= n - e``.
    """
    mode = Mode(mode)
    spec = _check_inputs(f, 0, spec)
    for e in _pai_orders(f.n):
        if mode == Mode.BASE:
            mat, cands = _pai_map_base(f, e)
            rows = [sum(int(b) << k for k, b in enumerate(r)) for r in mat]
            if gf2_nullspace(rows, len(cands)):
                return False
        elif representation == "multivariate":
            mat, cands = _pai_map_base(f, e)
            if len(ext_nullspace(mat, spec, len(cands))):
                return False
        elif representation == "univariate":
            mat = _pai_map_univariate(f, e, spec)
            if len(ext_nullspace(mat, spec, mat.shape[1])):
                return False
        else:
            raise ValueError(f"unknown representation {representation!r}")
    return True


def verify_pai_equivalence(f: TruthTable, spec: FieldSpec | None = None) -> bool:
    """PAI with Boolean ``g`` agrees with PAI over ``B_n (x) GF(2^n)`` (both representations)."""
    spec = _check_inputs(f, 0, spec)
    base = is_pai(f, Mode.BASE, spec)
    ext = is_pai(f, Mode.EXTENSION, spec, "multivariate")
    uni = is_pai(f, Mode.EXTENSION, spec, "univariate")
    return base == ext == uni


# ---------- sweeps


@dataclass
class SweepResult:
    index: int
    f: TruthTable
    equal: bool
    reports: list = field(default_factory=list)
    components_ok: bool = True


def _sweep_one(item, spec: FieldSpec, pai: bool, bases) -> SweepResult:
    k, f = item
    reports: list[AiReport] = []
    if pai:
        return SweepResult(k, f, verify_pai_equivalence(f, spec))
    equal = verify_equivalence(f, spec, reports)
    ok = all(verify_report(f, r) for r in reports)
    for r in reports[1:]:
        target = f if r.side == Side.F else complement(f)
        ok = ok and all(component_check(target, r.witness, b) for b in bases)
    return SweepResult(k, f, equal, reports, ok)


def equivalence_sweep(functions, spec: FieldSpec, pai: bool = False, workers: int = 1, bases=None) -> list[SweepResult]:
    """Check every function; results come back sorted by input position."""
    items = list(enumerate(functions))
    bases = list(bases) if bases is not None else [Basis.polynomial(spec)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda it: _sweep_one(it, spec, pai, bases), items))
    else:
        results = [_sweep_one(it, spec, pai, bases) for it in items]
    return sorted(results, key=lambda r: r.index)


def ai_upper_bound(n: int) -> int:
    return (n + 1) // 2


__all__ = [
    "Mode",
    "Side",
    "MonomialBasis",
    "monomial_basis",
    "annihilator_space",
    "annihilator_dimension",
    "AiReport",
    "algebraic_immunity",
    "algebraic_immunity_ext",
    "verify_report",
    "verify_equivalence",
    "component_check",
    "is_pai",
    "verify_pai_equivalence",
    "equivalence_sweep",
    "SweepResult",
    "ai_upper_bound",
    "ZERO_DEGREE",
]
