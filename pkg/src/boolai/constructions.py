"""Named Boolean functions used as test subjects."""

from __future__ import annotations

import numpy as np

from .boolfun import TruthTable, popcount
from .gf2n import FieldSpec

CARLET_FENG_VARIANTS = ("standard", "shifted")


def carlet_feng(spec: FieldSpec, variant: str = "standard") -> TruthTable:
    """Carlet-Feng function for the field's primitive element ``a``.

    ``"standard"``: support ``{0, 1, a, ..., a^(2^(n-1) - 2)}``.
    ``"shifted"``: support ``{1, a, ..., a^(2^(n-1) - 1)}`` (no zero).
    Both have weight ``2^(n-1)``.
    """
    n = spec.n
    if n < 2:
        raise ValueError("Carlet-Feng function needs n >= 2")
    half = 1 << (n - 1)
    bits = np.zeros(spec.order, dtype=np.uint8)
    if variant == "standard":
        bits[0] = 1
        bits[spec.exp[: half - 1]] = 1
    elif variant == "shifted":
        bits[spec.exp[:half]] = 1
    else:
        raise ValueError(f"unknown Carlet-Feng variant {variant!r}; choose from {CARLET_FENG_VARIANTS}")
    return TruthTable(n, bits)


def majority(n: int) -> TruthTable:
    """1 where more than half of the n inputs are 1.

    For even n this means at least ``n/2 + 1`` ones, so the function is
    not balanced.
    """
    if n < 1:
        raise ValueError("majority needs n >= 1")
    return TruthTable(n, [popcount(i) > n // 2 for i in range(1 << n)])


def pad(f: TruthTable, extra: int = 1) -> TruthTable:
    """Same function seen with ``extra`` unused trailing variables."""
    return TruthTable(f.n + extra, np.tile(f.bits, 1 << extra))


CONSTRUCTIONS = {
    "carlet-feng": lambda n, spec=None: carlet_feng(spec or FieldSpec(n)),
    "carlet-feng-shifted": lambda n, spec=None: carlet_feng(spec or FieldSpec(n), "shifted"),
    "majority": lambda n, spec=None: majority(n),
}
