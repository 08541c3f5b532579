"""
Perfect algebraic immunity
==========================

``f`` is PAI when, for every positive ``e < n/2``, each nonzero ``g`` of
degree at most ``e`` gives a product ``g f`` of degree at least ``n - e``.
The test is run with Boolean ``g`` and with ``g`` over GF(2^n).
"""

import random
from collections import Counter

from boolai.annihilator import Mode, is_pai
from boolai.boolfun import TruthTable
from boolai.constructions import carlet_feng, majority
from boolai.gf2n import FieldSpec

spec = FieldSpec(3)
counts = Counter()
for v in range(256):
    f = TruthTable.from_int(3, v)
    counts[(is_pai(f, Mode.BASE, spec), is_pai(f, Mode.EXTENSION, spec))] += 1
print("n=3 (base, extension) ->", dict(counts))

rng = random.Random(1)
spec = FieldSpec(5)
for name, f in [("majority(5)", majority(5)), ("carlet-feng(5)", carlet_feng(spec))] + [
    (f"random #{k}", TruthTable.random(5, rng)) for k in range(3)
]:
    print(
        f"{name:15s} base={is_pai(f, Mode.BASE, spec)} "
        f"ext={is_pai(f, Mode.EXTENSION, spec)} "
        f"ext(univariate)={is_pai(f, Mode.EXTENSION, spec, 'univariate')}"
    )
