"""Exit criteria.  Run with ``pytest tests/test_acceptance.py`` for the summary."""

import random
import time
from math import comb

import pytest

from boolai.annihilator import (
    Mode,
    Side,
    algebraic_immunity,
    algebraic_immunity_ext,
    annihilator_space,
    component_check,
    is_pai,
    verify_report,
)
from boolai.boolfun import TruthTable, anf_from_tt, complement, degree, weight
from boolai.constructions import carlet_feng, majority, pad
from boolai.gf2n import Basis, FieldSpec, dual_basis
from boolai.univariate import (
    UnivariatePoly,
    decompose,
    evaluate,
    ext_degree,
    interpolate,
    is_boolean,
    is_boolean_frobenius,
    recompose,
    to_multivariate,
    wt_degree,
)

pytestmark = pytest.mark.acceptance

SECOND_MODULUS_N3 = 0b1101  # x^3 + x^2 + 1


def ceil_half(n):
    return (n + 1) // 2


def _immunities(funcs, spec):
    """Base AI plus both extension AIs for each function, with timing."""
    start = time.perf_counter()
    rows = []
    for f in funcs:
        base = algebraic_immunity(f)
        ext = algebraic_immunity_ext(f, spec, "multivariate")
        uni = algebraic_immunity_ext(f, spec, "univariate")
        rows.append((f, base, ext, uni))
    return rows, time.perf_counter() - start


@pytest.fixture(scope="module")
def sweep_n3():
    spec = FieldSpec(3)
    assert spec.modulus == 0b1011
    return _immunities([TruthTable.from_int(3, v) for v in range(256)], spec)


@pytest.fixture(scope="module")
def sweep_random():
    rng = random.Random(2024)
    spec4, spec5 = FieldSpec(4), FieldSpec(5)
    f4 = [TruthTable.random(4, rng) for _ in range(1000)]
    f4 += [carlet_feng(spec4), pad(majority(3))]
    f5 = [TruthTable.random(5, rng) for _ in range(100)]
    rows4, t4 = _immunities(f4, spec4)
    rows5, t5 = _immunities(f5, spec5)
    return rows4 + rows5, t4 + t5


@pytest.fixture(scope="module")
def sweep_second_modulus():
    return _immunities([TruthTable.from_int(3, v) for v in range(256)], FieldSpec(3, SECOND_MODULUS_N3))


def _unequal(rows):
    return [f.hex() for f, b, e, u in rows if not b.ai == e.ai == u.ai]


def test_c01_theorem_exhaustive_n3(sweep_n3, criterion):
    rows, elapsed = sweep_n3
    bad = _unequal(rows)
    criterion["detail"] = f"{len(rows) - len(bad)}/{len(rows)} equal in {elapsed:.2f}s"
    assert len(rows) == 256
    assert bad == []
    assert elapsed < 10.0


def test_c02_theorem_random_n4_n5(sweep_random, criterion):
    rows, elapsed = sweep_random
    bad = _unequal(rows)
    criterion["detail"] = f"{len(rows) - len(bad)}/{len(rows)} equal in {elapsed:.2f}s"
    assert len(rows) == 1000 + 2 + 100
    assert bad == []
    assert elapsed < 120.0


def test_c03_modulus_independence(sweep_n3, sweep_second_modulus, criterion):
    first, _ = sweep_n3
    second, _ = sweep_second_modulus
    diffs = [
        f.hex()
        for (f, b1, e1, u1), (g, b2, e2, u2) in zip(first, second)
        if not (f == g and b1.ai == e1.ai == u1.ai == b2.ai == e2.ai == u2.ai)
    ]
    criterion["detail"] = f"{256 - len(diffs)}/256 identical under x^3+x^2+1"
    assert diffs == []


def test_c04_upper_bound(sweep_n3, sweep_random, sweep_second_modulus, criterion):
    rows = sweep_n3[0] + sweep_random[0] + sweep_second_modulus[0]
    violations = [f.hex() for f, *reports in rows for r in reports if r.ai > ceil_half(f.n)]
    criterion["detail"] = f"{len(violations)} violations over {len(rows)} functions"
    assert violations == []


def _poly_population():
    rng = random.Random(5)
    for n in (2, 3, 4):
        spec = FieldSpec(n)
        for _ in range(100):
            G = UnivariatePoly.random(spec, rng, max_wt=rng.randrange(n + 1), density=rng.random())
            pb = Basis.polynomial(spec)
            for b in (pb, dual_basis(pb), Basis.random(spec, rng)):
                yield G, b


def test_c05_decomposition_identities(criterion):
    failures = total = 0
    for G, b in _poly_population():
        total += 1
        parts = decompose(G, b)
        if recompose(parts, b, G.spec) != G or max(degree(anf_from_tt(p)) for p in parts) != wt_degree(G):
            failures += 1
    criterion["detail"] = f"{failures} failures over {total} (G, basis) pairs"
    assert total == 900
    assert failures == 0


def test_c06_degree_coincidence(criterion):
    failures = total = 0
    for G, b in _poly_population():
        total += 1
        if ext_degree(to_multivariate(G, b)) != wt_degree(G):
            failures += 1
    criterion["detail"] = f"{failures} failures over {total} pairs"
    assert total == 900
    assert failures == 0


def test_c07_dimension_formula(criterion):
    mismatches = []
    for n in (2, 3, 4):
        spec = FieldSpec(n)
        zero = TruthTable.zeros(n)
        for d in range(n + 1):
            want = sum(comb(n, k) for k in range(d + 1))
            for mode in Mode:
                got = len(annihilator_space(zero, d, mode, spec))
                if got != want:
                    mismatches.append((n, d, mode.value, got, want))
    criterion["detail"] = f"{len(mismatches)} mismatches"
    assert mismatches == []


def test_c08_interpolation_and_booleanness(criterion):
    rng = random.Random(8)
    failures = []
    for k in range(1000):
        n = 1 + k % 6
        spec = FieldSpec(n)
        f = TruthTable.random(n, rng)
        G = interpolate(f, spec)
        back = [evaluate(G, spec.element(c)).value for c in range(spec.order)]
        pointwise, frob = is_boolean(G), is_boolean_frobenius(G)
        if back != f.bits.tolist() or not pointwise or pointwise != frob:
            failures.append(f.hex())
    criterion["detail"] = f"{len(failures)} failures over 1000 functions, n<=6"
    assert failures == []


def test_c09_pai_equivalence(criterion):
    rng = random.Random(9)
    funcs = [TruthTable.from_int(3, v) for v in range(256)]
    funcs += [TruthTable.random(4, rng) for _ in range(200)]
    counterexamples = []
    npai = 0
    for f in funcs:
        spec = FieldSpec(f.n)
        base = is_pai(f, Mode.BASE, spec)
        ext = is_pai(f, Mode.EXTENSION, spec)
        uni = is_pai(f, Mode.EXTENSION, spec, "univariate")
        npai += base
        if not base == ext == uni:
            counterexamples.append(f"n={f.n}:{f.hex()}")
    criterion["detail"] = f"{len(funcs) - len(counterexamples)}/{len(funcs)} agree ({npai} PAI)"
    assert counterexamples == [], "PAI counterexamples: " + ", ".join(counterexamples)


def test_c10_named_constructions(criterion):
    start = time.perf_counter()
    bad = []
    for n in (2, 3, 4, 5, 6):
        f = carlet_feng(FieldSpec(n))
        if algebraic_immunity(f).ai != ceil_half(n) or weight(f) != 1 << (n - 1):
            bad.append(f"carlet_feng({n})")
    for n in (1, 3, 5):
        if algebraic_immunity(majority(n)).ai != ceil_half(n):
            bad.append(f"majority({n})")
    elapsed = time.perf_counter() - start
    criterion["detail"] = f"{8 - len(bad)}/8 optimal in {elapsed:.2f}s"
    assert bad == []
    assert elapsed < 60.0


def test_c11_component_check(sweep_n3, sweep_random, criterion):
    rng = random.Random(11)
    failures = checked = 0
    for f, base, ext, uni in sweep_n3[0] + sweep_random[0]:
        spec = ext.witness.spec
        bases = (Basis.polynomial(spec), Basis.random(spec, rng))
        for rep in (ext, uni):
            target = f if rep.side == Side.F else complement(f)
            for b in bases:
                checked += 1
                if not (verify_report(f, rep) and component_check(target, rep.witness, b)):
                    failures += 1
    criterion["detail"] = f"{failures} failures over {checked} witness/basis checks"
    assert failures == 0


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
