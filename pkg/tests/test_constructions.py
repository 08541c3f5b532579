import pytest

from boolai.annihilator import algebraic_immunity, algebraic_immunity_ext
from boolai.boolfun import is_balanced, weight
from boolai.constructions import carlet_feng, majority, pad
from boolai.gf2n import FieldSpec

from oracles import gf_pow


def test_carlet_feng_n2():
    f = carlet_feng(FieldSpec(2))
    assert f.support().tolist() == [0, 1]
    assert weight(f) == 2 and is_balanced(f)


@pytest.mark.parametrize("n", range(2, 9))
@pytest.mark.parametrize("variant", ["standard", "shifted"])
def test_carlet_feng_weight(n, variant):
    assert weight(carlet_feng(FieldSpec(n), variant)) == 1 << (n - 1)


def test_carlet_feng_support_from_powers():
    spec = FieldSpec(4)
    g = spec.generator
    want = {0} | {gf_pow(g, k, spec.modulus) for k in range(7)}
    assert set(carlet_feng(spec).support().tolist()) == want


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
@pytest.mark.parametrize("variant", ["standard", "shifted"])
def test_carlet_feng_is_optimal(n, variant):
    f = carlet_feng(FieldSpec(n), variant)
    assert algebraic_immunity(f).ai == (n + 1) // 2


def test_carlet_feng_ext_n5():
    spec = FieldSpec(5)
    f = carlet_feng(spec)
    assert algebraic_immunity_ext(f, spec).ai == 3
    assert algebraic_immunity_ext(f, spec, "univariate").ai == 3
    assert is_balanced(f)


def test_majority():
    assert majority(3).hex() == "e8"
    assert majority(1).bits.tolist() == [0, 1]
    for n in (1, 3, 5):
        assert algebraic_immunity(majority(n)).ai == (n + 1) // 2
    # even n: at least n/2 + 1 ones
    assert majority(4).support().tolist() == [7, 11, 13, 14, 15]


def test_unknown_variant_and_small_n():
    with pytest.raises(ValueError):
        carlet_feng(FieldSpec(3), "other")
    with pytest.raises(ValueError):
        carlet_feng(FieldSpec(1))


def test_pad_keeps_immunity():
    f = pad(majority(3))
    assert f.n == 4 and weight(f) == 8
    assert algebraic_immunity(f).ai == 2
