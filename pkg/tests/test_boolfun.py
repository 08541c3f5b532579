import random

import pytest

from boolai.boolfun import (
    AnfPoly,
    TruthTable,
    anf_from_tt,
    complement,
    degree,
    is_balanced,
    mobius,
    multiply,
    tt_from_anf,
    weight,
)

from oracles import anf_by_subsets

MAJ3 = TruthTable.from_hex(3, "e8")


def test_majority_hex_and_anf():
    assert list(MAJ3.bits) == [0, 0, 0, 1, 0, 1, 1, 1]
    assert anf_from_tt(MAJ3) == AnfPoly.parse(3, "x1*x2 + x1*x3 + x2*x3")
    assert str(anf_from_tt(MAJ3)) == "x1*x2 + x1*x3 + x2*x3"
    assert degree(anf_from_tt(MAJ3)) == 2
    assert weight(MAJ3) == 4 and is_balanced(MAJ3)


def test_zero_and_constant_cases():
    z = TruthTable.zeros(3)
    assert anf_from_tt(z).terms == frozenset()
    assert degree(anf_from_tt(z)) == -1
    assert weight(z) == 0
    one = TruthTable.ones(3)
    assert weight(one) == 8 and not is_balanced(one)
    assert degree(AnfPoly.parse(3, "x1*x2*x3")) == 3
    assert str(AnfPoly(3)) == "0"


def test_mobius_exhaustive_n3_against_subset_formula():
    for v in range(256):
        f = TruthTable.from_int(3, v)
        anf = anf_from_tt(f)
        assert anf.terms == anf_by_subsets(list(f.bits), 3)
        assert tt_from_anf(anf) == f


@pytest.mark.parametrize("n,count", [(5, 100), (8, 1000)])
def test_mobius_roundtrip_random(n, count):
    rng = random.Random(n)
    for _ in range(count):
        f = TruthTable.random(n, rng)
        assert tt_from_anf(anf_from_tt(f)) == f


def test_mobius_involution_on_stacks():
    rng = random.Random(3)
    import numpy as np

    arr = np.array([[rng.randrange(256) for _ in range(16)] for _ in range(4)])
    assert np.array_equal(mobius(mobius(arr)), arr)


def test_product_degree_bound():
    rng = random.Random(11)
    for n in range(1, 6):
        for _ in range(50):
            f, g = TruthTable.random(n, rng), TruthTable.random(n, rng)
            df, dg = degree(anf_from_tt(f)), degree(anf_from_tt(g))
            dp = degree(anf_from_tt(multiply(f, g)))
            assert dp <= max(df, 0) + max(dg, 0) or dp == -1


def test_pointwise_algebra_exhaustive_n3():
    one = TruthTable.ones(3)
    for v in range(256):
        f = TruthTable.from_int(3, v)
        assert weight(multiply(f, complement(f))) == 0
        assert multiply(f, one) == f
        assert complement(complement(f)) == f
        assert weight(f) + weight(complement(f)) == 8


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        multiply(TruthTable.zeros(2), TruthTable.zeros(3))


@pytest.mark.parametrize("text", ["e", "e8e", "zz", ""])
def test_hex_parse_errors(text):
    with pytest.raises(ValueError, match="hex digit"):
        TruthTable.from_hex(3, text)


def test_hex_roundtrip_and_small_n():
    rng = random.Random(5)
    for n in range(1, 8):
        f = TruthTable.random(n, rng)
        assert TruthTable.from_hex(n, f.hex()) == f
    assert TruthTable.from_hex(1, "2").bits.tolist() == [0, 1]


def test_anf_parse_and_serialize():
    p = AnfPoly.parse(3, "x3*x1 + 1 + x2")
    assert p.monomials() == ["1", "x2", "x1*x3"]
    assert AnfPoly.parse(3, "x1 + x1") == AnfPoly(3)
    with pytest.raises(ValueError):
        AnfPoly.parse(3, "x4")
    with pytest.raises(ValueError):
        AnfPoly.parse(3, "y1")
