import random
from itertools import product

import pytest

from conftest import all_diagrams, brute_middles, interlace_oracle
from sympbranch.diagrams import (
    EQ,
    GE,
    LE,
    WeightPair,
    enumerate_middle,
    interlaces,
    multiplicity,
    multiplicity_nonzero,
    normalize,
    order_type_of,
    order_type_str,
    parse_order_type,
    satisfies,
    semigroup_add,
    tensor_factors,
    tl_weight,
    transpose,
)


def test_normalize():
    assert normalize([3, 2, 0, 0]) == (3, 2)
    assert normalize(()) == ()
    with pytest.raises(ValueError):
        normalize([1, 2])
    with pytest.raises(ValueError):
        normalize([2, -1])


def test_transpose():
    assert transpose((6, 4, 2, 1)) == (4, 3, 2, 2, 1, 1)
    assert transpose(()) == ()
    assert transpose(transpose((5, 4, 3, 2))) == (5, 4, 3, 2)


def test_interlaces_examples():
    assert interlaces((4, 4, 2, 1), (5, 4, 3, 2))
    assert interlaces((), ())
    assert not interlaces((3,), (1, 1))
    assert interlaces((4, 3, 1), (4, 4, 2, 1))


def test_interlaces_matches_oracle():
    diagrams = all_diagrams(3, 3)
    for d in diagrams:
        for f in diagrams:
            assert interlaces(d, f) == interlace_oracle(d, f)


def test_multiplicity_frozen_values():
    # expected values computed by the exhaustive search in brute_middles
    assert multiplicity((4, 3, 1), (5, 4, 3, 2), 4) == 16
    assert multiplicity((), (), 2) == 1
    assert multiplicity((1,), (1, 1), 2) == 2
    assert multiplicity((3,), (1, 1), 2) == 0


def test_multiplicity_against_brute_force():
    for n in (2, 3):
        for d in all_diagrams(3, n - 1):
            for f in all_diagrams(3, n):
                expected = brute_middles(d, f, n)
                assert multiplicity(d, f, n) == len(expected)
                got = enumerate_middle(d, f, n)
                assert got == [normalize(e) for e in expected]


def test_multiplicity_against_brute_force_rank4_sample():
    rng = random.Random(4)
    ds = all_diagrams(4, 3)
    fs = all_diagrams(4, 4)
    for _ in range(150):
        d, f = rng.choice(ds), rng.choice(fs)
        assert multiplicity(d, f, 4) == len(brute_middles(d, f, 4))


def test_enumerate_middle_contains_worked_value():
    middles = enumerate_middle((4, 3, 1), (5, 4, 3, 2), 4)
    assert (4, 4, 2, 1) in middles
    assert len(middles) == 16
    assert middles == sorted(middles)
    assert enumerate_middle((), (), 2) == [()]
    assert enumerate_middle((1,), (1, 1), 2) == [(1,), (1, 1)]


def test_length_validation():
    with pytest.raises(ValueError):
        multiplicity((1, 1), (1,), 2)  # D needs at most n-1 rows
    with pytest.raises(ValueError):
        multiplicity((1,), (1, 1, 1), 2)
    with pytest.raises(ValueError):
        multiplicity((), (), 1)


def test_multiplicity_nonzero_examples():
    assert multiplicity_nonzero((4, 3, 1), (5, 4, 3, 2))
    assert not multiplicity_nonzero((3,), (1, 1))
    assert multiplicity_nonzero((), ())


def test_multiplicity_nonzero_iff_positive():
    for n in (2, 3, 4):
        for d in all_diagrams(4, n - 1):
            for f in all_diagrams(4, n):
                assert multiplicity_nonzero(d, f) == (multiplicity(d, f, n) > 0)


def test_order_type_examples():
    assert order_type_of((3, 0), (3, 2, 1), 3) == (GE, LE)
    assert order_type_of((2, 0), (3, 2, 1), 3) == (EQ, LE)
    assert order_type_of((2, 2), (2, 2, 2), 3) == (EQ, EQ)


def test_order_type_text_forms():
    assert order_type_str((GE, LE, EQ)) == ">=<=="
    assert parse_order_type(">=<==") == (GE, LE, EQ)
    assert parse_order_type("=<=") == (EQ, LE)
    with pytest.raises(ValueError):
        parse_order_type(">x")


def test_satisfies_semantics():
    assert satisfies((EQ, LE), (GE, LE))
    assert satisfies((EQ, LE), (LE, LE))
    assert not satisfies((GE, LE), (LE, LE))
    with pytest.raises(ValueError):
        satisfies((EQ,), (GE, LE))


def test_semigroup_add_examples():
    p = WeightPair((3, 0), (3, 2, 1), 3)
    assert semigroup_add(p, p) == WeightPair((6,), (6, 4, 2), 3)
    zero = WeightPair((), (), 3)
    assert p + zero == p
    with pytest.raises(ValueError):
        p + WeightPair((), (), 4)


def test_order_type_closed_under_addition():
    n = 3
    small = [(d, f) for d in all_diagrams(2, n - 1) for f in all_diagrams(2, n)]
    for sigma in product((GE, LE), repeat=n - 1):
        members = [(d, f) for d, f in small
                   if satisfies(order_type_of(d, f, n), sigma)]
        for d1, f1 in members[::3]:
            for d2, f2 in members[::4]:
                total = WeightPair(d1, f1, n) + WeightPair(d2, f2, n)
                assert satisfies(order_type_of(total.D, total.F, n), sigma)


def test_tensor_factors_examples():
    # sorted margin of ((4,3,1), (5,4,3,2)) is (5,4,4,3,3,2,1,0)
    assert tensor_factors((4, 3, 1), (5, 4, 3, 2), 4) == (1, 1, 1, 1)
    assert tensor_factors((2, 2), (2, 2), 3) == (0, 0, 0)
    assert tensor_factors((), (), 2) == (0, 0)


def test_tensor_factor_product_counts_multiplicity():
    for n in (2, 3, 4):
        for d in all_diagrams(4, n - 1):
            for f in all_diagrams(4, n):
                if multiplicity_nonzero(d, f):
                    expected = 1
                    for r in tensor_factors(d, f, n):
                        expected *= r + 1
                    assert expected == multiplicity(d, f, n)


def test_tl_weight_worked_example():
    assert tl_weight((4, 3, 1), (4, 4, 2, 1), (5, 4, 3, 2), 4) == (-1, 1, -1, 1)
    assert tl_weight((2,), (2, 1), (2, 2), 2) == (0, 0)
    with pytest.raises(ValueError):
        tl_weight((3,), (1,), (1, 1), 2)


def test_tl_weights_fill_the_tensor_box():
    for n in (2, 3):
        for d in all_diagrams(3, n - 1):
            for f in all_diagrams(3, n):
                if not multiplicity_nonzero(d, f):
                    continue
                r = tensor_factors(d, f, n)
                box = set(product(*(range(-ri, ri + 1, 2) for ri in r)))
                weights = {tl_weight(d, e, f, n)
                           for e in enumerate_middle(d, f, n)}
                assert weights == box
                for w in weights:
                    assert all(abs(wi) <= ri and (wi - ri) % 2 == 0
                               for wi, ri in zip(w, r))
