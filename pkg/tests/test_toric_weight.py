"""Hirzebruch-Jung expansions and dimension-2 toric point weights."""

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from quotlat import (
    canonical_exponents,
    hj_expand,
    hj_value,
    point_type,
    weight_dim2,
    weight_lookup,
)
from quotlat.toric_weight import WeightValue


def test_hj_expand_frozen():
    assert hj_expand(5, 2) == [3, 2]
    assert hj_expand(7, 3) == [3, 2, 2]
    assert hj_expand(19, 7) == [3, 4, 2]
    assert hj_expand(3, 1) == [3]
    assert hj_expand(5, 4) == [2, 2, 2, 2]


@given(st.integers(2, 60), st.integers(1, 59))
@settings(max_examples=120, deadline=None)
def test_hj_round_trip(n, q):
    q = q % n
    if q == 0 or gcd(n, q) != 1:
        return
    coeffs = hj_expand(n, q)
    assert all(a >= 2 for a in coeffs)
    assert hj_value(coeffs) == Fraction(n, q)
    assert oracles.hj_fraction(coeffs) == Fraction(n, q)


def test_weight_value_interval():
    w = WeightValue(1, 1)
    assert w.exact == 1
    assert WeightValue(0, 2).exact is None
    with pytest.raises(ValueError):
        WeightValue(2, 1)


def test_weight_dim2_frozen_case():
    r = weight_dim2(5, 2)
    assert (r.weight.lo, r.weight.hi) == (1, 1)
    assert r.case == "v"
    assert r.hj == (3, 2)
    assert r.discr_im_gprime == r.discr_im_gbar == 5
    assert r.discr_gamma_prime == r.discr_gamma_bar == 5
    assert r.rktor_relative == 0


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_weight_dim2_small_primes(p):
    for q in range(1, p):
        r = weight_dim2(p, q)
        assert (r.weight.lo, r.weight.hi) == (1, 1), (p, q)
        assert r.fan.complete


def test_point_type_table():
    assert point_type(5, (0, 1)) == 0
    assert point_type(5, (2, 2)) == 1
    assert point_type(3, (1, 2)) == 2
    assert point_type(5, (1, 2, 3, 4)) is None
    assert point_type(5, (1, 1, 4, 4)) is None


def test_canonical_exponents():
    assert canonical_exponents(5, (4, 4, 1, 1)) == (1, 1, 4, 4)
    assert canonical_exponents(5, (2, 2, 3, 3)) == (1, 1, 4, 4)
    assert canonical_exponents(7, (2, 4, 6, 5)) == (1, 2, 3, 5)


@given(st.sampled_from([3, 5, 7, 11]), st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_canonical_exponents_unit_invariance(p, seed):
    import random

    rng = random.Random(seed)
    exps = tuple(rng.randint(1, p - 1) for _ in range(4))
    unit = rng.randint(1, p - 1)
    scaled = tuple(k * unit % p for k in exps)
    assert canonical_exponents(p, scaled) == canonical_exponents(p, exps)


def test_weight_lookup_proved_and_open():
    assert weight_lookup(5, (1, 1, 4, 4)) == WeightValue(1, 1)
    assert weight_lookup(5, (1, 1, 1, 2)) == WeightValue(1, 1)
    assert weight_lookup(5, (1, 2, 3, 4)) == WeightValue(1, 1)
    assert weight_lookup(3, (1, 1, 2, 2)) == WeightValue(1, 1)
    # surface points always weigh 1
    assert weight_lookup(3, (1, 2)) == WeightValue(1, 1)
    # types without a proved value stay at the full interval
    assert weight_lookup(11, (1, 1, 10, 10)) == WeightValue(0, 2)
    assert weight_lookup(7, (1, 3, 5, 6)) == WeightValue(0, 2)
