"""Integral cohomology ring of the Hilbert square of a K3 surface."""

from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from quotlat import (
    H2Class,
    HilbertSquare,
    h2_primitivity_certificate,
    parse_lattice_expr,
    s_lattice_gram,
)

S_GRAM = (
    (12, -2, -1, 0, 0, 0, 0),
    (-2, 2, 1, 0, 0, 0, 0),
    (-1, 1, 1, 0, 0, 0, 0),
    (0, 0, 0, 0, 2, 0, 0),
    (0, 0, 0, 2, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, -2),
    (0, 0, 0, 0, 0, -2, 0),
)


def test_bb_lattice_shape(hilb):
    assert hilb.h2_rank() == 23
    bb = hilb.bb_lattice()
    assert bb.determinant == 2
    assert hilb.bb(hilb.delta, hilb.delta) == -2
    assert hilb.bb(hilb.gamma(0), hilb.gamma(1)) == 1
    assert hilb.bb(hilb.gamma(0), hilb.gamma(0)) == 0
    assert hilb.bb(hilb.gamma(0), hilb.delta) == 0


def test_h4_pairings_frozen(hilb):
    sig = hilb.sigma()
    assert hilb.pair_h4(sig, sig) == 1
    d2 = hilb.cup(hilb.delta, hilb.delta)
    assert hilb.pair_h4(d2, sig) == -1
    assert hilb.pair_h4(d2, d2) == 12
    assert hilb.pair_h4(hilb.q2(0), hilb.q2(1)) == -2
    assert hilb.pair_h4(hilb.q1q1(0, 1), hilb.q1q1(0, 1)) == 1
    assert hilb.pair_h4(hilb.m11(0), hilb.m11(0)) == 0


def test_h4_basis_labels(hilb):
    labels = hilb.h4_basis_labels()
    assert len(labels) == 276
    assert labels[0] == "sigma"
    assert labels[1] == "q2(a0)"
    assert labels[-1] == "m11(a21)"


def test_fujiki_relation_on_h2(hilb):
    # integral of x^4 over the Hilbert square is 3 q(x)^2
    for x in [hilb.delta, hilb.gamma(0) + hilb.gamma(1), hilb.gamma(4) - 2 * hilb.delta]:
        assert hilb.fujiki_product(x, x, x, x) == 3 * hilb.bb(x, x) ** 2


@given(st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_fujiki_polarization(hilb, seed):
    rng = Random(seed)

    def rand_class():
        coeffs = [0] * 22
        for _ in range(3):
            coeffs[rng.randrange(22)] = rng.randint(-2, 2)
        return H2Class(tuple(coeffs), rng.randint(-2, 2))

    x1, x2, x3, x4 = (rand_class() for _ in range(4))
    q = hilb.bb
    lhs = hilb.fujiki_product(x1, x2, x3, x4)
    rhs = (
        q(x1, x2) * q(x3, x4)
        + q(x1, x3) * q(x2, x4)
        + q(x1, x4) * q(x2, x3)
    )
    assert lhs == rhs


def test_cup_is_symmetric_and_bilinear(hilb):
    rng = Random(12)
    for _ in range(10):
        coeffs = [rng.randint(-2, 2) for _ in range(22)]
        x = H2Class(tuple(coeffs), rng.randint(-2, 2))
        y = H2Class(tuple(coeffs[::-1]), rng.randint(-2, 2))
        z = H2Class(tuple(rng.randint(-2, 2) for _ in range(22)), 1)
        assert hilb.cup(x, y).coords == hilb.cup(y, x).coords
        both = hilb.cup(x + z, y)
        split = hilb.cup(x, y) + hilb.cup(z, y)
        assert both.coords == split.coords


def test_induced_maps_commute_with_cup(hilb):
    # swap the two E8(-1) blocks of U^3 + E8(-1)^2; an isometry of the K3 lattice
    n = 22
    psi = [[0] * n for _ in range(n)]
    for i in range(6):
        psi[i][i] = 1
    for i in range(8):
        psi[6 + i][14 + i] = 1
        psi[14 + i][6 + i] = 1
    h2map = hilb.induced_h2(psi)
    h4map = hilb.induced_h4(psi)
    x = hilb.gamma(7) + 2 * hilb.delta
    y = hilb.gamma(15) - hilb.gamma(2)
    moved = hilb.apply_h4(h4map, hilb.cup(x, y))
    direct = hilb.cup(hilb._image_h2(psi, x), hilb._image_h2(psi, y))
    assert moved.coords == direct.coords


def test_s_lattice_gram_frozen(hilb):
    s = s_lattice_gram(hilb, hilb.gamma(0), hilb.gamma(1))
    assert tuple(tuple(row) for row in s) == S_GRAM
    assert oracles.det(s) == 160
    assert 160 == 2**5 * 5


def test_primitivity_certificate(hilb):
    s = s_lattice_gram(hilb, hilb.gamma(0), hilb.gamma(1))
    ok, witness = h2_primitivity_certificate(s, 5)
    assert ok and witness is None
    ok3, witness3 = h2_primitivity_certificate(s, 3)
    assert ok3 and witness3 is None


def test_primitivity_certificate_detects_failure():
    # scaling every pairing by p makes each candidate land in pZ^7
    scaled = tuple(tuple(5 * x for x in row) for row in S_GRAM)
    ok, witness = h2_primitivity_certificate(scaled, 5)
    assert not ok
    assert witness is not None
    a, b, c = witness
    assert any(v % 5 for v in (a, b, c))


def test_hilbert_square_rejects_odd_rank_input():
    with pytest.raises(Exception):
        HilbertSquare(parse_lattice_expr("A2").gram_rows() + [[1]])
