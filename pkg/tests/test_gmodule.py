"""Order-p actions: Jordan profiles, symmetric squares, group cohomology."""

from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from quotlat import (
    CohomologyProfile,
    JordanProfile,
    PrimeOrderAction,
    a_invariant,
    conjugate,
    free_quotient_cohomology,
    group_cohomology,
    jordan_profile,
    k3_order5_action,
    reiner_action,
    sym2_action,
    sym2_profile,
)
from quotlat.gmodule import (
    GModuleError,
    NotAnOrderPAction,
    UnsupportedPrime,
    averaged_form,
    companion_cyclotomic,
    reiner_block,
)


def blocks(p, counts):
    """Expected Jordan profile of reiner_action(p, counts)."""
    t, c, g = counts
    out = [0] * (p + 1)
    out[1], out[p - 1], out[p] = t, out[p - 1] + c, out[p] + g
    return tuple(out)


def random_counts(rng, p, max_rank=12):
    while True:
        t, c, g = rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 2)
        rank = t + c * (p - 1) + g * p
        if 0 < rank <= max_rank:
            return (t, c, g)


# ---------------------------------------------------------------- profiles


def test_reiner_blocks():
    assert [list(r) for r in reiner_block(3, "trivial")] == [[1]]
    cyc = PrimeOrderAction(p=5, phi=tuple(tuple(r) for r in reiner_block(5, "cyclotomic")))
    assert cyc.rank == 4
    assert jordan_profile(cyc).blocks == (0, 0, 0, 0, 1, 0)
    glued = PrimeOrderAction(p=5, phi=tuple(tuple(r) for r in reiner_block(5, "glued")))
    assert glued.rank == 5
    assert jordan_profile(glued).blocks == (0, 0, 0, 0, 0, 1)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_jordan_profile_matches_construction(p):
    rng = Random(p * 101)
    for _ in range(8):
        counts = random_counts(rng, p, max_rank=2 * p + 4)
        act = reiner_action(p, counts)
        assert jordan_profile(act).blocks == blocks(p, counts)


def test_jordan_profile_p2_eigensplit():
    swap = PrimeOrderAction(p=2, phi=((0, 1), (1, 0)))
    jp = jordan_profile(swap)
    assert jp.blocks == (0, 0, 1)
    assert (jp.plus_rank, jp.minus_rank) == (0, 0)
    refl = PrimeOrderAction(p=2, phi=((1, 0), (0, -1)))
    jp = jordan_profile(refl)
    assert jp.blocks == (0, 2, 0)
    assert (jp.plus_rank, jp.minus_rank) == (1, 1)


def test_jordan_profile_invariant_under_conjugation():
    rng = Random(4242)
    for p in (3, 5, 7):
        counts = random_counts(rng, p)
        act = reiner_action(p, counts)
        moved = conjugate(act, oracles.random_unimodular(rng, act.rank))
        assert jordan_profile(moved).blocks == blocks(p, counts)


def test_companion_cyclotomic_has_order_p():
    for p in (3, 5, 7, 11):
        m = companion_cyclotomic(p)
        act = PrimeOrderAction(p=p, phi=tuple(tuple(r) for r in m))
        assert act.rank == p - 1
        # 1 + phi + ... + phi^(p-1) = 0 on the cyclotomic module
        assert all(x == 0 for row in act.sigma() for x in row)


def test_unsupported_primes_rejected():
    with pytest.raises(UnsupportedPrime):
        reiner_action(4, (1, 0, 0))
    with pytest.raises(UnsupportedPrime):
        reiner_action(23, (1, 0, 0))


def test_phi_must_have_order_p():
    with pytest.raises(NotAnOrderPAction):
        PrimeOrderAction(p=3, phi=((2, 0), (0, 1)))


# ---------------------------------------------------------------- sym2


def test_sym2_action_matches_direct_expansion():
    rng = Random(99)
    for p in (3, 5, 7):
        act = reiner_action(p, random_counts(rng, p, max_rank=8))
        act = conjugate(act, oracles.random_unimodular(rng, act.rank, steps=6))
        phi = act.phi_rows()
        assert sym2_action(act).phi_rows() == oracles.sym2_matrix(phi, len(phi))


@pytest.mark.parametrize(
    "p, blocks_in, blocks_out",
    [
        (3, (0, 5, 0, 6), (0, 15, 0, 87)),
        (5, (0, 3, 0, 0, 0, 4), (0, 6, 0, 0, 0, 54)),
        (5, (0, 2, 0, 0, 0, 4), (0, 3, 0, 0, 0, 50)),
        (3, (0, 2, 0, 7), (0, 3, 0, 91)),
        (11, (0, 1) + (0,) * 9 + (2,), (0, 1) + (0,) * 9 + (25,)),
    ],
)
def test_sym2_profile_frozen(p, blocks_in, blocks_out):
    jp = JordanProfile(p, blocks_in)
    out = sym2_profile(jp)
    assert out.blocks == blocks_out
    assert out.rank == jp.rank * (jp.rank + 1) // 2


def test_sym2_profile_rejects_middle_blocks():
    with pytest.raises(GModuleError):
        sym2_profile(JordanProfile(7, (0, 1, 0, 1, 0, 0, 0, 0)))


@given(st.integers(0, 10**6))
@settings(max_examples=30, deadline=None)
def test_sym2_profile_agrees_with_direct_computation(seed):
    rng = Random(seed)
    p = rng.choice([3, 5])
    act = reiner_action(p, random_counts(rng, p, max_rank=7))
    if seed % 2:
        act = conjugate(act, oracles.random_unimodular(rng, act.rank, steps=5))
    direct = jordan_profile(sym2_action(act))
    assert direct.blocks == sym2_profile(jordan_profile(act)).blocks


# ---------------------------------------------------------------- cohomology


def test_group_cohomology_orders_match_construction():
    rng = Random(31)
    for p in (3, 5, 7):
        for _ in range(4):
            t, c, g = random_counts(rng, p)
            act = reiner_action(p, (t, c, g))
            h0 = group_cohomology(act, 0)
            assert (h0.free_rank, h0.torsion) == (t + g, ())
            assert group_cohomology(act, 1).torsion == (p,) * c
            assert group_cohomology(act, 2).torsion == (p,) * t
            # 2-periodicity above degree 0
            assert group_cohomology(act, 3) == group_cohomology(act, 1)


def test_a_invariant_counts_glued_blocks():
    rng = Random(17)
    for p in (3, 5, 7, 11):
        counts = random_counts(rng, p, max_rank=2 * p + 2)
        assert a_invariant(reiner_action(p, counts)) == counts[2]


def test_averaged_form_is_preserved():
    act = reiner_action(3, (1, 1, 1))
    n = act.rank
    seed = tuple(tuple(2 if i == j else 1 if abs(i - j) == 1 else 0 for j in range(n)) for i in range(n))
    g = averaged_form(act, seed)
    preserved = PrimeOrderAction(p=3, phi=act.phi, gram=tuple(tuple(r) for r in g))
    assert preserved.gram is not None


# ---------------------------------------------------------------- K3, order 5


def test_k3_order5_action_profile():
    act = k3_order5_action()
    assert act.rank == 22
    assert act.gram is not None
    assert jordan_profile(act).blocks == (0, 2, 0, 0, 0, 4)
    assert a_invariant(act) == 4


def test_k3_order5_symmetric_square_profile():
    # rank 253 direct computation; the slowest single check in the suite
    act = k3_order5_action()
    direct = jordan_profile(sym2_action(act))
    assert direct.blocks == (0, 3, 0, 0, 0, 50)
    assert direct.blocks == sym2_profile(jordan_profile(act)).blocks


# ---------------------------------------------------------------- quotients


def m3_profile():
    top = JordanProfile(3, (0, 5, 0, 6))
    mid = sym2_profile(top)
    return CohomologyProfile.from_degrees(3, 4, {2: top, 4: mid, 6: top})


def test_free_quotient_cohomology_frozen():
    cp = m3_profile()
    assert free_quotient_cohomology(cp, 2).free_rank == 11
    assert free_quotient_cohomology(cp, 2).torsion == (3,)
    h3 = free_quotient_cohomology(cp, 3)
    assert (h3.free_rank, h3.torsion) == (0, ())
    h4 = free_quotient_cohomology(cp, 4)
    assert (h4.free_rank, h4.torsion) == (102, (3,) * 6)
