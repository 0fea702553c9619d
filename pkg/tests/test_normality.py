"""Normality certificates: chains, weights, counts, Betti numbers."""

import pytest

from quotlat import (
    CohomologyProfile,
    FixedLocusSummary,
    JordanProfile,
    NormalityReport,
    betti_quotient,
    check_maintori,
    check_simple_criteria,
    check_surface,
    check_th3,
    check_theorem_main,
    isolated_points,
    propagate_power,
    weight_solve,
)
from quotlat.gmodule import trivial_profile
from quotlat.normality import (
    FixedCountMismatch,
    FixedPointLocal,
    HypothesisFailed,
    Infeasible,
    MiddleBlocksPresent,
    NORMAL,
    NOT_NORMAL,
    NotOrder3,
    UNKNOWN,
    UnsupportedPrime,
    WeightTwoPresent,
    WeightUnknown,
    classify_fixed_point,
)
from quotlat.toric_weight import WeightValue


# ---------------------------------------------------------------- local models


def test_fixed_point_local_validation():
    with pytest.raises(ValueError):
        FixedPointLocal(5, (0, 0))
    with pytest.raises(ValueError):
        FixedPointLocal(5, (1, 7))
    with pytest.raises(UnsupportedPrime):
        FixedPointLocal(4, (1,))
    fp = FixedPointLocal(5, (4, 1))
    assert fp.exponents == (1, 4)
    assert fp.is_isolated


def test_classify_fixed_point():
    assert classify_fixed_point(FixedPointLocal(5, (0, 1))) == (0, True)
    assert classify_fixed_point(FixedPointLocal(5, (2, 2))) == (1, False)
    assert classify_fixed_point(FixedPointLocal(3, (1, 2))) == (2, False)
    assert classify_fixed_point(FixedPointLocal(5, (1, 2, 3, 4))) == (None, False)


def test_isolated_points_defaults_weight_from_table():
    pts = isolated_points(5, (1, 1, 4, 4), multiplicity=12)
    assert (pts.weight.lo, pts.weight.hi) == (1, 1)
    unknown = isolated_points(11, (1, 1, 10, 10))
    assert (unknown.weight.lo, unknown.weight.hi) == (0, 2)
    with pytest.raises(ValueError):
        isolated_points(5, (0, 1), multiplicity=2)


def test_mixed_primes_rejected():
    with pytest.raises(ValueError):
        FixedLocusSummary(
            isolated=(isolated_points(3, (1, 2)), isolated_points(5, (1, 4)))
        )


# ---------------------------------------------------------------- certificates


def test_surface_chain_y7(by_name):
    s = by_name["Y7"]
    rep = check_surface(s.profile, s.fixed_locus)
    assert rep.verdict == NORMAL
    assert rep.inequality_chain == (3, 3, 2)
    assert rep.alpha_bounds == (0, 0)
    assert rep.parity_ok


def test_surface_count_is_forced_by_profile():
    # p = 5, l_1 = 2, l_4 = 0 in degree 2 forces 4 fixed points
    deg2 = JordanProfile(5, (0, 2, 0, 0, 0, 4))
    cp = CohomologyProfile.from_degrees(5, 2, {2: deg2})
    fix = FixedLocusSummary(isolated=(isolated_points(5, (1, 4), 3),))
    with pytest.raises(FixedCountMismatch):
        check_surface(cp, fix)
    ok = FixedLocusSummary(isolated=(isolated_points(5, (1, 4), 4),))
    assert check_surface(cp, ok).verdict == NORMAL


def test_surface_needs_dimension_2():
    cp = CohomologyProfile.from_degrees(5, 4, {})
    with pytest.raises(ValueError):
        check_surface(cp, FixedLocusSummary())


def test_surface_rejects_middle_blocks():
    deg2 = JordanProfile(5, (0, 2, 1, 0, 0, 4))
    cp = CohomologyProfile.from_degrees(5, 2, {2: deg2})
    with pytest.raises(MiddleBlocksPresent):
        check_surface(cp, FixedLocusSummary(isolated=(isolated_points(5, (1, 4), 4),)))


def test_main_chain_torus_involution(by_name):
    s = by_name["Abar"]
    rep = check_theorem_main(s.profile, s.fixed_locus)
    assert rep.verdict == NORMAL
    assert rep.criterion_used == "main chain (p=2 split)"
    assert rep.inequality_chain == (16, 16, 10)


def test_main_chain_unknown_when_hypothesis_fails(by_name):
    s = by_name["Abar"]
    broken = FixedLocusSummary(
        isolated=s.fixed_locus.isolated,
        components=s.fixed_locus.components,
        torsion_free=False,
    )
    rep = check_theorem_main(s.profile, broken)
    assert rep.verdict == UNKNOWN
    assert ("fix_cohomology_torsion_free", False) in rep.hypotheses


def test_th3_m3_chain(by_name):
    s = by_name["M3"]
    rep = check_th3(s.profile, s.fixed_locus)
    assert rep.verdict == NORMAL
    assert rep.criterion_used == "stable order-3 chain"
    assert rep.inequality_chain == (27, 27, -15)
    assert s.fixed_locus.h2star == 27


def test_th3_rejects_other_primes(by_name):
    s = by_name["M5"]
    with pytest.raises(NotOrder3):
        check_th3(s.profile, s.fixed_locus)


def test_maintori_weight_chain_m5(by_name):
    s = by_name["M5"]
    rep = check_maintori(s.profile, s.fixed_locus)
    assert rep.verdict == NORMAL
    assert rep.criterion_used == "weight chain"
    assert rep.inequality_chain == (14, 14, 8)


def test_maintori_needs_pinned_weights(by_name):
    cp = by_name["M5"].profile
    loose = FixedLocusSummary(
        isolated=(isolated_points(5, (1, 1, 4, 4), 12, WeightValue(0, 2)),)
    )
    with pytest.raises(WeightUnknown):
        check_maintori(cp, loose)
    heavy = FixedLocusSummary(
        isolated=(isolated_points(5, (1, 1, 4, 4), 12, WeightValue(2, 2)),)
    )
    with pytest.raises(WeightTwoPresent):
        check_maintori(cp, heavy)


def test_simple_criteria_strings(by_name):
    rep = check_simple_criteria(by_name["M11a"].profile, 4)
    assert rep.verdict == NORMAL
    assert rep.criterion_used == "middle degree with l_1 = 1"


def test_propagate_power_descends_normality():
    top = NormalityReport(
        degree=4, verdict=NORMAL, criterion_used="weight chain",
        hypotheses=(), alpha_bounds=(0, 0),
    )
    down = propagate_power(top, sym_injective=True, complement_stable=True)
    assert down.degree == 2
    assert down.verdict == NORMAL
    assert down.criterion_used == "descent from H^4 through Sym^2"
    unk = NormalityReport(
        degree=4, verdict=UNKNOWN, criterion_used="weight chain",
        hypotheses=(), alpha_bounds=(0, None),
    )
    assert propagate_power(unk, True, True).verdict == UNKNOWN
    with pytest.raises(ValueError):
        propagate_power(top, True, True, t=3)


def test_report_shape_rules():
    with pytest.raises(ValueError):
        NormalityReport(
            degree=2, verdict=NOT_NORMAL, criterion_used="x",
            hypotheses=(), alpha_bounds=(1, 1),
        )
    rep = NormalityReport(
        degree=2, verdict=NOT_NORMAL, criterion_used="x",
        hypotheses=(), alpha_bounds=(1, 1), witness="pushforward divisibility",
    )
    assert any("NotNormal" in line for line in rep.lines())


# ---------------------------------------------------------------- weights


def test_weight_solve_m5_unique_all_ones(by_name):
    s = by_name["M5"]
    sol = weight_solve(s.profile, s.fixed_locus)
    assert sol.unique
    assert sol.feasible_count == 1
    assert sol.sum_bounds == (8, 14)
    assert [(exps, v.lo, v.hi) for exps, v in sol.weights] == [
        ((1, 1, 1, 2), 1, 1),
        ((1, 1, 4, 4), 1, 1),
        ((1, 2, 3, 4), 1, 1),
    ]


@pytest.mark.parametrize("p", [3, 5, 7])
def test_weight_solve_projective_space(p):
    # diag(1, xi, ..., xi^(p-1)) on P^(p-1): p points, all of type (1..p-1);
    # the sandwich pins every weight to 1 even from the loose interval [0, 2]
    dim = p - 1
    degrees = {k: trivial_profile(p) for k in range(2, 2 * dim, 2)}
    cp = CohomologyProfile.from_degrees(p, dim, degrees)
    fix = FixedLocusSummary(
        isolated=(
            isolated_points(p, tuple(range(1, p)), multiplicity=p, weight=WeightValue(0, 2)),
        )
    )
    sol = weight_solve(cp, fix)
    assert sol.unique
    assert sol.weights == ((tuple(range(1, p)), WeightValue(1, 1)),)


def test_weight_solve_infeasible():
    cp = CohomologyProfile.from_degrees(3, 2, {2: JordanProfile(3, (0, 2, 0, 7))})
    # a single point cannot reach the lower bound 2*T = 2 with weight 0
    fix = FixedLocusSummary(isolated=(isolated_points(3, (1, 1), 1, WeightValue(0, 0)),))
    with pytest.raises(Infeasible):
        weight_solve(cp, fix)


def test_weight_solve_requires_torsion_free(by_name):
    s = by_name["M5"]
    cp = CohomologyProfile(
        dimension=s.profile.dimension,
        profiles=s.profile.profiles,
        torsion_free=False,
    )
    with pytest.raises(HypothesisFailed):
        weight_solve(cp, s.fixed_locus)


# ---------------------------------------------------------------- Betti


def test_betti_quotient_frozen():
    assert betti_quotient(11, 3) == (11, 0, 102, 126)
    assert betti_quotient(7, 5) == (7, 0, 60, 76)
    assert betti_quotient(3, 11) == (3, 0, 26, 34)


def test_betti_quotient_rejects_bad_input():
    with pytest.raises(UnsupportedPrime):
        betti_quotient(7, 2)
    with pytest.raises(ValueError):
        betti_quotient(0, 3)
    with pytest.raises(Exception):
        betti_quotient(10, 3)  # (23-10)^2 odd multiple, not divisible by 4
