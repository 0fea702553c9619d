"""Certificate checkers for H^k-normality of prime-order quotients.

A pair (X, G) with G of prime order p is H^k-normal when the pushforward
pi_*(H^k(X, Z)) is primitive in H^k(X/G, Z)/tors; the coefficient of
normality alpha_k counts the (Z/p)-defect.  None of this is computable
from a Gram matrix alone, but the literature provides certificates: if
certain Jordan block counts vanish and the fixed locus is small enough,
an exact numerical equality between l_1^mid and the even cohomology of
the fixed locus decides normality in the middle degree.  This module
implements those certificates over the CohomologyProfile / fixed-locus
data carried by a scenario, always itemizing every hypothesis it used.

Conventions.  X has complex dimension cp.dimension, so the middle degree
is cp.dimension itself and an even dimension is written 2n when a
theorem needs the half.  For p = 2 every count dispatches to the
eigenlattice split: l_(1,+) plays the role of l_1 and l_(1,-) the role
of l_(p-1).  A checker distinguishes three outcomes: a hypothesis fails
(Unknown verdict, with the failing item visible), the certificate
applies and its equality holds (Normal), or the input data contradicts
an inequality the certificate guarantees (an exception, because such a
scenario cannot exist).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .gmodule import (
    SUPPORTED_PRIMES,
    CohomologyProfile,
    JordanProfile,
    UnsupportedPrime,
    _is_prime,
)
from .lattice_core import NonIntegralResult
from .toric_weight import WeightValue, canonical_exponents, point_type, weight_lookup

__all__ = [
    "NORMAL",
    "NOT_NORMAL",
    "UNKNOWN",
    "FixedPointLocal",
    "IsolatedPoints",
    "FixedComponent",
    "FixedLocusSummary",
    "NormalityReport",
    "WeightSolution",
    "NormalityError",
    "TorsionPresent",
    "HypothesisFailed",
    "NotOrder3",
    "NotStable",
    "WeightUnknown",
    "WeightTwoPresent",
    "Infeasible",
    "FixedCountMismatch",
    "MiddleBlocksPresent",
    "UnsupportedPrime",
    "NonIntegralResult",
    "classify_fixed_point",
    "pushforward_discriminant",
    "check_simple_criteria",
    "check_theorem_main",
    "blowup_update",
    "check_th3",
    "check_maintori",
    "weight_solve",
    "check_surface",
    "betti_quotient",
    "propagate_power",
    "negligibility",
    "isolated_points",
]

NORMAL = "Normal"
NOT_NORMAL = "NotNormal"
UNKNOWN = "Unknown"


class NormalityError(Exception):
    pass


class TorsionPresent(NormalityError):
    pass


class HypothesisFailed(NormalityError):
    """Input data contradicts a consequence the certificate guarantees."""

    def __init__(self, name: str, message: str = ""):
        self.name = name
        super().__init__(f"{name}: {message}" if message else name)


class NotOrder3(NormalityError):
    pass


class NotStable(NormalityError):
    pass


class WeightUnknown(NormalityError):
    pass


class WeightTwoPresent(NormalityError):
    pass


class Infeasible(NormalityError):
    """No weight assignment satisfies the declared constraints."""


class FixedCountMismatch(NormalityError):
    pass


class MiddleBlocksPresent(NormalityError):
    pass


@dataclass(frozen=True)
class FixedPointLocal:
    """Local model of a fixed point: eigenvalue exponents of the action.

    The generator acts on the tangent space as diag(xi^k_1, ..., xi^k_n)
    with xi a primitive p-th root of unity; zero exponents are tangent
    directions along a positive-dimensional fixed component.
    """

    p: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        if not _is_prime(self.p):
            raise UnsupportedPrime(f"{self.p} is not prime")
        ks = tuple(sorted(self.exponents))
        object.__setattr__(self, "exponents", ks)
        if not ks:
            raise ValueError("need at least one exponent")
        if any(not 0 <= k <= self.p - 1 for k in ks):
            raise ValueError(f"exponents must lie in [0, {self.p - 1}]")
        if all(k == 0 for k in ks):
            raise ValueError("a fixed point of the identity is not a local model")

    @property
    def is_isolated(self) -> bool:
        return all(k != 0 for k in self.exponents)

    @property
    def ambient_dimension(self) -> int:
        return len(self.exponents)


def classify_fixed_point(fp: FixedPointLocal) -> tuple[int | None, bool]:
    """(type, quotient smooth at the image point).

    Type 0: at most one nonzero exponent, a quasi-reflection, and the
    quotient stays smooth.  Type 1: the nonzero exponents are all equal.
    Type 2: p = 3 and neither.  None stands for the remaining cases.
    """
    t = point_type(fp.p, fp.exponents)
    return t, t == 0


@dataclass(frozen=True)
class IsolatedPoints:
    """A multiplicity of isolated fixed points sharing one local model."""

    local: FixedPointLocal
    multiplicity: int
    weight: WeightValue

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be positive")
        if not self.local.is_isolated:
            raise ValueError("isolated points cannot have zero exponents")


def isolated_points(
    p: int,
    exponents: tuple[int, ...],
    multiplicity: int = 1,
    weight: WeightValue | None = None,
) -> IsolatedPoints:
    """IsolatedPoints with the weight defaulting to the proved-value table."""
    local = FixedPointLocal(p, tuple(exponents))
    if weight is None:
        weight = weight_lookup(p, local.exponents)
    return IsolatedPoints(local=local, multiplicity=multiplicity, weight=weight)


@dataclass(frozen=True)
class FixedComponent:
    """A positive-dimensional connected component of the fixed locus.

    even_betti_sum / odd_betti_sum are sum_k b_2k and sum_k b_2k+1 of the
    component; local, when declared, is the transverse plus tangent
    exponent model (exactly `dimension` zero entries).
    """

    dimension: int
    even_betti_sum: int
    odd_betti_sum: int
    label: str = ""
    local: FixedPointLocal | None = None

    def __post_init__(self):
        if self.dimension < 1:
            raise ValueError("components have positive dimension; use IsolatedPoints")
        if self.even_betti_sum < 1 or self.odd_betti_sum < 0:
            raise ValueError("Betti sums out of range")
        if self.local is not None:
            zeros = sum(1 for k in self.local.exponents if k == 0)
            if zeros != self.dimension:
                raise ValueError(
                    f"local model has {zeros} tangent directions, component has dimension {self.dimension}"
                )


@dataclass(frozen=True)
class FixedLocusSummary:
    """Fix G as the checkers consume it.

    Topological facts that cannot be computed from lattice data
    (torsion-freeness of H^*(Fix), simple connectivity and cocycle
    primitivity of the middle-codimension component Sigma) enter as
    declared booleans.
    """

    isolated: tuple[IsolatedPoints, ...] = ()
    components: tuple[FixedComponent, ...] = ()
    torsion_free: bool = True
    sigma_simply_connected: bool | None = None
    sigma_class_primitive: bool | None = None

    def __post_init__(self):
        object.__setattr__(self, "isolated", tuple(self.isolated))
        object.__setattr__(self, "components", tuple(self.components))
        primes = {pt.local.p for pt in self.isolated}
        primes |= {c.local.p for c in self.components if c.local is not None}
        if len(primes) > 1:
            raise ValueError("mixed primes in one fixed locus")

    @property
    def is_finite(self) -> bool:
        return not self.components

    @property
    def is_empty(self) -> bool:
        return not self.isolated and not self.components

    @property
    def point_count(self) -> int:
        return sum(pt.multiplicity for pt in self.isolated)

    @property
    def h2star(self) -> int:
        """Total even Betti numbers of Fix G; a point contributes 1."""
        return self.point_count + sum(c.even_betti_sum for c in self.components)

    @property
    def h2star_odd(self) -> int:
        return sum(c.odd_betti_sum for c in self.components)

    def h2star_eps(self, ambient_dimension: int) -> int:
        """Even Betti sum when the ambient dimension is even, odd otherwise."""
        return self.h2star if ambient_dimension % 2 == 0 else self.h2star_odd

    def weights_known(self) -> bool:
        return all(pt.weight.exact is not None for pt in self.isolated)

    def weight_sum(self) -> int:
        total = 0
        for pt in self.isolated:
            w = pt.weight.exact
            if w is None:
                raise WeightUnknown(f"weight of {pt.local.exponents} is {pt.weight}")
            total += pt.multiplicity * w
        return total


def negligibility(fix: FixedLocusSummary, ambient_dimension: int) -> tuple[str, list[tuple[str, bool]]]:
    """Classify Fix G as 'negligible', 'almost' or 'none', with the facts used.

    Negligible: H^*(Fix, Z) torsion-free and every part has codimension
    at least dim/2 + 1.  Almost negligible: dim even and >= 4, exactly
    one component Sigma of codimension dim/2 which is simply connected
    with primitive cocycle class, all other parts negligible.  An empty
    fixed locus is negligible.
    """
    facts: list[tuple[str, bool]] = [("fix_cohomology_torsion_free", fix.torsion_free)]
    for c in fix.components:
        if c.dimension >= ambient_dimension:
            raise ValueError("fixed component as big as the ambient manifold")
    if fix.is_empty:
        facts.append(("fix_empty", True))
        return ("negligible" if fix.torsion_free else "none"), facts
    # codimension of the isolated part is the ambient dimension itself
    codims = [ambient_dimension] * (1 if fix.isolated else 0)
    codims += [ambient_dimension - c.dimension for c in fix.components]
    min_codim = min(codims)
    small = 2 * min_codim >= ambient_dimension + 2
    facts.append(("codim_at_least_half_plus_one", small))
    if fix.torsion_free and small:
        return "negligible", facts
    half = [c for c in fix.components if 2 * (ambient_dimension - c.dimension) == ambient_dimension]
    if not half or not fix.torsion_free:
        return "none", facts
    facts.append(("dimension_even_and_at_least_4", ambient_dimension % 2 == 0 and ambient_dimension >= 4))
    facts.append(("sigma_unique_and_connected", len(half) == 1))
    facts.append(("sigma_simply_connected", bool(fix.sigma_simply_connected)))
    facts.append(("sigma_class_primitive", bool(fix.sigma_class_primitive)))
    facts.append(("rest_negligible", min_codim * 2 >= ambient_dimension))
    if all(ok for _, ok in facts):
        return "almost", facts
    return "none", facts


@dataclass(frozen=True)
class NormalityReport:
    """Outcome of one certificate applied in one degree.

    inequality_chain holds the three evaluated quantities (left, middle,
    right) of the certificate's sandwich, when it has one; hypotheses
    lists every condition that was actually checked.  A Normal verdict
    pins alpha_degree to 0; Unknown carries the best available interval.
    """

    degree: int
    verdict: str
    criterion_used: str
    hypotheses: tuple[tuple[str, bool], ...] = ()
    alpha_bounds: tuple[int, int | None] = (0, None)
    parity_ok: bool | None = None
    inequality_chain: tuple[int, int, int] | None = None
    witness: str | None = None
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if self.verdict not in (NORMAL, NOT_NORMAL, UNKNOWN):
            raise ValueError(f"unknown verdict {self.verdict!r}")
        object.__setattr__(self, "hypotheses", tuple(self.hypotheses))
        object.__setattr__(self, "notes", tuple(self.notes))
        if self.verdict == NORMAL and self.alpha_bounds != (0, 0):
            raise ValueError("a Normal verdict means alpha = 0")
        if self.verdict == NOT_NORMAL and self.witness is None:
            raise ValueError("a NotNormal verdict needs a witness")
        if self.parity_ok and self.inequality_chain is not None:
            left, middle, right = self.inequality_chain
            if not left >= middle >= right:
                raise ValueError("chain must be ordered when the parity holds")

    def lines(self) -> list[str]:
        lo, hi = self.alpha_bounds
        alpha = f"alpha in [{lo}, {'?' if hi is None else hi}]"
        out = [f"H^{self.degree}: {self.verdict}  ({self.criterion_used}; {alpha})"]
        if self.inequality_chain is not None:
            left, middle, right = self.inequality_chain
            parity = {True: "holds", False: "fails", None: "not checked"}[self.parity_ok]
            out.append(f"  chain {left} >= {middle} >= {right}; parity {parity}")
        for name, ok in self.hypotheses:
            out.append(f"  [{'x' if ok else ' '}] {name}")
        if self.witness:
            out.append(f"  witness: {self.witness}")
        for note in self.notes:
            out.append(f"  note: {note}")
        return out

    def __str__(self) -> str:
        return "\n".join(self.lines())


def _require_supported(p: int) -> None:
    if p not in SUPPORTED_PRIMES:
        raise UnsupportedPrime(f"certificates cover primes up to 19, got {p}")


def pushforward_discriminant(cp: CohomologyProfile, n: int) -> tuple[int, int]:
    """(log_p discr pi_*(H^n), upper bound for alpha_n) in the middle degree.

    The pushforward of the middle cohomology has discriminant p^(l_1^n)
    (p^(l_(1,+)^n) for p = 2), and alpha_n is at most half that exponent.
    """
    _require_supported(cp.p)
    if n != cp.dimension:
        raise ValueError(f"middle degree is {cp.dimension}, got {n}")
    if not cp.torsion_free:
        raise TorsionPresent("H^*(X, Z) must be torsion-free")
    exponent = cp.l1(n)
    return exponent, exponent // 2


def _etsi_bounds(cp: CohomologyProfile) -> tuple[int, int]:
    return 0, cp.l1(cp.dimension) // 2


def check_simple_criteria(cp: CohomologyProfile, k: int) -> NormalityReport:
    """Rank-based criteria: l_1^k = 0, or l_1^mid = 1 in the middle degree.

    l_1^k = 0 says the invariant lattice is spanned by norms, which makes
    pi_* surjective in degree k.  In the middle degree a single size-1
    block is also enough.  Anything else is Unknown here.
    """
    _require_supported(cp.p)
    l1k = cp.l1(k)
    hyps = [("torsion_free_cohomology", cp.torsion_free)]
    if cp.torsion_free and l1k == 0:
        return NormalityReport(
            degree=k,
            verdict=NORMAL,
            criterion_used="invariants generated by norms (l_1 = 0)",
            hypotheses=(*hyps, ("l1_vanishes", True)),
            alpha_bounds=(0, 0),
        )
    if cp.torsion_free and k == cp.dimension and l1k == 1:
        return NormalityReport(
            degree=k,
            verdict=NORMAL,
            criterion_used="middle degree with l_1 = 1",
            hypotheses=(*hyps, ("l1_vanishes", False), ("middle_l1_is_one", True)),
            alpha_bounds=(0, 0),
        )
    bounds = _etsi_bounds(cp) if (k == cp.dimension and cp.torsion_free) else (0, None)
    return NormalityReport(
        degree=k,
        verdict=UNKNOWN,
        criterion_used="simple rank criteria",
        hypotheses=(*hyps, ("l1_vanishes", False), ("middle_l1_is_one", False)),
        alpha_bounds=bounds,
    )


def _u_torsion_rank(cp: CohomologyProfile) -> int:
    """p-torsion rank of the middle cohomology of the regular-locus quotient.

    For middle degree 2m this is sum_(i<m) l_(p-1)^(2i+1) + l_1^(2i); the
    odd-degree variant shifts the parities.
    """
    n = cp.dimension
    if n % 2 == 0:
        m = n // 2
        return sum(cp.l_pm1(2 * i + 1) + cp.l1(2 * i) for i in range(m))
    m = (n - 1) // 2
    return sum(cp.l_pm1(2 * i) for i in range(m + 1)) + sum(cp.l1(2 * i + 1) for i in range(m))


def _vanishing_hypotheses(cp: CohomologyProfile) -> tuple[bool, bool]:
    """The two block-count vanishing conditions used by every main chain.

    Even degrees up to the middle must have no size-(p-1) blocks; odd
    degrees below the middle must have no size-1 blocks (waived on
    surfaces).  p = 2 reads the sign split as usual.
    """
    dim = cp.dimension
    iv = all(cp.l_pm1(d) == 0 for d in range(2, dim + 1, 2))
    if dim <= 2:
        v = True
    else:
        v = all(cp.l1(d) == 0 for d in range(1, dim, 2))
    return iv, v


def _types_all_one(fix: FixedLocusSummary, p: int) -> bool:
    for pt in fix.isolated:
        if point_type(p, pt.local.exponents) != 1:
            return False
    for c in fix.components:
        if c.local is None or point_type(p, c.local.exponents) != 1:
            return False
    return True


def _finish_chain_report(
    degree: int,
    criterion: str,
    hyps: list[tuple[str, bool]],
    left: int,
    middle: int,
    right: int,
    disc_log: int,
    etsi: tuple[int, int],
    notes: tuple[str, ...] = (),
) -> NormalityReport:
    """Common tail: parity, sandwich, then Normal iff the top is attained."""
    parity_ok = (disc_log - middle) % 2 == 0
    if not parity_ok:
        raise HypothesisFailed(
            "parity", f"{disc_log} and {middle} differ by an odd number; no such scenario exists"
        )
    if middle > left or middle < right:
        raise HypothesisFailed(
            "inequality_chain",
            f"{left} >= {middle} >= {right} fails; no such scenario exists",
        )
    if middle == left:
        return NormalityReport(
            degree=degree,
            verdict=NORMAL,
            criterion_used=criterion,
            hypotheses=tuple(hyps),
            alpha_bounds=(0, 0),
            parity_ok=True,
            inequality_chain=(left, middle, right),
            notes=notes,
        )
    return NormalityReport(
        degree=degree,
        verdict=UNKNOWN,
        criterion_used=criterion,
        hypotheses=tuple(hyps),
        alpha_bounds=etsi,
        parity_ok=True,
        inequality_chain=(left, middle, right),
        notes=notes,
    )


def check_theorem_main(cp: CohomologyProfile, fix: FixedLocusSummary) -> NormalityReport:
    """Middle-degree certificate for a small fixed locus of type-1 points.

    Requires torsion-free cohomology, a negligible or almost negligible
    fixed locus, only type-1 points, and the two vanishing conditions.
    Then l_1^mid - h^(2*+eps)(Fix) is even and
        l_1^mid + 2*T  >=  h^(2*+eps)(Fix)  >=  2*T
    with T the torsion rank of the regular-locus quotient; equality on
    the left is equivalent to H^mid-normality.  The odd-dimensional
    variant (odd Betti sums of Fix) is implemented but exercised by no
    catalog scenario.
    """
    p = cp.p
    _require_supported(p)
    dim = cp.dimension
    status, neg_facts = negligibility(fix, dim)
    hyps = [
        ("torsion_free_cohomology", cp.torsion_free),
        (f"fix_negligible_or_almost_negligible ({status})", status != "none"),
        ("all_fixed_points_type_1", _types_all_one(fix, p)),
    ]
    iv, v = _vanishing_hypotheses(cp)
    hyps.append(("no_size_pm1_blocks_in_even_degrees", iv))
    hyps.append(("no_size_1_blocks_in_odd_degrees", v))
    criterion = "main chain" + (" (p=2 split)" if p == 2 else "")
    disc_log = cp.l1(dim)
    t_rank = _u_torsion_rank(cp)
    h_fix = fix.h2star_eps(dim)
    if not all(ok for _, ok in hyps):
        return NormalityReport(
            degree=dim,
            verdict=UNKNOWN,
            criterion_used=criterion,
            hypotheses=(*hyps, *neg_facts),
            alpha_bounds=_etsi_bounds(cp) if cp.torsion_free else (0, None),
            inequality_chain=(disc_log + 2 * t_rank, h_fix, 2 * t_rank),
        )
    return _finish_chain_report(
        degree=dim,
        criterion=criterion,
        hyps=hyps,
        left=disc_log + 2 * t_rank,
        middle=h_fix,
        right=2 * t_rank,
        disc_log=disc_log,
        etsi=_etsi_bounds(cp),
    )


def blowup_update(
    cp: CohomologyProfile, n2: int, eps: int, eta: int, n: int
) -> tuple[CohomologyProfile, int]:
    """Profile of the blow-up along the type-2 part of an order-3 fixed locus.

    Blowing up n2 standard points, eps borderline points and eta
    borderline curves adds n2+eps+2*eta trivial blocks in each interior
    even degree, n2+eps+eta in degrees 2 and 4n-2, and nothing in odd
    degrees; the fixed locus gains (2n-1)(n2+eps) + 4(n-1)*eta to its
    even Betti total.  Returns the new profile and that last delta.
    """
    if cp.p != 3:
        raise NotOrder3(f"blow-up bookkeeping is specific to p = 3, got p = {cp.p}")
    if eps not in (0, 1) or eta not in (0, 1):
        raise ValueError("eps and eta are counts in {0, 1}")
    if n2 < 0:
        raise ValueError("negative point count")
    if cp.dimension != 2 * n:
        raise ValueError(f"profile has dimension {cp.dimension}, expected {2 * n}")
    top = 4 * n
    interior = n2 + eps + 2 * eta
    edge = n2 + eps + eta
    new_profiles = []
    for d, jp in enumerate(cp.profiles):
        if d % 2 == 1 or d == 0 or d == top:
            new_profiles.append(jp)
            continue
        gain = edge if d in (2, top - 2) else interior
        blocks = list(jp.blocks)
        blocks[1] += gain
        new_profiles.append(JordanProfile(p=3, blocks=tuple(blocks)))
    delta = (2 * n - 1) * n2 + (2 * n - 1) * eps + 4 * (n - 1) * eta
    return (
        CohomologyProfile(dimension=cp.dimension, profiles=tuple(new_profiles), torsion_free=cp.torsion_free),
        delta,
    )


def _split_order3_fixed_locus(fix: FixedLocusSummary, n: int):
    """(type-1 part, n2, eps, eta) of an order-3 fixed locus, or NotStable."""
    f1_points = []
    n2 = eps = eta = 0
    for pt in fix.isolated:
        t = point_type(3, pt.local.exponents)
        if t == 1:
            f1_points.append(pt)
            continue
        if t != 2:
            raise NotStable(f"isolated point of type {t}: {pt.local.exponents}")
        ones = sum(1 for k in pt.local.exponents if k == 1)
        twos = sum(1 for k in pt.local.exponents if k == 2)
        if {ones, twos} == {n}:
            n2 += pt.multiplicity
        elif n >= 4 and {ones, twos} == {n - 1, n + 1}:
            eps += pt.multiplicity
        else:
            raise NotStable(f"type-2 point {pt.local.exponents} is not in the stable list")
    f1_components = []
    for c in fix.components:
        if c.local is None:
            raise NotStable(f"component {c.label or c.dimension} has no declared local model")
        t = point_type(3, c.local.exponents)
        if t == 1:
            f1_components.append(c)
            continue
        if t != 2:
            raise NotStable(f"component of type {t}: {c.local.exponents}")
        ones = sum(1 for k in c.local.exponents if k == 1)
        twos = sum(1 for k in c.local.exponents if k == 2)
        rational_curve = c.dimension == 1 and c.even_betti_sum == 2 and c.odd_betti_sum == 0
        if n >= 4 and rational_curve and {ones, twos} == {n - 1, n}:
            eta += 1
        else:
            raise NotStable(f"type-2 component {c.local.exponents} is not a stable-list curve")
    f1 = FixedLocusSummary(
        isolated=tuple(f1_points),
        components=tuple(f1_components),
        torsion_free=fix.torsion_free,
        sigma_simply_connected=fix.sigma_simply_connected,
        sigma_class_primitive=fix.sigma_class_primitive,
    )
    return f1, n2, eps, eta


def check_th3(cp: CohomologyProfile, fix: FixedLocusSummary) -> NormalityReport:
    """Middle-degree certificate for p = 3 allowing standard type-2 points.

    The fixed locus must be stable: its type-1 part negligible (or almost
    negligible, with no borderline pieces), type-2 points of the shape
    (1..1, 2..2) with n entries each, and at most one borderline point or
    rational curve.  The sandwich gains the slack n2+eps+2*eta on the
    right; equality on the left still forces H^mid-normality.
    """
    if cp.p != 3:
        raise NotOrder3(f"this certificate needs p = 3, got p = {cp.p}")
    dim = cp.dimension
    if dim % 2:
        raise ValueError("even complex dimension required")
    n = dim // 2
    f1, n2, eps, eta = _split_order3_fixed_locus(fix, n)
    f1_status, _ = negligibility(f1, dim)
    if f1_status == "almost":
        if eps or eta:
            raise NotStable("borderline pieces cannot coexist with a middle-codimension part")
    elif f1_status == "negligible":
        if eps + eta > 1:
            raise NotStable(f"at most one borderline piece allowed, found eps={eps}, eta={eta}")
    else:
        raise NotStable("type-1 part of the fixed locus is neither negligible nor almost negligible")
    iv, v = _vanishing_hypotheses(cp)
    hyps = [
        ("torsion_free_cohomology", cp.torsion_free),
        (f"fixed_locus_stable (n2={n2}, eps={eps}, eta={eta})", True),
        ("no_size_pm1_blocks_in_even_degrees", iv),
        ("no_size_1_blocks_in_odd_degrees", v),
    ]
    disc_log = cp.l1(dim)
    t_rank = _u_torsion_rank(cp)
    h_fix = fix.h2star
    slack = n2 + eps + 2 * eta
    if not all(ok for _, ok in hyps):
        return NormalityReport(
            degree=dim,
            verdict=UNKNOWN,
            criterion_used="stable order-3 chain",
            hypotheses=tuple(hyps),
            alpha_bounds=_etsi_bounds(cp) if cp.torsion_free else (0, None),
            inequality_chain=(disc_log + 2 * t_rank, h_fix, 2 * t_rank - slack),
        )
    return _finish_chain_report(
        degree=dim,
        criterion="stable order-3 chain",
        hyps=hyps,
        left=disc_log + 2 * t_rank,
        middle=h_fix,
        right=2 * t_rank - slack,
        disc_log=disc_log,
        etsi=_etsi_bounds(cp),
        notes=(f"blow-up slack n2+eps+2*eta = {slack}",),
    )


def check_maintori(cp: CohomologyProfile, fix: FixedLocusSummary) -> NormalityReport:
    """Middle-degree certificate for a finite fixed locus via point weights.

    Every point carries a weight in {0, 1, 2}; with no weight-2 point and
    the vanishing conditions,
        l_1^mid + 2*T  >=  sum of weights  >=  2*T
    with equality on the left equivalent to H^mid-normality.  Unknown or
    weight-2 points abort, since the sandwich then loses its conclusion.
    """
    p = cp.p
    _require_supported(p)
    dim = cp.dimension
    if dim % 2:
        raise ValueError("even complex dimension required")
    if not fix.weights_known():
        unknown = [pt.local.exponents for pt in fix.isolated if pt.weight.exact is None]
        raise WeightUnknown(f"weights not pinned for {unknown}")
    if any(pt.weight.exact == 2 for pt in fix.isolated):
        raise WeightTwoPresent("a weight-2 point voids the normality conclusion")
    iv, v = _vanishing_hypotheses(cp)
    hyps = [
        ("torsion_free_cohomology", cp.torsion_free),
        ("fix_finite", fix.is_finite),
        ("no_weight_2_points", True),
        ("no_size_pm1_blocks_in_even_degrees", iv),
        ("no_size_1_blocks_in_odd_degrees", v),
    ]
    disc_log = cp.l1(dim)
    t_rank = _u_torsion_rank(cp)
    w_sum = fix.weight_sum()
    criterion = "weight chain" + (" (p=2 split)" if p == 2 else "")
    if not all(ok for _, ok in hyps):
        return NormalityReport(
            degree=dim,
            verdict=UNKNOWN,
            criterion_used=criterion,
            hypotheses=tuple(hyps),
            alpha_bounds=_etsi_bounds(cp) if cp.torsion_free else (0, None),
            inequality_chain=(disc_log + 2 * t_rank, w_sum, 2 * t_rank),
        )
    return _finish_chain_report(
        degree=dim,
        criterion=criterion,
        hyps=hyps,
        left=disc_log + 2 * t_rank,
        middle=w_sum,
        right=2 * t_rank,
        disc_log=disc_log,
        etsi=_etsi_bounds(cp),
        notes=(f"sum of weights over {fix.point_count} points = {w_sum}",),
    )


@dataclass(frozen=True)
class WeightSolution:
    """weight_solve outcome: solved value or narrowed interval per type."""

    unique: bool
    weights: tuple[tuple[tuple[int, ...], WeightValue], ...]
    feasible_count: int
    sum_bounds: tuple[int, int]

    def value(self, p: int, exponents: tuple[int, ...]) -> WeightValue:
        key = canonical_exponents(p, tuple(exponents))
        for exps, val in self.weights:
            if exps == key:
                return val
        raise KeyError(f"no point of type {exponents}")


def weight_solve(cp: CohomologyProfile, fix: FixedLocusSummary) -> WeightSolution:
    """Narrow partially known point weights with the parity and the sandwich.

    Weights depend only on the local type, so points are grouped by
    exponents up to a unit; each group ranges over its declared interval.
    An assignment is admissible when the weighted sum lands inside
    [2*T, l_1^mid + 2*T] with the right parity.  Returns the unique
    assignment when only one survives, otherwise per-type intervals;
    raises Infeasible when none does.
    """
    p = cp.p
    _require_supported(p)
    if p == 2:
        raise UnsupportedPrime("the weight sandwich is stated for odd primes")
    dim = cp.dimension
    if dim % 2:
        raise ValueError("even complex dimension required")
    iv, v = _vanishing_hypotheses(cp)
    failed = [
        name
        for name, ok in [
            ("torsion_free_cohomology", cp.torsion_free),
            ("fix_finite", fix.is_finite),
            ("no_size_pm1_blocks_in_even_degrees", iv),
            ("no_size_1_blocks_in_odd_degrees", v),
        ]
        if not ok
    ]
    if failed:
        raise HypothesisFailed(failed[0], "weight constraints unavailable")
    groups: dict[tuple[int, ...], tuple[int, int, int]] = {}
    for pt in fix.isolated:
        key = canonical_exponents(p, pt.local.exponents)
        mult, lo, hi = groups.get(key, (0, 0, 2))
        lo, hi = max(lo, pt.weight.lo), min(hi, pt.weight.hi)
        if lo > hi:
            raise Infeasible(f"conflicting declared weights for type {key}")
        groups[key] = (mult + pt.multiplicity, lo, hi)
    keys = sorted(groups)
    disc_log = cp.l1(dim)
    t_rank = _u_torsion_rank(cp)
    lower, upper = 2 * t_rank, disc_log + 2 * t_rank
    ranges = [range(groups[k][1], groups[k][2] + 1) for k in keys]
    feasible: list[tuple[int, ...]] = []
    for combo in itertools.product(*ranges):
        total = sum(w * groups[k][0] for w, k in zip(combo, keys))
        if lower <= total <= upper and (disc_log - total) % 2 == 0:
            feasible.append(combo)
    if not feasible:
        raise Infeasible(
            f"no weight assignment puts the sum in [{lower}, {upper}] with the right parity"
        )
    solved = []
    for i, k in enumerate(keys):
        values = [combo[i] for combo in feasible]
        solved.append((k, WeightValue(min(values), max(values))))
    return WeightSolution(
        unique=len(feasible) == 1,
        weights=tuple(solved),
        feasible_count=len(feasible),
        sum_bounds=(lower, upper),
    )


def check_surface(
    cp: CohomologyProfile, fix: FixedLocusSummary, simply_connected: bool = True
) -> NormalityReport:
    """H^2-normality for simply connected surfaces with finite fixed locus.

    On a surface every fixed point has weight 1 and the fixed point count
    is pinned by the profile: #Fix = 2 + l_1^2 + l_(p-1)^2 (p odd) or
    2 + l_1^2 (p = 2, total size-1 count).  The declared count must
    match; normality then needs no size-(p-1) blocks (minus part for
    p = 2) in degree 2.
    """
    p = cp.p
    _require_supported(p)
    if cp.dimension != 2:
        raise ValueError(f"surface certificate needs dimension 2, got {cp.dimension}")
    if cp.profile(2).middle_blocks():
        raise MiddleBlocksPresent(
            f"degree-2 profile has blocks of size 2..p-2: {cp.profile(2).middle_blocks()}"
        )
    expected = 2 + cp.l1_total(2) + (cp.l_pm1(2) if p > 2 else 0)
    if fix.is_finite and not fix.is_empty and fix.point_count != expected:
        raise FixedCountMismatch(
            f"profile forces #Fix = {expected}, scenario declares {fix.point_count}"
        )
    minus_name = "l_(1,-)^2_vanishes" if p == 2 else "l_(p-1)^2_vanishes"
    hyps = [
        ("simply_connected", simply_connected),
        ("fix_finite", fix.is_finite),
        ("fix_nonempty", not fix.is_empty),
        (minus_name, cp.l_pm1(2) == 0),
    ]
    chain = (cp.l1(2) + 2, fix.point_count, 2)
    if all(ok for _, ok in hyps):
        return NormalityReport(
            degree=2,
            verdict=NORMAL,
            criterion_used="simply connected surface count",
            hypotheses=tuple(hyps),
            alpha_bounds=(0, 0),
            parity_ok=True,
            inequality_chain=chain,
            notes=("every surface fixed point has weight 1",),
        )
    return NormalityReport(
        degree=2,
        verdict=UNKNOWN,
        criterion_used="simply connected surface count",
        hypotheses=tuple(hyps),
        alpha_bounds=_etsi_bounds(cp) if cp.torsion_free else (0, None),
    )


def betti_quotient(r: int, p: int) -> tuple[int, int, int, int]:
    """(b_2, b_3, b_4, chi) of the quotient of a Hilbert-square fourfold.

    r is the rank of the invariant second cohomology.  The quotient keeps
    b_2 = r, loses all odd cohomology, and has
    b_4 = r(r+1)/2 + (23-r)^2 / (2(p-1)); assumes the middle invariants
    are spanned by the symmetric square plus norms.
    """
    _require_supported(p)
    if p == 2:
        raise UnsupportedPrime("the b_4 count is derived for odd primes")
    if not 1 <= r <= 23:
        raise ValueError(f"invariant rank must be in [1, 23], got {r}")
    num = (23 - r) ** 2
    den = 2 * (p - 1)
    if num % den:
        raise NonIntegralResult(
            f"(23-{r})^2 = {num} is not divisible by 2(p-1) = {den}; inconsistent input"
        )
    b4 = r * (r + 1) // 2 + num // den
    return r, 0, b4, 2 + 2 * r + b4


def propagate_power(
    report_kt: NormalityReport,
    sym_injective: bool,
    complement_stable: bool,
    t: int = 2,
) -> NormalityReport:
    """Descend H^(kt)-normality to degree k through the t-th symmetric power.

    Needs Sym^t H^k(X, F_p) -> H^(kt)(X, F_p) injective with invariantly
    complemented image; in practice the injectivity certificate is the
    absence of p-torsion in the integral cokernel of Sym^t H^k -> H^(kt).
    """
    if t < 2 or report_kt.degree % t:
        raise ValueError(f"degree {report_kt.degree} is not a t = {t} power degree")
    k = report_kt.degree // t
    hyps = [
        (f"H^{report_kt.degree}_normal", report_kt.verdict == NORMAL),
        ("sym_power_injective_mod_p", sym_injective),
        ("image_invariantly_complemented", complement_stable),
    ]
    if all(ok for _, ok in hyps):
        return NormalityReport(
            degree=k,
            verdict=NORMAL,
            criterion_used=f"descent from H^{report_kt.degree} through Sym^{t}",
            hypotheses=tuple(hyps),
            alpha_bounds=(0, 0),
        )
    return NormalityReport(
        degree=k,
        verdict=UNKNOWN,
        criterion_used=f"descent from H^{report_kt.degree} through Sym^{t}",
        hypotheses=tuple(hyps),
        alpha_bounds=(0, None),
    )
