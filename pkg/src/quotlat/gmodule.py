"""Prime-order actions on free Z-modules and their modular invariants.

For an automorphism phi of order p acting on Z^n, the F_p[G]-module
structure of Z^n/p is encoded by the Jordan profile (l_1, ..., l_p): l_q
counts unipotent Jordan blocks of size q of phi over F_p.  For torsion-free
actions of prime order p <= 19 only sizes 1, p-1 and p occur; for p = 2 the
size-1 count splits into integral +1 and -1 eigenlattice contributions.
These counts drive everything downstream: invariant-lattice discriminants,
group cohomology, symmetric-square profiles and normality chains.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import _linalg as la
from .lattice_core import GramLattice, SublatticeEmbedding, _freeze, sublattice

SUPPORTED_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19)


class GModuleError(Exception):
    pass


class NotAnOrderPAction(GModuleError):
    pass


class UnsupportedPrime(GModuleError):
    pass


class FormNotPreserved(GModuleError):
    pass


class HypothesesNotMet(GModuleError):
    """Neither the degeneration flag nor the vanishing conditions hold."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class JordanProfile:
    """Jordan block counts of an order-p action over F_p.

    blocks[q] = number of unipotent blocks of size q (1 <= q <= p).  For
    p = 2, plus_rank/minus_rank split blocks[1] into the ranks of the
    integral +1 and -1 eigenlattices outside the free Z[G] part.
    """

    p: int
    blocks: tuple[int, ...]  # index 0 unused; blocks[q] for q = 1..p
    plus_rank: int | None = None
    minus_rank: int | None = None

    def __post_init__(self):
        if not _is_prime(self.p):
            raise UnsupportedPrime(f"{self.p} is not prime")
        object.__setattr__(self, "blocks", tuple(self.blocks))
        if len(self.blocks) != self.p + 1 or self.blocks[0] != 0:
            raise GModuleError("blocks must be indexed 0..p with blocks[0] = 0")
        if any(b < 0 for b in self.blocks):
            raise GModuleError("negative block count")
        if self.p == 2:
            if self.plus_rank is None or self.minus_rank is None:
                raise GModuleError("p = 2 requires the plus/minus eigenlattice split")
            if self.plus_rank < 0 or self.minus_rank < 0:
                raise GModuleError("negative eigenlattice rank")
            if self.plus_rank + self.minus_rank != self.blocks[1]:
                raise GModuleError("eigenlattice split must sum to l_1")
        elif self.plus_rank is not None or self.minus_rank is not None:
            raise GModuleError("eigenlattice split only makes sense for p = 2")

    @property
    def rank(self) -> int:
        return sum(q * self.blocks[q] for q in range(1, self.p + 1))

    def l(self, q: int) -> int:
        return self.blocks[q]

    @property
    def l1(self) -> int:
        return self.blocks[1]

    @property
    def l_pm1(self) -> int:
        """Count of size p-1 blocks (zero by convention when p = 2)."""
        return self.blocks[self.p - 1] if self.p > 2 else 0

    @property
    def lp(self) -> int:
        return self.blocks[self.p]

    @property
    def invariant_rank(self) -> int:
        return self.lp + self.l1

    def middle_blocks(self) -> dict[int, int]:
        """Block counts outside sizes {1, p-1, p}."""
        out = {}
        for q in range(2, self.p - 1):
            if self.blocks[q]:
                out[q] = self.blocks[q]
        return out


@dataclass(frozen=True)
class PrimeOrderAction:
    """Matrix phi with phi^p = identity, optionally preserving a Gram matrix."""

    p: int
    phi: tuple[tuple[int, ...], ...]
    gram: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        if not _is_prime(self.p):
            raise UnsupportedPrime(f"{self.p} is not prime")
        phi = _freeze(self.phi)
        object.__setattr__(self, "phi", phi)
        n = len(phi)
        if any(len(r) != n for r in phi):
            raise NotAnOrderPAction("phi must be square")
        power = la.identity(n)
        mat = [list(r) for r in phi]
        for _ in range(self.p):
            power = la.mat_mul(power, mat)
        if power != la.identity(n):
            raise NotAnOrderPAction("phi^p is not the identity")
        if self.gram is not None:
            g = _freeze(self.gram)
            object.__setattr__(self, "gram", g)
            gl = [list(r) for r in g]
            if la.mat_mul(la.mat_mul(la.transpose(mat), gl), mat) != gl:
                raise FormNotPreserved("phi does not preserve the form")

    @property
    def rank(self) -> int:
        return len(self.phi)

    def phi_rows(self) -> list[list[int]]:
        return [list(r) for r in self.phi]

    def tau(self) -> list[list[int]]:
        """phi - identity."""
        m = self.phi_rows()
        for i in range(len(m)):
            m[i][i] -= 1
        return m

    def sigma(self) -> list[list[int]]:
        """1 + phi + ... + phi^(p-1)."""
        n = self.rank
        acc = la.identity(n)
        out = la.identity(n)
        m = self.phi_rows()
        for _ in range(self.p - 1):
            acc = la.mat_mul(acc, m)
            out = [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(out, acc)]
        return out


def jordan_profile(action: PrimeOrderAction) -> JordanProfile:
    """Block counts over F_p via l_q = r_(q-1) - 2 r_q + r_(q+1), r_j = rank tau^j."""
    p, n = action.p, action.rank
    tau = action.tau()
    ranks = [n]
    power = la.identity(n)
    for _ in range(p + 1):
        power = la.mat_mul(power, tau)
        ranks.append(la.rank_mod_p(power, p))
    assert ranks[p] == 0, "tau^p must vanish mod p"
    blocks = [0] * (p + 1)
    for q in range(1, p + 1):
        blocks[q] = ranks[q - 1] - 2 * ranks[q] + ranks[q + 1]
    assert all(b >= 0 for b in blocks)
    assert sum(q * blocks[q] for q in range(1, p + 1)) == n
    plus = minus = None
    if p == 2:
        phi = action.phi_rows()
        ker_plus = n - la.rank_rational(action.tau())
        ker_minus = n - la.rank_rational(
            [[phi[i][j] + (1 if i == j else 0) for j in range(n)] for i in range(n)]
        )
        plus = ker_plus - blocks[2]
        minus = ker_minus - blocks[2]
        assert plus >= 0 and minus >= 0 and plus + minus == blocks[1]
    return JordanProfile(p=p, blocks=tuple(blocks), plus_rank=plus, minus_rank=minus)


def invariant_sublattice(action: PrimeOrderAction) -> SublatticeEmbedding:
    """Saturated fixed sublattice ker(phi - 1) with the induced form."""
    if action.gram is None:
        raise GModuleError("invariant_sublattice needs a Gram matrix")
    rows = la.kernel_basis(action.tau())
    return sublattice(GramLattice(action.gram), rows)


def invariant_rows(action: PrimeOrderAction) -> list[list[int]]:
    return la.kernel_basis(action.tau())


def sigma_kernel_rows(action: PrimeOrderAction) -> list[list[int]]:
    """Saturated basis of ker(1 + phi + ... + phi^(p-1))."""
    return la.kernel_basis(action.sigma())


def a_invariant(action: PrimeOrderAction) -> int:
    """a with [Z^n : ker tau + ker sigma] = p^a; equals l_p for order-p actions."""
    p, n = action.p, action.rank
    k_tau = la.kernel_basis(action.tau())
    k_sigma = la.kernel_basis(action.sigma())
    stacked = k_tau + k_sigma
    if len(stacked) != n:
        raise GModuleError("ker tau + ker sigma does not have full rank")
    idx = abs(la.det_bareiss(stacked))
    a = 0
    while idx > 1:
        if idx % p:
            raise GModuleError("index of ker tau + ker sigma is not a p-power")
        idx //= p
        a += 1
    profile = jordan_profile(action)
    assert a == profile.lp, (a, profile.lp)
    return a


@dataclass(frozen=True)
class CohomologyGroup:
    free_rank: int
    torsion: tuple[int, ...]  # invariant factors > 1

    def p_torsion_rank(self, p: int) -> int:
        return sum(1 for d in self.torsion if d % p == 0)


def _quotient_group(kernel_rows, image_rows) -> CohomologyGroup:
    """ker/im as an abelian group; image generators must lie in the kernel span."""
    k = len(kernel_rows)
    if k == 0:
        return CohomologyGroup(free_rank=0, torsion=())
    coords = []
    for gen in image_rows:
        c = la.solve_in_rowspan(kernel_rows, gen)
        if c is None:
            raise GModuleError("image generator outside kernel span")
        row = []
        for x in c:
            if x.denominator != 1:
                raise GModuleError("image generator not integral over kernel basis")
            row.append(int(x))
        coords.append(row)
    if not coords:
        return CohomologyGroup(free_rank=k, torsion=())
    res = la.smith_normal_form(coords)
    diag = [d for d in res.diagonal if d]
    torsion = tuple(d for d in diag if d > 1)
    return CohomologyGroup(free_rank=k - len(diag), torsion=torsion)


def group_cohomology(action: PrimeOrderAction, i: int) -> CohomologyGroup:
    """H^i(G, Z^n) for the cyclic group G of order p.

    i = 0 gives the invariants (free); for i >= 1 the groups are 2-periodic:
    odd i gives ker(sigma)/im(tau), even i gives ker(tau)/im(sigma).  The
    explicit kernel/image computation is cross-checked against the Jordan
    profile formula ((Z/p)^(l_(p-1)) odd / (Z/p)^(l_1) even; for p = 2 the
    minus and plus eigenlattice ranks take those roles).
    """
    if i < 0:
        raise GModuleError("cohomological degree must be nonnegative")
    tau = action.tau()
    sigma = action.sigma()
    if i == 0:
        return CohomologyGroup(free_rank=len(la.kernel_basis(tau)), torsion=())
    if i % 2:
        group = _quotient_group(la.kernel_basis(sigma), la.image_basis(tau))
    else:
        group = _quotient_group(la.kernel_basis(tau), la.image_basis(sigma))
    profile = jordan_profile(action)
    if action.p == 2:
        expected = profile.minus_rank if i % 2 else profile.plus_rank
    else:
        expected = profile.l_pm1 if i % 2 else profile.l1
    if group.free_rank != 0 or any(d != action.p for d in group.torsion):
        raise GModuleError(f"H^{i} is not p-elementary: {group}")
    if len(group.torsion) != expected:
        raise GModuleError(
            f"H^{i} rank {len(group.torsion)} disagrees with profile value {expected}"
        )
    return group


# --- Reiner building blocks -------------------------------------------------


def companion_cyclotomic(p: int) -> list[list[int]]:
    """Companion matrix of 1 + x + ... + x^(p-1), the action on Z[zeta_p]."""
    n = p - 1
    m = [[0] * n for _ in range(n)]
    for i in range(1, n):
        m[i][i - 1] = 1
    for i in range(n):
        m[i][n - 1] = -1
    return m


def reiner_block(p: int, kind: str, a: int = 1) -> list[list[int]]:
    """Matrix of one indecomposable torsion-free Z[G]-module.

    kind: "trivial" (Z, rank 1), "cyclotomic" (Z[zeta_p], rank p-1), or
    "glued" (the extension (O_K, a) of Z by Z[zeta_p], rank p).  Only class
    number one cyclotomic fields are served (p <= 19).
    """
    if p not in SUPPORTED_PRIMES:
        raise UnsupportedPrime(
            f"building blocks require p <= 19 (class number one); got {p}"
        )
    if kind == "trivial":
        return [[1]]
    if kind == "cyclotomic":
        return companion_cyclotomic(p)
    if kind == "glued":
        if a % p == 0:
            raise GModuleError("glue class must be nonzero mod p")
        c = companion_cyclotomic(p)
        n = p - 1
        m = [row + [0] for row in c]
        m.append([0] * n + [1])
        # phi(u) = u + a * (first basis vector of Z[zeta_p])
        m[0][n] = a
        return m
    raise GModuleError(f"unknown block kind {kind!r}")


def reiner_action(p: int, counts: tuple[int, int, int], glue_classes=None) -> PrimeOrderAction:
    """Direct sum of (trivial, cyclotomic, glued) blocks as an order-p action."""
    t, c, g = counts
    blocks = []
    blocks += [reiner_block(p, "trivial")] * t
    blocks += [reiner_block(p, "cyclotomic")] * c
    glue_classes = list(glue_classes or [1] * g)
    if len(glue_classes) != g:
        raise GModuleError("need one glue class per glued block")
    for a in glue_classes:
        blocks.append(reiner_block(p, "glued", a))
    total = sum(len(b) for b in blocks)
    phi = [[0] * total for _ in range(total)]
    off = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                phi[off + i][off + j] = b[i][j]
        off += k
    if total == 0:
        raise GModuleError("empty action")
    return PrimeOrderAction(p=p, phi=_freeze(phi))


def k3_order5_action() -> PrimeOrderAction:
    """Order-5 isometry of the K3 lattice with fixed sublattice U + U(5)^2.

    Built as an index-5^4 overlattice of U + U(5)^2 + A4(-1)^4 where the
    isometry is trivial on the first three blocks and a Coxeter element on
    each A4(-1).  Four glue vectors pair the discriminant generators of
    U(5)^2 with A4(-1) dual weights; the result is even unimodular of
    signature (3,19), hence the K3 lattice, and each glue line welds one
    fixed direction to a cyclotomic block (Jordan profile (2,0,0,0,4)).
    """
    from fractions import Fraction

    from .lattice_core import ATOM_GRAMS, direct_sum, rescale

    u = ATOM_GRAMS["U"]
    u5 = tuple(tuple(5 * x for x in row) for row in u)
    a4_neg = rescale(ATOM_GRAMS["A4"], -1)
    gram_m = [list(r) for r in direct_sum([u, u5, u5] + [a4_neg] * 4)]

    cartan = [list(r) for r in ATOM_GRAMS["A4"]]
    cox = la.identity(4)
    for i in range(4):
        refl = la.identity(4)
        for j in range(4):
            refl[i][j] -= cartan[i][j]
        cox = la.mat_mul(refl, cox)
    phi_m = [[0] * 22 for _ in range(22)]
    for i in range(6):
        phi_m[i][i] = 1
    for b in range(4):
        off = 6 + 4 * b
        for i in range(4):
            for j in range(4):
                phi_m[off + i][off + j] = cox[i][j]

    # dual weight of A4 in root coordinates: Cartan^-1 . e_1 = (4,3,2,1)/5
    weight = [Fraction(c, 5) for c in (4, 3, 2, 1)]
    glue_rows = ((1, 2, 0, 0), (2, 1, 0, 0), (0, 0, 1, 2), (0, 0, 2, 1))
    basis = []
    for i in range(2):
        basis.append([Fraction(1 if j == i else 0) for j in range(22)])
    for gi, coeffs in enumerate(glue_rows):
        row = [Fraction(0)] * 22
        row[2 + gi] = Fraction(1, 5)
        for b, c in enumerate(coeffs):
            if c:
                off = 6 + 4 * b
                for k in range(4):
                    row[off + k] = c * weight[k]
        basis.append(row)
    for i in range(6, 22):
        basis.append([Fraction(1 if j == i else 0) for j in range(22)])

    gram_l = la.mat_mul(la.mat_mul(basis, gram_m), la.transpose(basis))
    # points with new coordinates x sit at B^T x, so phi pulls back through B^T
    bt = la.transpose(basis)
    phi_l = la.mat_mul(la.mat_mul(la.inv_rational(bt), phi_m), bt)
    for mat in (gram_l, phi_l):
        for row in mat:
            for x in row:
                if Fraction(x).denominator != 1:
                    raise GModuleError("glue data does not close up integrally")
    gram_l = [[int(x) for x in row] for row in gram_l]
    phi_l = [[int(x) for x in row] for row in phi_l]
    if abs(la.det_bareiss(gram_l)) != 1 or any(gram_l[i][i] % 2 for i in range(22)):
        raise GModuleError("overlattice is not even unimodular")
    return PrimeOrderAction(p=5, phi=_freeze(phi_l), gram=_freeze(gram_l))


# --- symmetric square -------------------------------------------------------


def sym2_action(action: PrimeOrderAction) -> PrimeOrderAction:
    """Induced action on Sym^2 Z^n in the basis e_i.e_j, i <= j (row-major)."""
    n = action.rank
    phi = action.phi_rows()
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    index = {pair: k for k, pair in enumerate(pairs)}
    size = len(pairs)
    out = [[0] * size for _ in range(size)]
    for col, (i, j) in enumerate(pairs):
        # phi(e_i . e_j) = sum_{a<=b} coeff e_a.e_b
        for a in range(n):
            for b in range(n):
                coeff = phi[a][i] * phi[b][j]
                if coeff == 0:
                    continue
                key = (a, b) if a <= b else (b, a)
                out[index[key]][col] += coeff
    return PrimeOrderAction(p=action.p, phi=_freeze(out))


def sym2_profile(profile: JordanProfile) -> JordanProfile:
    """Sym^2 Jordan profile from closed formulas (no middle blocks in or out).

    Valid for torsion-free profiles with blocks only in sizes 1, p-1, p.
    For p = 2 the eigenlattice split is propagated exactly.
    """
    p = profile.p
    if profile.middle_blocks():
        raise GModuleError("profile has middle blocks; closed formula unavailable")
    l1, lq, lp = profile.l1, profile.l_pm1, profile.lp
    if p == 2:
        lpl, lmi, l2 = profile.plus_rank, profile.minus_rank, profile.lp
        if lpl is None or lmi is None:
            raise GModuleError("p = 2 requires the eigenlattice split")
        # Products of eigenvectors multiply signs; each free block Z[G] has
        # Sym^2(Z[G]) = Z(+).(xy) + Z[G].(x^2, y^2).
        new_plus = lpl * (lpl + 1) // 2 + lmi * (lmi + 1) // 2 + l2
        new_minus = lpl * lmi
        new_l2 = (lpl + lmi) * l2 + l2 * l2
        blocks = [0, new_plus + new_minus, new_l2]
        out = JordanProfile(
            p=2, blocks=tuple(blocks), plus_rank=new_plus, minus_rank=new_minus
        )
        n = profile.rank
        assert out.rank == n * (n + 1) // 2, "Sym^2 rank mismatch"
        return out
    new = [0] * (p + 1)
    new[1] = l1 * (l1 + 1) // 2 + lq * (lq - 1) // 2
    if p > 2:
        new[p - 1] = lq * l1
    new[p] = (
        (p + 1) // 2 * lp
        + p * lp * (lp - 1) // 2
        + (p - 1) // 2 * lq
        + (p - 1) * lp * lq
        + lp * l1
        + (p - 2) * lq * (lq - 1) // 2
    )
    out = JordanProfile(p=p, blocks=tuple(new))
    n = profile.rank
    assert out.rank == n * (n + 1) // 2, "Sym^2 rank mismatch"
    return out


def conjugate(action: PrimeOrderAction, unimodular) -> PrimeOrderAction:
    """Change of basis: returns W^-1 phi W (gram transported if present)."""
    w = [list(r) for r in unimodular]
    if abs(la.det_bareiss(w)) != 1:
        raise GModuleError("conjugating matrix must be unimodular")
    winv_frac = la.inv_rational(w)
    winv = [[int(x) for x in row] for row in winv_frac]
    phi = la.mat_mul(la.mat_mul(winv, action.phi_rows()), w)
    gram = None
    if action.gram is not None:
        wt = la.transpose(w)
        gram = _freeze(la.mat_mul(la.mat_mul(wt, [list(r) for r in action.gram]), w))
    return PrimeOrderAction(p=action.p, phi=_freeze(phi), gram=gram)


def averaged_form(action: PrimeOrderAction, seed_form) -> list[list[int]]:
    """sum_i (phi^T)^i G0 phi^i: a phi-invariant symmetric form from any seed."""
    n = action.rank
    g0 = [list(r) for r in seed_form]
    acc = [row[:] for row in g0]
    phi = action.phi_rows()
    power = la.identity(n)
    for _ in range(action.p - 1):
        power = la.mat_mul(power, phi)
        pt = la.transpose(power)
        term = la.mat_mul(la.mat_mul(pt, g0), power)
        acc = [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(acc, term)]
    return acc


def zero_profile(p: int) -> JordanProfile:
    """Profile of the zero module (a vanishing cohomology group)."""
    if p == 2:
        return JordanProfile(p=2, blocks=(0, 0, 0), plus_rank=0, minus_rank=0)
    return JordanProfile(p=p, blocks=(0,) * (p + 1))


def trivial_profile(p: int) -> JordanProfile:
    """Profile of Z with the trivial action (H^0 and the top degree)."""
    if p == 2:
        return JordanProfile(p=2, blocks=(0, 1, 0), plus_rank=1, minus_rank=0)
    blocks = [0] * (p + 1)
    blocks[1] = 1
    return JordanProfile(p=p, blocks=tuple(blocks))


@dataclass(frozen=True)
class CohomologyProfile:
    """Degreewise Jordan profiles of an order-p action on H^*(X, Z).

    dimension is the complex dimension of X, so degrees run from 0 to
    2*dimension.  Degree 0 and the top degree always carry the trivial
    rank-1 module, and total ranks obey Poincare symmetry.  The accessors
    l1/l_pm1 dispatch to the eigenlattice split for p = 2: the + rank
    plays the role of l_1 and the - rank the role of l_(p-1) in every
    formula built on these counts.
    """

    dimension: int
    profiles: tuple[JordanProfile, ...]
    torsion_free: bool = True

    def __post_init__(self):
        object.__setattr__(self, "profiles", tuple(self.profiles))
        if self.dimension < 1:
            raise GModuleError("dimension must be positive")
        if len(self.profiles) != 2 * self.dimension + 1:
            raise GModuleError(
                f"need {2 * self.dimension + 1} degree profiles, got {len(self.profiles)}"
            )
        p = self.profiles[0].p
        if any(jp.p != p for jp in self.profiles):
            raise GModuleError("all degrees must share the same prime")
        for k in (0, 2 * self.dimension):
            end = self.profiles[k]
            if end.rank != 1 or end.l1 != 1 or (p == 2 and end.plus_rank != 1):
                raise GModuleError(f"degree {k} must be the trivial rank-1 module")
        for k in range(2 * self.dimension + 1):
            if self.profiles[k].rank != self.profiles[2 * self.dimension - k].rank:
                raise GModuleError(f"Poincare rank symmetry fails in degree {k}")

    @classmethod
    def from_degrees(
        cls,
        p: int,
        dimension: int,
        degrees: dict[int, JordanProfile],
        torsion_free: bool = True,
    ) -> "CohomologyProfile":
        """Build a full table from the nonzero degrees; the rest vanish.

        Degrees 0 and 2*dimension default to the trivial module and may be
        omitted.
        """
        top = 2 * dimension
        filled = []
        for k in range(top + 1):
            if k in degrees:
                filled.append(degrees[k])
            elif k in (0, top):
                filled.append(trivial_profile(p))
            else:
                filled.append(zero_profile(p))
        return cls(dimension=dimension, profiles=tuple(filled), torsion_free=torsion_free)

    @property
    def p(self) -> int:
        return self.profiles[0].p

    def profile(self, k: int) -> JordanProfile:
        if not 0 <= k <= 2 * self.dimension:
            raise GModuleError(f"degree {k} out of range 0..{2 * self.dimension}")
        return self.profiles[k]

    def rank(self, k: int) -> int:
        return self.profile(k).rank

    def l1(self, k: int) -> int:
        """l_1^k, read as l_(1,+)^k when p = 2."""
        jp = self.profile(k)
        return jp.plus_rank if self.p == 2 else jp.l1

    def l1_total(self, k: int) -> int:
        """Total count of size-1 blocks regardless of the sign split."""
        return self.profile(k).l1

    def l_pm1(self, k: int) -> int:
        """l_(p-1)^k, read as l_(1,-)^k when p = 2."""
        jp = self.profile(k)
        return jp.minus_rank if self.p == 2 else jp.l_pm1

    def lp(self, k: int) -> int:
        return self.profile(k).lp

    def invariant_rank(self, k: int) -> int:
        return self.lp(k) + self.l1(k)


def _even_vanishing_holds(cp: CohomologyProfile, m: int) -> bool:
    # hypotheses of the degree-2m free-quotient formula without degeneration
    if any(cp.l_pm1(2 * i) != 0 for i in range(1, m + 1)):
        return False
    if m > 1 and any(cp.l1(2 * i + 1) != 0 for i in range(m)):
        return False
    return True


def free_quotient_cohomology(
    cp: CohomologyProfile, k: int, e2_degenerate_over_z: bool = False
) -> CohomologyGroup:
    """H^k(X/G, Z) for a free order-p action with torsion-free H^*(X, Z).

    The free rank is the invariant rank in degree k; the p-torsion rank
    sums lower-degree block counts: for k = 2m it is
    sum_(i<m) l_(p-1)^(2i+1) + sum_(i<m) l_1^(2i), and for k = 2m+1 it is
    sum_(i<=m) l_(p-1)^(2i) + sum_(i<m) l_1^(2i+1) (p = 2 uses the sign
    split throughout).  The caller either asserts degeneration of the
    equivariant spectral sequence over Z or the vanishing conditions that
    replace it must hold in the profile; otherwise HypothesesNotMet.
    """
    if not 0 <= k <= 2 * cp.dimension:
        raise GModuleError(f"degree {k} out of range 0..{2 * cp.dimension}")
    if not cp.torsion_free:
        raise HypothesesNotMet("H^*(X, Z) must be torsion-free")
    free_rank = cp.invariant_rank(k)
    if k % 2 == 0:
        m = k // 2
        if not e2_degenerate_over_z and not _even_vanishing_holds(cp, m):
            raise HypothesesNotMet(
                f"degree {k}: no degeneration flag and the vanishing conditions fail"
            )
        torsion_rank = sum(cp.l_pm1(2 * i + 1) + cp.l1(2 * i) for i in range(m))
    else:
        m = (k - 1) // 2
        if e2_degenerate_over_z:
            torsion_rank = sum(cp.l_pm1(2 * i) for i in range(m + 1))
            torsion_rank += sum(cp.l1(2 * i + 1) for i in range(m))
        elif _even_vanishing_holds(cp, m) or (
            m + 1 <= cp.dimension and _even_vanishing_holds(cp, m + 1)
        ):
            # odd neighbors of a covered even degree are pure invariants
            torsion_rank = 0
        else:
            raise HypothesesNotMet(
                f"degree {k}: no degeneration flag and the vanishing conditions fail"
            )
    return CohomologyGroup(free_rank=free_rank, torsion=(cp.p,) * torsion_rank)
