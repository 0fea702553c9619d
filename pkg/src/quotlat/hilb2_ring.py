"""Integral cohomology ring of the Hilbert square of a K3 surface.

H^2 of the Hilbert square is j(H^2(S)) plus Z*delta, where 2*delta is the
class of the exceptional divisor; the Beauville-Bogomolov form restricts
to the intersection form on the j-part and gives delta^2 = -2.  H^4 has
the Nakajima-operator integral basis

    sigma = q1(1) q1(x) |0>,   q2(a_k),   q1(a_k) q1(a_m)  (k < m),
    m11(a_k) = (q1(a_k)^2 - q2(a_k)) / 2,

for an integral basis (a_k) of H^2(S).  This module implements the cup
products H^2 x H^2 -> H^4 and H^4 x H^4 -> H^8 = Z in exact arithmetic,
together with the automorphism action induced on H^4 by an isometry of
H^2(S).  The top pairing of two products of four 2-classes follows the
polarized Fujiki relation with constant 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _linalg as la
from .lattice_core import GramLattice

FUJIKI_CONSTANT = 3
DELTA_SQUARE = -2


@dataclass(frozen=True)
class H2Class:
    """Element a_1*gamma_1 + ... + a_22*gamma_22 + b*delta of H^2(S^[2])."""

    gamma: tuple[int, ...]
    delta: int = 0

    def __add__(self, other: "H2Class") -> "H2Class":
        return H2Class(tuple(x + y for x, y in zip(self.gamma, other.gamma)), self.delta + other.delta)

    def __sub__(self, other: "H2Class") -> "H2Class":
        return H2Class(tuple(x - y for x, y in zip(self.gamma, other.gamma)), self.delta - other.delta)

    def __rmul__(self, c: int) -> "H2Class":
        return H2Class(tuple(c * x for x in self.gamma), c * self.delta)

    @property
    def rank(self) -> int:
        return len(self.gamma) + 1

    def as_vector(self) -> list[int]:
        return list(self.gamma) + [self.delta]


@dataclass(frozen=True)
class H4Class:
    """Coordinates in the integral basis (sigma, q2, q1q1, m11)."""

    coords: tuple[int, ...]

    def __add__(self, other: "H4Class") -> "H4Class":
        return H4Class(tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: "H4Class") -> "H4Class":
        return H4Class(tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __rmul__(self, c: int) -> "H4Class":
        return H4Class(tuple(c * x for x in self.coords))


class HilbertSquare:
    """Exact cohomology ring data of S^[2] for a K3 intersection form.

    The input Gram matrix must be the full unimodular even intersection
    form on H^2(S,Z); the diagonal class coefficients mu are its inverse.
    """

    def __init__(self, gram):
        if isinstance(gram, GramLattice):
            gram = [list(r) for r in gram.gram_rows()]
        self.gram = [list(r) for r in gram]
        self.n = len(self.gram)
        if abs(la.det_bareiss(self.gram)) != 1:
            raise ValueError("H^2(S) must be unimodular")
        if any(g % 2 for g in (self.gram[i][i] for i in range(self.n))):
            raise ValueError("H^2(S) must be even")
        inv = la.inv_rational(self.gram)
        self.mu = [[int(x) for x in row] for row in inv]
        # H^4 basis layout: sigma, q2(k), q1q1(k < m), m11(k)
        self._q2_at = 1
        self._pair_at = 1 + self.n
        self._pair_index = {}
        idx = self._pair_at
        for k in range(self.n):
            for m in range(k + 1, self.n):
                self._pair_index[(k, m)] = idx
                idx += 1
        self._m11_at = idx
        self.h4_rank = idx + self.n
        self._h4_gram_cache = None

    # ---- H^2 ----

    def h2_rank(self) -> int:
        return self.n + 1

    def bb_gram(self):
        """Beauville-Bogomolov Gram matrix on (gamma_1..gamma_n, delta)."""
        out = [row[:] + [0] for row in self.gram]
        out.append([0] * self.n + [DELTA_SQUARE])
        return out

    def bb_lattice(self) -> GramLattice:
        return GramLattice(self.bb_gram(), name="H2(S[2])")

    def bb(self, x: H2Class, y: H2Class) -> int:
        acc = x.delta * y.delta * DELTA_SQUARE
        for i, xi in enumerate(x.gamma):
            if xi:
                acc += xi * sum(self.gram[i][j] * y.gamma[j] for j in range(self.n))
        return acc

    def gamma(self, k: int) -> H2Class:
        return H2Class(tuple(1 if i == k else 0 for i in range(self.n)), 0)

    @property
    def delta(self) -> H2Class:
        return H2Class((0,) * self.n, 1)

    # ---- H^4 basis helpers ----

    def sigma(self) -> H4Class:
        v = [0] * self.h4_rank
        v[0] = 1
        return H4Class(tuple(v))

    def q2(self, k: int) -> H4Class:
        v = [0] * self.h4_rank
        v[self._q2_at + k] = 1
        return H4Class(tuple(v))

    def q1q1(self, k: int, m: int) -> H4Class:
        if k == m:
            raise ValueError("q1q1 basis elements need k != m")
        v = [0] * self.h4_rank
        v[self._pair_index[(min(k, m), max(k, m))]] = 1
        return H4Class(tuple(v))

    def m11(self, k: int) -> H4Class:
        v = [0] * self.h4_rank
        v[self._m11_at + k] = 1
        return H4Class(tuple(v))

    def h4_basis_labels(self) -> list[str]:
        """Basis element names in coordinate order, for report output."""
        labels = ["sigma"]
        labels += [f"q2(a{k})" for k in range(self.n)]
        labels += [
            f"q1(a{k})q1(a{m})" for k in range(self.n) for m in range(k + 1, self.n)
        ]
        labels += [f"m11(a{k})" for k in range(self.n)]
        return labels

    # ---- cup products ----

    def cup(self, x: H2Class, y: H2Class) -> H4Class:
        """Cup product H^2 x H^2 -> H^4 in the integral basis.

        gamma_k gamma_m = (a_k . a_m) sigma + q1q1(k, m); the diagonal uses
        q1(a)^2 = 2 m11(a) + q2(a); delta gamma_k = q2(a_k); delta^2 expands
        as minus the diagonal-class combination minus sigma.  The sign is
        forced: it is the unique integral expansion with delta^4 = 12.
        """
        a, b = x.gamma, x.delta
        c, d = y.gamma, y.delta
        v = [0] * self.h4_rank
        sigma_coef = -b * d
        for k in range(self.n):
            gk = self.gram[k]
            for m in range(self.n):
                if a[k] and c[m]:
                    sigma_coef += a[k] * c[m] * gk[m]
        v[0] = sigma_coef
        for k in range(self.n):
            # delta*gamma terms plus the delta^2 diagonal contribution
            coef = b * c[k] + d * a[k] + a[k] * c[k]
            mu_kk = self.mu[k][k]
            if b and d:
                if mu_kk % 2:
                    raise ArithmeticError("diagonal class has odd self-pairing")
                coef -= b * d * (mu_kk // 2)
            v[self._q2_at + k] = coef
            v[self._m11_at + k] = 2 * a[k] * c[k] - b * d * mu_kk
        for (k, m), idx in self._pair_index.items():
            v[idx] = a[k] * c[m] + a[m] * c[k] - b * d * self.mu[k][m]
        return H4Class(tuple(v))

    def fujiki_product(self, x1: H2Class, x2: H2Class, x3: H2Class, x4: H2Class) -> int:
        """Top intersection x1.x2.x3.x4 via the polarized Fujiki relation."""
        return (
            self.bb(x1, x2) * self.bb(x3, x4)
            + self.bb(x1, x3) * self.bb(x2, x4)
            + self.bb(x1, x4) * self.bb(x2, x3)
        )

    # ---- top pairing on H^4 ----

    def _sigma_pairing(self, x: H2Class, y: H2Class) -> int:
        # sigma . (x cup y): intersection form on the j-part, -1 on delta
        acc = -x.delta * y.delta
        for i, xi in enumerate(x.gamma):
            if xi:
                acc += xi * sum(self.gram[i][j] * y.gamma[j] for j in range(self.n))
        return acc

    def _basis_expansions(self):
        """Each H^4 basis element as sigma-part plus 2-class products."""
        half = Fraction(1, 2)
        out = []
        out.append((Fraction(1), []))  # sigma
        for k in range(self.n):
            out.append((Fraction(0), [(Fraction(1), (self.delta, self.gamma(k)))]))
        for k in range(self.n):
            for m in range(k + 1, self.n):
                out.append(
                    (Fraction(-self.gram[k][m]), [(Fraction(1), (self.gamma(k), self.gamma(m)))])
                )
        for k in range(self.n):
            gk = self.gamma(k)
            out.append(
                (
                    Fraction(-self.gram[k][k], 2),
                    [(half, (gk, gk)), (-half, (self.delta, gk))],
                )
            )
        return out

    def h4_gram(self):
        """Gram matrix of the top pairing in the integral H^4 basis."""
        if self._h4_gram_cache is not None:
            return self._h4_gram_cache
        expans = self._basis_expansions()
        svals = {}
        qvals = {}

        def s_of(pair):
            if pair not in svals:
                svals[pair] = self._sigma_pairing(*pair)
            return svals[pair]

        def q_of(a, b):
            key = (a, b)
            if key not in qvals:
                qvals[key] = self.bb(a, b)
            return qvals[key]

        size = self.h4_rank
        gram = [[0] * size for _ in range(size)]
        for i in range(size):
            si, prods_i = expans[i]
            for j in range(i, size):
                sj, prods_j = expans[j]
                val = si * sj
                for c, pair in prods_j:
                    val += si * c * s_of(pair)
                for c, pair in prods_i:
                    val += sj * c * s_of(pair)
                for ci, (x1, x2) in prods_i:
                    for cj, (x3, x4) in prods_j:
                        val += ci * cj * (
                            q_of(x1, x3) * q_of(x2, x4)
                            + q_of(x1, x4) * q_of(x2, x3)
                        )
                        val += ci * cj * q_of(x1, x2) * q_of(x3, x4)
                if val.denominator != 1:
                    raise ArithmeticError("top pairing of integral classes must be integral")
                gram[i][j] = gram[j][i] = int(val)
        self._h4_gram_cache = gram
        return gram

    def pair_h4(self, a: H4Class, b: H4Class) -> int:
        gram = self.h4_gram()
        acc = 0
        for i, ai in enumerate(a.coords):
            if ai:
                row = gram[i]
                acc += ai * sum(row[j] * bj for j, bj in enumerate(b.coords) if bj)
        return acc

    # ---- induced automorphism action ----

    def induced_h2(self, psi):
        """23x23 matrix of the natural action on H^2(S^[2]): delta is fixed."""
        out = [list(row) + [0] for row in psi]
        out.append([0] * self.n + [1])
        return out

    def _image_h2(self, psi, x: H2Class) -> H2Class:
        img = [0] * self.n
        for k, c in enumerate(x.gamma):
            if c:
                for j in range(self.n):
                    img[j] += c * psi[k][j]
        return H2Class(tuple(img), x.delta)

    def induced_h4(self, psi):
        """Matrix (rows = images of basis elements) of the action on H^4.

        q2 is linear; q1q1 expands bilinearly; m11 expands quadratically
        with binomial q2 corrections.  The matrix is integral.
        """
        rows = []
        rows.append(self.sigma().coords)
        for k in range(self.n):
            v = [0] * self.h4_rank
            for j in range(self.n):
                v[self._q2_at + j] = psi[k][j]
            rows.append(tuple(v))
        pair_rows = {}
        for k in range(self.n):
            for m in range(k + 1, self.n):
                v = [0] * self.h4_rank
                rk, rm = psi[k], psi[m]
                for i in range(self.n):
                    v[self._m11_at + i] += 2 * rk[i] * rm[i]
                    v[self._q2_at + i] += rk[i] * rm[i]
                    for j in range(i + 1, self.n):
                        v[self._pair_index[(i, j)]] += rk[i] * rm[j] + rk[j] * rm[i]
                pair_rows[(k, m)] = v
        for k in range(self.n):
            for m in range(k + 1, self.n):
                rows.append(tuple(pair_rows[(k, m)]))
        for k in range(self.n):
            c = psi[k]
            v = [0] * self.h4_rank
            for i in range(self.n):
                # binomial term c*(c-1)/2 is integral for any integer c
                v[self._q2_at + i] = c[i] * (c[i] - 1) // 2
                v[self._m11_at + i] = c[i] * c[i]
                for j in range(i + 1, self.n):
                    v[self._pair_index[(i, j)]] = c[i] * c[j]
            rows.append(tuple(v))
        return [list(r) for r in rows]

    def apply_h4(self, matrix, a: H4Class) -> H4Class:
        v = [0] * self.h4_rank
        for i, c in enumerate(a.coords):
            if c:
                row = matrix[i]
                for j in range(self.h4_rank):
                    v[j] += c * row[j]
        return H4Class(tuple(v))


def s_lattice_gram(hilb: HilbertSquare, u1: H2Class, u2: H2Class):
    """Gram of (delta^2, u1.u2, sigma, u1^2, u2^2, u1.delta, u2.delta) in H^4.

    u1, u2 should span a hyperbolic summand of H^2(S).  This sublattice
    controls the image of H^4 under an automorphism acting trivially on it.
    """
    delta = hilb.delta
    classes = [
        hilb.cup(delta, delta),
        hilb.cup(u1, u2),
        hilb.sigma(),
        hilb.cup(u1, u1),
        hilb.cup(u2, u2),
        hilb.cup(u1, delta),
        hilb.cup(u2, delta),
    ]
    return [[hilb.pair_h4(a, b) for b in classes] for a in classes]


def h2_primitivity_certificate(s_gram, p: int) -> tuple[bool, tuple[int, int, int] | None]:
    """Degree-2 primitivity certificate over the S-lattice pairing table.

    Setting: U + (-2) = <u1, u2, delta> is an invariantly complemented
    summand of H^2(X)^G, the pair is H^4-normal, and s_gram is the 7x7
    Gram of (delta^2, u1.u2, sigma, u1^2, u2^2, u1.delta, u2.delta) in
    H^4(X, Z).  A norm class y + phi(y) + ... + phi^(p-1)(y) pairs into
    pZ with every invariant class, so if pi_*(u) is divisible by p for
    u = a*u1 + b*u2 + c*delta then u^2 pairs into pZ with all seven
    generators.  The certificate checks that this system of pairings mod
    p has no nonzero solution (a, b, c) in F_p^3, which forces p | u and
    hence primitivity of the pushforward of U + (-2).

    Returns (True, None) on success, else (False, counterexample_triple).
    No determinant of the S-lattice enters anywhere.
    """
    for a in range(p):
        for b in range(p):
            for c in range(p):
                if a == b == c == 0:
                    continue
                # u^2 in the basis order of s_gram
                x = (c * c, 2 * a * b, 0, a * a, b * b, 2 * a * c, 2 * b * c)
                pairings = [sum(xi * gij for xi, gij in zip(x, row)) for row in s_gram]
                if all(v % p == 0 for v in pairings):
                    return False, (a, b, c)
    return True, None
