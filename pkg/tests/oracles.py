"""Independent cross-checks used by the test suite.

Every function here recomputes a quantity along a different route than the
library (sympy exact linear algebra, direct definition-level expansions,
explicit generating-set constructions), so agreement between the two is
evidence and not a tautology.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from sympy import GF, Matrix
from sympy.matrices.normalforms import smith_normal_form as _sympy_snf
from sympy.polys.matrices import DomainMatrix


def det(rows) -> int:
    return int(Matrix([list(r) for r in rows]).det())


def snf_divisors(rows) -> list[int]:
    """Nonzero diagonal of the Smith form, nonnegative, via sympy."""
    d = _sympy_snf(Matrix([list(r) for r in rows]))
    n = min(d.shape)
    return [abs(int(d[i, i])) for i in range(n) if d[i, i] != 0]


def signature(rows) -> tuple[int, int, int]:
    """(positive, zero, negative) eigenvalue counts of a symmetric matrix.

    Uses Descartes' rule on the characteristic polynomial, which is exact
    here because a symmetric integer matrix has only real eigenvalues.
    """
    coeffs = Matrix([list(r) for r in rows]).charpoly().all_coeffs()
    zero = 0
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
        zero += 1

    def changes(seq):
        signs = [1 if c > 0 else -1 for c in seq if c != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    pos = changes(coeffs)
    neg = changes([c if i % 2 == 0 else -c for i, c in enumerate(coeffs)])
    return pos, zero, neg


def rank_mod_p(rows, p: int) -> int:
    dom = GF(p)
    mat = DomainMatrix.from_list(
        [[int(x) % p for x in row] for row in rows], dom
    )
    return mat.rank()


def sym2_matrix(tau, n: int) -> list[list[int]]:
    """Matrix of the induced map on Sym^2, basis e_i.e_j with i <= j.

    Pairs are ordered row-major: (0,0), (0,1), ..., (0,n-1), (1,1), ...
    Built by expanding (tau e_i)(tau e_j) coordinate by coordinate.
    """
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    index = {pair: k for k, pair in enumerate(pairs)}
    cols = []
    for i, j in pairs:
        col = [0] * len(pairs)
        for k in range(n):
            for m in range(n):
                a, b = (k, m) if k <= m else (m, k)
                col[index[(a, b)]] += tau[k][i] * tau[m][j]
        cols.append(col)
    return [[cols[c][r] for c in range(len(pairs))] for r in range(len(pairs))]


def hj_fraction(coeffs) -> Fraction:
    """Evaluate [a1, ..., ak] as a1 - 1/(a2 - 1/(...)) from the back."""
    value = Fraction(coeffs[-1])
    for a in reversed(coeffs[:-1]):
        value = a - 1 / value
    return value


def random_symmetric(rng: Random, n: int, spread: int = 4) -> list[list[int]]:
    """Random nondegenerate symmetric integer matrix (resampled if singular)."""
    while True:
        g = [[0] * n for _ in range(n)]
        for i in range(n):
            g[i][i] = rng.randint(-spread, spread) * 2 or 2
            for j in range(i + 1, n):
                g[i][j] = g[j][i] = rng.randint(-spread, spread)
        if det(g) != 0:
            return g


def random_unimodular(rng: Random, n: int, steps: int = 12) -> list[list[int]]:
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.choice([-2, -1, 1, 2])
        for k in range(n):
            u[i][k] += c * u[j][k]
    return u


def functional_sublattice(rng: Random, ambient, p: int):
    """Index-p kernel sublattice of an ambient lattice, with one glue vector.

    Picks a random surjection phi: Z^n -> Z/p, takes L = ker phi with explicit
    basis rows B (|det B| = p), and returns (B G B^T, x) where x gives p*v in
    the B-basis for a random v outside L.  Dividing x by p inside L must
    recover the ambient lattice up to unimodular congruence.
    """
    n = len(ambient)
    phi = [0] * n
    while not any(phi):
        phi = [rng.randrange(p) for _ in range(n)]
    j = max(k for k in range(n) if phi[k])
    inv = pow(phi[j], -1, p)
    basis = []
    for i in range(n):
        if i == j:
            basis.append([p if k == j else 0 for k in range(n)])
        else:
            row = [0] * n
            row[i] = 1
            row[j] = -(phi[i] * inv) % p
            basis.append(row)
    v = [rng.randint(-2, 2) for _ in range(n)]
    while sum(f * c for f, c in zip(phi, v)) % p == 0:
        v = [rng.randint(-2, 2) for _ in range(n)]
    # p*v in B-coordinates: rows i != j contribute p*v_i, row j absorbs the rest
    x = [p * v[i] for i in range(n)]
    x[j] = (p * v[j] - sum(x[i] * basis[i][j] for i in range(n) if i != j)) // p
    gm = Matrix(ambient)
    bm = Matrix(basis)
    sub = bm * gm * bm.T
    sub_rows = [[int(sub[r, c]) for c in range(n)] for r in range(n)]
    return sub_rows, x
