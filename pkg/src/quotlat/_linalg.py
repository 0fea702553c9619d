"""Exact integer and rational linear algebra helpers.

Everything here operates on plain ``list[list[int]]`` (or ``Fraction``)
matrices and never touches floating point.  The Smith normal form keeps the
full transform quadruple (U, Uinv, V, Vinv) so callers can read off kernels,
image lattices and saturations directly from unimodular coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> Matrix:
    return [[0] * n for _ in range(m)]


def mat_copy(a) -> Matrix:
    return [list(row) for row in a]


def transpose(a) -> Matrix:
    return [list(col) for col in zip(*a)]


def mat_mul(a, b) -> Matrix:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a, v) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def vec_mat(v, a) -> list:
    return [sum(v[i] * a[i][j] for i in range(len(v))) for j in range(len(a[0]))]


def scalar_mul(c, a) -> Matrix:
    return [[c * x for x in row] for row in a]


def mat_eq(a, b) -> bool:
    return [list(r) for r in a] == [list(r) for r in b]


def is_symmetric(a) -> bool:
    n = len(a)
    return all(len(row) == n for row in a) and all(
        a[i][j] == a[j][i] for i in range(n) for j in range(n)
    )


def det_bareiss(a) -> int:
    """Exact determinant via fraction-free Bareiss elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = mat_copy(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rank_mod_p(a, p: int) -> int:
    """Rank of a matrix over F_p by Gaussian elimination."""
    if not a or not a[0]:
        return 0
    m = [[x % p for x in row] for row in a]
    rows, cols = len(m), len(m[0])
    rank = 0
    col = 0
    for col in range(cols):
        piv = next((r for r in range(rank, rows) if m[r][col] % p), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for r in range(rows):
            if r != rank and m[r][col]:
                c = m[r][col]
                m[r] = [(x - c * y) % p for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def rank_rational(a) -> int:
    """Rank over Q by exact fraction elimination."""
    if not a or not a[0]:
        return 0
    m = [[Fraction(x) for x in row] for row in a]
    rows, cols = len(m), len(m[0])
    rank = 0
    for col in range(cols):
        piv = next((r for r in range(rank, rows) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        lead = m[rank][col]
        for r in range(rank + 1, rows):
            if m[r][col]:
                f = m[r][col] / lead
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def inv_rational(a) -> list[list[Fraction]]:
    """Exact inverse over Q.  Raises ZeroDivisionError on singular input."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        m[col], m[piv] = m[piv], m[col]
        lead = m[col][col]
        m[col] = [x / lead for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def solve_in_rowspan(basis, vec) -> list[Fraction] | None:
    """Coordinates c with c * basis == vec, or None if vec is outside the span.

    basis rows must be linearly independent.
    """
    k = len(basis)
    if k == 0:
        return [] if all(x == 0 for x in vec) else None
    n = len(basis[0])
    # Solve the k x k system on an independent column subset, then verify.
    cols: list[int] = []
    m = [[Fraction(basis[r][c]) for c in range(n)] for r in range(k)]
    # pick pivot columns by elimination
    work = [row[:] for row in m]
    row_i = 0
    for c in range(n):
        piv = next((r for r in range(row_i, k) if work[r][c]), None)
        if piv is None:
            continue
        work[row_i], work[piv] = work[piv], work[row_i]
        lead = work[row_i][c]
        for r in range(k):
            if r != row_i and work[r][c]:
                f = work[r][c] / lead
                work[r] = [x - f * y for x, y in zip(work[r], work[row_i])]
        cols.append(c)
        row_i += 1
        if row_i == k:
            break
    if len(cols) < k:
        raise ValueError("basis rows are dependent")
    # solve c * basis[:, cols] = vec[cols]
    sq = [[m[r][c] for r in range(k)] for c in cols]  # k x k, one row per pivot column
    rhs = [Fraction(vec[c]) for c in cols]
    aug = [sq[i] + [rhs[i]] for i in range(k)]
    for col in range(k):
        piv = next((r for r in range(col, k) if aug[r][col]), None)
        if piv is None:
            raise ValueError("basis rows are dependent")
        aug[col], aug[piv] = aug[piv], aug[col]
        lead = aug[col][col]
        aug[col] = [x / lead for x in aug[col]]
        for r in range(k):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    coeffs = [aug[i][k] for i in range(k)]
    # verify on all columns
    for c in range(n):
        if sum(coeffs[r] * m[r][c] for r in range(k)) != vec[c]:
            return None
    return coeffs


@dataclass
class SNFResult:
    u: Matrix
    d: Matrix
    v: Matrix
    uinv: Matrix
    vinv: Matrix

    @property
    def diagonal(self) -> list[int]:
        return [self.d[i][i] for i in range(min(len(self.d), len(self.d[0]) if self.d else 0))]


def smith_normal_form(a) -> SNFResult:
    """Smith normal form with unimodular transforms: U*A*V = D.

    Pivot rule: smallest nonzero absolute value in the working submatrix,
    ties broken by row-major position.  Diagonal entries are nonnegative and
    form a divisibility chain.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    d = mat_copy(a)
    u, uinv = identity(m), identity(m)
    v, vinv = identity(n), identity(n)

    def row_swap(i, k):
        d[i], d[k] = d[k], d[i]
        u[i], u[k] = u[k], u[i]
        for r in range(m):
            uinv[r][i], uinv[r][k] = uinv[r][k], uinv[r][i]

    def row_add(i, k, c):
        # row_i += c * row_k
        d[i] = [x + c * y for x, y in zip(d[i], d[k])]
        u[i] = [x + c * y for x, y in zip(u[i], u[k])]
        for r in range(m):
            uinv[r][k] -= c * uinv[r][i]

    def row_neg(i):
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]
        for r in range(m):
            uinv[r][i] = -uinv[r][i]

    def col_swap(j, k):
        for r in range(m):
            d[r][j], d[r][k] = d[r][k], d[r][j]
        for r in range(n):
            v[r][j], v[r][k] = v[r][k], v[r][j]
        vinv[j], vinv[k] = vinv[k], vinv[j]

    def col_add(j, k, c):
        # col_j += c * col_k
        for r in range(m):
            d[r][j] += c * d[r][k]
        for r in range(n):
            v[r][j] += c * v[r][k]
        vinv[k] = [x - c * y for x, y in zip(vinv[k], vinv[j])]

    for t in range(min(m, n)):
        while True:
            # pivot: smallest |nonzero| in d[t:, t:], row-major tie-break
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    x = d[i][j]
                    if x != 0 and (best is None or abs(x) < abs(d[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            bi, bj = best
            if bi != t:
                row_swap(t, bi)
            if bj != t:
                col_swap(t, bj)
            if d[t][t] < 0:
                row_neg(t)
            piv = d[t][t]
            dirty = False
            for i in range(t + 1, m):
                if d[i][t]:
                    q = d[i][t] // piv
                    if q:
                        row_add(i, t, -q)
                    if d[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if d[t][j]:
                    q = d[t][j] // piv
                    if q:
                        col_add(j, t, -q)
                    if d[t][j]:
                        dirty = True
            if dirty:
                continue
            # pivot must divide the remaining submatrix
            fix = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if d[i][j] % piv:
                        fix = i
                        break
                if fix is not None:
                    break
            if fix is None:
                break
            row_add(t, fix, 1)
        if t < min(m, n) and d[t][t] < 0:
            row_neg(t)
    return SNFResult(u=u, d=d, v=v, uinv=uinv, vinv=vinv)


def elementary_divisors(a) -> list[int]:
    """Nontrivial invariant factors (> 1) of an integer matrix."""
    res = smith_normal_form(a)
    return [x for x in res.diagonal if x not in (0, 1)]


def kernel_basis(a) -> Matrix:
    """Saturated basis (as rows) of the integer kernel of x -> A*x."""
    m = len(a)
    n = len(a[0]) if m else 0
    res = smith_normal_form(a)
    diag = res.diagonal
    rows = []
    for j in range(n):
        dj = diag[j] if j < len(diag) else 0
        if dj == 0:
            rows.append([res.v[i][j] for i in range(n)])
    return rows


def image_basis(a) -> Matrix:
    """Basis (as rows) of the lattice A * Z^n, i.e. the column span over Z."""
    res = smith_normal_form(a)
    rows = []
    for i, di in enumerate(res.diagonal):
        if di:
            rows.append([di * res.uinv[r][i] for r in range(len(a))])
    return rows


def row_span_basis(a) -> Matrix:
    """Z-basis (as rows) of the subgroup of Z^n generated by the rows of A."""
    res = smith_normal_form(a)
    rows = []
    for i, di in enumerate(res.diagonal):
        if di:
            rows.append([di * x for x in res.vinv[i]])
    return rows


def signature_exact(gram) -> tuple[int, int, int]:
    """Inertia (positive, negative, zero) of a symmetric integer matrix.

    Exact rational symmetric elimination; a zero diagonal with a nonzero
    off-diagonal entry is consumed as a hyperbolic 2x2 block contributing
    (1, 1).
    """
    n = len(gram)
    a = {(i, j): Fraction(gram[i][j]) for i in range(n) for j in range(n)}
    active = list(range(n))
    pos = neg = 0
    while active:
        i0 = next((i for i in active if a[(i, i)]), None)
        if i0 is not None:
            pivot = a[(i0, i0)]
            if pivot > 0:
                pos += 1
            else:
                neg += 1
            rest = [i for i in active if i != i0]
            for x in rest:
                for y in rest:
                    a[(x, y)] -= a[(x, i0)] * a[(i0, y)] / pivot
            active = rest
            continue
        pair = None
        for x in active:
            for y in active:
                if x < y and a[(x, y)]:
                    pair = (x, y)
                    break
            if pair:
                break
        if pair is None:
            break  # remaining block is identically zero
        i0, j0 = pair
        b = a[(i0, j0)]
        pos += 1
        neg += 1
        rest = [i for i in active if i not in (i0, j0)]
        for x in rest:
            for y in rest:
                a[(x, y)] -= (a[(x, i0)] * a[(j0, y)] + a[(x, j0)] * a[(i0, y)]) / b
        active = rest
    return pos, neg, n - pos - neg
