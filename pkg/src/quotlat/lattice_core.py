"""Integral lattices with exact invariants.

A lattice is a free Z-module with a nondegenerate symmetric integer Gram
matrix.  All arithmetic is exact (Python integers and fractions): invariants
are rank, signed determinant, signature and the discriminant group read off
a Smith normal form.  The module also provides the constructions the rest of
the package is built from: rescaled duals, finite-index sublattices,
overlattices obtained by dividing glue vectors by a prime, Gauss reduction of
definite binary forms, and a parser for direct-sum lattice expressions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from . import _linalg as la


class LatticeError(Exception):
    """Base class for lattice construction and invariant errors."""


class DegenerateForm(LatticeError):
    pass


class NotPElementary(LatticeError):
    pass


class NotInDual(LatticeError):
    pass


class NonIntegralResult(LatticeError):
    pass


class NotDefinite(LatticeError):
    pass


class ParseError(LatticeError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _freeze(mat) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in mat)


@dataclass(frozen=True)
class DiscriminantGroup:
    """Finite abelian group L^vee / L given by its invariant factors (> 1)."""

    elementary_divisors: tuple[int, ...]

    @property
    def order(self) -> int:
        n = 1
        for d in self.elementary_divisors:
            n *= d
        return n

    def is_p_elementary(self, p: int) -> bool:
        return all(d == p for d in self.elementary_divisors)

    def p_rank(self, p: int) -> int:
        return sum(1 for d in self.elementary_divisors if d % p == 0)

    def __str__(self) -> str:
        if not self.elementary_divisors:
            return "1"
        return " + ".join(f"Z/{d}" for d in self.elementary_divisors)


@dataclass(frozen=True)
class LatticeInvariants:
    rank: int
    determinant: int
    signature: tuple[int, int]
    discriminant_group: DiscriminantGroup


@dataclass(frozen=True)
class GramLattice:
    """Lattice presented by a symmetric nondegenerate integer Gram matrix."""

    gram: tuple[tuple[int, ...], ...]
    name: str | None = None

    def __post_init__(self):
        rows = _freeze(self.gram)
        object.__setattr__(self, "gram", rows)
        if not la.is_symmetric([list(r) for r in rows]):
            raise LatticeError("Gram matrix must be square and symmetric")

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def determinant(self) -> int:
        return la.det_bareiss([list(r) for r in self.gram])

    def gram_rows(self) -> list[list[int]]:
        return [list(r) for r in self.gram]


@dataclass(frozen=True)
class SublatticeEmbedding:
    """Finite or full-rank sublattice spanned by integer rows in an ambient lattice."""

    ambient: GramLattice
    basis_rows: tuple[tuple[int, ...], ...]
    index: int | None  # |det T| when T is square, else None

    @property
    def lattice(self) -> GramLattice:
        t = [list(r) for r in self.basis_rows]
        g = la.mat_mul(la.mat_mul(t, self.ambient.gram_rows()), la.transpose(t))
        return GramLattice(_freeze(g))


def smith_normal_form(matrix) -> tuple[tuple, tuple, tuple]:
    """Public SNF: returns (U, D, V) with U*A*V = D, det U, det V = +-1.

    Pivot rule: smallest nonzero absolute value, ties broken row-major.
    """
    res = la.smith_normal_form([list(r) for r in matrix])
    return _freeze(res.u), _freeze(res.d), _freeze(res.v)


def discriminant_group(lattice: GramLattice) -> DiscriminantGroup:
    return DiscriminantGroup(tuple(la.elementary_divisors(lattice.gram_rows())))


def invariant_summary(lattice: GramLattice) -> LatticeInvariants:
    det = lattice.determinant
    if det == 0:
        raise DegenerateForm("Gram matrix is degenerate")
    pos, neg, zero = la.signature_exact(lattice.gram_rows())
    assert zero == 0
    return LatticeInvariants(
        rank=lattice.rank,
        determinant=det,
        signature=(pos, neg),
        discriminant_group=discriminant_group(lattice),
    )


def dual_rescaled(lattice: GramLattice, p: int) -> GramLattice:
    """The lattice L^vee(p): dual basis Gram scaled by p.

    Requires the discriminant group of L to be p-elementary; then the result
    is integral with |det| = p^(rank - a) where p^a = |A_L|.
    """
    group = discriminant_group(lattice)
    if not group.is_p_elementary(p):
        raise NotPElementary(
            f"discriminant group {group} is not {p}-elementary"
        )
    inv = la.inv_rational(lattice.gram_rows())
    out = []
    for row in inv:
        new_row = []
        for x in row:
            y = Fraction(p) * x
            if y.denominator != 1:
                raise NonIntegralResult("p * G^-1 is not integral")
            new_row.append(int(y))
        out.append(new_row)
    return GramLattice(_freeze(out))


def sublattice(lattice: GramLattice, rows) -> SublatticeEmbedding:
    """Sublattice spanned by the given coordinate rows (must be independent)."""
    t = [list(r) for r in rows]
    if not t:
        raise LatticeError("empty basis")
    if any(len(r) != lattice.rank for r in t):
        raise LatticeError("row length does not match ambient rank")
    if la.rank_rational(t) != len(t):
        raise LatticeError("basis rows are linearly dependent")
    index = abs(la.det_bareiss(t)) if len(t) == lattice.rank else None
    return SublatticeEmbedding(
        ambient=lattice, basis_rows=_freeze(t), index=index
    )


def overlattice_divide(lattice: GramLattice, vectors, p: int) -> GramLattice:
    """Overlattice generated by L and v/p for each glue vector v.

    Every v must satisfy v/p in L^vee (all pairings with L divisible by p).
    The result must again be an integral lattice; with m independent adjoined
    classes, discr(out) * p^(2m) = discr(L), which is asserted.
    """
    n = lattice.rank
    g = lattice.gram_rows()
    vecs = [list(v) for v in vectors]
    for v in vecs:
        if len(v) != n:
            raise LatticeError("glue vector length does not match rank")
        pairings = la.vec_mat(v, g)
        if any(x % p for x in pairings):
            raise NotInDual(f"vector {v} / {p} is not in the dual lattice")
    stacked = [[p if i == j else 0 for j in range(n)] for i in range(n)] + vecs
    basis = la.row_span_basis(stacked)  # rows generate p*L + Z<vectors>
    # new lattice = basis / p; Gram = B G B^T / p^2
    bg = la.mat_mul(la.mat_mul(basis, g), la.transpose(basis))
    p2 = p * p
    out = []
    for row in bg:
        new_row = []
        for x in row:
            if x % p2:
                raise NonIntegralResult(
                    "glue vectors do not close to an integral lattice"
                )
            new_row.append(x // p2)
        out.append(new_row)
    # index of the overlattice over L is p^n / |det basis|
    idx_num = p**n
    db = abs(la.det_bareiss(basis))
    assert idx_num % db == 0
    index = idx_num // db
    m = 0
    while index > 1:
        assert index % p == 0, "overlattice index is not a p-power"
        index //= p
        m += 1
    out_lattice = GramLattice(_freeze(out))
    assert out_lattice.determinant * p ** (2 * m) == lattice.determinant
    return out_lattice


def binary_reduce(gram) -> tuple[tuple[int, int], tuple[int, int]]:
    """Gauss-reduced form of a definite binary lattice.

    Positive definite forms are normalised to 0 <= 2b <= a <= c; negative
    definite forms return the negated canonical form.  Raises NotDefinite on
    indefinite or degenerate input.
    """
    (a, b), (b2, c) = (gram[0][0], gram[0][1]), (gram[1][0], gram[1][1])
    if b != b2:
        raise LatticeError("Gram matrix must be symmetric")
    det = a * c - b * b
    if det <= 0 or a == 0:
        raise NotDefinite("form is not definite")
    sign = 1 if a > 0 else -1
    a, b, c = sign * a, sign * b, sign * c
    while True:
        # translate b into (-a/2, a/2]
        r = b % a
        if 2 * r > a:
            r -= a
        k = (b - r) // a
        c = c - k * (b + r)
        b = r
        if c < a:
            a, c = c, a
            continue
        break
    b = abs(b)
    return ((sign * a, sign * b), (sign * b, sign * c))


# --- lattice expression grammar -------------------------------------------

# Fixed Gram matrices for the named atoms.  Sign conventions follow common
# usage in quotient tables: U hyperbolic; A2, E6, K7, K19 negative definite;
# A4, E8 positive definite; H5 and L17 as fixed matrices of determinant -5
# and 17.  Any atom can be rescaled with a postfix (m), e.g. E8(-1), U(3).
ATOM_GRAMS: dict[str, tuple[tuple[int, ...], ...]] = {
    "U": ((0, 1), (1, 0)),
    "A2": ((-2, 1), (1, -2)),
    "A4": (
        (2, -1, 0, 0),
        (-1, 2, -1, 0),
        (0, -1, 2, -1),
        (0, 0, -1, 2),
    ),
    "E6": (
        (-2, 1, 0, 0, 0, 0),
        (1, -2, 1, 0, 0, 0),
        (0, 1, -2, 1, 0, 1),
        (0, 0, 1, -2, 1, 0),
        (0, 0, 0, 1, -2, 0),
        (0, 0, 1, 0, 0, -2),
    ),
    "E8": (
        (2, -1, 0, 0, 0, 0, 0, 0),
        (-1, 2, -1, 0, 0, 0, 0, 0),
        (0, -1, 2, -1, 0, 0, 0, 0),
        (0, 0, -1, 2, -1, 0, 0, 0),
        (0, 0, 0, -1, 2, -1, 0, -1),
        (0, 0, 0, 0, -1, 2, -1, 0),
        (0, 0, 0, 0, 0, -1, 2, 0),
        (0, 0, 0, 0, -1, 0, 0, 2),
    ),
    "H5": ((2, 1), (1, -2)),
    "K7": ((-4, 1), (1, -2)),
    "K19": ((-10, 1), (1, -2)),
    "L17": (
        (-2, 1, 0, 1),
        (1, -2, 0, 0),
        (0, 0, -2, 1),
        (1, 0, 1, -4),
    ),
}


def rescale(gram, m: int):
    if m == 0:
        raise LatticeError("rescale factor must be nonzero")
    return _freeze([[m * x for x in row] for row in gram])


def direct_sum(grams) -> tuple[tuple[int, ...], ...]:
    blocks = [[list(r) for r in g] for g in grams]
    total = sum(len(b) for b in blocks)
    out = [[0] * total for _ in range(total)]
    off = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                out[off + i][off + j] = b[i][j]
        off += k
    return _freeze(out)


_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z][A-Za-z0-9]*)|(?P<int>-?\d+)|(?P<sym>[()+^]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError(f"unexpected character {stripped[0]!r}", pos)
        if m.lastgroup is None and not m.group().strip():
            pos = m.end()
            continue
        for kind in ("name", "int", "sym"):
            val = m.group(kind)
            if val is not None:
                tokens.append((kind, val, m.start(kind)))
        pos = m.end()
    return tokens


def parse_lattice_expr(text: str) -> GramLattice:
    """Parse a direct-sum lattice expression.

    Grammar: expr := term ('+' term)*; term := atom ('^' INT)?;
    atom := NAME ['(' INT ')'] | '(' INT ')'.  A bare '(n)' is the rank-1
    lattice <n>; a parenthesised integer after a name rescales the atom.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression", 0)
    idx = 0

    def peek():
        return tokens[idx] if idx < len(tokens) else (None, None, len(text))

    def expect(kind, value=None):
        nonlocal idx
        k, v, pos = peek()
        if k != kind or (value is not None and v != value):
            raise ParseError(
                f"expected {value or kind}, found {v!r}" if v else f"expected {value or kind}",
                pos,
            )
        idx += 1
        return v, pos

    def parse_scaled_int():
        # '(' INT ')'
        expect("sym", "(")
        v, pos = expect("int")
        expect("sym", ")")
        return int(v), pos

    def parse_atom():
        nonlocal idx
        k, v, pos = peek()
        if k == "name":
            idx += 1
            if v not in ATOM_GRAMS:
                raise ParseError(f"unknown lattice atom {v!r}", pos)
            gram = ATOM_GRAMS[v]
            k2, v2, _ = peek()
            if k2 == "sym" and v2 == "(":
                m, mpos = parse_scaled_int()
                if m == 0:
                    raise ParseError("rescale factor must be nonzero", mpos)
                gram = rescale(gram, m)
            return gram
        if k == "sym" and v == "(":
            n, npos = parse_scaled_int()
            if n == 0:
                raise ParseError("rank-1 lattice <0> is degenerate", npos)
            return ((n,),)
        raise ParseError(f"expected lattice atom, found {v!r}", pos)

    def parse_term():
        nonlocal idx
        gram = parse_atom()
        k, v, pos = peek()
        if k == "sym" and v == "^":
            idx += 1
            kv, vpos = expect("int")
            power = int(kv)
            if power < 1:
                raise ParseError("repetition count must be positive", vpos)
            gram = direct_sum([gram] * power)
        return gram

    blocks = [parse_term()]
    while True:
        k, v, pos = peek()
        if k is None:
            break
        if k == "sym" and v == "+":
            idx += 1
            blocks.append(parse_term())
        else:
            raise ParseError(f"unexpected token {v!r}", pos)
    return GramLattice(direct_sum(blocks), name=text.strip())
