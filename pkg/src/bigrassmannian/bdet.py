"""The q-weighted (bigrassmannian) determinant and its computation routes.

``bdet(A) = sum over w of (-1)^length(w) * q^beta(w) * prod a_{i,w(i)}``,
with the empty matrix mapping to 1.  Three independent routes are provided:
the defining signed sum, the classical determinant of the entrywise
deformation a_ij -> q^((i-j)^2/2) a_ij, and two-dimensional condensation
over contiguous square minors

    bdet(A) bdet(A with first+last rows and columns deleted)
        = bdet(A_1^1) bdet(A_n^n) - q^(n-1) bdet(A_n^1) bdet(A_1^n),

which needs only exact polynomial division.  The unsigned analogue (the
permanent with q weights) and the Robbins-Rumsey style recursions in l
and l*q^(n-1) live here too.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import BoundExceeded, ZeroMinor
from .exactpoly import (
    ONE,
    ZERO,
    Polynomial,
    RationalFunction,
    format_poly,
    lpow,
    parse,
    qpow,
)
from .permstat import length_and_beta, Permutation

LEIBNIZ_BOUND = 8
LITTLE_INVARIANCE_BOUND = 7
PERMANENT_BOUND = 10


class PolyMatrix:
    """Immutable square matrix of polynomials."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Sequence[Sequence[Polynomial]]):
        rows = tuple(
            tuple(e if isinstance(e, Polynomial) else Polynomial.constant(e)
                  for e in row)
            for row in rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, *_):
        raise AttributeError("PolyMatrix is immutable")

    def __getitem__(self, rc: tuple[int, int]) -> Polynomial:
        r, c = rc
        return self.rows[r][c]

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"PolyMatrix(n={self.n})"

    @staticmethod
    def ones(n: int) -> "PolyMatrix":
        return PolyMatrix([[ONE] * n for _ in range(n)])

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(tuple(zip(*self.rows)))

    def delete(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        """Submatrix with the given 1-based rows and columns removed."""
        rset, cset = set(rows), set(cols)
        return PolyMatrix([
            [self.rows[r][c] for c in range(self.n) if c + 1 not in cset]
            for r in range(self.n) if r + 1 not in rset
        ])

    def sub_square(self, r: int, c: int, size: int) -> "PolyMatrix":
        """Contiguous size x size block with top-left corner (r, c), 0-based."""
        return PolyMatrix([row[c:c + size] for row in self.rows[r:r + size]])


# deformation families ------------------------------------------------------

@dataclass(frozen=True)
class DeformationFamily:
    """Entrywise q-monomial multipliers indexed by (i, j), 1-based."""

    kind: str
    halves: Callable[[int, int], int]

    def factor(self, i: int, j: int) -> Polynomial:
        return qpow(self.halves(i, j))


B_FAMILY = DeformationFamily("b", lambda i, j: (i - j) ** 2)
B_PRIME = DeformationFamily("b_prime", lambda i, j: 2 * i * (i - j))
B_DOUBLE_PRIME = DeformationFamily("b_double_prime", lambda i, j: 2 * j * (j - i))

FAMILIES = {f.kind: f for f in (B_FAMILY, B_PRIME, B_DOUBLE_PRIME)}


def deform(a: PolyMatrix, fam: DeformationFamily = B_FAMILY) -> PolyMatrix:
    return PolyMatrix([
        [fam.factor(i + 1, j + 1) * a.rows[i][j] for j in range(a.n)]
        for i in range(a.n)
    ])


# determinant routes ---------------------------------------------------------

def _leibniz(a: PolyMatrix, q_weighted: bool, signed: bool = True) -> Polynomial:
    n = a.n
    if n == 0:
        return ONE
    total = ZERO
    for word in itertools.permutations(range(1, n + 1)):
        prod = ONE
        for i, wi in enumerate(word, start=1):
            entry = a.rows[i - 1][wi - 1]
            if entry.is_zero():
                prod = ZERO
                break
            prod = prod * entry
        if prod.is_zero():
            continue
        ell, bet = length_and_beta(Permutation(word))
        coeff = qpow(2 * bet) if q_weighted else ONE
        if signed and ell % 2:
            coeff = -coeff
        total = total + coeff * prod
    return total


def det_classic(a: PolyMatrix, max_n: int = LEIBNIZ_BOUND) -> Polynomial:
    """Ordinary determinant by the signed permutation sum."""
    if a.n > max_n:
        raise BoundExceeded(f"Leibniz determinant above bound {max_n}")
    return _leibniz(a, q_weighted=False)


def bdet_definition(a: PolyMatrix, max_n: int = LEIBNIZ_BOUND) -> Polynomial:
    """The defining signed, q-weighted permutation sum."""
    if a.n > max_n:
        raise BoundExceeded(f"signed sum above bound {max_n}")
    return _leibniz(a, q_weighted=True)


def bdet_via_deformation(a: PolyMatrix, max_n: int = LEIBNIZ_BOUND) -> Polynomial:
    """det of the deformed matrix; agrees with bdet_definition."""
    if a.n > max_n:
        raise BoundExceeded(f"deformation determinant above bound {max_n}")
    return det_classic(deform(a, B_FAMILY), max_n=max_n)


def little_invariance_check(
    a: PolyMatrix, max_n: int = LITTLE_INVARIANCE_BOUND
) -> tuple[Polynomial, Polynomial, Polynomial]:
    """Determinants of the three deformations; always an equal triple."""
    if a.n > max_n:
        raise BoundExceeded(f"little invariance above bound {max_n}")
    return tuple(
        det_classic(deform(a, fam), max_n=max_n)
        for fam in (B_FAMILY, B_PRIME, B_DOUBLE_PRIME))


def _det_cofactor(a: PolyMatrix) -> Polynomial:
    """Classical determinant by first-row expansion, memoized on columns."""
    n = a.n
    rows = a.rows
    cache: dict[tuple[int, ...], Polynomial] = {(): ONE}

    def minor(cols: tuple[int, ...]) -> Polynomial:
        if cols in cache:
            return cache[cols]
        row = rows[n - len(cols)]
        total = ZERO
        for pos, c in enumerate(cols):
            entry = row[c]
            if entry.is_zero():
                continue
            sub = minor(cols[:pos] + cols[pos + 1:])
            term = entry * sub
            total = total - term if pos % 2 else total + term
        cache[cols] = total
        return total

    return minor(tuple(range(n)))


def bdet_condense(a: PolyMatrix) -> Polynomial:
    """bdet by condensation over contiguous square minors.

    The divisor at each step is the interior minor; divisions are exact
    whenever the identity holds.  A zero interior minor switches that one
    cell to cofactor expansion of its deformed submatrix.
    """
    n = a.n
    if n == 0:
        return ONE
    prev2: list[list[Polynomial]] = [[ONE] * (n + 1) for _ in range(n + 1)]
    prev1 = [[a.rows[r][c] for c in range(n)] for r in range(n)]
    if n == 1:
        return prev1[0][0]
    for size in range(2, n + 1):
        qfac = qpow(2 * (size - 1))
        cur: list[list[Polynomial]] = []
        for r in range(n - size + 1):
            row = []
            for c in range(n - size + 1):
                divisor = prev2[r + 1][c + 1]
                if divisor.is_zero():
                    row.append(_det_cofactor(
                        deform(a.sub_square(r, c, size), B_FAMILY)))
                    continue
                num = (prev1[r + 1][c + 1] * prev1[r][c]
                       - qfac * prev1[r][c + 1] * prev1[r + 1][c])
                row.append(num.div_exact(divisor))
            cur.append(row)
        prev2, prev1 = prev1, cur
    return prev1[0][0]


def condensation_identity_check(a: PolyMatrix) -> bool:
    """Exact check of the weighted condensation and its five minor bridges.

    All six bdets are computed from the definition; the classical
    determinants of the deformed minors are computed independently.  A
    False return would indicate a genuine counterexample (i.e. a bug).
    """
    n = a.n
    if n < 2:
        raise ValueError("condensation needs n >= 2")
    whole = bdet_definition(a)
    interior = bdet_definition(a.delete((1, n), (1, n)))
    nw = bdet_definition(a.delete((1,), (1,)))
    se = bdet_definition(a.delete((n,), (n,)))
    sw = bdet_definition(a.delete((n,), (1,)))
    ne = bdet_definition(a.delete((1,), (n,)))
    if whole * interior != nw * se - qpow(2 * (n - 1)) * sw * ne:
        return False
    c = deform(a, B_FAMILY)
    half = qpow(n - 1)
    checks = (
        (det_classic(c.delete((1, n), (1, n))), interior),
        (det_classic(c.delete((1,), (1,))), nw),
        (det_classic(c.delete((n,), (n,))), se),
        (det_classic(c.delete((n,), (1,))), half * sw),
        (det_classic(c.delete((1,), (n,))), half * ne),
    )
    return all(lhs == rhs for lhs, rhs in checks)


# permanent -------------------------------------------------------------------

def permanent_q(a: PolyMatrix, max_n: int = PERMANENT_BOUND) -> Polynomial:
    """Unsigned permutation sum by inclusion-exclusion over column subsets."""
    n = a.n
    if n > max_n:
        raise BoundExceeded(f"permanent above bound {max_n}")
    if n == 0:
        return ONE
    if all(e.is_q_only() for row in a.rows for e in row):
        return _permanent_q_only(a)
    total = ZERO
    cols = range(n)
    for size in range(1, n + 1):
        for subset in itertools.combinations(cols, size):
            prod = ONE
            for r in range(n):
                row_sum = ZERO
                for c in subset:
                    row_sum = row_sum + a.rows[r][c]
                if row_sum.is_zero():
                    prod = ZERO
                    break
                prod = prod * row_sum
            if prod.is_zero():
                continue
            if (n - size) % 2:
                prod = -prod
            total = total + prod
    return total


def _permanent_q_only(a: PolyMatrix) -> Polynomial:
    # same inclusion-exclusion, with rows kept as {q-halves: coeff} dicts
    n = a.n
    rows = [[{k[0]: c for k, c in e._terms.items()} for e in row]
            for row in a.rows]
    total: dict[int, object] = {}
    for size in range(1, n + 1):
        sign = -1 if (n - size) % 2 else 1
        for subset in itertools.combinations(range(n), size):
            prod = {0: 1}
            for r in range(n):
                row_sum: dict[int, object] = {}
                for c in subset:
                    for e, cf in rows[r][c].items():
                        s = row_sum.get(e, 0) + cf
                        if s:
                            row_sum[e] = s
                        else:
                            del row_sum[e]
                if not row_sum:
                    prod = {}
                    break
                nxt: dict[int, object] = {}
                for e1, c1 in prod.items():
                    for e2, c2 in row_sum.items():
                        e = e1 + e2
                        s = nxt.get(e, 0) + c1 * c2
                        if s:
                            nxt[e] = s
                        else:
                            del nxt[e]
                prod = nxt
            for e, cf in prod.items():
                s = total.get(e, 0) + sign * cf
                if s:
                    total[e] = s
                else:
                    del total[e]
    return Polynomial({(e, 0, ()): c for e, c in total.items()})


# Robbins-Rumsey recursions ----------------------------------------------------

def _condense_rational(a: PolyMatrix, factor: Callable[[int], RationalFunction]
                       ) -> RationalFunction:
    """Shared engine for the l- and l*q-recursions over contiguous minors."""
    n = a.n
    one = RationalFunction(ONE)
    if n == 0:
        return one
    prev2 = [[one] * (n + 1) for _ in range(n + 1)]
    prev1 = [[RationalFunction(e) for e in row] for row in a.rows]
    if n == 1:
        return prev1[0][0]
    for size in range(2, n + 1):
        lam_fac = factor(size)
        cur = []
        for r in range(n - size + 1):
            row = []
            for c in range(n - size + 1):
                divisor = prev2[r + 1][c + 1]
                if divisor.is_zero():
                    raise ZeroMinor(r + 1, c + 1, size - 2)
                num = (prev1[r + 1][c + 1] * prev1[r][c]
                       + lam_fac * prev1[r][c + 1] * prev1[r + 1][c])
                row.append(num / divisor)
            cur.append(row)
        prev2, prev1 = prev1, cur
    return prev1[0][0]


def lambda_det(a: PolyMatrix) -> RationalFunction:
    """The l-determinant: condensation with -1 replaced by the variable l.

    Defined when every interior minor of the recursion is nonzero; at
    l = -1 it recovers the classical determinant.
    """
    lam = RationalFunction(lpow(1))
    return _condense_rational(a, lambda size: lam)


def lambda_q_det(a: PolyMatrix) -> RationalFunction:
    """The l*q-determinant: the recursion factor is l*q^(size-1)."""
    return _condense_rational(
        a, lambda size: RationalFunction(lpow(1) * qpow(2 * (size - 1))))


# random matrices for seeded identity checks -----------------------------------

def random_monomial_matrix(n: int, rng: random.Random) -> PolyMatrix:
    """Entries c * q^(e/2), c in {-3..3} minus 0, e in {0..4} halves."""
    def entry() -> Polynomial:
        c = rng.choice((-3, -2, -1, 1, 2, 3))
        e = rng.randrange(5)
        return Polynomial.monomial(c, qh=e)

    return PolyMatrix([[entry() for _ in range(n)] for _ in range(n)])


def random_rational_matrix(n: int, rng: random.Random) -> PolyMatrix:
    """Positive rational constants; keeps every recursion minor nonzero."""
    def entry() -> Polynomial:
        return Polynomial.constant(
            Fraction(rng.randrange(1, 100), rng.randrange(1, 10)))

    return PolyMatrix([[entry() for _ in range(n)] for _ in range(n)])


# matrix text format ------------------------------------------------------------

def parse_matrix(text: str) -> PolyMatrix:
    """Read the text format: a first line ``n=<int>``, then n lines of n
    polynomials separated by ';'."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines or not lines[0].replace(" ", "").startswith("n="):
        raise ValueError("matrix file must start with 'n=<int>'")
    n = int(lines[0].split("=", 1)[1])
    if len(lines) != n + 1:
        raise ValueError(f"expected {n} matrix rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        cells = [cell.strip() for cell in ln.split(";")]
        if len(cells) != n:
            raise ValueError(f"expected {n} entries per row, found {len(cells)}")
        rows.append([parse(cell) for cell in cells])
    return PolyMatrix(rows)


def format_matrix(a: PolyMatrix) -> str:
    lines = [f"n={a.n}"]
    for row in a.rows:
        lines.append(" ; ".join(format_poly(e) for e in row))
    return "\n".join(lines) + "\n"
