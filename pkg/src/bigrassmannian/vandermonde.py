"""Vandermonde-type products and their tournament-sum expansions.

The unweighted product is prod over i < j of (x_i + l*x_j); the weighted
one inserts q^(j-i) next to l.  Both equal the sum over all tournaments of
a monomial recording length (power of l), the statistic beta (power of q,
weighted case) and outdegrees (x exponents).  Splitting that sum by
transitivity isolates the part that survives the x = 1, l = -1
specialization.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoundExceeded
from .exactpoly import ONE, Polynomial, lpow, qpow, xvar
from .tournament import (
    Tournament,
    enumerate_tn,
    is_transitive,
    outdegrees,
    t_beta,
    t_length,
)

PRODUCT_BOUND = 7
SUM_BOUND = 6


@dataclass(frozen=True)
class VandermondeExpansion:
    """Tournament sum split by transitivity; total is their sum."""

    n: int
    weighted: bool
    total: Polynomial
    transitive_part: Polynomial
    cyclic_part: Polynomial


def vandermonde_product(n: int, weighted: bool = False,
                        max_n: int = PRODUCT_BOUND) -> Polynomial:
    """Fully expanded product over pairs i < j."""
    if n > max_n:
        raise BoundExceeded(f"product expansion above bound {max_n}")
    result = ONE
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            weight = qpow(2 * (j - i)) if weighted else ONE
            result = result * (xvar(i) + lpow(1) * weight * xvar(j))
    return result


def chi_monomial(g: Tournament, weighted: bool = True) -> Polynomial:
    """The tournament's monomial: l^length * q^beta * prod x_j^outdeg."""
    xs = {j: d for j, d in enumerate(outdegrees(g), start=1) if d}
    qh = 2 * t_beta(g) if weighted else 0
    return Polynomial.monomial(1, qh=qh, le=t_length(g), xs=xs)


def tournament_sum(n: int, weighted: bool = False,
                   max_n: int = SUM_BOUND) -> VandermondeExpansion:
    """Sum the tournament monomials, split into transitive and cyclic parts."""
    if n > max_n:
        raise BoundExceeded(f"tournament sum above bound {max_n}")
    trans: dict[tuple, int] = {}
    cyc: dict[tuple, int] = {}
    for g in enumerate_tn(n):
        mono = chi_monomial(g, weighted)
        ((key, coeff),) = mono._terms.items()
        acc = trans if is_transitive(g) else cyc
        acc[key] = acc.get(key, 0) + coeff
    transitive_part = Polynomial(trans)
    cyclic_part = Polynomial(cyc)
    return VandermondeExpansion(
        n=n,
        weighted=weighted,
        total=transitive_part + cyclic_part,
        transitive_part=transitive_part,
        cyclic_part=cyclic_part,
    )


def vanishing_check(n: int, max_n: int = SUM_BOUND) -> Polynomial:
    """Cyclic part at x = 1, l = -1; the result is the zero polynomial."""
    if n > max_n:
        raise BoundExceeded(f"vanishing check above bound {max_n}")
    expansion = tournament_sum(n, weighted=True, max_n=max_n)
    return expansion.cyclic_part.subs(lam=-1, all_x=1)
