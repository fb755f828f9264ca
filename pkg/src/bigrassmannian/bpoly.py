"""Signed bigrassmannian polynomials by four independent routes.

``B_n(q) = sum over w in S_n of (-1)^length(w) q^beta(w)`` equals the
product of (1 - q^k)^(n-k) for k = 1..n-1, satisfies the condensation
recursion B_n = B_{n-1}^2 / B_{n-2} * (1 - q^(n-1)), and is the determinant
of the matrix with entries q^((i-j)^2/2).  The two-variable refinement
B_n(l, q) is the product of (1 + l q^k)^(n-k) and obeys the same recursion
with factor (1 + l q^(n-1)).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BoundExceeded
from .exactpoly import ONE, Polynomial, lpow, qpow
from .permstat import Permutation, length_and_beta
from .bdet import PolyMatrix, bdet_condense

SIGNED_SUM_BOUND = 9
PRODUCT_BOUND = 30
DETERMINANT_BOUND = 12
LAMBDA_Q_BOUND = 15

ROUTES = ("signed-sum", "product", "recursion", "determinant")


@dataclass(frozen=True)
class BnResult:
    n: int
    poly: Polynomial
    route: str


@dataclass(frozen=True)
class RouteAgreement:
    """The four routes side by side with an equality verdict."""

    n: int
    results: tuple[BnResult, ...]
    ok: bool


def bn_signed_sum(n: int, max_n: int = SIGNED_SUM_BOUND) -> Polynomial:
    """Direct signed sum over all n! permutations."""
    if n > max_n:
        raise BoundExceeded(f"signed sum above bound {max_n}")
    acc: dict[tuple, int] = {}
    for word in itertools.permutations(range(1, n + 1)):
        ell, bet = length_and_beta(Permutation(word))
        key = (2 * bet, 0, ())
        acc[key] = acc.get(key, 0) + (-1 if ell % 2 else 1)
    return Polynomial(acc)


def bn_product(n: int, max_n: int = PRODUCT_BOUND) -> Polynomial:
    """Expanded product of (1 - q^k)^(n-k)."""
    if n > max_n:
        raise BoundExceeded(f"product expansion above bound {max_n}")
    result = ONE
    for k in range(1, n):
        result = result * (ONE - qpow(2 * k)) ** (n - k)
    return result


def bn_recursion(n: int, max_n: int = PRODUCT_BOUND) -> Polynomial:
    """Condensation recursion with exact division at every step."""
    if n > max_n:
        raise BoundExceeded(f"recursion above bound {max_n}")
    if n <= 1:
        return ONE
    prev, cur = ONE, ONE - qpow(2)
    for k in range(3, n + 1):
        nxt = (cur * cur).div_exact(prev) * (ONE - qpow(2 * (k - 1)))
        prev, cur = cur, nxt
    return cur


def bn_determinant(n: int, max_n: int = DETERMINANT_BOUND) -> Polynomial:
    """Determinant of the q^((i-j)^2/2) matrix, via condensation."""
    if n > max_n:
        raise BoundExceeded(f"determinant route above bound {max_n}")
    if n == 0:
        return ONE
    return bdet_condense(PolyMatrix.ones(n))


_ROUTE_FUNCS = {
    "signed-sum": bn_signed_sum,
    "product": bn_product,
    "recursion": bn_recursion,
    "determinant": bn_determinant,
}


def bn(n: int, route: str, max_n: int | None = None) -> Polynomial:
    try:
        func = _ROUTE_FUNCS[route]
    except KeyError:
        raise ValueError(f"unknown route {route!r}; choose from {ROUTES}")
    return func(n) if max_n is None else func(n, max_n=max_n)


def verify_all(n: int) -> RouteAgreement:
    """Compute all four routes and report whether they agree."""
    results = tuple(
        BnResult(n=n, poly=_ROUTE_FUNCS[r](n), route=r) for r in ROUTES)
    first = results[0].poly
    return RouteAgreement(
        n=n, results=results, ok=all(r.poly == first for r in results))


def sign_balance(n: int, max_n: int = SIGNED_SUM_BOUND) -> int:
    """Signed sum of beta over S_n; zero for n >= 3."""
    if n > max_n:
        raise BoundExceeded(f"sign balance above bound {max_n}")
    total = 0
    for word in itertools.permutations(range(1, n + 1)):
        ell, bet = length_and_beta(Permutation(word))
        total += -bet if ell % 2 else bet
    return total


def bn_lambda_q(n: int, route: str = "product",
                max_n: int = LAMBDA_Q_BOUND) -> Polynomial:
    """Two-variable refinement: product of (1 + l q^k)^(n-k).

    The recursion route divides exactly at every step and must agree; the
    l = -1 specialization is bn_product(n).
    """
    if n > max_n:
        raise BoundExceeded(f"two-variable polynomial above bound {max_n}")
    if route == "product":
        result = ONE
        for k in range(1, n):
            result = result * (ONE + lpow(1) * qpow(2 * k)) ** (n - k)
        return result
    if route == "recursion":
        if n <= 1:
            return ONE
        prev, cur = ONE, ONE + lpow(1) * qpow(2)
        for k in range(3, n + 1):
            nxt = (cur * cur).div_exact(prev) * (ONE + lpow(1) * qpow(2 * (k - 1)))
            prev, cur = cur, nxt
        return cur
    raise ValueError(f"unknown route {route!r}; choose 'product' or 'recursion'")
