"""Closed forms for level-1 triangle entries and standalone identity checks.

Every function here evaluates exact integers only. The two central-family
closed forms involve a division that must come out exact; a remainder is a
coding bug and raises immediately rather than rounding.
"""

import math
from dataclasses import dataclass

from .families import CENTRAL, CENTRAL_ADJACENT, DIAGONAL, ROW, FamilySpec
from .kernel import binomial, double_factorial_odd, rising_even_product


@dataclass(frozen=True)
class IdentityResult:
    """Both sides of one identity instance, carried for witness reporting."""

    name: str
    parameters: tuple[int, ...]
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def _exact_div(numerator: int, denominator: int) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ArithmeticError(
            f"division {numerator}/{denominator} is not exact (remainder {remainder})"
        )
    return quotient


def _check_nk(n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")


def row_closed_form(a: int, n: int, k: int) -> int:
    """Level-1 entry for the row family: C(ak, n-k)."""
    if a < 1:
        raise ValueError(f"a must be >= 1, got {a}")
    _check_nk(n, k)
    return binomial(a * k, n - k)


def diagonal_closed_form(a: int, n: int, k: int) -> int:
    """Level-1 entry for the diagonal family: C(n+ak-k-1, ak-1)."""
    if a < 1:
        raise ValueError(f"a must be >= 1, got {a}")
    _check_nk(n, k)
    return binomial(n + a * k - k - 1, a * k - 1)


def central_closed_form(n: int, k: int) -> int:
    """Level-1 entry for the central family.

    1 on the main diagonal; below it, 2^(n-k) * k(k+2)...(k+2(n-k-1)) / (n-k)!.
    """
    _check_nk(n, k)
    if k == n:
        return 1
    j = n - k
    return _exact_div(2**j * rising_even_product(k, j), math.factorial(j))


def central_adjacent_closed_form(n: int, k: int) -> int:
    """Level-1 entry for the central-adjacent family.

    (2^(n-k) / n!) * sum over i of (-1)^(k-i) * C(k, i) * i(i+2)...(i+2n-2).
    """
    _check_nk(n, k)
    alternating = sum(
        (-1) ** (k - i) * binomial(k, i) * rising_even_product(i, n)
        for i in range(k + 1)
    )
    return _exact_div(2 ** (n - k) * alternating, math.factorial(n))


def closed_form(spec: FamilySpec, n: int, k: int) -> int:
    """Dispatch to the family's closed form; custom sequences have none."""
    if spec.kind == ROW:
        return row_closed_form(spec.a, n, k)
    if spec.kind == DIAGONAL:
        return diagonal_closed_form(spec.a, n, k)
    if spec.kind == CENTRAL:
        return central_closed_form(n, k)
    if spec.kind == CENTRAL_ADJACENT:
        return central_adjacent_closed_form(n, k)
    raise ValueError(f"no closed form for {spec.label()}")


def check_binomial_split(u: int, v: int, w: int) -> IdentityResult:
    """C(u,v) split by the position of the w-th chosen element:

    C(u,v) = sum over i from w to u-v+w of C(i-1, w-1) * C(u-i, v-w).

    Reduces to the horizontal recurrence at w = 1 or w = v.
    """
    if not u >= v >= w >= 1:
        raise ValueError(f"need u >= v >= w >= 1, got ({u}, {v}, {w})")
    rhs = sum(
        binomial(i - 1, w - 1) * binomial(u - i, v - w) for i in range(w, u - v + w + 1)
    )
    return IdentityResult("binomial-split", (u, v, w), binomial(u, v), rhs)


def check_double_factorial_product(n: int) -> IdentityResult:
    """(n+1)(n+2)...(2n) = 2^n * (2n-1)!!."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    lhs = math.prod(range(n + 1, 2 * n + 1))
    return IdentityResult(
        "double-factorial-product", (n,), lhs, 2**n * double_factorial_odd(n)
    )


def check_shifted_double_factorial_product(n: int) -> IdentityResult:
    """n(n+1)...(2n-1) = 2^(n-1) * (2n-1)!!."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    lhs = math.prod(range(n, 2 * n))
    return IdentityResult(
        "shifted-double-factorial-product",
        (n,),
        lhs,
        2 ** (n - 1) * double_factorial_odd(n),
    )


def check_alternating_vanishing(k: int, j: int) -> IdentityResult:
    """The alternating sum of C(k,i) against the even rising product vanishes:

    sum over i of (-1)^(k-i) * C(k, i) * i(i+2)...(i+2j-2) = 0, for j < k.
    """
    if k < 1 or j < 0 or j >= k:
        raise ValueError(f"need k >= 1 and 0 <= j < k, got (k={k}, j={j})")
    lhs = sum(
        (-1) ** (k - i) * binomial(k, i) * rising_even_product(i, j)
        for i in range(k + 1)
    )
    return IdentityResult("alternating-vanishing", (k, j), lhs, 0)


def check_power_of_four(n: int) -> IdentityResult:
    """Second column of the central family is a power of four: entry = 4^(n-2)."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return IdentityResult("power-of-four", (n,), central_closed_form(n, 2), 4 ** (n - 2))
