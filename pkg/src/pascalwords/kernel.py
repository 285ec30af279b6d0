"""Exact integer combinatorial primitives shared by every other module.

Everything here is pure, deterministic, and computed in arbitrary-precision
integer arithmetic; there is no floating point anywhere in this package.
"""

import itertools
import math
from typing import Iterator


def binomial(u: int, v: int) -> int:
    """Binomial coefficient C(u, v), with C(u, v) = 0 for v < 0 or v > u.

    The zero convention matters: the summation formulas downstream rely on
    out-of-range terms vanishing rather than erroring.
    """
    if u < 0:
        raise ValueError(f"upper index must be nonnegative, got {u}")
    if v < 0 or v > u:
        return 0
    return math.comb(u, v)


def double_factorial_odd(n: int) -> int:
    """(2n-1)!! = 1*3*5*...*(2n-1), for n >= 1."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return math.prod(range(1, 2 * n, 2))


def rising_even_product(i: int, j: int) -> int:
    """Product of j factors i*(i+2)*...*(i+2j-2), stepping by 2.

    Returns 1 for j = 0 (empty product); returns 0 whenever i = 0 and j > 0.
    """
    if i < 0 or j < 0:
        raise ValueError(f"arguments must be nonnegative, got ({i}, {j})")
    return math.prod(range(i, i + 2 * j, 2))


def compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Yield every ordered k-tuple of positive integers summing to n.

    Tuples come out in lexicographic order; the stream is empty when k > n.
    There are C(n-1, k-1) of them in total.
    """
    if n < 1 or k < 1:
        raise ValueError(f"n and k must be >= 1, got ({n}, {k})")
    # Each composition corresponds to a set of k-1 cut points in 1..n-1.
    for cuts in itertools.combinations(range(1, n), k - 1):
        bounds = (0, *cuts, n)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))
