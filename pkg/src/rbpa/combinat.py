"""Small exact-arithmetic combinatorial primitives shared by every module.

Everything here returns plain Python ints. No floats anywhere; callers
that need rationals wrap these in fractions.Fraction themselves.
"""

from __future__ import annotations

import math
from functools import lru_cache


def binomial(n: int, k: int) -> int:
    """C(n, k) with C(n, k) = 0 for k < 0 or k > n.

    n must be non-negative; the identities in this package never need
    negative upper arguments and a silent generalized binomial would
    mask indexing bugs.
    """
    if n < 0:
        raise ValueError(f"binomial: n must be >= 0, got {n}")
    if k < 0:
        return 0
    return math.comb(n, k)


@lru_cache(maxsize=None)
def stirling2_row(n: int) -> tuple[int, ...]:
    """Row n of the Stirling set-number triangle: ({n,0}, {n,1}, ..., {n,n}).

    Triangle recurrence {n,k} = k*{n-1,k} + {n-1,k-1}.
    """
    if n < 0:
        raise ValueError(f"stirling2_row: n must be >= 0, got {n}")
    if n == 0:
        return (1,)
    prev = stirling2_row(n - 1)
    row = []
    for k in range(n + 1):
        up = prev[k] if k < n else 0
        left = prev[k - 1] if k >= 1 else 0
        row.append(k * up + left)
    return tuple(row)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind {n, k}; zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"stirling2: n must be >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return stirling2_row(n)[k]


def int_pow(base: int, exp: int) -> int:
    """base ** exp for exp >= 0, with 0 ** 0 == 1."""
    if exp < 0:
        raise ValueError(f"int_pow: exp must be >= 0, got {exp}")
    return base ** exp


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial: n must be >= 0, got {n}")
    return math.factorial(n)
