"""The p^r_j(n) family: arrangements of an n-set into r restricted and
j free sections, computed by four genuinely independent routes.

* p_egf            coefficient extraction from e^{rm} / (2 - e^m)^j
* p_binomial_shift finite binomial sum over the r = 0 column
* p_recurrence     recursion on j with memoization
* p_series_certified / p_double_sum
                   the two infinite-series forms, made finite by an
                   explicit tail certificate resp. a vanishing-
                   differences truncation

Cross-checks between the routes live in the identity registry; this
module only computes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .combinat import binomial, int_pow
from .egf import Egf, exp_series, one


class CertificationFailureError(ArithmeticError):
    """No truncation index satisfied the tail criterion below the cap."""


@dataclass(frozen=True)
class SequenceTable:
    """Values p^r_j(0..n_max) for one (r, j) family."""

    r: int
    j: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.values or self.values[0] != 1:
            raise ValueError("p(0) must be 1")
        if any(v < 0 for v in self.values):
            raise ValueError("family values are counts, must be >= 0")

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class TailCertificate:
    """Proof record that a series truncation loses less than 1/2."""

    truncation_index: int
    tail_bound: Fraction

    def __post_init__(self) -> None:
        if not self.tail_bound < Fraction(1, 2):
            raise ValueError("tail bound must be < 1/2 for exact rounding")


def two_minus_exp(order: int) -> Egf:
    """The series 2 - e^m: coefficients 2*[n=0] - 1."""
    return 2 * one(order) - exp_series(1, order)


@lru_cache(maxsize=None)
def _p_row(r: int, j: int, n_max: int) -> tuple[int, ...]:
    series = exp_series(r, n_max) * (two_minus_exp(n_max) ** j).reciprocal()
    return tuple(series.coeff_int(n) for n in range(n_max + 1))


def p_egf(r: int, j: int, n_max: int) -> SequenceTable:
    """p^r_j(0..n_max) via the generating function e^{rm}/(2-e^m)^j."""
    if r < 0 or j < 0 or n_max < 0:
        raise ValueError("r, j, n_max must be >= 0")
    return SequenceTable(r=r, j=j, values=_p_row(r, j, n_max))


def p_binomial_shift(r: int, j: int, n: int) -> int:
    """p^r_j(n) = sum_s C(n,s) r^s p^0_j(n-s)."""
    if r < 0 or j < 0 or n < 0:
        raise ValueError("r, j, n must be >= 0")
    base_row = _p_row(0, j, n)
    return sum(
        binomial(n, s) * int_pow(r, s) * base_row[n - s] for s in range(n + 1)
    )


@lru_cache(maxsize=None)
def p_recurrence(r: int, j: int, n: int) -> int:
    """p^r_j(n) = p^r_{j-1}(n) + sum_{s<n} C(n,s) p^r_j(s), base p^r_0 = r^n."""
    if r < 0 or j < 0 or n < 0:
        raise ValueError("r, j, n must be >= 0")
    if j == 0:
        return int_pow(r, n)
    if n == 0:
        return 1
    return p_recurrence(r, j - 1, n) + sum(
        binomial(n, s) * p_recurrence(r, j, s) for s in range(n)
    )


def _shifted_value(base: int, j: int, n: int) -> int:
    """p^base_j(n) for the inner terms of the series forms.

    base can be large (it runs over the series index), so the value is
    assembled from the cached r = 0 row instead of building a fresh
    generating function per base.
    """
    if j == 0:
        return int_pow(base, n)
    row = _p_row(0, j, n)
    return sum(
        binomial(n, s) * int_pow(base, s) * row[n - s] for s in range(n + 1)
    )


def p_double_sum(r: int, j: int, n: int) -> int:
    """p^r_j(n) = sum_k sum_{s<=k} C(k,s)(-1)^s p^{r+k-s}_{j-1}(n), j >= 1.

    The inner alternating sum is the k-th finite difference of a
    degree-n polynomial in the shift variable, so terms with k > n
    vanish; the outer sum is truncated at k = n and the next three
    inner sums are recomputed and checked to be zero.
    """
    if j < 1:
        raise ValueError("the double-sum form needs j >= 1")
    if r < 0 or n < 0:
        raise ValueError("r, n must be >= 0")

    def inner(k: int) -> int:
        return sum(
            binomial(k, s) * (-1) ** s * _shifted_value(r + k - s, j - 1, n)
            for s in range(k + 1)
        )

    total = sum(inner(k) for k in range(n + 1))
    for k in (n + 1, n + 2, n + 3):
        leftover = inner(k)
        if leftover != 0:
            raise ArithmeticError(
                f"inner sum at k={k} should vanish, got {leftover}"
            )
    return total


def _certify_truncation(r: int, j: int, n: int) -> TailCertificate:
    """Least S with a proven tail bound below 1/2.

    Summand s contributes p^{r+s}_{j-1}(n)/2^{s+1} <= 2^{-s/2} once
    (r+j+s)^{n+j+1} <= 2^{s/2}. That inequality is tested in squared
    form at s = S and S+1 together with the ratio condition
    (c+1)^e <= 2 c^e, which makes it persist for every s >= S. The
    geometric tail is then < 4 * 2^{-S/2}, recorded as a slightly
    rounded-up rational.
    """
    e = 2 * (n + j + 1)
    cap = 64 * (n + j + r + 4)
    for t in range(7, cap + 1):
        c = r + j + t
        if (
            c ** e <= 2 ** t
            and (c + 1) ** e <= 2 ** (t + 1)
            and (c + 1) ** e <= 2 * c ** e
        ):
            if t % 2 == 0:
                bound = Fraction(4, 2 ** (t // 2))
            else:
                bound = Fraction(3, 2 ** ((t - 1) // 2))
            return TailCertificate(truncation_index=t, tail_bound=bound)
    raise CertificationFailureError(
        f"no truncation index up to {cap} certified for r={r}, j={j}, n={n}"
    )


def p_series_certified(r: int, j: int, n: int) -> tuple[int, TailCertificate]:
    """p^r_j(n) = (1/2) sum_{s>=0} p^{r+s}_{j-1}(n) / 2^s, j >= 1.

    Sums the series exactly up to a certified truncation index and
    rounds; the certificate's bound < 1/2 makes the rounding exact.
    """
    if j < 1:
        raise ValueError("the series form needs j >= 1")
    if r < 0 or n < 0:
        raise ValueError("r, n must be >= 0")
    cert = _certify_truncation(r, j, n)
    partial = sum(
        (
            Fraction(_shifted_value(r + s, j - 1, n), 2 ** (s + 1))
            for s in range(cert.truncation_index)
        ),
        Fraction(0),
    )
    value = math.floor(partial + Fraction(1, 2))
    return value, cert


def p_inclusion_exclusion(r: int, j: int, n: int) -> int:
    """The alternating sum sum_{s=1}^{r} C(r,s)(-1)^{s+1} p^s_{j-s}(n).

    By inclusion-exclusion over which marked sections are collapsed,
    this counts arrangements with j free sections in which AT LEAST ONE
    of r marked sections holds at most one block. It coincides with
    p^r_{j-r}(n), the count with all r marked sections restricted, only
    for r = 1.
    """
    if not 1 <= r <= j:
        raise ValueError("need 1 <= r <= j")
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum(
        binomial(r, s) * (-1) ** (s + 1) * _p_row(s, j - s, n)[n]
        for s in range(1, r + 1)
    )


def last_digit_cycle_check(values, offset: int) -> bool:
    """True iff value(n+4) == value(n) mod 10 across the window.

    values[i] is the sequence member at index offset + i; the window
    must span at least indices offset..offset+8 so every residue class
    mod 4 is compared at least once.
    """
    vals = list(values)
    if len(vals) < 9:
        raise ValueError("need at least 9 consecutive values")
    if offset < 0:
        raise ValueError("offset must be >= 0")
    return all(
        vals[i] % 10 == vals[i + 4] % 10 for i in range(len(vals) - 4)
    )
