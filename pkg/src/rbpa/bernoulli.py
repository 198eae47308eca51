"""Poly-Bernoulli numbers, their negative-multi-index generalization,
and the shifted U variant.

Index convention: a MultiIndex (j_1, ..., j_b) of non-negative entries
always denotes the upper index tuple (-j_1, ..., -j_b), where the
values are integers. Routes that accept genuine positive upper indices
(where values become rationals) take the actual signed indices and say
so in their name or docstring.

Three independent routes to the same numbers live here:
* the mu recursion (a finite signed combination of powers),
* a truncated expansion in powers of 1 - e^{-m} ("li oracle"),
* for the U variant, a finite Stirling-weighted sum and the binomial
  shift of the B values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .combinat import binomial, factorial, int_pow, stirling2
from .egf import Egf, exp_series, one

MultiIndex = tuple  # tuple[int, ...], entries >= 0, length >= 1


def as_multi_index(entries: Sequence[int]) -> MultiIndex:
    idx = tuple(int(e) for e in entries)
    if not idx:
        raise ValueError("a multi-index needs at least one entry")
    if any(e < 0 for e in idx):
        raise ValueError(f"multi-index entries must be >= 0, got {idx}")
    return idx


@dataclass(frozen=True)
class MuTable:
    """Signed integer weights mu_0..mu_j attached to one multi-index.

    The represented number family is sum_s mu_s (s+b)^n, b = len(index).
    mu_0 is 1 for the all-zero index and 0 otherwise; the weight j is
    the entry sum.
    """

    index: MultiIndex
    weight: int
    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.weight != sum(self.index):
            raise ValueError("weight must equal the entry sum")
        if len(self.coefficients) != self.weight + 1:
            raise ValueError("need exactly weight+1 coefficients")
        expected_head = 1 if all(e == 0 for e in self.index) else 0
        if self.coefficients[0] != expected_head:
            raise ValueError(f"mu_0 must be {expected_head} for {self.index}")


def _increment_last(coeffs: tuple[int, ...], b: int) -> tuple[int, ...]:
    # raising the last index entry by one: new_s = (s+b-1) prev_{s-1} - s prev_s
    prev = coeffs
    out = []
    for s in range(len(prev) + 1):
        left = prev[s - 1] if s >= 1 else 0
        here = prev[s] if s < len(prev) else 0
        out.append((s + b - 1) * left - s * here)
    return tuple(out)


@lru_cache(maxsize=None)
def mu_table(idx: MultiIndex) -> MuTable:
    """Build the mu weights entry by entry, left to right.

    The first entry seeds mu_s = (-1)^{s+j_1} s! {j_1 brace s}; each
    later entry is appended as zero (which leaves the weights alone)
    and then raised to its value one step at a time.
    """
    idx = as_multi_index(idx)
    j1 = idx[0]
    coeffs = tuple(
        (-1) ** (s + j1) * factorial(s) * stirling2(j1, s)
        for s in range(j1 + 1)
    )
    for pos in range(1, len(idx)):
        b = pos + 1
        for _ in range(idx[pos]):
            coeffs = _increment_last(coeffs, b)
    return MuTable(index=idx, weight=sum(idx), coefficients=coeffs)


def multi_poly_bernoulli(idx: Sequence[int], n: int) -> int:
    """B for upper index (-j_1, ..., -j_b): sum_s mu_s (s+b)^n.

    The all-zero index falls outside the mu recursion and is b^n (its
    generating function is e^{bm}).
    """
    idx = as_multi_index(idx)
    if n < 0:
        raise ValueError("n must be >= 0")
    b = len(idx)
    if all(e == 0 for e in idx):
        return int_pow(b, n)
    table = mu_table(idx)
    return sum(
        table.coefficients[s] * int_pow(s + b, n)
        for s in range(1, table.weight + 1)
    )


def poly_bernoulli(k: int, n: int) -> Fraction:
    """B with a single upper index k, any sign.

    Stirling-reduced finite form sum_s (-1)^{n+s} s! {n brace s} / (s+1)^k;
    integral for k <= 0.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    total = Fraction(0)
    for s in range(n + 1):
        numerator = (-1) ** (n + s) * factorial(s) * stirling2(n, s)
        if k > 0:
            total += Fraction(numerator, int_pow(s + 1, k))
        else:
            total += numerator * int_pow(s + 1, -k)
    return total


def poly_bernoulli_double_sum(k: int, n: int, slack: int = 3) -> Fraction:
    """The same number as a literal double sum, kept for cross-checking.

    sum_s (s+1)^{-k} sum_i C(s,i)(-1)^{s-i}(i-s)^n, where the inner sum
    vanishes for s > n; `slack` extra outer terms are included so the
    vanishing is exercised rather than assumed.
    """
    if n < 0 or slack < 0:
        raise ValueError("n and slack must be >= 0")
    total = Fraction(0)
    for s in range(n + slack + 1):
        inner = sum(
            binomial(s, i) * (-1) ** (s - i) * int_pow(i - s, n)
            for i in range(s + 1)
        )
        if k > 0:
            total += Fraction(inner, int_pow(s + 1, k))
        else:
            total += inner * int_pow(s + 1, -k)
    return total


# expansion in powers of z = 1 - e^{-m}


@lru_cache(maxsize=None)
def _z_power_rows(order: int) -> tuple[tuple[int, ...], ...]:
    """Coefficient rows of (1 - e^{-m})^p for p = 0..order.

    Row p starts at order p, so higher powers never reach coefficient
    n <= order and are not needed.
    """
    z = one(order) - exp_series(-1, order)
    rows = []
    power = one(order)
    for _ in range(order + 1):
        rows.append(tuple(power.coeff_int(n) for n in range(order + 1)))
        power = power * z
    return tuple(rows)


def _z_coeff(p: int, n: int) -> int:
    if p > n:
        return 0
    return _z_power_rows(n)[p][n]


def multi_poly_bernoulli_li_oracle(idx: Sequence[int], n: int) -> int:
    """Independent value from the truncated 1 - e^{-m} expansion.

    Sums s_1^{j_1} ... s_b^{j_b} times coefficient n of
    (1 - e^{-m})^{s_b - b} over all 0 < s_1 < ... < s_b <= n + b;
    larger s_b contributes a series starting past order n.
    """
    idx = as_multi_index(idx)
    if n < 0:
        raise ValueError("n must be >= 0")
    b = len(idx)
    total = 0
    for chain in combinations(range(1, n + b + 1), b):
        weight = 1
        for s_i, j_i in zip(chain, idx):
            weight *= int_pow(s_i, j_i)
        total += weight * _z_coeff(chain[-1] - b, n)
    return total


def multi_poly_bernoulli_li_sequence(idx: Sequence[int], n_max: int) -> tuple[int, ...]:
    """Values for n = 0..n_max from the same expansion, reorganized.

    The chain sum over 0 < s_1 < ... < s_b = t is folded into prefix
    sums, which is the only change from multi_poly_bernoulli_li_oracle;
    needed because the literal tuple enumeration is hopeless at the
    window sizes the last-digit checks use.
    """
    idx = as_multi_index(idx)
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    b = len(idx)
    t_max = n_max + b
    chain = [int_pow(t, idx[0]) for t in range(t_max + 1)]
    chain[0] = 0
    for depth in range(1, b):
        running = 0
        nxt = [0] * (t_max + 1)
        for t in range(1, t_max + 1):
            running += chain[t - 1]
            nxt[t] = int_pow(t, idx[depth]) * running
        chain = nxt
    rows = _z_power_rows(n_max)
    values = []
    for n in range(n_max + 1):
        total = 0
        for t in range(b, n + b + 1):
            total += chain[t] * rows[t - b][n]
        values.append(total)
    return tuple(values)


def w_family(r: int, n: int) -> int:
    """W_r(n) = 2 r^n - (r-1)^n, the two-free-choices closed form."""
    if r < 1:
        raise ValueError("w_family needs r >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    return 2 * int_pow(r, n) - int_pow(r - 1, n)


# U numbers: the B family shifted by one more e^{-m} factor


@lru_cache(maxsize=None)
def _chain_power_rows(indices: tuple, t_max: int) -> tuple[Fraction, ...]:
    """T_b(t) = sum over 0 < s_1 < ... < s_b = t of prod factor(s_i, k_i).

    factor(t, k) is t^{-k} as an exact rational; indices are the actual
    signed upper indices. Built depth by depth with running prefix
    sums.
    """

    def factor(t: int, k: int) -> Fraction:
        if k > 0:
            return Fraction(1, int_pow(t, k))
        return Fraction(int_pow(t, -k))

    chain = [Fraction(0)] * (t_max + 1)
    for t in range(1, t_max + 1):
        chain[t] = factor(t, indices[0])
    for depth in range(1, len(indices)):
        running = Fraction(0)
        nxt = [Fraction(0)] * (t_max + 1)
        for t in range(1, t_max + 1):
            running += chain[t - 1]
            nxt[t] = factor(t, indices[depth]) * running
        chain = nxt
    return tuple(chain)


def u_stirling_sum(indices: Sequence[int], n: int) -> Fraction:
    """U for arbitrary signed upper indices, as a finite Stirling sum.

    (-1)^{n+1} sum_{t=b}^{n+b} T_b(t) (-1)^{t-b+1} (t-b)! {n+1 brace t-b+1},
    with T_b the chain sums over increasing tuples ending at t.
    """
    idx = tuple(int(e) for e in indices)
    if not idx:
        raise ValueError("need at least one index entry")
    if n < 0:
        raise ValueError("n must be >= 0")
    b = len(idx)
    chain = _chain_power_rows(idx, n + b)
    total = Fraction(0)
    for t in range(b, n + b + 1):
        total += (
            chain[t]
            * (-1) ** (t - b + 1)
            * factorial(t - b)
            * stirling2(n + 1, t - b + 1)
        )
    return (-1) ** (n + 1) * total


def u_number(idx: Sequence[int], n: int) -> int:
    """U for upper index (-j_1, ..., -j_b); always an integer."""
    idx = as_multi_index(idx)
    value = u_stirling_sum(tuple(-e for e in idx), n)
    if value.denominator != 1:
        raise ArithmeticError(
            f"U at non-positive indices must be integral, got {value}"
        )
    return value.numerator


def u_via_shift(idx: Sequence[int], n: int) -> int:
    """U as the alternating binomial shift of the B values.

    Multiplying a generating function by e^{-m} turns coefficients B_s
    into sum_s C(n,s)(-1)^{n-s} B_s.
    """
    idx = as_multi_index(idx)
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum(
        binomial(n, s) * (-1) ** (n - s) * multi_poly_bernoulli(idx, s)
        for s in range(n + 1)
    )


def u_from_mu(idx: Sequence[int], n: int) -> int:
    """U from the mu weights directly: sum_s mu_s (s+b-1)^n.

    Shifting sum_s mu_s (s+b)^n by e^{-m} lowers every power base by
    one; the all-zero index gives (b-1)^n.
    """
    idx = as_multi_index(idx)
    if n < 0:
        raise ValueError("n must be >= 0")
    b = len(idx)
    if all(e == 0 for e in idx):
        return int_pow(b - 1, n)
    table = mu_table(idx)
    return sum(
        table.coefficients[s] * int_pow(s + b - 1, n)
        for s in range(1, table.weight + 1)
    )


def corollary_convolution_check(j: int, b: int, n: int) -> bool:
    """Does the b-position index (j, 0, ..., 0) split as a convolution?

    Tests multi_poly_bernoulli((j, 0^{b-1}), n) against
    sum_s C(n,s) B^{(0^{b-1})}_s B^{(-j)}_{n-s}; the b = 1 edge reads
    the empty-index factor as [s = 0].
    """
    if b < 1:
        raise ValueError("b must be >= 1")
    if j < 0 or n < 0:
        raise ValueError("j and n must be >= 0")
    lhs = multi_poly_bernoulli((j,) + (0,) * (b - 1), n)
    rhs = Fraction(0)
    for s in range(n + 1):
        if b == 1:
            zeros_factor = 1 if s == 0 else 0
        else:
            zeros_factor = multi_poly_bernoulli((0,) * (b - 1), s)
        if zeros_factor:
            rhs += binomial(n, s) * zeros_factor * poly_bernoulli(-j, n - s)
    return lhs == rhs


def reciprocal_coefficient(r: int, n: int) -> int:
    """Coefficient n of the reciprocal of the r-restricted one-free series.

    The reciprocal of e^{rm}/(2-e^m) is (2-e^m)e^{-rm}; its n-th
    coefficient is (-1)^n W_r(n), which is how the W family shows up as
    reciprocal coefficients.
    """
    if r < 0 or n < 0:
        raise ValueError("r and n must be >= 0")
    series = exp_series(r, n) * (2 * one(n) - exp_series(1, n)).reciprocal()
    return series.reciprocal().coeff_int(n)
