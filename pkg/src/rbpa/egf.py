"""Truncated exponential generating functions over the rationals.

An Egf of order N stores the factorial-normalized coefficients
a_0, ..., a_N of sum_n a_n x^n / n!. All arithmetic is exact: products
are binomial convolutions and reciprocals are computed by the standard
triangular solve. Mixed-order arithmetic is an error rather than a
silent truncation, so every pipeline fixes one order up front.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .combinat import binomial

Scalar = Union[int, Fraction]


class OrderMismatchError(ValueError):
    """Arithmetic between series truncated at different orders."""


class ZeroConstantTermError(ZeroDivisionError):
    """Reciprocal of a series with a_0 == 0."""


class NotAnIntegerError(ValueError):
    """An integer coefficient was requested but the value is a proper fraction."""


@dataclass(frozen=True)
class Egf:
    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError(f"order must be >= 0, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"need {self.order + 1} coefficients for order {self.order}, "
                f"got {len(self.coeffs)}"
            )
        object.__setattr__(
            self, "coeffs", tuple(Fraction(c) for c in self.coeffs)
        )

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Scalar]) -> "Egf":
        cs = tuple(Fraction(c) for c in coeffs)
        return cls(order=len(cs) - 1, coeffs=cs)

    def _check_order(self, other: "Egf") -> None:
        if self.order != other.order:
            raise OrderMismatchError(
                f"orders differ: {self.order} vs {other.order}"
            )

    def coeff(self, n: int) -> Fraction:
        """n-th factorial-normalized coefficient, i.e. n! [x^n]."""
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} outside order {self.order}")
        return self.coeffs[n]

    def coeff_int(self, n: int) -> int:
        c = self.coeff(n)
        if c.denominator != 1:
            raise NotAnIntegerError(f"coefficient {n} is {c}, not an integer")
        return c.numerator

    def __add__(self, other: "Egf") -> "Egf":
        if not isinstance(other, Egf):
            return NotImplemented
        self._check_order(other)
        return Egf(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Egf") -> "Egf":
        if not isinstance(other, Egf):
            return NotImplemented
        self._check_order(other)
        return Egf(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Egf":
        return Egf(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other: Union["Egf", Scalar]) -> "Egf":
        if isinstance(other, Egf):
            self._check_order(other)
            a, b = self.coeffs, other.coeffs
            prod = tuple(
                sum(binomial(n, s) * a[s] * b[n - s] for s in range(n + 1))
                for n in range(self.order + 1)
            )
            return Egf(self.order, prod)
        if isinstance(other, (int, Fraction)):
            return Egf(self.order, tuple(Fraction(other) * a for a in self.coeffs))
        return NotImplemented

    def __rmul__(self, other: Scalar) -> "Egf":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> "Egf":
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a non-negative int, got {k!r}")
        result = one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def reciprocal(self) -> "Egf":
        """Multiplicative inverse as a truncated series.

        q_0 = 1/a_0 and for n >= 1
        q_n = -(1/a_0) * sum_{s=1}^{n} C(n, s) a_s q_{n-s}.
        """
        a = self.coeffs
        if a[0] == 0:
            raise ZeroConstantTermError("cannot invert a series with zero constant term")
        inv0 = Fraction(1) / a[0]
        q: list[Fraction] = [inv0]
        for n in range(1, self.order + 1):
            acc = Fraction(0)
            for s in range(1, n + 1):
                acc += binomial(n, s) * a[s] * q[n - s]
            q.append(-inv0 * acc)
        return Egf(self.order, tuple(q))


def one(order: int) -> Egf:
    return Egf(order, (Fraction(1),) + (Fraction(0),) * order)


def exp_series(rate: int, order: int) -> Egf:
    """e^{rate * x} truncated at the given order: coefficients rate^n."""
    return Egf(order, tuple(Fraction(rate) ** n for n in range(order + 1)))


# function-style surface, one name per operation


def egf_exp_linear(r: int, order: int) -> Egf:
    return exp_series(r, order)


def egf_add(f: Egf, g: Egf) -> Egf:
    return f + g


def egf_scale(c: Scalar, f: Egf) -> Egf:
    return f * c


def egf_mul(f: Egf, g: Egf) -> Egf:
    return f * g


def egf_pow(f: Egf, k: int) -> Egf:
    return f ** k


def egf_reciprocal(f: Egf) -> Egf:
    return f.reciprocal()


def egf_coeff_int(f: Egf, n: int) -> int:
    return f.coeff_int(n)
