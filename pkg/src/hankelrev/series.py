"""Exact truncated formal power series over rational coefficients.

A :class:`PowerSeries` stores coefficients 0..order as `fractions.Fraction`
values; all arithmetic is exact and nothing is ever rounded.  Binary
operations insist on equal truncation orders.  Silent extension or
truncation is how precision bugs sneak into determinant work downstream,
so mixing orders raises instead.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Union

Scalar = Union[int, Fraction]


def coefficient_string(value: Fraction) -> str:
    """Render a coefficient as ``num`` or ``num/den``, exact at any magnitude."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class PowerSeries:
    """A formal power series truncated at a fixed order.

    ``coeffs[n]`` is the coefficient of x^n; the order is ``len(coeffs) - 1``.
    Instances are immutable and safe to share across threads.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        normalized = tuple(Fraction(c) for c in self.coeffs)
        if not normalized:
            raise ValueError("series must carry at least the constant coefficient")
        object.__setattr__(self, "coeffs", normalized)

    # ------------------------------------------------------------------
    # construction

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "PowerSeries":
        return cls((Fraction(value),) + (Fraction(0),) * order)

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls.constant(0, order)

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls.constant(1, order)

    @classmethod
    def identity(cls, order: int) -> "PowerSeries":
        """The series x, truncated to the given order."""
        if order == 0:
            return cls.zero(0)
        return cls((Fraction(0), Fraction(1)) + (Fraction(0),) * (order - 1))

    @classmethod
    def from_polynomial(cls, coeffs: Iterable[Scalar], order: int) -> "PowerSeries":
        """Pad or truncate a coefficient list to the requested order."""
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = [Fraction(c) for c in coeffs]
        if len(cs) < order + 1:
            cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        return cls(tuple(cs[: order + 1]))

    @classmethod
    def from_rational(
        cls,
        numerator: Iterable[Scalar],
        denominator: Iterable[Scalar],
        order: int,
    ) -> "PowerSeries":
        """Expand the rational function numerator/denominator.

        Both arguments are polynomial coefficient lists, constant term first.
        """
        den = [Fraction(c) for c in denominator]
        if not den or den[0] == 0:
            raise ValueError("zero constant denominator")
        num_series = cls.from_polynomial(numerator, order)
        den_series = cls.from_polynomial(den, order)
        return num_series / den_series

    # ------------------------------------------------------------------
    # queries

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coeffs)

    def __repr__(self) -> str:
        inner = ", ".join(coefficient_string(c) for c in self.coeffs)
        return f"PowerSeries([{inner}])"

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None if all are zero."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def integer_coefficients(self) -> list[int]:
        """Coefficients as plain ints; raises if any denominator is not 1."""
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError(
                    f"series has a non-integer coefficient {coefficient_string(c)}"
                )
        return [c.numerator for c in self.coeffs]

    def coefficient_strings(self) -> list[str]:
        return [coefficient_string(c) for c in self.coeffs]

    def to_json(self) -> str:
        """Serialize as a JSON array of exact "num/den" strings."""
        return json.dumps(self.coefficient_strings())

    @classmethod
    def from_json(cls, text: str) -> "PowerSeries":
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(s, str) for s in data):
            raise ValueError("expected a JSON array of coefficient strings")
        return cls(tuple(Fraction(s) for s in data))

    def _require_same_order(self, other: "PowerSeries") -> None:
        if self.order != other.order:
            raise ValueError("incompatible truncation orders")

    # ------------------------------------------------------------------
    # ring operations

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        self._require_same_order(other)
        return PowerSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        self._require_same_order(other)
        return PowerSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(tuple(-c for c in self.coeffs))

    def __mul__(self, other: Union["PowerSeries", Scalar]) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            self._require_same_order(other)
            n = self.order
            out = [Fraction(0)] * (n + 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j in range(n - i + 1):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
            return PowerSeries(tuple(out))
        if isinstance(other, (int, Fraction)):
            scalar = Fraction(other)
            return PowerSeries(tuple(c * scalar for c in self.coeffs))
        return NotImplemented

    def __rmul__(self, other: Scalar) -> "PowerSeries":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other: Union["PowerSeries", Scalar]) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            self._require_same_order(other)
            if other.coeffs[0] == 0:
                raise ValueError("non-invertible series")
            b0 = other.coeffs[0]
            out: list[Fraction] = []
            for m in range(self.order + 1):
                acc = self.coeffs[m]
                for k in range(1, m + 1):
                    bk = other.coeffs[k]
                    if bk:
                        acc -= bk * out[m - k]
                out.append(acc / b0)
            return PowerSeries(tuple(out))
        if isinstance(other, (int, Fraction)):
            scalar = Fraction(other)
            return PowerSeries(tuple(c / scalar for c in self.coeffs))
        return NotImplemented

    # ------------------------------------------------------------------
    # structural operations

    def truncate(self, order: int) -> "PowerSeries":
        if order < 0:
            raise ValueError("order must be non-negative")
        if order > self.order:
            raise ValueError("truncate cannot extend a series")
        return PowerSeries(self.coeffs[: order + 1])

    def shift_down(self, k: int, allow_drop: bool = False) -> "PowerSeries":
        """Divide by x^k, i.e. drop the first k coefficients.

        Dropping a nonzero coefficient changes the series, so it is refused
        unless the caller opts in with ``allow_drop=True``.
        """
        if k < 0:
            raise ValueError("shift must be non-negative")
        if k == 0:
            return self
        if k > self.order:
            raise ValueError(f"cannot shift a series of order {self.order} down by {k}")
        if not allow_drop and any(c != 0 for c in self.coeffs[:k]):
            raise ValueError(
                f"shifting down by {k} drops nonzero coefficients"
                " (pass allow_drop=True to accept)"
            )
        return PowerSeries(self.coeffs[k:])

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        """Substitute ``inner`` for x, by Horner evaluation at equal order.

        Requires ``inner`` to have zero constant term; otherwise the result
        would need infinitely many terms of this series.
        """
        self._require_same_order(inner)
        if inner.coeffs[0] != 0:
            raise ValueError("composition requires zero constant term")
        n = self.order
        result = PowerSeries.constant(self.coeffs[n], n)
        for c in reversed(self.coeffs[:-1]):
            result = result * inner + PowerSeries.constant(c, n)
        return result

    def sqrt(self) -> "PowerSeries":
        """Square root of a series with constant term exactly 1."""
        if self.coeffs[0] != 1:
            raise ValueError("sqrt requires unit constant term")
        n = self.order
        out = [Fraction(1)] + [Fraction(0)] * n
        for m in range(1, n + 1):
            acc = self.coeffs[m]
            for k in range(1, m):
                acc -= out[k] * out[m - k]
            out[m] = acc / 2
        return PowerSeries(tuple(out))

    def revert(self) -> "PowerSeries":
        """Compositional inverse of a series with f0 = 0 and f1 != 0.

        Computed by Lagrange inversion: n * u_n = [x^(n-1)] (x/f)^n.  The
        result u satisfies compose(f, u) = compose(u, f) = x through the
        truncation order; the test suite checks that postcondition with an
        independent composition routine.
        """
        if self.order < 1 or self.coeffs[0] != 0 or self.coeffs[1] == 0:
            raise ValueError("series not reversible")
        n = self.order
        g = self.shift_down(1)  # f/x, invertible constant term
        h = PowerSeries.one(n - 1) / g  # x/f
        out = [Fraction(0), h.coeffs[0]]
        power = h
        for m in range(2, n + 1):
            power = power * h
            out.append(power.coeffs[m - 1] / m)
        return PowerSeries(tuple(out))

    def binomial_ogf(self) -> "PowerSeries":
        """The o.g.f.-level binomial transform (1/(1-x)) * f(x/(1-x)).

        Coefficient n of the result is sum_k C(n, k) * f_k, matching the
        sequence-level transform on integer inputs.
        """
        n = self.order
        if n == 0:
            return self
        shifted_geometric = PowerSeries((Fraction(0),) + (Fraction(1),) * n)
        geometric = PowerSeries((Fraction(1),) * (n + 1))
        return self.compose(shifted_geometric) * geometric
