"""Truncated Maclaurin series arithmetic over complex coefficients.

A series is a dense tuple of coefficients indexed by the power of z; every
operation truncates back to the stored order, so retained coefficients are
exact regardless of how the operands were produced.  Coefficients are kept
complex even when real so that rotated functions and complex weights need
no special casing downstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Default order for internal work.  The bound pipelines only consume
# coefficients through z^3; the headroom guards against truncation bugs.
WORK_ORDER = 8

_ELEMENTARY_KINDS = ("exp", "log1p", "sqrt1p", "pow1p")


@dataclass(frozen=True)
class TruncatedSeries:
    """c0 + c1 z + ... + c_n z^n, standing in for a series cut at order n."""

    coeffs: tuple[complex, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) == 0:
            raise ValueError("series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(complex(v) for v in self.coeffs))

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def from_coeffs(cls, values, order: int | None = None) -> "TruncatedSeries":
        """Build a series, padding with zeros or truncating to ``order``."""
        vals = [complex(v) for v in values]
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            vals = vals[: order + 1]
            vals += [0j] * (order + 1 - len(vals))
        return cls(tuple(vals))

    @classmethod
    def constant(cls, value, order: int = WORK_ORDER) -> "TruncatedSeries":
        return cls.from_coeffs([value], order)

    @classmethod
    def zero(cls, order: int = WORK_ORDER) -> "TruncatedSeries":
        return cls.constant(0.0, order)

    @classmethod
    def one(cls, order: int = WORK_ORDER) -> "TruncatedSeries":
        return cls.constant(1.0, order)

    @classmethod
    def z(cls, order: int = WORK_ORDER) -> "TruncatedSeries":
        return cls.from_coeffs([0.0, 1.0], order)

    # ------------------------------------------------------------------
    # basics

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> complex:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def _same_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries.from_coeffs(self.coeffs, order)

    # ------------------------------------------------------------------
    # arithmetic

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            self._same_order(other)
            return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))
        return TruncatedSeries((self.coeffs[0] + other,) + self.coeffs[1:])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, TruncatedSeries):
            self._same_order(other)
            return TruncatedSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))
        return TruncatedSeries((self.coeffs[0] - other,) + self.coeffs[1:])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._same_order(other)
            n = self.order
            out = [0j] * (n + 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j in range(n + 1 - i):
                    out[i + j] += a * other.coeffs[j]
            return TruncatedSeries(tuple(out))
        return TruncatedSeries(tuple(a * other for a in self.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return div(self, other)
        return self * (1.0 / other)

    def __rtruediv__(self, other):
        return div(TruncatedSeries.constant(other, self.order), self)

    # ------------------------------------------------------------------
    # calculus

    def deriv(self) -> "TruncatedSeries":
        """Derivative; the order drops by one (a constant becomes zero)."""
        if self.order == 0:
            return TruncatedSeries((0j,))
        return TruncatedSeries(tuple((k + 1) * c for k, c in enumerate(self.coeffs[1:])))

    def zderiv(self) -> "TruncatedSeries":
        """z * d/dz, which keeps the order; handy for z f'(z) / f(z) quotients."""
        return TruncatedSeries(tuple(k * c for k, c in enumerate(self.coeffs)))

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        return compose(self, inner)


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to the common order; orders must match."""
    if not isinstance(a, TruncatedSeries) or not isinstance(b, TruncatedSeries):
        raise TypeError("mul expects two TruncatedSeries")
    return a * b


def div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Long division: the q with mul(q, b) == a up to the stored order."""
    a._same_order(b)
    if b.coeffs[0] == 0:
        raise ZeroDivisionError("divisor has zero constant term")
    n = a.order
    out = [0j] * (n + 1)
    for k in range(n + 1):
        acc = a.coeffs[k]
        for i in range(k):
            acc -= out[i] * b.coeffs[k - i]
        out[k] = acc / b.coeffs[0]
    return TruncatedSeries(tuple(out))


def compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """outer(inner(z)) truncated at the common order; inner(0) must be 0."""
    outer._same_order(inner)
    if inner.coeffs[0] != 0:
        raise ValueError("inner series must have zero constant term")
    result = TruncatedSeries.constant(outer.coeffs[-1], outer.order)
    for k in range(outer.order - 1, -1, -1):
        result = result * inner + outer.coeffs[k]
    return result


def elementary(kind: str, order: int = WORK_ORDER, exponent: float | None = None) -> TruncatedSeries:
    """Maclaurin series of a named elementary function.

    Supported kinds: ``exp``, ``log1p`` (log(1+z)), ``sqrt1p`` (sqrt(1+z))
    and ``pow1p`` ((1+z)**exponent, which requires ``exponent``).
    """
    if order < 3:
        raise ValueError("order must be at least 3")
    if kind == "exp":
        return TruncatedSeries(tuple(1.0 / math.factorial(k) for k in range(order + 1)))
    if kind == "log1p":
        coeffs = [0.0] + [(-1.0) ** (k + 1) / k for k in range(1, order + 1)]
        return TruncatedSeries(tuple(coeffs))
    if kind == "sqrt1p":
        return elementary("pow1p", order, exponent=0.5)
    if kind == "pow1p":
        if exponent is None:
            raise ValueError("pow1p needs an exponent")
        coeffs = [1.0 + 0j]
        for k in range(1, order + 1):
            coeffs.append(coeffs[-1] * (exponent - k + 1) / k)
        return TruncatedSeries(tuple(coeffs))
    raise ValueError(f"unsupported series kind: {kind!r}")
