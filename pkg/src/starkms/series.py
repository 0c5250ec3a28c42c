"""Truncated formal power series in the deformation parameter.

A :class:`FormalSeries` holds exactly K+1 coefficients (orders 0..K) drawn
from one coefficient algebra: a function backend, :class:`ExactScalar`, or
plain ``complex`` for the float backend.  Missing orders are explicit
zeros; everything beyond order K is silently discarded, which is the
defining behaviour of truncated formal calculus, not an error.

Arithmetic results always carry the minimum truncation order of their
inputs.
"""

from __future__ import annotations

from .errors import BackendDomainError
from .scalars import ExactScalar


def coeff_is_zero(c):
    if isinstance(c, ExactScalar):
        return c.is_zero()
    if isinstance(c, (int, float, complex)):
        return c == 0
    return c.is_zero()


def coeff_conjugate(c):
    return c.conjugate()


def _zero_like(c):
    return c * 0


class FormalSeries:
    __slots__ = ("coefficients", "truncation_order")

    def __init__(self, coefficients, truncation_order=None):
        coefficients = tuple(coefficients)
        if truncation_order is None:
            truncation_order = len(coefficients) - 1
        if len(coefficients) != truncation_order + 1:
            raise ValueError(
                f"need exactly {truncation_order + 1} coefficients, got {len(coefficients)}"
            )
        self.coefficients = coefficients
        self.truncation_order = truncation_order

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_function(cls, f, order):
        """Series with lambda^0 coefficient ``f`` and zeros above."""
        zero = _zero_like(f)
        return cls((f,) + (zero,) * order, order)

    @classmethod
    def single_order(cls, f, r, order):
        """Series equal to ``f`` at lambda-order r and zero elsewhere."""
        if r > order:
            raise ValueError("order of the coefficient exceeds the truncation")
        zero = _zero_like(f)
        coeffs = [zero] * (order + 1)
        coeffs[r] = f
        return cls(coeffs, order)

    # -- structure ---------------------------------------------------------

    def __len__(self):
        return len(self.coefficients)

    def __getitem__(self, r):
        return self.coefficients[r]

    def __iter__(self):
        return iter(self.coefficients)

    def truncate(self, order):
        if order >= self.truncation_order:
            return self
        return FormalSeries(self.coefficients[: order + 1], order)

    def map(self, fn):
        return FormalSeries(tuple(fn(c) for c in self.coefficients), self.truncation_order)

    # -- ring operations ---------------------------------------------------

    def _common_order(self, other):
        return min(self.truncation_order, other.truncation_order)

    def __add__(self, other):
        if not isinstance(other, FormalSeries):
            return NotImplemented
        k = self._common_order(other)
        return FormalSeries(
            tuple(self.coefficients[r] + other.coefficients[r] for r in range(k + 1)), k
        )

    def __sub__(self, other):
        if not isinstance(other, FormalSeries):
            return NotImplemented
        k = self._common_order(other)
        return FormalSeries(
            tuple(self.coefficients[r] - other.coefficients[r] for r in range(k + 1)), k
        )

    def __neg__(self):
        return self.map(lambda c: -c)

    def __mul__(self, other):
        """Cauchy product truncated at the minimum input order."""
        if not isinstance(other, FormalSeries):
            return NotImplemented
        k = self._common_order(other)
        out = []
        for r in range(k + 1):
            acc = None
            for s in range(r + 1):
                term = self.coefficients[s] * other.coefficients[r - s]
                acc = term if acc is None else acc + term
            out.append(acc)
        return FormalSeries(tuple(out), k)

    def scale(self, scalar):
        """Multiply by a scalar or, Cauchy-style, by a scalar series."""
        if isinstance(scalar, FormalSeries):
            k = self._common_order(scalar)
            out = []
            for r in range(k + 1):
                acc = None
                for s in range(r + 1):
                    term = scalar.coefficients[s] * self.coefficients[r - s]
                    acc = term if acc is None else acc + term
                out.append(acc)
            return FormalSeries(tuple(out), k)
        return self.map(lambda c: scalar * c)

    def shift(self, r):
        """Multiply by lambda^r (top coefficients fall off the truncation)."""
        if r == 0:
            return self
        zero = _zero_like(self.coefficients[0])
        coeffs = (zero,) * r + self.coefficients[: self.truncation_order + 1 - r]
        return FormalSeries(coeffs, self.truncation_order)

    def conjugate(self):
        """Coefficient-wise conjugation; the deformation parameter stays real."""
        return self.map(coeff_conjugate)

    # -- predicates ----------------------------------------------------------

    def is_zero(self):
        return all(coeff_is_zero(c) for c in self.coefficients)

    def lowest_order(self):
        """Smallest order with a nonzero coefficient, or None for the zero series."""
        for r, c in enumerate(self.coefficients):
            if not coeff_is_zero(c):
                return r
        return None

    def __eq__(self, other):
        if not isinstance(other, FormalSeries):
            return NotImplemented
        return (
            self.truncation_order == other.truncation_order
            and all(
                coeff_is_zero(a - b)
                for a, b in zip(self.coefficients, other.coefficients)
            )
        )

    def __repr__(self):
        inner = ", ".join(repr(c) for c in self.coefficients)
        return f"FormalSeries[K={self.truncation_order}]({inner})"


# -- scalar series helpers ---------------------------------------------------


def scalar_series(values, order=None):
    """Build a series of ExactScalars from rationals/strings/ExactScalars."""
    coeffs = [v if isinstance(v, ExactScalar) else ExactScalar.coerce(v) for v in values]
    if order is not None:
        coeffs += [ExactScalar.zero()] * (order + 1 - len(coeffs))
    return FormalSeries(coeffs)


def scalar_unit(order):
    return FormalSeries.from_function(ExactScalar.one(), order)


def ring_sign(series):
    """Sign of a real scalar series in the ring ordering.

    Zero iff every coefficient vanishes, otherwise the sign of the
    lowest-order nonzero coefficient.
    """
    sign = "zero"
    for c in series.coefficients:
        if not isinstance(c, ExactScalar):
            raise BackendDomainError("ring ordering needs exact scalar coefficients")
        if not c.is_real():
            raise BackendDomainError("ring ordering is defined for real series only")
        if not c.is_zero():
            return "positive" if c.real_sign() > 0 else "negative"
    return sign


def invert_scalar_series(series):
    """Multiplicative inverse of a scalar series with invertible order-0 term."""
    a0 = series.coefficients[0]
    if coeff_is_zero(a0):
        raise BackendDomainError("series with zero order-0 coefficient is not invertible")
    k = series.truncation_order
    inv = [ExactScalar.one() / a0]
    for r in range(1, k + 1):
        acc = ExactScalar.zero()
        for j in range(1, r + 1):
            acc = acc + series.coefficients[j] * inv[r - j]
        inv.append(-(acc / a0))
    return FormalSeries(inv, k)
