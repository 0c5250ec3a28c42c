"""Exact scalar arithmetic for the workbench.

The coefficient fields of all exact backends are built from Gaussian
rationals (a + b*i with a, b rational).  Two symbolic extensions keep
otherwise-irrational quantities exact:

* a power of pi, carried as a single integer grade per scalar (phase-space
  volume integrals on R^{2n} are rational multiples of pi^n);
* polynomials in one formal time symbol ``tau`` together with ``cos(tau)``
  and ``sin(tau)``, reduced modulo sin^2 = 1 - cos^2 (affine-symplectic
  flows of quadratic Hamiltonians have entries of exactly this shape).

A scalar is a finite sum of terms ``(re + im*i) * tau^a * cos^j * sin^k``
with k in {0, 1}, all times ``pi^pi_power``.  Plain Gaussian rationals are
the special case with a single (0, 0, 0) term and grade 0.
"""

from __future__ import annotations

from fractions import Fraction
from math import cos, pi, sin
from numbers import Rational

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class ExactScalar:
    __slots__ = ("pi_power", "terms")

    def __init__(self, terms=None, pi_power=0):
        cleaned = {}
        if terms:
            for key, (re, im) in terms.items():
                if re or im:
                    cleaned[key] = (re, im)
        self.terms = cleaned
        self.pi_power = pi_power if cleaned else 0

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rational(cls, re, im=0, pi_power=0):
        re = _as_fraction(re)
        im = _as_fraction(im)
        return cls({(0, 0, 0): (re, im)}, pi_power)

    @classmethod
    def zero(cls):
        return _EXACT_ZERO

    @classmethod
    def one(cls):
        return _EXACT_ONE

    @classmethod
    def i(cls):
        return _EXACT_I

    @classmethod
    def tau(cls):
        """The formal time symbol."""
        return cls({(1, 0, 0): (_ONE, _ZERO)})

    @classmethod
    def cos_tau(cls):
        return cls({(0, 1, 0): (_ONE, _ZERO)})

    @classmethod
    def sin_tau(cls):
        return cls({(0, 0, 1): (_ONE, _ZERO)})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, ExactScalar):
            return x
        if isinstance(x, (int, Fraction, Rational, str)):
            return cls.from_rational(_as_fraction(x))
        if isinstance(x, complex):
            raise TypeError("floats are not exact; build an ExactScalar from rationals")
        raise TypeError(f"cannot coerce {x!r} to ExactScalar")

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_plain(self):
        """True when the value is a bare Gaussian rational (no pi, tau, trig)."""
        if not self.terms:
            return True
        return self.pi_power == 0 and set(self.terms) == {(0, 0, 0)}

    def is_symbol_free(self):
        return not self.terms or set(self.terms) == {(0, 0, 0)}

    def is_real(self):
        return all(im == 0 for (_, im) in self.terms.values())

    # -- accessors ---------------------------------------------------------

    def rational_parts(self):
        """(re, im) of a symbol-free scalar, ignoring the pi grade."""
        if not self.terms:
            return (_ZERO, _ZERO)
        if not self.is_symbol_free():
            raise ValueError("scalar carries tau/trig symbols")
        return self.terms[(0, 0, 0)]

    def real_sign(self):
        """Sign of a real, symbol-free scalar (pi^m > 0 never flips it)."""
        if not self.is_real():
            raise ValueError("sign undefined for non-real scalar")
        re, _ = self.rational_parts()
        return (re > 0) - (re < 0)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, ExactScalar):
            try:
                other = ExactScalar.coerce(other)
            except TypeError:
                return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        if self.pi_power != other.pi_power:
            raise ArithmeticError(
                f"adding scalars of different pi grades ({self.pi_power} vs {other.pi_power})"
            )
        merged = dict(self.terms)
        for key, (re, im) in other.terms.items():
            cre, cim = merged.get(key, (_ZERO, _ZERO))
            merged[key] = (cre + re, cim + im)
        return ExactScalar(merged, self.pi_power)

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar(
            {k: (-re, -im) for k, (re, im) in self.terms.items()}, self.pi_power
        )

    def __sub__(self, other):
        if not isinstance(other, ExactScalar):
            try:
                other = ExactScalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return ExactScalar.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, ExactScalar):
            try:
                other = ExactScalar.coerce(other)
            except TypeError:
                return NotImplemented
        if not self.terms or not other.terms:
            return _EXACT_ZERO
        out = {}

        def _acc(key, re, im):
            cre, cim = out.get(key, (_ZERO, _ZERO))
            out[key] = (cre + re, cim + im)

        for (a1, j1, k1), (re1, im1) in self.terms.items():
            for (a2, j2, k2), (re2, im2) in other.terms.items():
                re = re1 * re2 - im1 * im2
                im = re1 * im2 + im1 * re2
                a, j, k = a1 + a2, j1 + j2, k1 + k2
                if k < 2:
                    _acc((a, j, k), re, im)
                else:  # sin^2 -> 1 - cos^2
                    _acc((a, j, 0), re, im)
                    _acc((a, j + 2, 0), -re, -im)
        return ExactScalar(out, self.pi_power + other.pi_power)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = ExactScalar.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        if not other.is_symbol_free():
            raise ArithmeticError("division by tau/trig-carrying scalar is not supported")
        re, im = other.terms[(0, 0, 0)]
        norm = re * re + im * im
        inv = ExactScalar({(0, 0, 0): (re / norm, -im / norm)}, -other.pi_power)
        return self * inv

    def conjugate(self):
        """Complex conjugation; tau, cos, sin and pi are real."""
        return ExactScalar(
            {k: (re, -im) for k, (re, im) in self.terms.items()}, self.pi_power
        )

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise TypeError("only non-negative integer powers")
        acc = _EXACT_ONE
        for _ in range(n):
            acc = acc * self
        return acc

    # -- comparisons / hashing ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Rational)):
            other = ExactScalar.from_rational(_as_fraction(other))
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return self.pi_power == other.pi_power and self.terms == other.terms

    def __hash__(self):
        return hash((self.pi_power, frozenset(self.terms.items())))

    # -- conversions ---------------------------------------------------------

    def to_complex(self, tau=None):
        """Numerical value; ``tau`` must be given when time symbols occur."""
        total = 0j
        for (a, j, k), (re, im) in self.terms.items():
            factor = 1.0
            if a or j or k:
                if tau is None:
                    raise ValueError("scalar carries time symbols; pass tau=")
                factor = (tau ** a) * (cos(tau) ** j) * (sin(tau) ** k)
            total += complex(re + im * 1j) * factor
        return total * (pi ** self.pi_power)

    def to_json(self):
        """Stable exact serialization: rationals as num/den strings."""
        if self.is_plain():
            re, im = self.rational_parts()
            return [str(re), str(im)]
        return {
            "pi_power": self.pi_power,
            "terms": [
                [a, j, k, str(re), str(im)]
                for (a, j, k), (re, im) in sorted(self.terms.items())
            ],
        }

    def __repr__(self):
        if self.is_zero():
            return "0"
        bits = []
        for (a, j, k), (re, im) in sorted(self.terms.items()):
            coeff = f"({re}{'+' if im >= 0 else '-'}{abs(im)}i)"
            sym = ""
            if a:
                sym += f"*tau^{a}" if a > 1 else "*tau"
            if j:
                sym += f"*cos^{j}" if j > 1 else "*cos"
            if k:
                sym += "*sin"
            bits.append(coeff + sym)
        s = " + ".join(bits)
        if self.pi_power:
            s = f"({s})*pi^{self.pi_power}" if self.pi_power != 1 else f"({s})*pi"
        return s


_EXACT_ZERO = ExactScalar()
_EXACT_ONE = ExactScalar({(0, 0, 0): (_ONE, _ZERO)})
_EXACT_I = ExactScalar({(0, 0, 0): (_ZERO, _ONE)})


def rational(x, y=0):
    """Shortcut: exact scalar x + y*i from rationals/strings."""
    return ExactScalar.from_rational(_as_fraction(x), _as_fraction(y))
