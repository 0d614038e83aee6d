"""Exact scalars: rationals and Gaussian rationals.

Real scalars are exact rationals: ``gmpy2.mpq`` when available (an order
of magnitude faster), otherwise ``fractions.Fraction``; both expose the
same numerator/denominator interface and hash identically.  Complex
scalars are ``GaussianRational`` pairs, closed under field operations
and conjugation.  Everything here is immutable and hashable.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as _ratio
except ImportError:  # pragma: no cover
    _ratio = Fraction

RATIONAL_TYPES = (Fraction, int, type(_ratio(0)))


def rational(x):
    """Coerce ints, strings like '3/4' and Fraction-likes to a rational."""
    if type(x) is type(_ratio(0)):
        return x
    if isinstance(x, (int, Fraction)):
        return _ratio(x)
    if isinstance(x, str):
        try:
            return _ratio(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad rational literal {x!r}") from exc
    raise TypeError(f"cannot interpret {x!r} as a rational")


def format_rational(x) -> str:
    """Canonical 'p/q' string, q > 0, reduced (storage keeps it reduced)."""
    return f"{x.numerator}/{x.denominator}"


class GaussianRational:
    """Element of Q(i), stored as exact real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", rational(re))
        object.__setattr__(self, "im", rational(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def of(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return GaussianRational(rational(x))

    def __add__(self, other):
        other = GaussianRational.of(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianRational.of(other))

    def __rsub__(self, other):
        return GaussianRational.of(other) + (-self)

    def __mul__(self, other):
        other = GaussianRational.of(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.of(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return self * GaussianRational(other.re / n, -other.im / n)

    def __rtruediv__(self, other):
        return GaussianRational.of(other) / self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, RATIONAL_TYPES):
            other = GaussianRational(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i"
        return f"({self.re}{'+' if self.im > 0 else '-'}{abs(self.im)}*i)"


I = GaussianRational(0, 1)


class _RationalField:
    """Field tag for Q carried by matrices and subspaces."""

    name = "Q"
    zero = rational(0)
    one = rational(1)

    @staticmethod
    def coerce(x):
        return rational(x)

    @staticmethod
    def conj(x):
        return x


class _GaussianField:
    """Field tag for Q(i)."""

    name = "Qi"
    zero = GaussianRational(0)
    one = GaussianRational(1)

    @staticmethod
    def coerce(x) -> GaussianRational:
        if isinstance(x, GaussianRational):
            return x
        return GaussianRational(rational(x))

    @staticmethod
    def conj(x: GaussianRational) -> GaussianRational:
        return x.conjugate()


QQ = _RationalField()
QI = _GaussianField()
