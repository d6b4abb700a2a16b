"""Truncated formal power series with homogeneous graded-ring coefficients.

The degree-i coefficient of a series lives in degree i of the coefficient
ring.  Truncation order is explicit everywhere; no operation ever reads
beyond it.
"""

from fractions import Fraction
from functools import lru_cache

from . import symfunc
from .partitions import Partition
from .symfunc import SymElement


class ScalarRing:
    """Plain rationals, with the grading ignored: the scalar oracle ring."""

    def zero(self, degree):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def is_zero(self, value):
        return value == 0


class SymRing:
    """The graded symmetric-function ring in a fixed basis."""

    def __init__(self, basis):
        self.basis = basis

    def zero(self, degree):
        return SymElement.zero(self.basis, degree)

    def one(self):
        return SymElement.one(self.basis)

    def is_zero(self, value):
        return value.is_zero()


SCALARS = ScalarRing()


class GradedSeries:
    """A series sum_{i=0}^{D} a_i t^i with a_i homogeneous of degree i."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", tuple(coeffs))
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")

    def __setattr__(self, name, value):
        raise AttributeError("GradedSeries is immutable")

    @classmethod
    def build(cls, ring, order, coefficient_at):
        return cls(ring, [coefficient_at(i) for i in range(order + 1)])

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        return self.coeffs[i]

    def __eq__(self, other):
        return isinstance(other, GradedSeries) and self.coeffs == other.coeffs

    __hash__ = None

    def _check_order(self, other):
        if self.order != other.order:
            raise ValueError("orders differ: %d vs %d" % (self.order, other.order))

    def __add__(self, other):
        self._check_order(other)
        return GradedSeries(self.ring, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check_order(other)
        return GradedSeries(self.ring, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return GradedSeries(self.ring, [-a for a in self.coeffs])

    def __mul__(self, other):
        self._check_order(other)
        out = []
        for i in range(self.order + 1):
            acc = self.ring.zero(i)
            for k in range(i + 1):
                acc = acc + self.coeffs[k] * other.coeffs[i - k]
            out.append(acc)
        return GradedSeries(self.ring, out)

    def is_one(self):
        return (self.coeffs[0] == self.ring.one()
                and all(self.ring.is_zero(c) for c in self.coeffs[1:]))

    def __repr__(self):
        return "GradedSeries(order=%d, %r)" % (self.order, list(self.coeffs))


def one_series(ring, order):
    return GradedSeries(ring, [ring.one()] + [ring.zero(i) for i in range(1, order + 1)])


def exp(series):
    """exp of a series with zero constant term: sum_k series^k / k!."""
    ring = series.ring
    if not ring.is_zero(series.coeffs[0]):
        raise ValueError("exp needs a zero constant term")
    result = one_series(ring, series.order)
    term = result
    for k in range(1, series.order + 1):
        term = term * series
        term = GradedSeries(ring, [c * Fraction(1, k) for c in term.coeffs])
        result = result + term
    return result


def p_split(series, p):
    """Split into the p-singular part (indices divisible by p, index 0 included)
    and the p-regular part (indices coprime to p); the two parts sum back to
    the series."""
    ring = series.ring
    singular = [c if i % p == 0 else ring.zero(i) for i, c in enumerate(series.coeffs)]
    regular = [c if i % p != 0 else ring.zero(i) for i, c in enumerate(series.coeffs)]
    return GradedSeries(ring, singular), GradedSeries(ring, regular)


def inverse(series):
    """Multiplicative inverse of a series with constant term 1."""
    ring = series.ring
    if series.coeffs[0] != ring.one():
        raise ValueError("inverse needs constant term 1")
    out = [ring.one()]
    for i in range(1, series.order + 1):
        acc = ring.zero(i)
        for k in range(1, i + 1):
            acc = acc + series.coeffs[k] * out[i - k]
        out.append(-acc)
    return GradedSeries(ring, out)


def int_power(series, exponent):
    """Integer power; negative exponents use the series inverse."""
    if series.coeffs[0] != series.ring.one():
        raise ValueError("int_power needs constant term 1")
    base = series if exponent >= 0 else inverse(series)
    exponent = abs(exponent)
    result = one_series(series.ring, series.order)
    while exponent:
        if exponent & 1:
            result = result * base
        base = base * base
        exponent >>= 1
    return result


def quotient_y(series, p):
    """The quotient Y = (p-regular part) / (p-singular part).

    Its coefficients vanish at every index divisible by p.
    """
    if series.coeffs[0] != series.ring.one():
        raise ValueError("quotient needs constant term 1")
    singular, regular = p_split(series, p)
    return regular * inverse(singular)


# ---------------------------------------------------------------------------
# the generators of the p-regular subring


def x_generator_series(order, basis=symfunc.X):
    """sum_n x_n t^n (converted to the requested basis) up to the given order."""
    ring = SymRing(basis)
    gens = [SymElement.generator(symfunc.X, i) for i in range(order + 1)]
    if basis == symfunc.C:
        gens = [symfunc.x_to_c(g) for g in gens]
    return GradedSeries(ring, gens)


@lru_cache(maxsize=None)
def y_explicit(n, p):
    """Degree-n generator by the explicit composition sum.

    Sums (-1)^k x_{l_0}...x_{l_k} over ordered tuples (l_0,...,l_k) of
    positive integers with total n, l_0 coprime to p and every later entry
    divisible by p.  Zero when p divides n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    coeffs = {}

    def extend(remaining, picked_parts, sign):
        if remaining == 0:
            key = Partition(sorted(picked_parts, reverse=True))
            coeffs[key] = coeffs.get(key, 0) + sign
            return
        for step in range(p, remaining + 1, p):
            extend(remaining - step, picked_parts + (step,), -sign)

    for head in range(1, n + 1):
        if head % p == 0:
            continue
        extend(n - head, (head,), 1)
    return SymElement(symfunc.X, n, {k: Fraction(v) for k, v in coeffs.items()})


def y_from_quotient(max_degree, p, basis=symfunc.X):
    """Generators via the series quotient: coefficients 0..max_degree of Y."""
    return quotient_y(x_generator_series(max_degree, basis), p)


@lru_cache(maxsize=None)
def y_monomial(lam, p):
    """Product of generators y_{lam_1} * ... * y_{lam_k} in the x-basis."""
    result = SymElement.one(symfunc.X)
    for part in lam.parts:
        result = result * y_explicit(part, p)
    return result
