"""The graded ring of symmetric functions in the x-basis (complete homogeneous
generators) and c-basis (power-sum generators), with exact base change,
class-function values, and two independent character oracles."""

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb

from .exactlin import conj
from .partitions import EMPTY, Partition, partitions, z

X = "x"
C = "c"


class SymElement:
    """A homogeneous element, as a sparse map from partitions to rational coefficients."""

    __slots__ = ("basis", "degree", "coeffs")

    def __init__(self, basis, degree, coeffs):
        if basis not in (X, C):
            raise ValueError("unknown basis %r" % (basis,))
        clean = {}
        for lam, coeff in coeffs.items():
            if not isinstance(lam, Partition):
                lam = Partition(lam)
            if lam.size != degree:
                raise ValueError("partition %s does not have degree %d" % (lam, degree))
            coeff = Fraction(coeff)
            if coeff:
                clean[lam] = coeff
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SymElement is immutable")

    @classmethod
    def zero(cls, basis, degree):
        return cls(basis, degree, {})

    @classmethod
    def one(cls, basis):
        return cls(basis, 0, {EMPTY: Fraction(1)})

    @classmethod
    def generator(cls, basis, n):
        """The degree-n generator: x_n or c_n."""
        if n == 0:
            return cls.one(basis)
        return cls(basis, n, {Partition((n,)): Fraction(1)})

    @classmethod
    def monomial(cls, basis, lam, coeff=1):
        if not isinstance(lam, Partition):
            lam = Partition(lam)
        return cls(basis, lam.size, {lam: Fraction(coeff)})

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return (isinstance(other, SymElement) and self.basis == other.basis
                and self.degree == other.degree and self.coeffs == other.coeffs)

    __hash__ = None

    def _check_compatible(self, other):
        if self.basis != other.basis:
            raise ValueError("mixed bases: %s vs %s" % (self.basis, other.basis))

    def __add__(self, other):
        self._check_compatible(other)
        if self.degree != other.degree:
            raise ValueError("mixed degrees: %d vs %d" % (self.degree, other.degree))
        coeffs = dict(self.coeffs)
        for lam, coeff in other.coeffs.items():
            coeffs[lam] = coeffs.get(lam, Fraction(0)) + coeff
        return SymElement(self.basis, self.degree, coeffs)

    def __neg__(self):
        return SymElement(self.basis, self.degree,
                          {lam: -c for lam, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymElement(self.basis, self.degree,
                              {lam: c * other for lam, c in self.coeffs.items()})
        self._check_compatible(other)
        coeffs = {}
        for lam, a in self.coeffs.items():
            for mu, b in other.coeffs.items():
                key = lam.merge(mu)
                coeffs[key] = coeffs.get(key, Fraction(0)) + a * b
        return SymElement(self.basis, self.degree + other.degree, coeffs)

    __rmul__ = __mul__

    def __str__(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for lam in sorted(self.coeffs, reverse=True):
            coeff = self.coeffs[lam]
            mono = monomial_str(self.basis, lam)
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = "%s*%s" % (mag, mono)
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += " %s %s" % (sign, body)
        return text

    def __repr__(self):
        return "SymElement(%r, %d, %s)" % (self.basis, self.degree, str(self))


def monomial_str(basis, lam):
    """Generator-product form of a monomial, e.g. x3*x2^2."""
    if not lam.parts:
        return "1"
    mults = lam.multiplicities()
    pieces = []
    for value in sorted(mults, reverse=True):
        pieces.append("%s%d" % (basis, value) if mults[value] == 1
                      else "%s%d^%d" % (basis, value, mults[value]))
    return "*".join(pieces)


# ---------------------------------------------------------------------------
# base change


@lru_cache(maxsize=None)
def _x_monomial_in_c(lam):
    """x_lam in the c-basis: product over parts of x_n = sum_{mu |- n} c_mu / z_mu."""
    result = SymElement.one(C)
    for part in lam.parts:
        gen = SymElement(C, part,
                         {mu: Fraction(1, z(mu)) for mu in partitions(part)})
        result = result * gen
    return result


@lru_cache(maxsize=None)
def _c_generator_in_x(n):
    """c_n in the x-basis via the Newton recurrence c_n = n*x_n - sum c_i * x_{n-i}."""
    if n == 0:
        return SymElement.one(X)
    acc = Fraction(n) * SymElement.generator(X, n)
    for i in range(1, n):
        acc = acc - _c_generator_in_x(i) * SymElement.generator(X, n - i)
    return acc


@lru_cache(maxsize=None)
def _c_monomial_in_x(lam):
    result = SymElement.one(X)
    for part in lam.parts:
        result = result * _c_generator_in_x(part)
    return result


def x_to_c(element):
    """Convert from the x-basis to the c-basis (a ring morphism on monomials)."""
    if element.basis == C:
        return element
    acc = SymElement.zero(C, element.degree)
    for lam, coeff in element.coeffs.items():
        acc = acc + coeff * _x_monomial_in_c(lam)
    return acc


def c_to_x(element):
    """Convert from the c-basis to the x-basis; exact inverse of x_to_c."""
    if element.basis == X:
        return element
    acc = SymElement.zero(X, element.degree)
    for lam, coeff in element.coeffs.items():
        acc = acc + coeff * _c_monomial_in_x(lam)
    return acc


# ---------------------------------------------------------------------------
# class-function values


class ClassValues:
    """Values of a degree-n class function on each class (partition) of S_n."""

    __slots__ = ("degree", "values")

    def __init__(self, degree, values):
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "values", dict(values))
        if set(self.values) != set(partitions(degree)):
            raise ValueError("values must cover every class of S_%d" % degree)

    def __setattr__(self, name, value):
        raise AttributeError("ClassValues is immutable")

    def __getitem__(self, mu):
        if not isinstance(mu, Partition):
            mu = Partition(mu)
        return self.values[mu]

    def __eq__(self, other):
        return (isinstance(other, ClassValues) and self.degree == other.degree
                and self.values == other.values)

    __hash__ = None

    def as_tuple(self):
        """Values on classes in increasing lexicographic order ((1^n) first)."""
        return tuple(self.values[mu] for mu in sorted(partitions(self.degree)))

    def __repr__(self):
        return "ClassValues(%d, %r)" % (self.degree, self.as_tuple())


def class_values(element):
    """Evaluate on conjugacy classes: the value on class mu is z_mu * [c_mu]."""
    c = x_to_c(element)
    return ClassValues(c.degree,
                       {mu: z(mu) * c.coeffs.get(mu, Fraction(0))
                        for mu in partitions(c.degree)})


def inner_product(a, b):
    """Standard class-function pairing: sum over mu of a(mu)*conj(b(mu))/z_mu."""
    if a.degree != b.degree:
        raise ValueError("mixed degrees")
    total = Fraction(0)
    for mu in partitions(a.degree):
        total = total + a[mu] * conj(b[mu]) * Fraction(1, z(mu))
    return total


# ---------------------------------------------------------------------------
# independent character oracles


def perm_char_value(lam, mu):
    """Value at class mu of the permutation character induced from S_lam.

    Counts assignments of the (distinguishable) cycles of a permutation of
    type mu to the ordered parts of lam so that the lengths assigned to part
    i sum to lam_i.
    """
    if lam.size != mu.size:
        raise ValueError("sizes differ")
    mults = mu.multiplicities()
    lengths = sorted(mults)
    start = tuple(mults[v] for v in lengths)
    cache = {}

    def ways(part_index, avail):
        if part_index == len(lam.parts):
            return 1
        key = (part_index, avail)
        if key in cache:
            return cache[key]
        target = lam.parts[part_index]
        total = 0

        def choose(i, remaining, factor, left):
            nonlocal total
            if i == len(lengths):
                if remaining == 0:
                    total += factor * ways(part_index + 1, tuple(left))
                return
            cap = min(avail[i], remaining // lengths[i])
            for take in range(cap + 1):
                choose(i + 1, remaining - take * lengths[i],
                       factor * comb(avail[i], take), left + [avail[i] - take])

        choose(0, target, 1, [])
        cache[key] = total
        return total

    return ways(0, start)


def _beta_set(parts):
    ell = len(parts)
    return tuple(parts[i] + (ell - 1 - i) for i in range(ell))


def _partition_from_beta(beta):
    ell = len(beta)
    ordered = sorted(beta, reverse=True)
    parts = [ordered[i] - (ell - 1 - i) for i in range(ell)]
    return tuple(v for v in parts if v)


@lru_cache(maxsize=None)
def _mn(lam_parts, mu_parts):
    if not mu_parts:
        return 1
    r = mu_parts[0]
    rest = mu_parts[1:]
    beta = _beta_set(lam_parts)
    beta_lookup = set(beta)
    total = 0
    for f in beta:
        low = f - r
        if low < 0 or low in beta_lookup:
            continue
        height = sum(1 for g in beta if low < g < f)
        new_parts = _partition_from_beta(tuple(g for g in beta if g != f) + (low,))
        total += (-1) ** height * _mn(new_parts, rest)
    return total


def mn_character(lam, mu):
    """Irreducible character value chi_lam(mu) via the border-strip recursion."""
    if lam.size != mu.size:
        raise ValueError("sizes differ")
    return _mn(lam.parts, mu.parts)


def _perm_sign(sigma):
    sign = 1
    seen = [False] * len(sigma)
    for i in range(len(sigma)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = sigma[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def schur_in_x(lam):
    """Schur element via the Jacobi-Trudi determinant det(x_{lam_i - i + j})."""
    ell = len(lam.parts)
    if ell == 0:
        return SymElement.one(X)
    coeffs = {}
    for sigma in permutations(range(ell)):
        indices = [lam.parts[i] - i + sigma[i] for i in range(ell)]
        if any(ix < 0 for ix in indices):
            continue
        key = Partition(sorted((ix for ix in indices if ix > 0), reverse=True))
        coeffs[key] = coeffs.get(key, 0) + _perm_sign(sigma)
    return SymElement(X, lam.size, {k: Fraction(v) for k, v in coeffs.items()})
