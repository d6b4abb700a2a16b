"""Wreath-product engine: character-table ingestion, the graded algebra of the
wreath products G wr S_n in the xi- and Phi-monomial bases, the vanishing
lattice of G with unimodular completion, the X_k/Y_k generator series, and
per-degree verification of the polynomial-ring statement."""

import json
import time
from collections import namedtuple
from dataclasses import dataclass
from fractions import Fraction

from .exactlin import (Cyclotomic, IntMatrix, conj, det, hnf_basis, rational_kernel,
                       unimodular_complete)
from .modsym import VerificationReport
from .partitions import EMPTY, MultiPartition, Partition, multipartitions
from .series import GradedSeries, exp, int_power, quotient_y

XI = "xi"
PHI = "phi"

ClassInfo = namedtuple("ClassInfo", "label size element_order")
Irreducible = namedtuple("Irreducible", "label values")


class TableError(ValueError):
    """A character-table file is malformed or violates a table invariant."""


class CharTable:
    """An ordinary character table of a finite group over a splitting field.

    Immutable after construction apart from internal idempotent caches.
    """

    def __init__(self, name, order, conductor, classes, irreducibles):
        self.name = name
        self.order = order
        self.conductor = conductor
        self.classes = tuple(classes)
        self.irreducibles = tuple(irreducibles)
        self._phi_series = {}
        self._phi_monomial = {}
        self._validate()

    @property
    def N(self):
        return len(self.classes)

    def _validate(self):
        if self.order < 1:
            raise TableError("group order must be positive")
        if self.conductor < 1:
            raise TableError("conductor must be >= 1")
        if not self.classes:
            raise TableError("no classes")
        if len(self.irreducibles) != len(self.classes):
            raise TableError("need as many irreducibles as classes (%d vs %d)"
                             % (len(self.irreducibles), len(self.classes)))
        if sum(c.size for c in self.classes) != self.order:
            raise TableError("class sizes sum to %d, not the group order %d"
                             % (sum(c.size for c in self.classes), self.order))
        first = self.classes[0]
        if first.size != 1 or first.element_order != 1:
            raise TableError("first class must be the identity (size 1, element order 1)")
        for c in self.classes:
            if c.size < 1 or c.element_order < 1:
                raise TableError("class %s has invalid size or element order" % (c.label,))
        for irr in self.irreducibles:
            if len(irr.values) != self.N:
                raise TableError("irreducible %s has %d values, expected %d"
                                 % (irr.label, len(irr.values), self.N))
            for v in irr.values:
                if any(q.denominator != 1 for q in v.rational_coords()):
                    raise TableError(
                        "value of %s is not an algebraic integer in the power basis"
                        % (irr.label,))
        for i, a in enumerate(self.irreducibles):
            for j, b in enumerate(self.irreducibles):
                total = Cyclotomic.from_rational(0)
                for c, av, bv in zip(self.classes, a.values, b.values):
                    total = total + c.size * av * conj(bv)
                expected = self.order if i == j else 0
                if total != expected:
                    raise TableError(
                        "row orthogonality fails for %s and %s" % (a.label, b.label))

    def __repr__(self):
        return "CharTable(%r, order=%d, N=%d)" % (self.name, self.order, self.N)


def _parse_value(raw, conductor, where):
    if isinstance(raw, int):
        return Cyclotomic.from_rational(raw)
    if isinstance(raw, list):
        if len(raw) != conductor or not all(isinstance(v, int) for v in raw):
            raise TableError("%s: a cyclotomic value must be a list of %d integers"
                             % (where, conductor))
        return Cyclotomic(conductor, raw)
    raise TableError("%s: unsupported value %r" % (where, raw))


def load_table(path):
    """Load and validate a character table from its JSON file form."""
    try:
        with open(path) as handle:
            data = json.load(handle)
    except OSError as err:
        raise TableError("cannot read %s: %s" % (path, err))
    except json.JSONDecodeError as err:
        raise TableError("%s is not valid JSON: %s" % (path, err))
    try:
        name = data["name"]
        order = int(data["order"])
        conductor = int(data["conductor"])
        classes = tuple(ClassInfo(str(c["label"]), int(c["size"]), int(c["element_order"]))
                        for c in data["classes"])
        irreducibles = tuple(
            Irreducible(str(r["label"]),
                        tuple(_parse_value(v, conductor, "irreducible %s" % r["label"])
                              for v in r["values"]))
            for r in data["irreducibles"])
    except (KeyError, TypeError, ValueError) as err:
        raise TableError("malformed table file %s: %s" % (path, err))
    return CharTable(name, order, conductor, classes, irreducibles)


def p_regular_classes(table, p):
    """The classes whose element order is coprime to p."""
    return tuple(c for c in table.classes if c.element_order % p != 0)


def _regular_class_flags(table, p):
    return tuple(c.element_order % p != 0 for c in table.classes)


# ---------------------------------------------------------------------------
# the vanishing lattice of G and its unimodular completion


@dataclass(frozen=True)
class ELatticeBasis:
    """Unimodular N x N matrix whose first M rows span the lattice of virtual
    characters vanishing on p-singular classes (coordinates in the chi-basis)."""
    p: int
    M: int
    phi: IntMatrix


def e_lattice(table, p):
    singular = [i for i, c in enumerate(table.classes) if c.element_order % p == 0]
    constraints = [[irr.values[i] for irr in table.irreducibles] for i in singular]
    kernel = rational_kernel(constraints, table.N)
    m = len(p_regular_classes(table, p))
    if kernel.nrows != m:
        raise AssertionError("vanishing lattice rank %d differs from the %d p-regular classes"
                             % (kernel.nrows, m))
    return ELatticeBasis(p, m, unimodular_complete(kernel))


# ---------------------------------------------------------------------------
# the graded wreath algebra in its two monomial bases


class WreathElement:
    """Homogeneous element of the wreath algebra: a sparse cyclotomic-coefficient
    combination of monomials indexed by multipartitions."""

    __slots__ = ("basis", "degree", "ncomp", "coeffs")

    def __init__(self, basis, degree, ncomp, coeffs):
        if basis not in (XI, PHI):
            raise ValueError("unknown basis %r" % (basis,))
        clean = {}
        for mp, coeff in coeffs.items():
            if not isinstance(mp, MultiPartition):
                mp = MultiPartition(mp)
            if len(mp) != ncomp:
                raise ValueError("index %s has %d components, expected %d"
                                 % (mp, len(mp), ncomp))
            if mp.size != degree:
                raise ValueError("index %s does not have degree %d" % (mp, degree))
            if not isinstance(coeff, Cyclotomic):
                coeff = Cyclotomic.from_rational(coeff)
            if coeff:
                clean[mp] = coeff
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "ncomp", ncomp)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("WreathElement is immutable")

    @classmethod
    def zero(cls, basis, degree, ncomp):
        return cls(basis, degree, ncomp, {})

    @classmethod
    def one(cls, basis, ncomp):
        return cls(basis, 0, ncomp, {MultiPartition((EMPTY,) * ncomp): 1})

    @classmethod
    def generator(cls, basis, component, n, ncomp, coeff=1):
        """The monomial with single part n at the given component index."""
        comps = [EMPTY] * ncomp
        comps[component] = Partition((n,))
        return cls(basis, n, ncomp, {MultiPartition(comps): coeff})

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return (isinstance(other, WreathElement) and self.basis == other.basis
                and self.degree == other.degree and self.ncomp == other.ncomp
                and self.coeffs == other.coeffs)

    __hash__ = None

    def _check_compatible(self, other):
        if self.basis != other.basis or self.ncomp != other.ncomp:
            raise ValueError("incompatible wreath elements")

    def __add__(self, other):
        self._check_compatible(other)
        if self.degree != other.degree:
            raise ValueError("mixed degrees: %d vs %d" % (self.degree, other.degree))
        coeffs = dict(self.coeffs)
        for mp, coeff in other.coeffs.items():
            coeffs[mp] = coeffs.get(mp, Cyclotomic.from_rational(0)) + coeff
        return WreathElement(self.basis, self.degree, self.ncomp, coeffs)

    def __neg__(self):
        return WreathElement(self.basis, self.degree, self.ncomp,
                             {mp: -c for mp, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return WreathElement(self.basis, self.degree, self.ncomp,
                                 {mp: c * other for mp, c in self.coeffs.items()})
        self._check_compatible(other)
        coeffs = {}
        for mp, a in self.coeffs.items():
            for mq, b in other.coeffs.items():
                key = mp.merge(mq)
                prod = a * b
                if key in coeffs:
                    coeffs[key] = coeffs[key] + prod
                else:
                    coeffs[key] = prod
        return WreathElement(self.basis, self.degree + other.degree, self.ncomp, coeffs)

    __rmul__ = __mul__

    def sorted_terms(self):
        return sorted(self.coeffs.items(),
                      key=lambda item: tuple(c.parts for c in item[0]), reverse=True)

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join("(%s)*%s" % (c, mp) for mp, c in self.sorted_terms())

    def __repr__(self):
        return "WreathElement(%r, %d, %s)" % (self.basis, self.degree, str(self))


class WreathRing:
    """Coefficient ring adapter for graded series over the wreath algebra."""

    def __init__(self, basis, ncomp):
        self.basis = basis
        self.ncomp = ncomp

    def zero(self, degree):
        return WreathElement.zero(self.basis, degree, self.ncomp)

    def one(self):
        return WreathElement.one(self.basis, self.ncomp)

    def is_zero(self, value):
        return value.is_zero()


def phi_c_in_xi(table, j, n):
    """Phi_j applied to the degree-n power-sum generator, expanded over xi:
    sum over classes C of chi_j(C) * |C|/|G| * xi_{n,C}."""
    coeffs = {}
    for c_index, cls in enumerate(table.classes):
        comps = [EMPTY] * table.N
        comps[c_index] = Partition((n,))
        coeffs[MultiPartition(comps)] = (table.irreducibles[j].values[c_index]
                                         * Fraction(cls.size, table.order))
    return WreathElement(XI, n, table.N, coeffs)


def phi_x_in_xi(table, j, n):
    """Phi_j applied to x_n, expanded over xi via the exponential identity."""
    if n == 0:
        return WreathElement.one(XI, table.N)
    key = (j, n)
    series = table._phi_series.get(key)
    if series is None:
        ring = WreathRing(XI, table.N)
        log_series = GradedSeries(ring, [ring.zero(0)] + [
            phi_c_in_xi(table, j, i) * Fraction(1, i) for i in range(1, n + 1)])
        series = exp(log_series)
        table._phi_series[key] = series
    return series[n]


def xi_from_phi(element, table):
    """Expand a PHI-basis element over the xi-basis (a ring morphism)."""
    if element.basis == XI:
        return element
    acc = WreathElement.zero(XI, element.degree, element.ncomp)
    for mp, coeff in element.coeffs.items():
        term = table._phi_monomial.get(mp)
        if term is None:
            term = WreathElement.one(XI, table.N)
            for j, lam in enumerate(mp):
                for part in lam.parts:
                    term = term * phi_x_in_xi(table, j, part)
            table._phi_monomial[mp] = term
        acc = acc + coeff * term
    return acc


# ---------------------------------------------------------------------------
# generator series


def _phi_x_generator_series(table, j, order):
    """sum_i Phi_j(x_i) t^i over the PHI algebra."""
    ring = WreathRing(PHI, table.N)
    coeffs = [ring.one()] + [WreathElement.generator(PHI, j, i, table.N)
                             for i in range(1, order + 1)]
    return GradedSeries(ring, coeffs)


def xk_series(table, lattice, k, order):
    """The k-th generator series X_k(t); k is 1-based, 1 <= k <= N.

    For k <= M this is the product over all irreducibles j of the x-generator
    series raised to the integer exponent phi_{j,k}; for k > M it is the
    plain linear combination with those coefficients.
    """
    n_irr = table.N
    if not 1 <= k <= n_irr:
        raise ValueError("k out of range")
    exponents = lattice.phi.rows[k - 1]
    ring = WreathRing(PHI, n_irr)
    if k <= lattice.M:
        result = GradedSeries(ring, [ring.one()] + [ring.zero(i)
                                                    for i in range(1, order + 1)])
        for j in range(n_irr):
            if exponents[j]:
                result = result * int_power(_phi_x_generator_series(table, j, order),
                                            exponents[j])
        return result
    coeffs = []
    for i in range(order + 1):
        acc = ring.zero(i)
        for j in range(n_irr):
            if exponents[j]:
                term = (ring.one() if i == 0
                        else WreathElement.generator(PHI, j, i, n_irr))
                acc = acc + exponents[j] * term
        coeffs.append(acc)
    return GradedSeries(ring, coeffs)


def _assert_integral(element, where):
    for mp, coeff in element.coeffs.items():
        if not coeff.is_rational() or coeff.rational_value().denominator != 1:
            raise AssertionError("non-integer coefficient %s at %s in %s"
                                 % (coeff, mp, where))


def yk_generators(table, lattice, k, order):
    """Coefficients y_{k,0..order} of the quotient of the k-th generator series."""
    if not 1 <= k <= lattice.M:
        raise ValueError("k must index a lattice row (1..M)")
    series = quotient_y(xk_series(table, lattice, k, order), lattice.p)
    for n, coeff in enumerate(series.coeffs):
        _assert_integral(coeff, "y_{%d,%d}" % (k, n))
    return tuple(series.coeffs)


# ---------------------------------------------------------------------------
# per-degree verification


def regular_multipartition_flags(table, p, n):
    """The p-regular test over the xi index set in degree n."""
    flags = _regular_class_flags(table, p)

    def is_regular(mp):
        for idx, lam in enumerate(mp):
            if not flags[idx] and lam.parts:
                return False
            if not lam.is_p_regular(p):
                return False
        return True

    return is_regular


def count_regular_classes(table, p, n):
    """Number of p-regular classes of G wr S_n."""
    flags = _regular_class_flags(table, p)
    return len(multipartitions(table.N, n,
                               part_filter=lambda v: v % p != 0,
                               component_filter=lambda idx: flags[idx]))


def element_int_coordinates(element, index):
    """Integer coordinate vector of a PHI element over an ordered monomial index."""
    coords = []
    for mp in index:
        coeff = element.coeffs.get(mp)
        if coeff is None:
            coords.append(0)
            continue
        value = coeff.rational_value()
        if value.denominator != 1:
            raise AssertionError("non-integer coordinate at %s" % (mp,))
        coords.append(int(value))
    return coords


def verify_theorem2(table, p, n, lattice=None):
    """Check that the degree-n Y-monomials span exactly the lattice of integer
    PHI combinations whose xi-expansion is supported on p-regular indices."""
    start = time.perf_counter()
    if lattice is None:
        lattice = e_lattice(table, p)
    n_comp = table.N
    phi_index = multipartitions(n_comp, n)
    is_regular = regular_multipartition_flags(table, p, n)
    singular = [mp for mp in multipartitions(n_comp, n) if not is_regular(mp)]

    expansions = [xi_from_phi(
        WreathElement(PHI, n, n_comp, {mp: Cyclotomic.from_rational(1)}), table)
        for mp in phi_index]
    zero = Cyclotomic.from_rational(0)
    constraints = [[exp_col.coeffs.get(smp, zero) for exp_col in expansions]
                   for smp in singular]
    vanishing = rational_kernel(constraints, len(phi_index))

    generators = {k: yk_generators(table, lattice, k, n)
                  for k in range(1, lattice.M + 1)}
    rows = []
    for assignment in multipartitions(lattice.M, n,
                                      part_filter=lambda v: v % p != 0):
        product = WreathElement.one(PHI, n_comp)
        for k0, lam in enumerate(assignment):
            for part in lam.parts:
                product = product * generators[k0 + 1][part]
        rows.append(element_int_coordinates(product, phi_index))
    monomials = IntMatrix(rows, len(phi_index))

    lattice_h = hnf_basis(vanishing)
    monomial_h = hnf_basis(monomials)
    expected = count_regular_classes(table, p, n)
    verdict = (lattice_h == monomial_h and vanishing.nrows == expected)
    return VerificationReport(n, p, vanishing.nrows, expected, lattice_h, monomial_h,
                              verdict, time.perf_counter() - start)


def generator_exchange_check(table, lattice, n, order=None):
    """True iff, in every degree i <= n, the linear parts of the X_{k,i} in the
    Phi_j(x_i) form exactly the (unimodular) completed lattice matrix, so the
    X's generate the same graded ring over Z."""
    if order is None:
        order = n
    n_irr = table.N
    if det(lattice.phi) not in (1, -1):
        return False
    series = [xk_series(table, lattice, k, order) for k in range(1, n_irr + 1)]
    for i in range(1, n + 1):
        for k in range(1, n_irr + 1):
            coeff = series[k - 1][i]
            _assert_integral(coeff, "X_{%d,%d}" % (k, i))
            for j in range(n_irr):
                comps = [EMPTY] * n_irr
                comps[j] = Partition((i,))
                linear = coeff.coeffs.get(MultiPartition(comps))
                value = 0 if linear is None else int(linear.rational_value())
                if value != lattice.phi.rows[k - 1][j]:
                    return False
    return True


def xk_exp_identity_check(table, lattice, k, order):
    """True iff X_k(t) expanded over xi equals exp(C_k(t)) with C_k supported on
    p-regular xi generators, for a lattice row k <= M."""
    if not 1 <= k <= lattice.M:
        raise ValueError("k must index a lattice row (1..M)")
    p = lattice.p
    n_comp = table.N
    ring = WreathRing(XI, n_comp)
    exponents = lattice.phi.rows[k - 1]

    log_coeffs = [ring.zero(0)]
    for i in range(1, order + 1):
        acc = ring.zero(i)
        for c_index, cls in enumerate(table.classes):
            scalar = Cyclotomic.from_rational(0)
            for j in range(n_comp):
                scalar = scalar + (exponents[j]
                                   * table.irreducibles[j].values[c_index]
                                   * Fraction(cls.size, table.order))
            if cls.element_order % p == 0:
                if scalar:
                    return False
                continue
            comps = [EMPTY] * n_comp
            comps[c_index] = Partition((i,))
            acc = acc + WreathElement(XI, i, n_comp,
                                      {MultiPartition(comps): scalar * Fraction(1, i)})
        log_coeffs.append(acc)

    rhs = exp(GradedSeries(ring, log_coeffs))
    xk = xk_series(table, lattice, k, order)
    lhs = GradedSeries(ring, [xi_from_phi(c, table) for c in xk.coeffs])
    return lhs == rhs
