"""Symmetric-group engine: the lattice of virtual characters vanishing on
p-singular classes, the polynomial generators y_n, and per-degree verification
that the generator monomials span exactly that lattice (Hermite normal form
equality)."""

import time
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from functools import lru_cache

from .exactlin import IntMatrix, hnf_basis, rational_kernel
from .partitions import Partition, p_regular_partitions, partitions
from .series import y_explicit, y_monomial
from .symfunc import SymElement, X, class_values, schur_in_x


@lru_cache(maxsize=None)
def x_class_value_matrix(n):
    """Integer class values of the x-monomial basis: entry [i][j] is the value
    of x_{lambda_i} on class mu_j, both indexed by partitions(n)."""
    classes = partitions(n)
    rows = []
    for lam in classes:
        values = class_values(SymElement.monomial(X, lam))
        row = []
        for mu in classes:
            v = values[mu]
            if v.denominator != 1:
                raise AssertionError("non-integral permutation character value")
            row.append(int(v))
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class RegLattice:
    """Z-basis (rows, x-basis coordinates) of the degree-n characters vanishing
    on every p-singular class."""
    degree: int
    p: int
    basis: IntMatrix

    @property
    def rank(self):
        return self.basis.nrows


def reg_lattice(n, p):
    classes = partitions(n)
    values = x_class_value_matrix(n)
    constraints = [[values[i][j] for i in range(len(classes))]
                   for j, mu in enumerate(classes) if not mu.is_p_regular(p)]
    return RegLattice(n, p, rational_kernel(constraints, len(classes)))


def element_coordinates(element, n):
    """Integer x-basis coordinate vector of a degree-n element, in partitions(n) order."""
    coords = []
    for lam in partitions(n):
        c = element.coeffs.get(lam, Fraction(0))
        if c.denominator != 1:
            raise AssertionError("non-integral coordinate at %s" % lam)
        coords.append(int(c))
    return coords


def y_monomials(n, p):
    """Rows: x-basis coordinates of y_lambda over the p-regular partitions of n."""
    rows = [element_coordinates(y_monomial(lam, p), n)
            for lam in p_regular_partitions(n, p)]
    return IntMatrix(rows, len(partitions(n)))


@dataclass(frozen=True)
class VerificationReport:
    degree: int
    p: int
    rank: int
    expected_rank: int
    lattice_hnf: IntMatrix
    monomial_hnf: IntMatrix
    verdict: bool
    seconds: float

    def to_dict(self):
        return {
            "degree": self.degree,
            "p": self.p,
            "rank": self.rank,
            "expected_rank": self.expected_rank,
            "lattice_hnf": self.lattice_hnf.to_lists(),
            "monomial_hnf": self.monomial_hnf.to_lists(),
            "verdict": self.verdict,
            "seconds": self.seconds,
        }


def verify_theorem1(n, p):
    """Check that the y-monomials span exactly the vanishing lattice in degree n."""
    start = time.perf_counter()
    lattice = reg_lattice(n, p)
    monomials = y_monomials(n, p)
    values = x_class_value_matrix(n)
    classes = partitions(n)
    for row in monomials.rows:
        for j, mu in enumerate(classes):
            if mu.is_p_regular(p):
                continue
            if sum(row[i] * values[i][j] for i in range(len(classes))):
                raise AssertionError(
                    "y-monomial does not vanish on class %s at n=%d, p=%d"
                    % (mu, n, p))
    lattice_h = hnf_basis(lattice.basis)
    monomial_h = hnf_basis(monomials)
    expected = len(p_regular_partitions(n, p))
    verdict = (lattice_h == monomial_h and lattice.rank == expected)
    return VerificationReport(n, p, lattice.rank, expected, lattice_h, monomial_h,
                              verdict, time.perf_counter() - start)


# ---------------------------------------------------------------------------
# worked identities relating the first generators to projective classes


@dataclass(frozen=True)
class ExampleCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class ExamplesReport:
    checks: tuple
    notes: tuple

    @property
    def all_passed(self):
        return all(c.passed for c in self.checks)

    def to_dict(self):
        return {
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                       for c in self.checks],
            "notes": list(self.notes),
            "all_passed": self.all_passed,
        }


def _values_tuple(element):
    return tuple(class_values(element).as_tuple())


def worked_examples_check():
    """Character-level identities relating the first generators to projective classes."""
    checks = []

    minus_y3 = -y_explicit(3, 2)
    s21 = schur_in_x(Partition((2, 1)))
    vals3 = _values_tuple(minus_y3)
    checks.append(ExampleCheck(
        "-y_3 equals the Schur element of [2,1]",
        minus_y3 == s21 and vals3 == (Fraction(2), Fraction(0), Fraction(-1)),
        "-y_3 -> %s on classes [1,1,1],[2,1],[3]" % (tuple(map(int, vals3)),)))

    y1 = y_explicit(1, 2)
    minus_y1y3 = -(y1 * y_explicit(3, 2))
    schur_sum = (schur_in_x(Partition((3, 1))) + schur_in_x(Partition((2, 2)))
                 + schur_in_x(Partition((2, 1, 1))))
    vals4 = _values_tuple(minus_y1y3)
    vanishes = all(vals4[j] == 0 for j, mu in enumerate(sorted(partitions(4)))
                   if not mu.is_p_regular(2))
    checks.append(ExampleCheck(
        "-y_1*y_3 equals s[3,1] + s[2,2] + s[2,1,1]",
        (minus_y1y3 == schur_sum
         and vals4 == tuple(map(Fraction, (8, 0, 0, -1, 0))) and vanishes),
        "-y_1*y_3 -> %s on classes [1,1,1,1],[2,1,1],[2,2],[3,1],[4]"
        % (tuple(map(int, vals4)),)))

    regular_ok = True
    for n in range(1, 7):
        power = SymElement.one(X)
        for _ in range(n):
            power = power * y1
        values = class_values(power)
        for mu in partitions(n):
            expected = factorial(n) if len(mu.parts) == n else 0
            if values[mu] != expected:
                regular_ok = False
    checks.append(ExampleCheck(
        "y_1^n is the regular character",
        regular_ok,
        "y_1^n -> n! on [1,...,1], 0 elsewhere, for n <= 6"))

    two_x2 = 2 * SymElement.generator(X, 2)
    y1_squared = y1 * y1
    notes = (
        "informational: the example's composition-series identity 2*x2 = y1^2 is not an "
        "ordinary-character identity (2*x2 -> %s but y1^2 -> %s on classes [1,1],[2]); "
        "it is recorded, not asserted."
        % (tuple(map(int, _values_tuple(two_x2))),
           tuple(map(int, _values_tuple(y1_squared)))),
    )
    return ExamplesReport(tuple(checks), notes)
