"""Exact scalars (rationals, cyclotomics) and integer/rational linear algebra.

All arithmetic is exact: rationals are fractions.Fraction, cyclotomics are
canonical power-basis vectors over Q, matrices hold arbitrary-precision
integers.  Everything is immutable and every function is pure.
"""

from fractions import Fraction
from functools import lru_cache
from math import lcm

Rational = Fraction


# ---------------------------------------------------------------------------
# cyclotomic fields


@lru_cache(maxsize=None)
def euler_phi(m):
    result = m
    d = 2
    n = m
    while d * d <= n:
        if n % d == 0:
            while n % d == 0:
                n //= d
            result -= result // d
        d += 1
    if n > 1:
        result -= result // n
    return result


def _poly_div_exact(num, den):
    """Exact division of integer polynomials (ascending coefficients), den monic."""
    num = list(num)
    deg = len(den) - 1
    quot = [0] * (len(num) - deg)
    for i in range(len(num) - 1, deg - 1, -1):
        c = num[i]
        if c:
            quot[i - deg] = c
            for j, d in enumerate(den):
                num[i - deg + j] -= c * d
    if any(num):
        raise ArithmeticError("polynomial division not exact")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Coefficients of the m-th cyclotomic polynomial, ascending, monic."""
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _reduce_power_basis(m, coeffs):
    """Reduce sum coeffs[i]*zeta_m^i modulo Phi_m to the canonical degree-<phi(m) form."""
    deg = euler_phi(m)
    phi_m = cyclotomic_polynomial(m)
    work = [Fraction(c) for c in coeffs]
    for i in range(len(work) - 1, deg - 1, -1):
        c = work[i]
        if c:
            work[i] = Fraction(0)
            for j in range(deg):
                work[i - deg + j] -= c * phi_m[j]
    work = work[:deg]
    work.extend([Fraction(0)] * (deg - len(work)))
    return tuple(work)


class Cyclotomic:
    """An element of Q(zeta_m), canonically reduced in the power basis.

    The conductor of a sum or product is the lcm of the operand conductors;
    no automatic descent to subfields is performed, so elements are compared
    by lifting to a common conductor.  Unhashable by design.
    """

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor, coeffs):
        conductor = int(conductor)
        if conductor < 1:
            raise ValueError("conductor must be >= 1")
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", _reduce_power_basis(conductor, coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic is immutable")

    @classmethod
    def zeta(cls, m, power=1):
        power %= m
        return cls(m, [0] * power + [1])

    @classmethod
    def from_rational(cls, value, conductor=1):
        return cls(conductor, [Fraction(value)])

    @staticmethod
    def _coerce(value):
        if isinstance(value, Cyclotomic):
            return value
        if isinstance(value, (int, Fraction)):
            return Cyclotomic(1, [Fraction(value)])
        return NotImplemented

    def lift(self, conductor):
        """Rewrite over Q(zeta_M) for a multiple M of the conductor."""
        if conductor % self.conductor != 0:
            raise ValueError("can only lift to a multiple of the conductor")
        step = conductor // self.conductor
        out = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1)
        for i, c in enumerate(self.coeffs):
            out[i * step] = c
        return Cyclotomic(conductor, out)

    def _matched(self, other):
        other = Cyclotomic._coerce(other)
        if other is NotImplemented:
            return None
        m = lcm(self.conductor, other.conductor)
        return self.lift(m), other.lift(m)

    def __add__(self, other):
        pair = self._matched(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return Cyclotomic(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, [-c for c in self.coeffs])

    def __sub__(self, other):
        pair = self._matched(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return Cyclotomic(a.conductor, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.conductor, [c * other for c in self.coeffs])
        pair = self._matched(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        prod = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    prod[i + j] += x * y
        return Cyclotomic(a.conductor, prod)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.conductor, [c / Fraction(other) for c in self.coeffs])
        return NotImplemented

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError("negative powers not supported")
        result = Cyclotomic(self.conductor, [1])
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self):
        """Complex conjugation, zeta_m -> zeta_m^(m-1)."""
        m = self.conductor
        out = [Fraction(0)] * m
        for i, c in enumerate(self.coeffs):
            out[(m - i) % m] += c
        return Cyclotomic(m, out)

    def __eq__(self, other):
        pair = self._matched(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.coeffs == b.coeffs

    __hash__ = None

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("not a rational value: %s" % self)
        return self.coeffs[0]

    def rational_coords(self):
        """Canonical coordinates over Q: phi(conductor) rationals."""
        return self.coeffs

    def __repr__(self):
        return "Cyclotomic(%d, %r)" % (self.conductor, [str(c) for c in self.coeffs])

    def __str__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append("z%d^%d" % (self.conductor, i))
            else:
                terms.append("%s*z%d^%d" % (c, self.conductor, i))
        return " + ".join(terms)


def conj(value):
    """Complex conjugation on any exact scalar."""
    if isinstance(value, Cyclotomic):
        return value.conjugate()
    return value


# ---------------------------------------------------------------------------
# integer matrices


class IntMatrix:
    """An immutable matrix of arbitrary-precision integers."""

    __slots__ = ("rows", "ncols")

    def __init__(self, rows, ncols=None):
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        if rows:
            widths = {len(row) for row in rows}
            if len(widths) != 1:
                raise ValueError("ragged rows")
            width = widths.pop()
            if ncols is not None and ncols != width:
                raise ValueError("ncols does not match row width")
            ncols = width
        elif ncols is None:
            raise ValueError("ncols required for a matrix with no rows")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "ncols", int(ncols))

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n):
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), n)

    @classmethod
    def zero(cls, nrows, ncols):
        return cls(tuple((0,) * ncols for _ in range(nrows)), ncols)

    @property
    def nrows(self):
        return len(self.rows)

    def __eq__(self, other):
        return (isinstance(other, IntMatrix)
                and self.ncols == other.ncols and self.rows == other.rows)

    def __hash__(self):
        return hash((self.rows, self.ncols))

    def __getitem__(self, i):
        return self.rows[i]

    def transpose(self):
        transposed = tuple(zip(*self.rows))
        if transposed:
            return IntMatrix(transposed, self.nrows)
        if self.ncols:
            return IntMatrix(tuple(() for _ in range(self.ncols)), 0)
        return IntMatrix((), self.nrows)

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.rows)) if other.rows else []
        return IntMatrix(
            tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.rows),
            other.ncols)

    def to_lists(self):
        return [list(row) for row in self.rows]

    def __repr__(self):
        return "IntMatrix(%r)" % (self.to_lists(),)


def _xgcd(a, b):
    """g, x, y with x*a + y*b = g = gcd(a, b) >= 0.

    When a divides b the result is (|a|, sign(a), 0), so that the derived 2x2
    elimination transform leaves the pivot row or column fixed; without this
    guarantee the SNF sweep can cycle.
    """
    if a and b % a == 0:
        return (a, 1, 0) if a > 0 else (-a, -1, 0)
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def hnf_with_transform(matrix):
    """Row-style Hermite normal form H with a unimodular U such that U @ matrix = H."""
    a = [list(row) for row in matrix.rows]
    nr, nc = matrix.nrows, matrix.ncols
    u = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    pr = 0
    for c in range(nc):
        piv = next((i for i in range(pr, nr) if a[i][c]), None)
        if piv is None:
            continue
        for i in range(piv + 1, nr):
            if not a[i][c]:
                continue
            g, x, y = _xgcd(a[piv][c], a[i][c])
            p, q = a[piv][c] // g, a[i][c] // g
            a[piv], a[i] = ([x * rp + y * ri for rp, ri in zip(a[piv], a[i])],
                            [-q * rp + p * ri for rp, ri in zip(a[piv], a[i])])
            u[piv], u[i] = ([x * rp + y * ri for rp, ri in zip(u[piv], u[i])],
                            [-q * rp + p * ri for rp, ri in zip(u[piv], u[i])])
        a[pr], a[piv] = a[piv], a[pr]
        u[pr], u[piv] = u[piv], u[pr]
        if a[pr][c] < 0:
            a[pr] = [-v for v in a[pr]]
            u[pr] = [-v for v in u[pr]]
        for r in range(pr):
            q = a[r][c] // a[pr][c]
            if q:
                a[r] = [v - q * w for v, w in zip(a[r], a[pr])]
                u[r] = [v - q * w for v, w in zip(u[r], u[pr])]
        pr += 1
        if pr == nr:
            break
    return IntMatrix(a, nc), IntMatrix(u, nr)


def hnf(matrix):
    """Row-style HNF: upper echelon, positive pivots, entries above a pivot in [0, pivot)."""
    return hnf_with_transform(matrix)[0]


def hnf_basis(matrix):
    """HNF with zero rows dropped: the canonical basis of the row-span lattice."""
    h = hnf(matrix)
    return IntMatrix(tuple(row for row in h.rows if any(row)), h.ncols)


def same_row_lattice(a, b):
    """True iff a and b span the same lattice of integer row vectors."""
    return hnf_basis(a) == hnf_basis(b)


def in_row_lattice(vector, matrix):
    """True iff vector is an integer combination of the rows of matrix."""
    basis = hnf_basis(matrix)
    v = [int(x) for x in vector]
    if len(v) != basis.ncols:
        raise ValueError("length mismatch")
    for row in basis.rows:
        pc = next(j for j, x in enumerate(row) if x)
        q, r = divmod(v[pc], row[pc])
        if r:
            return False
        if q:
            v = [x - q * y for x, y in zip(v, row)]
    return not any(v)


def integer_kernel(matrix):
    """Z-basis (HNF-canonical) of {v in Z^ncols : matrix @ v = 0}; saturated."""
    h, u = hnf_with_transform(matrix.transpose())
    kernel_rows = tuple(u.rows[i] for i in range(h.nrows) if not any(h.rows[i]))
    return hnf_basis(IntMatrix(kernel_rows, matrix.ncols))


def rational_kernel(rows, ncols):
    """Z-basis of the integer solutions of exact linear constraints.

    Each constraint row may mix ints, Fractions and Cyclotomics; cyclotomic
    rows are first expanded into phi(m) rational rows over the power basis,
    then denominators are cleared.  The returned lattice is saturated.
    """
    expanded = []
    for row in rows:
        if len(row) != ncols:
            raise ValueError("constraint width mismatch")
        entries = [Cyclotomic._coerce(v) for v in row]
        if any(e is NotImplemented for e in entries):
            raise TypeError("unsupported scalar in constraint row")
        m = 1
        for e in entries:
            m = lcm(m, e.conductor)
        coords = [e.lift(m).rational_coords() for e in entries]
        for t in range(euler_phi(m)):
            rational_row = [c[t] for c in coords]
            if not any(rational_row):
                continue
            denom = 1
            for q in rational_row:
                denom = lcm(denom, q.denominator)
            expanded.append([int(q * denom) for q in rational_row])
    return integer_kernel(IntMatrix(expanded, ncols))


def snf(matrix):
    """Smith normal form: (diagonal, left, right) with left @ matrix @ right diagonal.

    The diagonal entries are nonnegative and satisfy d_i | d_{i+1}; left and
    right are unimodular.
    """
    a = [list(row) for row in matrix.rows]
    nr, nc = matrix.nrows, matrix.ncols
    left = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    right = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]

    def row_combine(i1, i2, x, y, p, q):
        a[i1], a[i2] = ([x * v + y * w for v, w in zip(a[i1], a[i2])],
                        [-q * v + p * w for v, w in zip(a[i1], a[i2])])
        left[i1], left[i2] = ([x * v + y * w for v, w in zip(left[i1], left[i2])],
                              [-q * v + p * w for v, w in zip(left[i1], left[i2])])

    def col_combine(j1, j2, x, y, p, q):
        for row in a:
            row[j1], row[j2] = x * row[j1] + y * row[j2], -q * row[j1] + p * row[j2]
        for row in right:
            row[j1], row[j2] = x * row[j1] + y * row[j2], -q * row[j1] + p * row[j2]

    for t in range(min(nr, nc)):
        pivot = min(((abs(a[i][j]), i, j)
                     for i in range(t, nr) for j in range(t, nc) if a[i][j]),
                    default=None)
        if pivot is None:
            break
        _, pi, pj = pivot
        if pi != t:
            a[t], a[pi] = a[pi], a[t]
            left[t], left[pi] = left[pi], left[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
            for row in right:
                row[t], row[pj] = row[pj], row[t]
        while True:
            for i in range(t + 1, nr):
                if a[i][t]:
                    g, x, y = _xgcd(a[t][t], a[i][t])
                    row_combine(t, i, x, y, a[t][t] // g, a[i][t] // g)
            for j in range(t + 1, nc):
                if a[t][j]:
                    g, x, y = _xgcd(a[t][t], a[t][j])
                    col_combine(t, j, x, y, a[t][t] // g, a[t][j] // g)
            if any(a[i][t] for i in range(t + 1, nr)):
                continue
            offender = next(((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc)
                             if a[i][j] % a[t][t]), None)
            if offender is None:
                break
            i, _ = offender
            a[t] = [v + w for v, w in zip(a[t], a[i])]
            left[t] = [v + w for v, w in zip(left[t], left[i])]
        if a[t][t] < 0:
            a[t] = [-v for v in a[t]]
            left[t] = [-v for v in left[t]]
    diag = tuple(a[i][i] for i in range(min(nr, nc)))
    return diag, IntMatrix(left, nr), IntMatrix(right, nc)


def det(matrix):
    """Determinant via fraction-free Bareiss elimination."""
    n = matrix.nrows
    if n != matrix.ncols:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    a = [list(row) for row in matrix.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def inverse_unimodular(matrix):
    """Exact inverse of a unimodular integer matrix, as an IntMatrix."""
    n = matrix.nrows
    if n != matrix.ncols:
        raise ValueError("not square")
    a = [[Fraction(v) for v in row] + [Fraction(1 if i == j else 0) for j in range(n)]
         for i, row in enumerate(matrix.rows)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        scale = a[col][col]
        a[col] = [v / scale for v in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                factor = a[i][col]
                a[i] = [v - factor * w for v, w in zip(a[i], a[col])]
    inv = [row[n:] for row in a]
    if any(v.denominator != 1 for row in inv for v in row):
        raise ValueError("matrix is not unimodular")
    return IntMatrix([[int(v) for v in row] for row in inv], n)


def unimodular_complete(basis):
    """Complete the rows of a saturated lattice basis to a unimodular square matrix.

    The first nrows rows of the result equal the input; raises ValueError if
    the input is not a basis of a saturated sublattice (some SNF invariant
    factor differs from 1).
    """
    m, n = basis.nrows, basis.ncols
    if m > n:
        raise ValueError("more rows than columns")
    diag, left, right = snf(basis)
    if list(diag) != [1] * m:
        raise ValueError("completion impossible: invariant factors %r" % (diag,))
    left_inv = inverse_unimodular(left)
    right_inv = inverse_unimodular(right)
    top = left_inv @ IntMatrix(right_inv.rows[:m], n)
    if top.rows != basis.rows:
        raise AssertionError("completion lost the input rows")
    completed = IntMatrix(top.rows + right_inv.rows[m:], n)
    if det(completed) not in (1, -1):
        raise AssertionError("completion is not unimodular")
    return completed
