from fractions import Fraction

from projrep.exactlin import IntMatrix, det, in_row_lattice, same_row_lattice
from projrep.modsym import (worked_examples_check, reg_lattice, verify_theorem1,
                            x_class_value_matrix, y_monomials)
from projrep.partitions import Partition, p_regular_partitions, partitions
from projrep.symfunc import class_values, mn_character


def test_reg_lattice_examples():
    lattice = reg_lattice(3, 2)
    assert lattice.rank == 2
    assert same_row_lattice(lattice.basis, IntMatrix([[1, -1, 0], [0, 0, 1]]))
    for p in (2, 3, 5):
        one = reg_lattice(1, p)
        assert one.rank == 1 and one.basis == IntMatrix([[1]])
    assert reg_lattice(4, 2).rank == 2


def test_reg_lattice_rows_vanish_on_singular_classes():
    for p in (2, 3):
        for n in range(1, 8):
            lattice = reg_lattice(n, p)
            values = x_class_value_matrix(n)
            classes = partitions(n)
            for row in lattice.basis.rows:
                for j, mu in enumerate(classes):
                    value = sum(row[i] * values[i][j] for i in range(len(classes)))
                    if not mu.is_p_regular(p):
                        assert value == 0


def test_y_monomials_examples():
    assert y_monomials(3, 2) == IntMatrix([[1, -1, 0], [0, 0, 1]])
    # p=3: rows for y_2 = x_(2) and y_1^2 = x_(1,1)
    assert y_monomials(2, 3) == IntMatrix([[1, 0], [0, 1]])
    assert y_monomials(2, 2) == IntMatrix([[0, 1]])


def test_y_monomial_rows_lie_in_lattice():
    for p in (2, 3, 5):
        for n in range(0, 8):
            lattice = reg_lattice(n, p)
            for row in y_monomials(n, p).rows:
                assert in_row_lattice(row, lattice.basis)


def test_verify_theorem1_small():
    report = verify_theorem1(3, 2)
    assert report.verdict and report.rank == report.expected_rank == 2
    assert verify_theorem1(1, 2).verdict
    assert verify_theorem1(0, 5).verdict


def test_verify_theorem1_rank_counts():
    for p in (2, 3, 5):
        for n in range(0, 8):
            report = verify_theorem1(n, p)
            assert report.verdict
            assert report.rank == len(p_regular_partitions(n, p))


def _fraction_inverse(matrix):
    n = matrix.nrows
    work = [[Fraction(v) for v in row]
            + [Fraction(1 if i == j else 0) for j in range(n)]
            for i, row in enumerate(matrix.rows)]
    for col in range(n):
        piv = next(r for r in range(col, n) if work[r][col])
        work[col], work[piv] = work[piv], work[col]
        scale = work[col][col]
        work[col] = [v / scale for v in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                f = work[r][col]
                work[r] = [a - f * b for a, b in zip(work[r], work[col])]
    return [row[n:] for row in work]


def test_change_of_basis_between_hnfs_is_unimodular():
    # square full-rank case: p exceeding n leaves no singular classes
    for n in range(1, 6):
        report = verify_theorem1(n, 7)
        h1, h2 = report.lattice_hnf, report.monomial_hnf
        assert h1.nrows == h1.ncols
        inverse_rows = _fraction_inverse(h1)
        change = [[sum(h2.rows[i][k] * inverse_rows[k][j] for k in range(h1.nrows))
                   for j in range(h1.nrows)] for i in range(h1.nrows)]
        assert all(v.denominator == 1 for row in change for v in row)
        determinant = det(IntMatrix([[int(v) for v in row] for row in change]))
        assert determinant in (1, -1)


def test_worked_examples_report():
    report = worked_examples_check()
    assert report.all_passed
    names = [check.name for check in report.checks]
    assert any("y_3" in name for name in names)
    assert any("regular character" in name for name in names)
    assert report.notes and "2*x2" in report.notes[0]
    payload = report.to_dict()
    assert payload["all_passed"] is True


def test_minus_y3_is_the_standard_character():
    from projrep.series import y_explicit
    minus_y3 = -y_explicit(3, 2)
    values = class_values(minus_y3)
    for mu in partitions(3):
        assert values[mu] == mn_character(Partition((2, 1)), mu)
