import json
import random
from fractions import Fraction

import pytest

from projrep.exactlin import Cyclotomic, IntMatrix, det, same_row_lattice
from projrep.modsym import verify_theorem1
from projrep.partitions import EMPTY, MultiPartition, Partition, multipartitions
from projrep.series import y_explicit
from projrep.symfunc import SymElement, X, x_to_c
from projrep.wreath import (PHI, XI, CharTable, ELatticeBasis, TableError,
                            WreathElement, count_regular_classes, e_lattice,
                            generator_exchange_check, xk_exp_identity_check, load_table,
                            p_regular_classes, phi_c_in_xi, phi_x_in_xi,
                            verify_theorem2, xi_from_phi, xk_series, yk_generators)

def xi_mono(ncomp, placements, coeff=1):
    comps = [EMPTY] * ncomp
    for idx, parts in placements.items():
        comps[idx] = Partition(parts)
    return WreathElement(XI, sum(sum(p) for p in placements.values()), ncomp,
                         {MultiPartition(comps): coeff})


# ---------------------------------------------------------------------------
# table loading


def test_load_bundled_tables(trivial_table, c2_table, c3_table, s3_table, c4_table):
    assert trivial_table.N == 1 and trivial_table.order == 1
    assert c2_table.N == 2 and c2_table.order == 2
    assert c3_table.N == 3 and c3_table.conductor == 3
    assert s3_table.N == 3 and s3_table.order == 6
    assert c4_table.N == 4 and c4_table.conductor == 4


def test_s3_table_matches_symmetric_group_oracle(s3_table):
    from projrep.symfunc import mn_character
    # classes 1a, 2a, 3a correspond to cycle types (1,1,1), (2,1), (3)
    class_types = [Partition((1, 1, 1)), Partition((2, 1)), Partition((3,))]
    irr_types = {"triv": Partition((3,)), "sgn": Partition((1, 1, 1)),
                 "std": Partition((2, 1))}
    for irr in s3_table.irreducibles:
        lam = irr_types[irr.label]
        for value, mu in zip(irr.values, class_types):
            assert value == mn_character(lam, mu)


def _table_payload():
    return {
        "name": "C2", "order": 2, "conductor": 1,
        "classes": [{"label": "1a", "size": 1, "element_order": 1},
                    {"label": "2a", "size": 1, "element_order": 2}],
        "irreducibles": [{"label": "triv", "values": [1, 1]},
                         {"label": "sgn", "values": [1, -1]}],
    }


def test_load_rejects_wrong_value(tmp_path):
    payload = _table_payload()
    payload["irreducibles"][1]["values"] = [1, -2]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(payload))
    with pytest.raises(TableError, match="orthogonality"):
        load_table(str(bad))


def test_load_rejects_size_mismatch(tmp_path):
    payload = _table_payload()
    payload["classes"][1]["size"] = 2
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(payload))
    with pytest.raises(TableError, match="sum"):
        load_table(str(bad))


def test_load_rejects_malformed(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(TableError):
        load_table(str(bad))
    missing = tmp_path / "missing.json"
    with pytest.raises(TableError):
        load_table(str(missing))


def test_first_class_must_be_identity(c2_table):
    from projrep.wreath import ClassInfo
    with pytest.raises(TableError, match="identity"):
        CharTable("x", 2, 1, [ClassInfo("2a", 1, 2), ClassInfo("1a", 1, 1)],
                  c2_table.irreducibles)


# ---------------------------------------------------------------------------
# regular classes and the vanishing lattice


def test_p_regular_classes(c2_table, s3_table):
    assert [c.label for c in p_regular_classes(c2_table, 2)] == ["1a"]
    assert [c.label for c in p_regular_classes(c2_table, 3)] == ["1a", "2a"]
    assert [c.label for c in p_regular_classes(s3_table, 2)] == ["1a", "3a"]
    assert [c.label for c in p_regular_classes(s3_table, 3)] == ["1a", "2a"]


def test_e_lattice_c2(c2_table):
    lattice = e_lattice(c2_table, 2)
    assert lattice.M == 1
    # the regular character chi_triv + chi_sgn spans the lattice
    assert lattice.phi.rows[0] == (1, 1)
    assert det(lattice.phi) in (1, -1)


def test_e_lattice_s3(s3_table):
    lattice = e_lattice(s3_table, 2)
    assert lattice.M == 2
    assert same_row_lattice(IntMatrix(lattice.phi.rows[:2], 3),
                            IntMatrix([[1, 1, 0], [0, 0, 1]]))
    assert det(lattice.phi) in (1, -1)


def test_e_lattice_p_coprime_order(c2_table, c3_table):
    # p coprime to |G|: no singular classes, the lattice is everything
    for table, p in ((c2_table, 3), (c3_table, 2)):
        lattice = e_lattice(table, p)
        assert lattice.M == table.N
        assert same_row_lattice(lattice.phi, IntMatrix.identity(table.N))


def test_e_lattice_rows_vanish_on_singular_classes(s3_table, c4_table):
    for table, p in ((s3_table, 2), (s3_table, 3), (c4_table, 2)):
        lattice = e_lattice(table, p)
        for row in lattice.phi.rows[:lattice.M]:
            for idx, cls in enumerate(table.classes):
                if cls.element_order % p == 0:
                    total = Cyclotomic.from_rational(0)
                    for j, irr in enumerate(table.irreducibles):
                        total = total + row[j] * irr.values[idx]
                    assert total == 0


# ---------------------------------------------------------------------------
# basis expansion


def test_phi_x1_for_c2(c2_table):
    element = phi_x_in_xi(c2_table, 0, 1)
    half = Fraction(1, 2)
    assert element == (xi_mono(2, {0: (1,)}, half) + xi_mono(2, {1: (1,)}, half))


def test_xi_round_trip_c2(c2_table):
    # xi_{n,1a} = conj(triv(1a))*Phi_triv(c_n) + conj(sgn(1a))*Phi_sgn(c_n)
    for n in (1, 2, 3, 4):
        recovered = phi_c_in_xi(c2_table, 0, n) + phi_c_in_xi(c2_table, 1, n)
        assert recovered == xi_mono(2, {0: (n,)})
        twisted = phi_c_in_xi(c2_table, 0, n) - phi_c_in_xi(c2_table, 1, n)
        assert twisted == xi_mono(2, {1: (n,)})


def test_xi_round_trip_general(c3_table, s3_table):
    # xi_{n,C} = sum_rho conj(rho(C)) Phi_rho(c_n)
    for table in (c3_table, s3_table):
        for c_index in range(table.N):
            for n in (1, 2):
                acc = WreathElement.zero(XI, n, table.N)
                for j, irr in enumerate(table.irreducibles):
                    acc = acc + irr.values[c_index].conjugate() * phi_c_in_xi(table, j, n)
                assert acc == xi_mono(table.N, {c_index: (n,)})


def test_trivial_group_reduces_to_symfunc(trivial_table):
    for n in range(7):
        element = phi_x_in_xi(trivial_table, 0, n)
        expected = x_to_c(SymElement.generator(X, n))
        assert {mp[0]: c.rational_value() for mp, c in element.coeffs.items()} == \
            dict(expected.coeffs)


def test_xi_from_phi_is_a_ring_morphism(c2_table):
    rng = random.Random(19)
    mps = multipartitions(2, 2)
    for _ in range(8):
        a = WreathElement(PHI, 2, 2,
                          {mp: rng.randint(-3, 3) for mp in mps})
        b = WreathElement(PHI, 2, 2,
                          {mp: rng.randint(-3, 3) for mp in mps})
        assert xi_from_phi(a * b, c2_table) == \
            xi_from_phi(a, c2_table) * xi_from_phi(b, c2_table)


def test_monomial_multiplication_is_union():
    a = xi_mono(2, {0: (2, 1)})
    b = xi_mono(2, {0: (2,), 1: (1,)})
    assert a * b == xi_mono(2, {0: (2, 2, 1), 1: (1,)})


# ---------------------------------------------------------------------------
# generator series


def test_xk_series_trivial_group(trivial_table):
    lattice = e_lattice(trivial_table, 2)
    series = xk_series(trivial_table, lattice, 1, 5)
    for i in range(6):
        expected = ({MultiPartition((Partition((i,)),)): 1} if i
                    else {MultiPartition((EMPTY,)): 1})
        assert series[i] == WreathElement(PHI, i, 1, expected)


def test_xk_series_identity_lattice(c2_table):
    # p coprime to |G|: phi is the identity so X_k is the plain generator series
    lattice = e_lattice(c2_table, 3)
    assert same_row_lattice(lattice.phi, IntMatrix.identity(2))
    for k in (1, 2):
        series = xk_series(c2_table, lattice, k, 4)
        row = lattice.phi.rows[k - 1]
        j = row.index(1)
        for i in range(1, 5):
            mono = [EMPTY, EMPTY]
            mono[j] = Partition((i,))
            assert series[i] == WreathElement(PHI, i, 2, {MultiPartition(mono): 1})


def test_xk_series_c2_product(c2_table):
    lattice = e_lattice(c2_table, 2)
    series = xk_series(c2_table, lattice, 1, 3)
    deg1 = (WreathElement.generator(PHI, 0, 1, 2)
            + WreathElement.generator(PHI, 1, 1, 2))
    assert series[1] == deg1


def test_yk_generators_trivial_group(trivial_table):
    for p in (2, 3):
        lattice = e_lattice(trivial_table, p)
        ys = yk_generators(trivial_table, lattice, 1, 8)
        for n in range(1, 9):
            mapped = {mp[0]: c.rational_value() for mp, c in ys[n].coeffs.items()}
            expected = (dict(y_explicit(n, p).coeffs) if n % p else {})
            assert mapped == expected


def test_yk_generators_c2_p3(c2_table):
    # p coprime to |G|: y_{k,n} is y_explicit pushed through Phi_k
    lattice = e_lattice(c2_table, 3)
    for k in (1, 2):
        j = lattice.phi.rows[k - 1].index(1)
        ys = yk_generators(c2_table, lattice, k, 4)
        expected = y_explicit(4, 3)
        mapped = {mp[j]: c.rational_value() for mp, c in ys[4].coeffs.items()}
        assert mapped == dict(expected.coeffs)
        assert all(mp[1 - j] == EMPTY for mp in ys[4].coeffs)


def test_yk_c2_p2_xi_support(c2_table):
    lattice = e_lattice(c2_table, 2)
    ys = yk_generators(c2_table, lattice, 1, 5)
    assert ys[1] == (WreathElement.generator(PHI, 0, 1, 2)
                     + WreathElement.generator(PHI, 1, 1, 2))
    support = xi_from_phi(ys[1], c2_table)
    assert list(support.coeffs) == [MultiPartition((Partition((1,)), EMPTY))]
    # all odd coefficients expand over regular multipartitions only
    for n in (1, 3, 5):
        for mp in xi_from_phi(ys[n], c2_table).coeffs:
            assert mp[1] == EMPTY and mp[0].is_p_regular(2)


# ---------------------------------------------------------------------------
# verification


def test_verify_theorem2_small(c2_table, s3_table, c3_table):
    for table, p, max_n in ((c2_table, 2, 4), (c2_table, 3, 3),
                            (s3_table, 2, 2), (c3_table, 2, 2)):
        for n in range(max_n + 1):
            report = verify_theorem2(table, p, n)
            assert report.verdict, (table.name, p, n)
            assert report.rank == report.expected_rank


def test_verify_theorem2_matches_theorem1_for_trivial_group(trivial_table):
    for p in (2, 3):
        lattice = e_lattice(trivial_table, p)
        for n in range(7):
            wreath_report = verify_theorem2(trivial_table, p, n, lattice=lattice)
            sym_report = verify_theorem1(n, p)
            assert wreath_report.verdict and sym_report.verdict
            assert wreath_report.rank == sym_report.rank
            assert wreath_report.lattice_hnf == sym_report.lattice_hnf
            assert wreath_report.monomial_hnf == sym_report.monomial_hnf


def test_rank_equals_regular_class_count(c2_table, s3_table):
    # S3, p=2: rank in degree n equals the odd-part multipartition count over 2 classes
    for n in range(3):
        report = verify_theorem2(s3_table, 2, n)
        assert report.rank == len(multipartitions(
            2, n, part_filter=lambda v: v % 2 == 1))
    # C2, p=2: single regular class, so |P_{n,reg}|
    from projrep.partitions import p_regular_partitions
    for n in range(5):
        report = verify_theorem2(c2_table, 2, n)
        assert report.rank == len(p_regular_partitions(n, 2))


def test_verdict_independent_of_lattice_basis(c2_table, s3_table):
    rng = random.Random(43)
    for table, p, n in ((c2_table, 2, 3), (s3_table, 2, 2)):
        base = e_lattice(table, p)
        reference = verify_theorem2(table, p, n, lattice=base)
        # recombine the first M rows by a random unimodular transform
        rows = [list(r) for r in base.phi.rows]
        if base.M > 1:
            i, j = rng.sample(range(base.M), 2)
            rows[i] = [a + 2 * b for a, b in zip(rows[i], rows[j])]
            rows[i], rows[j] = rows[j], rows[i]
        else:
            rows[0] = [-v for v in rows[0]]
        permuted = ELatticeBasis(p, base.M, IntMatrix(rows, table.N))
        assert det(permuted.phi) in (1, -1)
        report = verify_theorem2(table, p, n, lattice=permuted)
        assert report.verdict == reference.verdict
        assert report.rank == reference.rank
        assert report.lattice_hnf == reference.lattice_hnf
        assert report.monomial_hnf == reference.monomial_hnf


def test_dimension_consistency(c2_table, s3_table):
    for table, p, n in ((c2_table, 2, 4), (s3_table, 2, 2)):
        monomial_count = len(multipartitions(
            e_lattice(table, p).M, n, part_filter=lambda v: v % p != 0))
        report = verify_theorem2(table, p, n)
        assert monomial_count == count_regular_classes(table, p, n) == report.rank


def test_generator_exchange(trivial_table, c2_table, c3_table):
    for table, p, n in ((trivial_table, 2, 4), (c2_table, 2, 4), (c3_table, 2, 3)):
        lattice = e_lattice(table, p)
        assert generator_exchange_check(table, lattice, n)


def test_xk_exponential_identity(c2_table, s3_table, c3_table):
    for table, p, order in ((c2_table, 2, 5), (c2_table, 3, 4),
                            (s3_table, 2, 3), (s3_table, 3, 3), (c3_table, 2, 3)):
        lattice = e_lattice(table, p)
        for k in range(1, lattice.M + 1):
            assert xk_exp_identity_check(table, lattice, k, order), (table.name, p, k)


def test_yk_requires_lattice_row(c2_table):
    lattice = e_lattice(c2_table, 2)
    with pytest.raises(ValueError):
        yk_generators(c2_table, lattice, 2, 3)
