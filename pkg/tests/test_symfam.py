"""Family constructors, the monomial symmetric basis, and reference-table
comparison."""

import random
from fractions import Fraction

import pytest

from quartics.dixmier import InvariantSet, dixmier_invariants
from quartics.errors import DomainError
from quartics.polyring import Polynomial, VarTable
from quartics.symfam import (Partition, decompose_symmetric, golden_compare,
                             golden_polynomial, is_symmetric, load_golden,
                             make_family, make_generic, reconstruct, s_basis)

RSU = VarTable(("x", "y", "z"), ("r", "s", "u"))


def mono(table, powers, c=1):
    return Polynomial.monomial(table, powers, c)


class TestMakeFamily:
    def test_x96_equation(self):
        f = make_family("X96")
        t = f.poly.table
        assert f.poly == mono(t, {"x": 4}) + mono(t, {"y": 4}) + mono(t, {"z": 4})

    def test_x4_at_zero_is_x96(self):
        assert make_family("X4", (0, 0, 0)).poly == make_family("X96").poly

    def test_x16_is_specialized_x4(self):
        a = make_family("X16", (1, 3)).poly
        b = make_family("X4", (1, 3, 3)).poly
        assert a == b

    def test_x24_equation(self):
        f = make_family("X24", (5,)).poly
        t = f.table
        want = (mono(t, {"x": 4}) + mono(t, {"y": 4}) + mono(t, {"z": 4})
                + 5 * (mono(t, {"x": 2, "y": 2}) + mono(t, {"y": 2, "z": 2})
                       + mono(t, {"z": 2, "x": 2})))
        assert f == want

    def test_wrong_arity(self):
        with pytest.raises(DomainError):
            make_family("X4", (1, 2))
        with pytest.raises(DomainError):
            make_family("X96", (1,))

    def test_generic(self):
        q = make_generic(list(range(1, 16)))
        assert q.poly.geometric_degree() == 4
        assert len(q.poly.terms) == 15
        with pytest.raises(DomainError):
            make_generic([1, 2, 3])


class TestSBasis:
    def test_s21(self):
        got = s_basis((2, 1), RSU)
        want = (mono(RSU, {"r": 2, "s": 1}) + mono(RSU, {"r": 1, "s": 2})
                + mono(RSU, {"s": 2, "u": 1}) + mono(RSU, {"s": 1, "u": 2})
                + mono(RSU, {"r": 2, "u": 1}) + mono(RSU, {"r": 1, "u": 2}))
        assert got == want

    def test_s311(self):
        got = s_basis((3, 1, 1), RSU)
        want = (mono(RSU, {"r": 3, "s": 1, "u": 1}) + mono(RSU, {"r": 1, "s": 3, "u": 1})
                + mono(RSU, {"r": 1, "s": 1, "u": 3}))
        assert got == want

    def test_s111_single_orbit(self):
        assert s_basis((1, 1, 1), RSU) == mono(RSU, {"r": 1, "s": 1, "u": 1})

    def test_orbit_sizes(self):
        assert len(s_basis((2,), RSU).terms) == 3
        assert len(s_basis((2, 1), RSU).terms) == 6
        assert len(s_basis((2, 2), RSU).terms) == 3
        assert len(s_basis((1, 1, 1), RSU).terms) == 1
        assert len(s_basis((3, 2, 1), RSU).terms) == 6

    def test_symmetry(self):
        for parts in ((3,), (2, 1), (4, 2, 1), (5, 5, 2)):
            assert is_symmetric(s_basis(parts, RSU))

    def test_partition_validation(self):
        with pytest.raises(DomainError):
            Partition((1, 2))
        with pytest.raises(DomainError):
            Partition((1, 1, 1, 1))


class TestDecompose:
    def test_reference_shape(self):
        p = 6 * s_basis((2,), RSU) + 2 * s_basis((1, 1, 1), RSU) + 72
        dec = decompose_symmetric(p)
        assert dec.constant == 72
        assert dec.as_dict() == {(2,): Fraction(6), (1, 1, 1): Fraction(2)}

    def test_constant(self):
        dec = decompose_symmetric(Polynomial.constant(RSU, 1))
        assert dec.constant == 1 and not dec.terms

    def test_linear(self):
        p = (Polynomial.variable(RSU, "r") + Polynomial.variable(RSU, "s")
             + Polynomial.variable(RSU, "u"))
        dec = decompose_symmetric(p)
        assert dec.constant == 0
        assert dec.as_dict() == {(1,): Fraction(1)}

    def test_roundtrip_random(self):
        rng = random.Random(61)
        for _ in range(10):
            p = Polynomial.constant(RSU, rng.randint(-5, 5))
            for _ in range(4):
                parts = tuple(sorted((rng.randint(1, 4) for _ in range(rng.randint(1, 3))),
                                     reverse=True))
                p = p + s_basis(parts, RSU) * Fraction(rng.randint(-6, 6), rng.randint(1, 3))
            dec = decompose_symmetric(p)
            assert reconstruct(dec, RSU) == p

    def test_rejects_asymmetric(self):
        with pytest.raises(DomainError):
            decompose_symmetric(mono(RSU, {"r": 1}))


class TestGolden:
    def test_tables_load(self):
        for family in ("X4", "X16", "X24", "X96"):
            table = load_golden(family)
            assert set(table) == {3, 6, 9, 12, 15, 18}

    def test_x24_table_values(self):
        t = VarTable(("x", "y", "z"), ("r",))
        i12 = golden_polynomial("X24", 12, t)
        # 64 r^3 (r+18)^3 (r^2+3r+18)^3int / 729 at r = 1
        from quartics.polyring import eval_exact

        assert eval_exact(i12, {"r": 1}) == Fraction(64 * 19 ** 3 * 22 ** 3, 729)

    def test_gamma_is_one_for_specialized_families(self):
        for family in ("X16", "X24"):
            report = golden_compare(dixmier_invariants(make_family(family)), family)
            assert report.ok
            assert all(g == 1 for g in report.gamma.values()), report.gamma

    def test_x96_zero_entries_undetermined(self):
        report = golden_compare(dixmier_invariants(make_family("X96")), "X96")
        assert report.ok
        assert report.gamma[3] == 1 and report.gamma[6] == 1
        assert all(report.gamma[k] is None for k in (9, 12, 15, 18))

    def test_x4_documented_anomalies(self):
        report = golden_compare(dixmier_invariants(make_family("X4")), "X4")
        assert report.ok
        assert report.gamma[3] == 1
        assert report.gamma[6] == Fraction(1, 648)
        assert report.gamma[9] == Fraction(64, 27)
        assert report.gamma[12] == 1
        assert report.gamma[15] == 1
        assert report.gamma[18] == 1

    def test_mismatch_is_reported(self):
        inv = dixmier_invariants(make_family("X24"))
        doctored = InvariantSet(inv.I3 + 1, inv.I6, inv.I9, inv.I12, inv.I15, inv.I18)
        report = golden_compare(doctored, "X24")
        assert not report.ok
        assert 3 in report.failures
