import warnings

import pytest

from models.algebra import AbelianGroup, GradedGroup
from models.cabling import CableParams
from models.complex import Edge, FilteredComplex, Generator
from models.enums import BoundSide
from models.errors import InvalidComplex, MissingCPrime, NotLargeN, ZeroParameter
from services.alexander_service import alexander_service
from services.cabling_service import cabling_service
from services.complex_service import complex_service
from services.torus_service import torus_service

from helpers import table_with_reflections

Z = AbelianGroup.free(1)


class TestFormulas:
    @pytest.mark.parametrize("d, p, n, expected", [
        (1, 2, 11, 13),
        (0, 3, 2, 6),
        (1, 2, -7, 8),
        (0, 5, 2, 20),
        (1, 2, -9, 10),
    ])
    def test_cable_degree(self, d, p, n, expected):
        assert cabling_service.cable_degree(d, p, n) == expected

    @pytest.mark.parametrize("d, p, n, c_prime, expected", [
        (0, 3, 2, 0, -1),
        (2, 4, 5, 1, 21),
        (1, 2, 40, 0, -39),
    ])
    def test_threshold_c(self, d, p, n, c_prime, expected):
        assert cabling_service.threshold_c(d, p, n, c_prime) == expected

    def test_threshold_for_negative_n(self):
        # T(3,-5): the formulas hold below i = 0
        assert cabling_service.threshold_c(0, 3, -2, 0) == 0


class TestCableParams:
    def test_c_prime_required_above_two(self):
        with pytest.raises(MissingCPrime):
            CableParams(p=3, n=2)

    def test_zero_n(self):
        with pytest.raises(ZeroParameter):
            CableParams(p=2, n=0)

    def test_p_at_least_two(self):
        with pytest.raises(ValueError):
            CableParams(p=1, n=3)


class TestCable2:
    def test_unknot_gives_torus_knot(self, unknot):
        assert cabling_service.cable2_hfk(unknot, 3) == torus_service.hfk_torus_2(3)

    def test_trefoil_first_branch(self, trefoil):
        half = {(13, 0): Z, (12, -1): Z}
        half.update({(i, i - 11): Z for i in range(0, 10)})
        table = cabling_service.cable2_hfk(trefoil, 11)
        assert table == table_with_reflections(half)
        assert table.metadata["status"] == "theorem"

    def test_top_row_maslov_shift(self, trefoil):
        # H_{-2}(Filt(K,-1)) lands at (n+2, 0)
        table = cabling_service.cable2_hfk(trefoil, 11)
        assert table.row(13) == GradedGroup({0: Z})

    @pytest.mark.parametrize("m, n", [(1, 11), (2, 21), (-1, 8), (-2, 14)])
    def test_matches_closed_form_for_positive_n(self, m, n):
        table = cabling_service.cable2_hfk(torus_service.staircase_T2(m), n)
        assert table == torus_service.torus_cable_table(m, n)

    @pytest.mark.parametrize("m, n", [(1, 11), (3, 31), (-2, 14)])
    def test_degree_and_symmetry(self, m, n):
        complex_ = torus_service.staircase_T2(m)
        d = complex_service.degree(complex_service.associated_graded(complex_))
        table = cabling_service.cable2_hfk(complex_, n)
        assert complex_service.degree(table) == 2 * d + n
        assert complex_service.symmetry_check(table)

    def test_small_n_warns(self, trefoil):
        with pytest.warns(NotLargeN):
            table = cabling_service.cable2_hfk(trefoil, 1)
        assert table.metadata["status"] == "conjectural"

    def test_override_silences_warning(self, trefoil):
        with warnings.catch_warnings():
            warnings.simplefilter("error", NotLargeN)
            table = cabling_service.cable2_hfk(trefoil, 2, large_n_override=True)
        assert table.metadata["large_n"] == "assumed (override)"

    def test_invalid_complex(self):
        broken = FilteredComplex((Generator("a", 0, 0), Generator("b", 0, 0)), (Edge("a", "b", 1),))
        with pytest.raises(InvalidComplex) as excinfo:
            cabling_service.cable2_hfk(broken, 5)
        assert not excinfo.value.report.passed

    def test_n_must_be_positive(self, trefoil):
        with pytest.raises(ZeroParameter):
            cabling_service.cable2_hfk(trefoil, -3)


class TestCablep:
    def test_t37_from_the_unknot(self, unknot):
        partial = cabling_service.cablep_hfk(unknot, CableParams(p=3, n=2, c_prime=0))
        assert partial.threshold == -1
        assert partial.side == BoundSide.ABOVE
        upper = torus_service.hfk_torus_3_7().restrict(lambda i: i >= 0)
        assert partial.table.restrict(lambda i: i >= 0) == upper

    def test_p_two_agrees_with_cable2(self, unknot):
        partial = cabling_service.cablep_hfk(unknot, CableParams(p=2, n=3, c_prime=0))
        full = cabling_service.cable2_hfk(unknot, 3)
        assert partial.table.restrict(lambda i: i > -2) == full.restrict(lambda i: i > -2)

    def test_p_two_defaults_c_prime(self, unknot):
        partial = cabling_service.cablep_hfk(unknot, CableParams(p=2, n=3))
        assert partial.assumptions["c_prime"] == 0
        assert partial.assumptions["c_prime_defaulted"] is True

    def test_trefoil_p3_top_rows(self, trefoil):
        partial = cabling_service.cablep_hfk(trefoil, CableParams(p=3, n=20, c_prime=0))
        table = partial.table
        assert partial.threshold == 2
        assert complex_service.degree(table) == 63
        assert table.row(63) == GradedGroup({0: Z})
        assert table.row(62) == GradedGroup({-1: Z})
        assert table.row(61).is_zero()
        assert table.row(60).is_zero()
        assert table.row(59).is_zero()
        assert table.row(57) == GradedGroup({-2: Z})
        assert table.row(56) == GradedGroup({-3: Z})

    def test_gap_structure(self, trefoil):
        p = 3
        partial = cabling_service.cablep_hfk(trefoil, CableParams(p=p, n=20, c_prime=0))
        degree = complex_service.degree(partial.table)
        for i in partial.table.alexander_gradings():
            assert partial.in_range(i)
            assert (degree - i) % p in (0, 1)

    def test_table_support_inside_valid_range(self, trefoil):
        partial = cabling_service.cablep_hfk(trefoil, CableParams(p=4, n=12, c_prime=1))
        assert all(partial.in_range(i) for i in partial.table.alexander_gradings())


class TestCablepNegative:
    def test_unknot(self, unknot):
        partial = cabling_service.cablep_neg_hfk(unknot, CableParams(p=2, n=-4))
        assert partial.side == BoundSide.FULL
        assert partial.table == torus_service.hfk_torus_2(-4)

    @pytest.mark.parametrize("m, n", [(1, -8), (2, -14), (-1, -11), (-2, -21)])
    def test_matches_closed_form_for_negative_n(self, m, n):
        # the (2, 2n-1) cable is the (2, 2(n-1)+1) cable
        partial = cabling_service.cablep_neg_hfk(torus_service.staircase_T2(m), CableParams(p=2, n=n - 1))
        assert partial.side == BoundSide.FULL
        assert partial.table == torus_service.torus_cable_table(m, n)
        assert complex_service.degree(partial.table) == cabling_service.cable_degree(
            complex_service.degree(complex_service.associated_graded(torus_service.staircase_T2(m))), 2, n - 1)

    def test_p3_below_threshold(self, unknot):
        # T(3,-5) is the mirror of T(3,5)
        partial = cabling_service.cablep_neg_hfk(unknot, CableParams(p=3, n=-2, c_prime=0))
        assert partial.side == BoundSide.BELOW
        mirror_t35 = {(-4, 0): Z, (-3, 1): Z, (-1, 2): Z}
        assert dict(partial.table.items()) == mirror_t35
        assert all(partial.in_range(i) for i in partial.table.alexander_gradings())

    def test_uses_the_quotient_complex(self, trefoil):
        partial = cabling_service.cablep_neg_hfk(trefoil, CableParams(p=2, n=-9))
        assert partial.table.row(-10) == GradedGroup({-2: Z})
        assert partial.table.row(-8) == GradedGroup({0: Z, -1: Z})


class TestTopGroups:
    def test_trefoil(self, trefoil):
        top, following, degree = cabling_service.top_groups(trefoil, 2, 11)
        assert top == GradedGroup({0: Z})
        assert following == GradedGroup({-1: Z})
        assert degree == 13

    def test_unknot_p5(self, unknot):
        assert cabling_service.top_groups(unknot, 5, 2) == (GradedGroup({0: Z}), GradedGroup({-1: Z}), 20)

    @pytest.mark.parametrize("m, n", [(1, 11), (2, 21), (-1, 8), (-2, 14)])
    def test_top_rows_of_cable2(self, m, n):
        complex_ = torus_service.staircase_T2(m)
        top, following, degree = cabling_service.top_groups(complex_, 2, n)
        table = cabling_service.cable2_hfk(complex_, n)
        assert table.row(degree) == top
        assert table.row(degree - 1) == following

    @pytest.mark.parametrize("m, n", [(1, 20), (-1, 20), (2, 30)])
    def test_top_rows_of_cablep(self, m, n):
        complex_ = torus_service.staircase_T2(m)
        top, following, degree = cabling_service.top_groups(complex_, 3, n)
        partial = cabling_service.cablep_hfk(complex_, CableParams(p=3, n=n, c_prime=0))
        assert partial.table.row(degree) == top
        assert partial.table.row(degree - 1) == following

    @pytest.mark.parametrize("m, n", [(1, -8), (2, -14), (-1, -11), (-2, -21)])
    def test_negative_tables_up_to_maslov_shift(self, m, n):
        complex_ = torus_service.staircase_T2(m)
        top, following, degree = cabling_service.top_groups(complex_, 2, n - 1)
        table = torus_service.torus_cable_table(m, n)
        row = table.row(degree)
        shift = min(row) - min(top)
        assert row == top.shift(shift)
        assert table.row(degree - 1) == following.shift(shift)


class TestEulerTriangle:
    @pytest.mark.parametrize("m", range(1, 7))
    @pytest.mark.parametrize("offset", range(1, 6))
    def test_cable_alexander_matches_table(self, m, offset):
        n = 10 * m + offset
        complex_ = torus_service.staircase_T2(m)
        delta_k = alexander_service.euler_poly(complex_service.associated_graded(complex_))
        table = cabling_service.cable2_hfk(complex_, n)
        assert alexander_service.euler_poly(table) == alexander_service.cable_alexander(delta_k, 2, 2 * n + 1)


class TestDispatcher:
    def test_p2_positive_is_full(self, trefoil):
        partial = cabling_service.cable_table(trefoil, CableParams(p=2, n=11))
        assert partial.side == BoundSide.FULL
        assert partial.table == cabling_service.cable2_hfk(trefoil, 11)

    def test_p3_positive_is_above(self, unknot):
        assert cabling_service.cable_table(unknot, CableParams(p=3, n=2, c_prime=0)).side == BoundSide.ABOVE

    def test_negative_n(self, unknot):
        assert cabling_service.cable_table(unknot, CableParams(p=3, n=-2, c_prime=0)).side == BoundSide.BELOW
