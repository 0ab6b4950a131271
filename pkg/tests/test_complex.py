import warnings

import pytest

from models.algebra import AbelianGroup, GradedGroup
from models.complex import Edge, FilteredComplex, Generator, HFKTable
from models.errors import ConflictingEntry, EmptyTable, InvalidComplex, TorsionWarning
from services.complex_service import complex_service
from services.torus_service import torus_service

Z = AbelianGroup.free(1)


def staircase_filtration_homology(m: int, j: int) -> GradedGroup:
    if j >= m:
        return GradedGroup({0: Z})
    if -m <= j and (m - j) % 2 == 0:
        return GradedGroup({j - m: Z})
    return GradedGroup()


class TestValidate:
    def test_staircase_is_valid(self, trefoil, mirror_trefoil, unknot):
        for complex_ in (trefoil, mirror_trefoil, unknot):
            assert complex_service.validate(complex_).passed

    def test_broken_d_squared(self):
        complex_ = FilteredComplex(
            (Generator("a", 2, 0), Generator("b", 1, 0), Generator("c", 0, 0)),
            (Edge("a", "b", 1), Edge("b", "c", 1)),
            "broken",
        )
        report = complex_service.validate(complex_)
        assert not report.passed
        assert not report.check(complex_service.CHECK_D_SQUARED).passed
        assert report.check(complex_service.CHECK_MASLOV).passed

    def test_maslov_drop(self):
        complex_ = FilteredComplex((Generator("a", 0, 0), Generator("b", 0, 0)), (Edge("a", "b", 1),))
        assert not complex_service.validate(complex_).check(complex_service.CHECK_MASLOV).passed

    def test_filtration_increase(self):
        complex_ = FilteredComplex((Generator("a", 1, 0), Generator("b", 0, 1)), (Edge("a", "b", 1),))
        check = complex_service.validate(complex_).check(complex_service.CHECK_FILTRATION)
        assert not check.passed
        assert check.offenders == ("a->b",)

    def test_unknown_endpoint_skips_remaining_checks(self):
        complex_ = FilteredComplex((Generator("a", 1, 0),), (Edge("a", "ghost", 1),))
        report = complex_service.validate(complex_)
        assert not report.check(complex_service.CHECK_IDS).passed
        assert all(not check.passed for check in report.checks)

    def test_duplicate_ids(self):
        complex_ = FilteredComplex((Generator("a", 0, 0), Generator("a", 1, 1)))
        assert not complex_service.validate(complex_).check(complex_service.CHECK_IDS).passed

    def test_homology_must_be_z_in_maslov_zero(self):
        complex_ = FilteredComplex((Generator("a", 0, 0), Generator("b", 0, 1)))
        report = complex_service.validate(complex_)
        assert report.check(complex_service.CHECK_D_SQUARED).passed
        assert not report.check(complex_service.CHECK_KNOT).passed


class TestHomology:
    def test_total_homology(self, trefoil):
        assert complex_service.total_homology(trefoil) == GradedGroup({0: Z})

    def test_quotients(self, trefoil):
        assert complex_service.quotient_homology(trefoil, 0) == GradedGroup({0: Z})
        assert complex_service.quotient_homology(trefoil, -1) == GradedGroup({0: Z, -1: Z})
        assert complex_service.quotient_homology(trefoil, 1).is_zero()

    @pytest.mark.parametrize("m", range(1, 11))
    def test_staircase_filtration_homology(self, m):
        complex_ = torus_service.staircase_T2(m)
        for j in range(-m - 2, m + 3):
            assert complex_service.filtration_homology(complex_, j) == staircase_filtration_homology(m, j), (m, j)

    def test_filtration_is_a_subcomplex(self, trefoil):
        sub = complex_service.filtration_subcomplex(trefoil, 0)
        assert [g.id for g in sub.generators] == ["x1", "x2"]
        assert sub.differential == (Edge("x1", "x2", 1),)

    def test_maslov_gap_is_rejected(self):
        complex_ = FilteredComplex((Generator("a", 2, 0), Generator("b", 0, 0)), (Edge("a", "b", 1),), "gap")
        with pytest.raises(InvalidComplex) as excinfo:
            complex_service.graded_homology(complex_)
        assert not excinfo.value.report.check(complex_service.CHECK_MASLOV).passed

    @pytest.mark.parametrize("level", [None, 0, 1])
    def test_unknown_endpoint_is_rejected(self, level):
        complex_ = FilteredComplex((Generator("a", 1, 0),), (Edge("a", "ghost", 1),), "ghost")
        with pytest.raises(InvalidComplex) as excinfo:
            if level is None:
                complex_service.total_homology(complex_)
            else:
                complex_service.filtration_homology(complex_, level)
        assert not excinfo.value.report.check(complex_service.CHECK_IDS).passed


def knot_complexes():
    return [torus_service.unknot()] + [torus_service.staircase_T2(m) for m in range(-5, 6) if m != 0]


class TestFiltrationInvariants:
    @pytest.mark.parametrize("complex_", knot_complexes(), ids=lambda c: c.name)
    def test_levels_are_nested(self, complex_):
        levels = [g.alexander for g in complex_.generators]
        previous = set()
        for j in range(min(levels) - 1, max(levels) + 2):
            ids = {g.id for g in complex_service.filtration_subcomplex(complex_, j).generators}
            assert previous <= ids, j
            previous = ids
        assert previous == {g.id for g in complex_.generators}

    @pytest.mark.parametrize("complex_", knot_complexes(), ids=lambda c: c.name)
    def test_subcomplex_and_quotient_partition_generators(self, complex_):
        for j in range(-7, 8):
            sub = complex_service.filtration_subcomplex(complex_, j)
            quotient = complex_service.quotient_complex(complex_, j)
            assert len(sub) + len(quotient) == len(complex_), j

    @pytest.mark.parametrize("complex_", knot_complexes(), ids=lambda c: c.name)
    def test_far_below_is_empty(self, complex_):
        assert complex_service.filtration_subcomplex(complex_, -10 ** 6).is_empty()

    @pytest.mark.parametrize("complex_", knot_complexes(), ids=lambda c: c.name)
    def test_mirror_reflects_associated_graded(self, complex_):
        table = complex_service.associated_graded(complex_)
        mirrored = complex_service.associated_graded(complex_service.mirror(complex_))
        assert mirrored == HFKTable({(-i, -m): g for (i, m), g in table.items()})

    @pytest.mark.parametrize("m", [m for m in range(-5, 6) if m != 0])
    def test_associated_graded_is_symmetric(self, m):
        assert complex_service.symmetry_check(complex_service.associated_graded(torus_service.staircase_T2(m)))


class TestAssociatedGraded:
    @pytest.mark.parametrize("m", range(1, 6))
    def test_staircase_gives_torus_table(self, m):
        assert complex_service.associated_graded(torus_service.staircase_T2(m)) == torus_service.hfk_torus_2(m)

    def test_mirror_staircase(self, mirror_trefoil):
        assert complex_service.associated_graded(mirror_trefoil) == torus_service.hfk_torus_2(-2)

    def test_torsion_is_kept_and_flagged(self):
        complex_ = FilteredComplex((Generator("a", 1, 0), Generator("b", 0, 0)), (Edge("a", "b", 2),), "torsion")
        with pytest.warns(TorsionWarning):
            table = complex_service.associated_graded(complex_)
        assert table[(0, 0)] == AbelianGroup(0, (2,))


class TestTables:
    def test_degree(self, unknot):
        assert complex_service.degree(complex_service.associated_graded(unknot)) == 0
        assert complex_service.degree(torus_service.hfk_torus_2(3)) == 3
        assert complex_service.degree(torus_service.hfk_torus_3_7()) == 6

    def test_degree_of_empty_table(self):
        with pytest.raises(EmptyTable):
            complex_service.degree(HFKTable())

    def test_reflect(self):
        assert complex_service.reflect(2, -1) == (-2, -5)

    def test_symmetry_check(self):
        assert complex_service.symmetry_check(torus_service.hfk_torus_2(4))
        assert complex_service.symmetry_check(torus_service.hfk_torus_3_7())
        assert not complex_service.symmetry_check(HFKTable({(1, 0): Z, (-1, 0): Z}))

    def test_symmetrize_from_either_side(self):
        full = torus_service.hfk_torus_2(3)
        upper = full.restrict(lambda i: i >= 0)
        lower = full.restrict(lambda i: i <= 0)
        assert complex_service.symmetrize_table(upper) == full
        assert complex_service.symmetrize_table(lower, source="nonpositive") == full

    def test_symmetrize_checks_existing_entries(self):
        with pytest.raises(ConflictingEntry) as excinfo:
            complex_service.symmetrize_table(HFKTable({(1, 0): Z, (-1, 0): Z}))
        assert (excinfo.value.alexander, excinfo.value.maslov) == (-1, 0)

    def test_symmetrize_accepts_agreeing_entries(self):
        table = HFKTable({(1, 0): Z, (-1, -2): Z})
        assert complex_service.symmetrize_table(table) == table


class TestMirror:
    def test_mirror_is_an_involution(self, trefoil):
        assert complex_service.mirror(complex_service.mirror(trefoil)) == trefoil

    def test_mirror_negates_gradings(self, trefoil):
        mirrored = complex_service.mirror(trefoil)
        assert mirrored.by_id["x2"] == Generator("x2", 2, 1)
        assert mirrored.differential == (Edge("x2", "x1", 1),)
        assert mirrored.name == "mirror(T(2,3))"

    def test_mirror_without_torsion_does_not_warn(self, trefoil):
        with warnings.catch_warnings():
            warnings.simplefilter("error", TorsionWarning)
            complex_service.mirror(trefoil)
