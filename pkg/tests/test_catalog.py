"""Catalog integrity, reference verdicts, and the parametric families."""

from fractions import Fraction

import pytest

from nilgrade import (
    InputError,
    UnknownAlgebraError,
    check_conditions,
    direct_sum_abelian,
    is_homogeneous,
    lower_central_series,
    p_filiform_degree,
    validate,
)
from nilgrade import catalog
from nilgrade.catalog import FamilySpec, family, nmq_standard_grading, parse_family


class TestEntries:
    def test_size_and_order(self):
        names = catalog.names()
        assert len(names) == 46
        assert names[0] == "L1_1"
        assert names.index("L6_21(-1)") < names.index("L6_22(0)") < names.index("L6_23")

    def test_every_entry_validates_and_is_nilpotent(self):
        for entry in catalog.entries():
            assert validate(entry.algebra).ok, entry.name
            series = lower_central_series(entry.algebra)
            assert series.dims[-1] == 0

    def test_dim_filter(self):
        assert [e.name for e in catalog.entries(dim=3)] == ["L3_1", "L3_2"]
        assert len(catalog.entries(dim=6)) == 30

    @pytest.mark.parametrize(
        "name,brackets",
        [
            ("L5_9", [(1, 2, 3, 1), (1, 3, 5, 1), (2, 3, 4, 1)]),
            ("L6_20", [(1, 2, 3, 1), (1, 4, 5, 1), (1, 5, 6, 1), (2, 3, 6, 1)]),
            ("L1_1", []),
        ],
    )
    def test_reference_brackets(self, name, brackets):
        got = [(b.i, b.j, b.k, b.c) for b in catalog.get(name).algebra.brackets]
        assert got == sorted((i, j, k, Fraction(c)) for i, j, k, c in brackets)

    def test_unknown_name_suggests(self):
        with pytest.raises(UnknownAlgebraError) as exc:
            catalog.get("L5_99")
        assert exc.value.suggestions
        assert any(s.startswith("L5_") for s in exc.value.suggestions)

    @pytest.mark.parametrize(
        "name,base,m",
        [
            ("L4_2", "L3_2", 1),
            ("L5_2", "L3_2", 2),
            ("L5_3", "L4_3", 1),
            ("L6_2", "L3_2", 3),
            ("L6_3", "L4_3", 2),
            ("L6_4", "L5_4", 1),
            ("L6_5", "L5_5", 1),
            ("L6_6", "L5_6", 1),
            ("L6_7", "L5_7", 1),
            ("L6_8", "L5_8", 1),
            ("L6_9", "L5_9", 1),
        ],
    )
    def test_decomposable_entries(self, name, base, m):
        expected = direct_sum_abelian(catalog.get(base).algebra, m)
        got = catalog.get(name).algebra
        assert got.dim == expected.dim and got.brackets == expected.brackets


class TestExpectedData:
    def test_verdict_lookup(self):
        assert catalog.expected_verdicts("L5_4") == ("yes", "yes")
        assert catalog.expected_verdicts("L5_6") == ("unknown", "no")
        assert catalog.expected_grading("L5_4") == (-1, -1, -1, -1, -2)
        assert catalog.expected_grading("L5_6") is None

    def test_l6_21_reference_gradings_for_21_and_24(self):
        assert catalog.expected_grading("L6_21(-1)") == (-1, -1, -2, -3, -3, -4)
        assert catalog.expected_grading("L6_24(0)") == (-1, -2, -1, -2, -3, -3)

    def test_reference_gradings_are_homogeneous(self):
        for entry in catalog.entries():
            w = entry.expected.grading
            if w is not None:
                assert is_homogeneous(entry.algebra, w)[0], entry.name

    @pytest.mark.parametrize(
        "entry",
        [
            pytest.param(
                e,
                id=e.name,
                marks=pytest.mark.xfail(
                    reason="recorded reference verdict for L6_21(-1) is unsatisfiable: "
                    "no algebra admits a W-passing grading with block pattern "
                    "(2,1,2,1) at degrees (-1,-2,-3,-4); see NORMALIZATION_NOTES",
                    strict=True,
                )
                if e.name == "L6_21(-1)"
                else (),
            )
            for e in catalog.entries()
            if e.expected.grading is not None
        ],
    )
    def test_reference_grading_reproduces_verdicts(self, entry):
        report = check_conditions(entry.algebra, entry.expected.grading)
        assert report.homogeneous and report.w_pass
        assert report.h_pass == (entry.expected.wh_verdict == "yes")


class TestFamilies:
    def test_nmq_5_2_brackets(self):
        L = family(FamilySpec("nmq", (5, 2)))
        assert [(b.i, b.j, b.k, b.c) for b in L.brackets] == [
            (1, 2, 3, Fraction(1)),
            (4, 5, 3, Fraction(1)),
        ]

    def test_nm_top_5_brackets(self):
        L = family(FamilySpec("nm_top", (5,)))
        assert [(b.i, b.j, b.k, b.c) for b in L.brackets] == [
            (1, 2, 3, Fraction(1)),
            (1, 3, 4, Fraction(1)),
            (2, 3, 5, Fraction(1)),
        ]

    def test_ln_4_equals_l4_3(self):
        L = family(FamilySpec("Ln", (4,)))
        assert L.brackets == catalog.get("L4_3").algebra.brackets

    @pytest.mark.parametrize("n", range(3, 9))
    def test_ln_is_filiform(self, n):
        assert p_filiform_degree(family(FamilySpec("Ln", (n,)))) == 1

    @pytest.mark.parametrize("m", range(5, 9))
    def test_rm_is_filiform(self, m):
        assert p_filiform_degree(family(FamilySpec("Rm", (m,)))) == 1

    @pytest.mark.parametrize("m", range(3, 6))
    def test_q2m_is_filiform(self, m):
        L = family(FamilySpec("Q2m", (m,)))
        assert L.dim == 2 * m
        assert p_filiform_degree(L) == 1
        assert lower_central_series(L).nilpotency_class == 2 * m - 1

    @pytest.mark.parametrize("m", range(3, 11))
    def test_nmq_is_m_minus_2_filiform(self, m):
        for q in range(1, (m - 1) // 2 + 1):
            assert p_filiform_degree(family(FamilySpec("nmq", (m, q)))) == m - 2

    @pytest.mark.parametrize("m", range(6, 10))
    def test_nm_odd_even_are_m_minus_3_filiform(self, m):
        for q in range(1, (m - 4) // 2 + 1):
            assert p_filiform_degree(family(FamilySpec("nm_odd", (m, q)))) == m - 3
        for q in range(1, (m - 3) // 2 + 1):
            if 2 * (q - 1) <= m - 5:
                assert p_filiform_degree(family(FamilySpec("nm_even", (m, q)))) == m - 3

    @pytest.mark.parametrize("m", range(5, 10))
    def test_nm_top_is_not_p_filiform(self, m):
        # dim C^1 = 3 for this law, so the defining dimension chain fails
        L = family(FamilySpec("nm_top", (m,)))
        assert lower_central_series(L).dims[1] == 3
        assert p_filiform_degree(L) is None

    def test_heis_and_abelian(self):
        h2 = family(FamilySpec("heis", (2,)))
        assert h2.dim == 5 and len(h2.brackets) == 2
        assert p_filiform_degree(h2) == 3
        assert family(FamilySpec("abelian", (4,))).brackets == ()

    @pytest.mark.parametrize(
        "spec",
        [
            FamilySpec("nmq", (5, 0)),
            FamilySpec("nmq", (5, 3)),
            FamilySpec("nmq", (2, 1)),
            FamilySpec("nm_odd", (5, 1)),
            FamilySpec("nm_odd", (8, 3)),
            FamilySpec("nm_even", (5, 2)),
            FamilySpec("nm_top", (4,)),
            FamilySpec("Ln", (2,)),
            FamilySpec("Rm", (4,)),
            FamilySpec("Q2m", (2,)),
            FamilySpec("heis", (0,)),
            FamilySpec("abelian", (0,)),
            FamilySpec("Ln", (4, 1)),
        ],
    )
    def test_out_of_range_parameters(self, spec):
        with pytest.raises(InputError):
            family(spec)

    def test_parse_family(self):
        assert parse_family("nmq:5,2") == FamilySpec("nmq", (5, 2))
        assert parse_family("Ln:4") == FamilySpec("Ln", (4,))
        with pytest.raises(InputError):
            parse_family("nope:3")
        with pytest.raises(InputError):
            parse_family("Ln")
        with pytest.raises(InputError):
            parse_family("Ln:x")

    def test_unknown_family_in_builder(self):
        with pytest.raises(InputError):
            family(FamilySpec("mystery", (3,)))

    def test_family_members_bounded(self):
        members = catalog.family_members(8)
        assert all(alg.dim <= 8 for _, alg in members)
        assert any(spec.family == "Q2m" for spec, _ in members)
        for _, alg in members:
            assert validate(alg).ok


class TestNmqStandardGrading:
    def test_reference_case(self):
        assert nmq_standard_grading(5, 2) == (-1, -1, -2, -1, -1)

    def test_q_one_case(self):
        assert nmq_standard_grading(5, 1) == (-1, -1, -2, -2, -2)

    def test_always_homogeneous_and_admissible(self):
        for m in range(3, 11):
            for q in range(1, (m - 1) // 2 + 1):
                L = family(FamilySpec("nmq", (m, q)))
                w = nmq_standard_grading(m, q)
                report = check_conditions(L, w)
                assert report.w_pass and report.h_pass, (m, q)

    def test_range_checked(self):
        with pytest.raises(InputError):
            nmq_standard_grading(5, 3)
