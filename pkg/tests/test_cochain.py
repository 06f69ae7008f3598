"""Cochain complex: bases, differentials, Betti numbers."""

from fractions import Fraction
from math import comb

import pytest

from nilgrade import (
    InputError,
    LieAlgebra,
    betti,
    betti_vector,
    ce_differential,
    k_form_basis,
    kernel_basis,
    lower_central_series,
    rank,
)
from nilgrade import catalog
from nilgrade.cochain import differential_square_is_zero

from conftest import sympy_rank

L3_2 = catalog.get("L3_2").algebra
L5_8 = catalog.get("L5_8").algebra
N5_2 = catalog.family(catalog.FamilySpec("nmq", (5, 2)))  # basis (X0,X1,X2,Y1,Y2)


class TestKFormBasis:
    def test_lexicographic_pairs(self):
        assert k_form_basis(4, 2) == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]

    def test_degree_zero(self):
        assert k_form_basis(5, 0) == [()]

    def test_top_degree(self):
        assert k_form_basis(3, 3) == [(1, 2, 3)]

    @pytest.mark.parametrize("k", [-1, 4])
    def test_out_of_range(self, k):
        with pytest.raises(InputError):
            k_form_basis(3, k)


class TestDifferential:
    def test_heisenberg_degree_one(self):
        m = ce_differential(L3_2, 1)
        # rows (1,2),(1,3),(2,3); cols x1,x2,x3; dx3 = -x1^x2
        assert m.entries == [[0, 0, -1], [0, 0, 0], [0, 0, 0]]

    def test_pairing_family_degree_one(self):
        m = ce_differential(N5_2, 1)
        pairs = k_form_basis(5, 2)
        col = [m.entries[r][2] for r in range(len(pairs))]
        # dx2 = -x0^x1 - y1^y2 (dual index 3; rows (1,2) and (4,5))
        expected = [Fraction(-1) if f in ((1, 2), (4, 5)) else Fraction(0) for f in pairs]
        assert col == expected
        for c in (0, 1, 3, 4):
            assert all(m.entries[r][c] == 0 for r in range(len(pairs)))

    def test_pairing_family_degree_two(self):
        m = ce_differential(N5_2, 2)
        pairs = k_form_basis(5, 2)
        triples = k_form_basis(5, 3)
        col = pairs.index((1, 3))  # x0 ^ x2
        values = {triples[r]: m.entries[r][col] for r in range(len(triples)) if m.entries[r][col]}
        assert values == {(1, 4, 5): Fraction(1)}  # d(x0^x2) = x0^y1^y2

    def test_out_of_range(self):
        with pytest.raises(InputError):
            ce_differential(L3_2, 4)

    def test_invalid_algebra_rejected(self):
        bad = LieAlgebra("bad", 5, [(1, 2, 3, 1), (1, 3, 5, 1), (2, 3, 4, 1), (1, 4, 5, 1)])
        with pytest.raises(InputError):
            ce_differential(bad, 1)

    @pytest.mark.parametrize("name", catalog.names())
    def test_differential_squares_to_zero(self, name):
        L = catalog.get(name).algebra
        for k in range(0, L.dim - 1):
            assert differential_square_is_zero(L, k)
            # dense cross-check on the small degrees
            if k <= 2:
                prod = ce_differential(L, k + 1) @ ce_differential(L, k)
                assert prod.is_zero()


class TestRankKernelExamples:
    def test_heisenberg_degree_one(self):
        m = ce_differential(L3_2, 1)
        assert rank(m) == 1
        assert kernel_basis(m).entries == [[1, 0, 0], [0, 1, 0]]

    def test_l5_8_degree_one(self):
        m = ce_differential(L5_8, 1)
        assert rank(m) == 2
        assert kernel_basis(m).entries == [
            [1, 0, 0, 0, 0],
            [0, 1, 0, 0, 0],
            [0, 0, 0, 1, 0],
        ]

    @pytest.mark.parametrize("name", ["L5_9", "L6_21(-1)", "L6_24(0)"])
    @pytest.mark.parametrize("k", [1, 2])
    def test_rank_matches_sympy(self, name, k):
        m = ce_differential(catalog.get(name).algebra, k)
        assert rank(m) == sympy_rank(m)


class TestBetti:
    def test_heisenberg_vector(self):
        assert betti_vector(L3_2) == [1, 2, 2, 1]

    def test_pairing_family(self):
        assert betti(N5_2, 1) == 4
        assert betti(N5_2, 2) == 5

    def test_l5_8(self):
        assert betti(L5_8, 1) == 3

    def test_l6_28(self):
        assert betti(catalog.get("L6_28").algebra, 2) == 4

    def test_abelian_is_binomial(self):
        L = LieAlgebra("C6", 6, [])
        assert betti_vector(L) == [comb(6, k) for k in range(7)]

    def test_rational_multi_target_constants(self):
        # [X1,X2] = X3 + (1/2) X4: 2-step, central image, Jacobi-trivial
        L = LieAlgebra("frac", 4, [(1, 2, 3, 1), (1, 2, 4, "1/2")])
        m = ce_differential(L, 1)
        pairs = k_form_basis(4, 2)
        assert m.entries[pairs.index((1, 2))][2] == Fraction(-1)
        assert m.entries[pairs.index((1, 2))][3] == Fraction(-1, 2)
        b = betti_vector(L)
        assert b == [1, 3, 4, 3, 1]  # same as h3 (+) C: the image is 1-dim
        assert rank(m) == sympy_rank(m)

    def test_top_degree_differential_is_empty(self):
        m = ce_differential(L3_2, 3)
        assert m.rows == 0 and m.cols == 1
        assert rank(m) == 0
        assert kernel_basis(m).entries == [[1]]

    def test_out_of_range(self):
        with pytest.raises(InputError):
            betti(L3_2, 5)

    @pytest.mark.parametrize("name", catalog.names())
    def test_catalog_invariants(self, name):
        L = catalog.get(name).algebra
        b = betti_vector(L)
        n = L.dim
        assert b[0] == 1 and b[n] == 1
        assert sum((-1) ** k * v for k, v in enumerate(b)) == 0
        assert all(b[k] == b[n - k] for k in range(n + 1))
        assert b[1] == n - lower_central_series(L).dims[1]
