from __future__ import annotations

import pytest
from hypothesis import given

from positroid_lab.core import DyckPath, bases_from_matrix, positroid_of_path, profile_of_path
from positroid_lab.errors import InvalidArgument, NotRationalDyckError
from positroid_lab.necklace import necklace_explicit, necklace_from_bases
from positroid_lab.permutation import (
    CCW,
    CW,
    DecoratedPermutation,
    geometric_bound_holds,
    inverse_cycle_from,
    necklace_from_perm,
    path_from_perm,
    perm_from_necklace,
    perm_inverse_explicit,
    southwest_perm,
    southwest_reading,
    weak_excedances,
)
from strategies import dyck_paths
from test_core import EXAMPLE_A

PATH_8_5 = "EEENENEENEENN"
PERM_8_5 = "(1 2 13 12 3 11 10 4 9 5 8 7 6)"
EXAMPLE_PERM = "(1 12 9 2)(3 10 11 7)(4 5)(6 8)"


class TestDecoratedPermutation:
    def test_parse_and_print(self):
        p = DecoratedPermutation.parse("(1 5 2 4 3)")
        assert p.images == (5, 4, 1, 3, 2)
        assert str(p) == "(1 5 2 4 3)"
        assert p.to_json()["cycle"] == "(1 5 2 4 3)"

    def test_fixed_point_decorations(self):
        p = DecoratedPermutation.parse("(1 3)(2*)(4)")
        assert p.decorations == {2: CCW, 4: CW}
        assert str(p) == "(1 3)(2*)(4)"
        assert weak_excedances(p) == {1, 2}

    def test_equality_sees_decorations(self):
        assert DecoratedPermutation.parse("(1)(2)") != DecoratedPermutation.parse("(1*)(2)")

    def test_inverse(self):
        p = DecoratedPermutation.parse(EXAMPLE_PERM)
        assert p.inverse().inverse() == p
        assert all(p.inverse()(p(j)) == j for j in range(1, 13))

    @pytest.mark.parametrize("text", ["(1 2)(2 3)"])
    def test_overlapping_cycles(self, text):
        with pytest.raises(InvalidArgument):
            DecoratedPermutation.parse(text)

    def test_missing_decoration(self):
        with pytest.raises(InvalidArgument):
            DecoratedPermutation(2, (1, 2), {1: CW})


class TestRecipes:
    def test_example_matrix_permutation(self):
        N = necklace_from_bases(bases_from_matrix(EXAMPLE_A))
        assert str(perm_from_necklace(N)) == EXAMPLE_PERM

    def test_example_necklace_from_permutation(self):
        N = necklace_from_bases(bases_from_matrix(EXAMPLE_A))
        assert necklace_from_perm(DecoratedPermutation.parse(EXAMPLE_PERM)) == N

    def test_southwest_reading_8_5(self):
        path = DyckPath.parse(PATH_8_5)
        assert str(southwest_perm(path)) == PERM_8_5
        assert southwest_reading(path)[0] == 1

    def test_beta_on_8_5(self):
        assert str(path_from_perm(DecoratedPermutation.parse(PERM_8_5))) == PATH_8_5

    def test_eenen(self):
        path = DyckPath.parse("EENEN")
        assert str(southwest_perm(path)) == "(1 5 2 4 3)"
        assert perm_inverse_explicit(profile_of_path(path)) == southwest_perm(path)

    def test_path_from_perm_rejects_non_cycles(self):
        with pytest.raises(NotRationalDyckError):
            path_from_perm(DecoratedPermutation.parse("(1 3)(2 4)"))

    def test_path_from_perm_rejects_above_diagonal(self):
        # the cycle reads N first from d + 1, i.e. a path starting with N
        with pytest.raises(NotRationalDyckError):
            path_from_perm(DecoratedPermutation.parse("(1 2 3)"), d=1)

    def test_inverse_cycle(self):
        p = DecoratedPermutation.parse("(1 5 2 4 3)")
        assert inverse_cycle_from(p, 3) == [3, 4, 2, 5, 1]

    @given(dyck_paths(max_n=10))
    def test_routes_agree(self, path):
        sw = southwest_perm(path)
        prof = profile_of_path(path)
        assert perm_inverse_explicit(prof) == sw
        assert perm_from_necklace(necklace_explicit(prof)) == sw
        assert necklace_from_perm(sw) == necklace_explicit(prof)
        assert len(sw.cycles()) == 1
        assert weak_excedances(sw) == set(range(1, path.d + 1))
        assert path_from_perm(sw) == path

    @given(dyck_paths(max_n=8))
    def test_generic_necklace_route(self, path):
        assert perm_from_necklace(necklace_from_bases(positroid_of_path(path))) == southwest_perm(path)

    @given(dyck_paths(max_n=10))
    def test_geometric_bound(self, path):
        assert geometric_bound_holds(profile_of_path(path))
