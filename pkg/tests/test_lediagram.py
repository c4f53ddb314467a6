from __future__ import annotations

import pytest
from hypothesis import given

from positroid_lab.core import DyckPath
from positroid_lab.errors import InvalidArgument, NotRationalDyckError
from positroid_lab.lediagram import (
    CROSS,
    ELBOW,
    LeDiagram,
    boundary_labels,
    cell_dimension,
    is_rational_dyck_le,
    le_from_path,
    path_from_le,
    perm_from_le,
    pipe_dream,
    validate_le,
)
from positroid_lab.permutation import DecoratedPermutation, southwest_perm
from strategies import dyck_paths
from test_permutation import PATH_8_5, PERM_8_5


def test_le_of_eenen():
    L = le_from_path(DyckPath.parse("EENEN"))
    assert L.fill == ("+0+", "0++")
    assert str(perm_from_le(L)) == "(1 5 2 4 3)"


def test_le_of_8_5():
    L = le_from_path(DyckPath.parse(PATH_8_5))
    assert cell_dimension(L) == 12
    assert perm_from_le(L) == DecoratedPermutation.parse(PERM_8_5)


def test_le_condition():
    assert validate_le(LeDiagram.rectangle(["++", "+0"])) is False
    assert validate_le(LeDiagram.rectangle(["+0", "0+"]))
    assert validate_le(LeDiagram.rectangle(["0+", "++"]))


def test_shape_validation():
    with pytest.raises(InvalidArgument):
        LeDiagram(2, 2, (1, 2), ("+", "++"))
    with pytest.raises(InvalidArgument):
        LeDiagram(1, 2, (2,), ("+x",))


def test_non_rectangular_boundary_labels():
    L = LeDiagram(2, 3, (3, 1), ("+0+", "+"))
    rows, cols = boundary_labels(L)
    assert rows == {1: 1, 2: 4}
    assert cols == {3: 2, 2: 3, 1: 5}


def test_zero_cell_gives_decorated_fixed_points():
    # a cross lets both pipes run straight through
    p = perm_from_le(LeDiagram.rectangle(["0"]))
    assert p.images == (1, 2)
    assert p.decorations == {1: "ccw", 2: "cw"}
    assert str(p) == "(1*)(2)"


def test_single_plus():
    assert str(perm_from_le(LeDiagram.rectangle(["+"]))) == "(1 2)"


def test_pipe_dream_tiles():
    tiles = pipe_dream(LeDiagram.rectangle(["+0"]))
    assert tiles == {(1, 1): ELBOW, (1, 2): CROSS}


def test_path_from_le_rejections():
    with pytest.raises(NotRationalDyckError):
        path_from_le(LeDiagram.rectangle(["+0", "0+"]))
    with pytest.raises(NotRationalDyckError):
        path_from_le(LeDiagram.rectangle(["++", "++"]))
    assert not is_rational_dyck_le(LeDiagram.rectangle(["++", "+0"]))


@given(dyck_paths(max_n=10))
def test_le_suite(path):
    L = le_from_path(path)
    assert validate_le(L)
    assert cell_dimension(L) == path.n - 1
    assert is_rational_dyck_le(L)
    assert path_from_le(L) == path
    assert perm_from_le(L) == southwest_perm(path)
