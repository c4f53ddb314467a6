from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given

from positroid_lab.core import DyckPath, Positroid, positroid_of_path
from positroid_lab.errors import MalformedGraph, MoveNotApplicable, NotOrientableError
from positroid_lab.permutation import CCW, CW, southwest_perm
from positroid_lab.plabic import (
    BLACK,
    WHITE,
    Move,
    PlabicGraph,
    apply_move,
    build_plabic,
    enclosed_winding,
    find_sites,
    graph_type,
    is_tree,
    perfect_orientations,
    positroid_from_plabic,
    trip,
    trip_permutation,
)
from plabic_corpus import (
    alternating_square,
    black_edge,
    black_star,
    corpus,
    parallel_pair,
    triangle,
    square_with_bivalent,
)
from strategies import dyck_paths

MOVES_PRESERVING_TRIPS = (Move.SQUARE, Move.CONTRACT, Move.UNCONTRACT, Move.INSERT, Move.REMOVE)


class TestStructure:
    def test_json_round_trip(self):
        g = alternating_square()
        assert PlabicGraph.from_json(g.to_json()) == g

    def test_equality_ignores_vertex_names(self):
        g = black_star()
        renamed = PlabicGraph(3, {9: BLACK}, ((1, 9), (2, 9), (3, 9)), {9: g.rotations[4]})
        assert renamed == g and hash(renamed) == hash(g)

    def test_colors_matter(self):
        g = black_star()
        h = PlabicGraph(3, {4: WHITE}, g.edges, g.rotations)
        assert g != h

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(n=2, colors={3: BLACK}, edges=((1, 3), (2, 3), (3, 3)), rotations={3: (0, 1, 2, 2)}),
            dict(n=2, colors={3: BLACK}, edges=((1, 3), (2, 3), (1, 3)), rotations={3: (0, 1, 2)}),
            dict(n=2, colors={2: BLACK}, edges=((1, 2),), rotations={2: (0,)}),
            dict(n=2, colors={3: "red"}, edges=((1, 3), (2, 3)), rotations={3: (0, 1)}),
            dict(n=2, colors={3: BLACK}, edges=((1, 3), (2, 3)), rotations={3: (0,)}),
        ],
    )
    def test_malformed(self, kwargs):
        with pytest.raises(MalformedGraph):
            PlabicGraph(**kwargs)


class TestTrips:
    def test_square(self):
        g = alternating_square()
        assert str(trip_permutation(g)) == "(1 3)(2 4)"
        assert graph_type(g) == (2, 4)

    def test_internal_leaves_rejected(self):
        with pytest.raises(MalformedGraph):
            PlabicGraph(2, {3: BLACK, 4: WHITE}, ((1, 3), (2, 4)), {3: (0,), 4: (1,)})

    def test_parallel_pair_fixed_points(self):
        # trip 1 circles the bigon with it on the right, trip 2 with it on the left
        p = trip_permutation(parallel_pair())
        assert p.images == (1, 2)
        assert p.decorations == {1: CCW, 2: CW}
        assert [enclosed_winding(parallel_pair(), i) for i in (1, 2)] == [-1, 1]

    def test_triangle_fixed_point_survives_contraction(self):
        g = triangle()
        assert str(trip_permutation(g)) == "(1 3)(2)"
        assert trip_permutation(g).decorations == {2: CW}
        for site in find_sites(g, Move.CONTRACT):
            assert trip_permutation(apply_move(g, Move.CONTRACT, site)) == trip_permutation(g)

    def test_trip_walk(self):
        g = black_star()
        assert trip(g, 1) == [1, 4, 2]

    def test_tree_of_eenen(self):
        g = build_plabic(DyckPath.parse("EENEN"))
        assert str(trip_permutation(g)) == "(1 5 2 4 3)"
        assert graph_type(g) == (2, 5)
        assert is_tree(g)
        assert not is_tree(alternating_square())

    @given(dyck_paths(max_n=10))
    def test_tree_trip_is_southwest_permutation(self, path):
        g = build_plabic(path)
        assert trip_permutation(g) == southwest_perm(path)
        assert graph_type(g) == (path.d, path.n)
        assert is_tree(g)


class TestOrientations:
    def test_square_sources_are_uniform(self):
        P = positroid_from_plabic(alternating_square())
        assert P == Positroid(4, 2, frozenset(combinations(range(1, 5), 2)))

    def test_orientations_are_perfect_and_sorted(self):
        g = alternating_square()
        found = perfect_orientations(g)
        assert all(o.is_perfect(g) for o in found)
        masks = [o.bitmask() for o in found]
        assert masks == sorted(masks) and len(set(masks)) == len(masks)

    def test_not_orientable(self):
        # two white vertices joined three times need four incoming edges but
        # the three internal edges supply only three
        g = PlabicGraph(
            2,
            {3: WHITE, 4: WHITE},
            ((1, 3), (2, 4), (3, 4), (3, 4), (3, 4)),
            {3: (0, 2, 3, 4), 4: (1, 4, 3, 2)},
        )
        with pytest.raises(NotOrientableError):
            positroid_from_plabic(g)

    @given(dyck_paths(max_n=8))
    def test_sources_are_bases(self, path):
        assert positroid_from_plabic(build_plabic(path)) == positroid_of_path(path)


class TestMoves:
    def test_square_move_flips_colors(self):
        g = alternating_square()
        (site,) = find_sites(g, Move.SQUARE)
        h = apply_move(g, Move.SQUARE, site)
        assert all(h.colors[v] != g.colors[v] for v in site)
        assert apply_move(h, Move.SQUARE, site) == g

    def test_inapplicable(self):
        g = alternating_square()
        with pytest.raises(MoveNotApplicable):
            apply_move(g, Move.CONTRACT, 4)
        with pytest.raises(MoveNotApplicable):
            apply_move(g, Move.REMOVE, 5)
        with pytest.raises(MoveNotApplicable):
            apply_move(black_star(), Move.REDUCE, (4, 4))

    def test_contract_black_edge(self):
        g = black_edge()
        (e,) = find_sites(g, Move.CONTRACT)
        h = apply_move(g, Move.CONTRACT, e)
        assert len(h.colors) == 1 and trip_permutation(h) == trip_permutation(g)

    def test_remove_bivalent(self):
        g = square_with_bivalent()
        (w,) = find_sites(g, Move.REMOVE)
        assert apply_move(g, Move.REMOVE, w) == alternating_square()

    def test_parallel_pair_reduction(self):
        g = parallel_pair()
        assert find_sites(g, Move.REDUCE) == [(5, 6)]
        assert find_sites(g, Move.CONTRACT) == []
        h = apply_move(g, Move.REDUCE, (5, 6))
        assert h.colors == {} and h.edges == ((1, 2),)

    @pytest.mark.parametrize("name", sorted(corpus()))
    def test_corpus_moves_preserve_trips(self, name):
        g = corpus()[name]
        base = trip_permutation(g)
        for move in MOVES_PRESERVING_TRIPS:
            for site in find_sites(g, move):
                assert trip_permutation(apply_move(g, move, site)) == base, (move, site)

    @pytest.mark.parametrize("name", sorted(corpus()))
    def test_corpus_move_pairs_invert(self, name):
        g = corpus()[name]
        for site in find_sites(g, Move.UNCONTRACT):
            h = apply_move(g, Move.UNCONTRACT, site)
            assert apply_move(h, Move.CONTRACT, len(h.edges) - 1) == g
        for site in find_sites(g, Move.CONTRACT):
            h = apply_move(g, Move.CONTRACT, site)
            assert any(apply_move(h, Move.UNCONTRACT, s) == g for s in find_sites(h, Move.UNCONTRACT))
        for site in find_sites(g, Move.INSERT):
            h = apply_move(g, Move.INSERT, site)
            assert apply_move(h, Move.REMOVE, max(h.colors)) == g
        for site in find_sites(g, Move.REMOVE):
            h = apply_move(g, Move.REMOVE, site)
            assert any(apply_move(h, Move.INSERT, s) == g for s in find_sites(h, Move.INSERT))

    @pytest.mark.parametrize("name", ["alternating-square", "domino", "triangle", "black-edge"])
    def test_corpus_moves_preserve_positroid(self, name):
        g = corpus()[name]
        base = positroid_from_plabic(g)
        for move in MOVES_PRESERVING_TRIPS:
            for site in find_sites(g, move):
                assert positroid_from_plabic(apply_move(g, move, site)) == base
