"""Atoms, labelled/unlabelled shapes, word classes, and straightening moves."""

import itertools

import pytest
from hypothesis import given, settings

from pqclans.clans import all_clans, minimal_clan, parse_clan
from pqclans.atoms_shapes import (
    LabelledShape,
    UnlabelledShape,
    atoms,
    clans_with_atom,
    clans_with_word,
    equivalence_classes,
    forget_labels,
    is_valid_shape_for,
    lsh,
    render_shape,
    shape_atom,
    shape_dag,
    shape_successors,
    shapes_of,
    sigma_max,
    transitive_reduction,
    ush,
    word_fibers,
    word_neighbors,
)
from pqclans.permutations import length, one_line
from pqclans.weak_order import rank, reduced_words

from test_clans import clans_strategy
from test_permutations import reduced_words_of_perm


NINE = parse_clan("9 + + 7 - 8 4 6 1")


class TestAtoms:
    def test_small_golden(self):
        assert atoms(parse_clan("+--+")) == [(3, 2, 4, 1), (4, 1, 3, 2)]

    def test_minimal_clan_atom_is_identity(self):
        assert atoms(minimal_clan(1, 2)) == [(1, 2, 3)]

    def test_nine_position_golden(self):
        got = atoms(NINE)
        assert len(got) == 3
        assert (1, 5, 7, 2, 3, 4, 8, 6, 9) in got
        assert (1, 5, 7, 2, 3, 6, 8, 4, 9) not in got

    def test_atom_lengths_match_rank(self):
        assert rank(NINE) == 8
        assert {length(w) for w in atoms(NINE)} == {8}

    def test_words_partition_through_atoms(self):
        for c in all_clans(2, 2):
            per_atom = [reduced_words_of_perm(w) for w in atoms(c)]
            union = set().union(*per_atom)
            assert union == set(reduced_words(c))
            assert sum(map(len, per_atom)) == len(union)

    @settings(deadline=None, max_examples=40)
    @given(clans_strategy(max_n=5))
    def test_atoms_have_atom_length(self, c):
        r = rank(c)
        for w in atoms(c):
            assert length(w) == r


class TestLabelledShapes:
    def test_nine_position_atom_shape(self):
        w = (1, 5, 7, 2, 3, 4, 8, 6, 9)
        got = lsh(w, 5, 4)
        assert got == LabelledShape(
            n=9,
            arcs=((1, 9, 1, False), (4, 7, 2, False), (3, 5, 3, True), (6, 8, 4, False)),
        )

    def test_shape_of_free_permutation(self):
        # this permutation is no atom of the nine-position clan above, but it
        # still carries a valid labelled shape with two marked arcs
        w = (1, 5, 7, 2, 3, 6, 8, 4, 9)
        got = lsh(w, 5, 4)
        marked = {(i, j) for i, j, _, mk in got.arcs if mk}
        assert marked == {(3, 5), (6, 8)}
        assert forget_labels(got) == ush(w, 5, 4)

    def test_marked_arc_iff_extreme_values_inverted(self):
        assert lsh((1, 2, 3), 1, 2).arcs == ((1, 3, 1, False),)
        assert lsh((3, 1, 2), 1, 2).arcs == ((1, 2, 1, True),)

    def test_rejects_non_shape_permutation(self):
        # the marked arc {1,3} would trap the unpaired point 2
        with pytest.raises(ValueError):
            lsh((3, 2, 1), 1, 2)

    def test_json_forms(self):
        w = (1, 5, 7, 2, 3, 4, 8, 6, 9)
        d = lsh(w, 5, 4).to_json_dict()
        assert d["n"] == 9
        assert d["arcs"][2] == [3, 5, True, 3]
        u = ush(w, 5, 4).to_json_dict()
        assert [3, 5, True, None] in u["arcs"]


class TestShapeSets:
    def test_single_shape_families(self):
        assert shapes_of(parse_clan("+--+")) == [
            UnlabelledShape(n=4, arcs=((1, 2, True), (3, 4, True)))
        ]
        assert len(shapes_of(parse_clan("-++-"))) == 1

    def test_shapes_of_lists_atom_shapes(self):
        for c in all_clans(2, 2):
            assert set(shapes_of(c)) == {ush(w, c.p, c.q) for w in atoms(c)}

    def test_validity_rules(self):
        c = parse_clan("- + + - -")
        ok = UnlabelledShape(n=5, arcs=((1, 2, True), (3, 4, True)))
        assert is_valid_shape_for(ok, c)
        crossing = UnlabelledShape(n=5, arcs=((1, 3, True), (2, 5, True)))
        assert not is_valid_shape_for(crossing, c)
        lonely_inside = UnlabelledShape(n=5, arcs=((1, 2, True), (3, 5, True)))
        assert not is_valid_shape_for(lonely_inside, c)
        same_sign = UnlabelledShape(n=5, arcs=((1, 5, True), (2, 3, True)))
        assert not is_valid_shape_for(same_sign, c)

    def test_unmarked_arcs_must_be_clan_arcs(self):
        c = parse_clan("3 - 1 + -")
        good = UnlabelledShape(n=5, arcs=((1, 3, False), (4, 5, True)))
        assert is_valid_shape_for(good, c)
        bad = UnlabelledShape(n=5, arcs=((1, 3, True), (4, 5, True)))
        assert not is_valid_shape_for(bad, c)


class TestShapeAtom:
    def test_all_marked_golden(self):
        shape = UnlabelledShape(n=6, arcs=((1, 6, True), (2, 3, True), (4, 5, True)))
        assert one_line(shape_atom(shape)) == "461523"

    def test_round_trip_on_shapes(self):
        for c in all_clans(2, 2) + [NINE]:
            for shape in shapes_of(c):
                w = shape_atom(shape)
                assert ush(w, c.p, c.q) == shape


class TestMoves:
    def test_slide_move(self):
        c = parse_clan("+-+")
        src = UnlabelledShape(n=3, arcs=((2, 3, True),))
        dst = UnlabelledShape(n=3, arcs=((1, 2, True),))
        assert shape_successors(src, c) == [dst]
        assert shape_successors(dst, c) == []

    def test_slide_over_outside_arc(self):
        c = parse_clan("3 - 1 + -")
        src = UnlabelledShape(n=5, arcs=((1, 3, False), (4, 5, True)))
        dst = UnlabelledShape(n=5, arcs=((1, 3, False), (2, 4, True)))
        assert shape_successors(src, c) == [dst]

    def test_blocked_by_unpaired_point(self):
        c = parse_clan("- + - + -")
        src = UnlabelledShape(n=5, arcs=((1, 2, True), (3, 4, True)))
        # unpaired 5 sits right of everything; no move applies
        assert shape_successors(src, c) == []

    def test_crossing_result_is_skipped(self):
        c = parse_clan("- + + - -")
        src = UnlabelledShape(n=5, arcs=((2, 5, True), (3, 4, True)))
        dst = UnlabelledShape(n=5, arcs=((1, 2, True), (3, 4, True)))
        assert shape_successors(src, c) == [dst]

    def test_two_element_dag(self):
        shapes, edges = shape_dag(parse_clan("--++-+"))
        assert len(shapes) == 2
        assert len(edges) == 1
        src, dst = edges[0]
        assert shapes[dst] == sigma_max(parse_clan("--++-+"))
        assert shapes[dst].arcs == ((1, 4, True), (2, 3, True), (5, 6, True))

    def test_five_element_dag(self):
        c = parse_clan("-+-+-+")
        shapes, edges = shape_dag(c)
        arcs = [s.arcs for s in shapes]
        assert arcs == [
            ((1, 2, True), (3, 4, True), (5, 6, True)),
            ((1, 2, True), (3, 6, True), (4, 5, True)),
            ((1, 4, True), (2, 3, True), (5, 6, True)),
            ((1, 6, True), (2, 3, True), (4, 5, True)),
            ((1, 6, True), (2, 5, True), (3, 4, True)),
        ]
        assert edges == [(1, 0), (2, 0), (3, 1), (3, 2), (4, 0), (4, 3)]
        hasse = transitive_reduction(len(shapes), edges)
        assert sorted(hasse) == [(1, 0), (2, 0), (3, 1), (3, 2), (4, 3)]

    def test_unique_sink_matches_greedy_pairing(self):
        for p, q in [(1, 2), (2, 2), (2, 3), (4, 1)]:
            for c in all_clans(p, q):
                shapes, edges = shape_dag(c)
                outdeg = {k: 0 for k in range(len(shapes))}
                for u, _ in edges:
                    outdeg[u] += 1
                sinks = [shapes[k] for k, d in outdeg.items() if d == 0]
                assert sinks == [sigma_max(c)]

    def test_acyclic(self):
        for c in all_clans(2, 3):
            shapes, edges = shape_dag(c)
            # transitive_reduction walks reachability; a cycle would blow the
            # seen set logic, so verify directly with a topological scan
            indeg = {k: 0 for k in range(len(shapes))}
            adj = {k: [] for k in range(len(shapes))}
            for u, v in edges:
                indeg[v] += 1
                adj[u].append(v)
            queue = [k for k, d in indeg.items() if d == 0]
            seen = 0
            while queue:
                u = queue.pop()
                seen += 1
                for v in adj[u]:
                    indeg[v] -= 1
                    if indeg[v] == 0:
                        queue.append(v)
            assert seen == len(shapes)


class TestRender:
    def test_ascii_block(self):
        c = parse_clan("-+-+-+")
        shape = UnlabelledShape(n=6, arcs=((1, 2, True), (3, 4, True), (5, 6, True)))
        assert render_shape(shape, c) == (
            "- + - + - +\n"
            "*=*\n"
            "    *=*\n"
            "        *=*"
        )

    def test_unmarked_arcs_use_single_rail(self):
        c = parse_clan("3 - 1")
        (shape,) = shapes_of(c)
        assert render_shape(shape, c) == "3 - 1\n*---*"


class TestWordStructures:
    def test_fibers_golden(self):
        fibers = word_fibers(1, 2)
        assert fibers[(1, 2)] == frozenset(
            {parse_clan("- - +"), parse_clan("- + -")}
        )
        assert fibers[(2, 1)] == frozenset(
            {parse_clan("+ - -"), parse_clan("- + -")}
        )
        assert fibers[()] == frozenset({parse_clan("3 - 1")})

    def test_clans_with_word(self):
        assert set(clans_with_word((1, 2), 1, 2)) == {
            parse_clan("- - +"),
            parse_clan("- + -"),
        }
        assert clans_with_word((1, 1), 1, 2) == []

    def test_clans_with_atom_counts(self):
        free = (1, 5, 7, 2, 3, 6, 8, 4, 9)
        assert len(clans_with_atom(free, 5, 4)) == 4
        assert NINE in clans_with_atom((1, 5, 7, 2, 3, 4, 8, 6, 9), 5, 4)

    def test_neighbors(self):
        assert sorted(word_neighbors((1, 2, 1), 4, 2)) == [(2, 1, 2), (3, 2, 1)]
        assert sorted(word_neighbors((1, 3), 4, 2)) == [(3, 1), (3, 3)]

    def test_classes_are_fibers_small(self):
        for p, q in [(1, 2), (2, 2), (1, 3)]:
            fibers = word_fibers(p, q)
            by_fiber = {}
            for a, fib in fibers.items():
                by_fiber.setdefault(fib, set()).add(a)
            classes = {frozenset(cl) for cl in equivalence_classes(p, q)}
            assert classes == {frozenset(v) for v in by_fiber.values()}


@settings(deadline=None, max_examples=30)
@given(clans_strategy(max_n=5))
def test_atom_shapes_are_shapes_of_the_clan(c):
    listed = set(shapes_of(c))
    for w in atoms(c):
        assert ush(w, c.p, c.q) in listed
