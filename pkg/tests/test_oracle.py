import random

import pytest

from rmis.graph import Graph, GraphError
from rmis.generators import gen_bull, gen_cycle, gen_gk, gen_path, gen_random_connected
from rmis.oracle import (
    enumerate_mis,
    enumerate_robust_mis,
    format_vertex_set,
    is_independent,
    is_mis,
    is_robust_mis,
    is_robust_mis_bruteforce,
    parse_vertex_set,
)

from conftest import connected_graphs

BULL = gen_bull()
TRIANGLE = gen_cycle(3)
SQUARE = gen_cycle(4)


class TestIndependence:
    def test_square_opposite_corners(self):
        assert is_independent(SQUARE, {0, 2})

    def test_triangle_pair(self):
        assert not is_independent(TRIANGLE, {0, 1})

    def test_empty_set(self):
        assert is_independent(BULL, set())

    def test_unknown_vertex(self):
        with pytest.raises(GraphError):
            is_independent(TRIANGLE, {9})


class TestIsMis:
    def test_bull_pendant_plus_horn(self):
        assert is_mis(BULL, {0, 2})

    def test_bull_both_pendants_and_horn(self):
        assert is_mis(BULL, {0, 3, 4})

    def test_not_maximal(self):
        assert not is_mis(BULL, {0})

    def test_empty_never_maximal(self):
        assert not is_mis(TRIANGLE, set())


class TestRobustness:
    def test_triangle_has_none(self):
        assert not is_robust_mis(TRIANGLE, {0})

    def test_bull_unique_robust_choice(self):
        assert is_robust_mis(BULL, {0, 3, 4})
        assert not is_robust_mis(BULL, {0, 2})

    def test_square_all_robust(self):
        assert is_robust_mis(SQUARE, {0, 2})
        assert is_robust_mis(SQUARE, {1, 3})

    def test_disconnected_rejected(self):
        with pytest.raises(GraphError):
            is_robust_mis(Graph(edges=[(0, 1), (2, 3)]), {0, 2})


class TestBruteforce:
    def test_six_cycle_gadget_solution(self):
        inst = gen_gk(0)
        assert is_robust_mis_bruteforce(inst.graph, inst.m1)

    def test_triangle(self):
        assert not is_robust_mis_bruteforce(TRIANGLE, {0})

    def test_tree_has_no_removable_edges(self):
        assert is_robust_mis_bruteforce(gen_path(3), {0, 2})

    def test_cap_advises_polynomial_checker(self):
        big = gen_cycle(10)
        with pytest.raises(GraphError, match="is_robust_mis"):
            is_robust_mis_bruteforce(big, {0, 2, 4, 6, 8}, max_removable=5)


class TestEnumeration:
    def test_triangle_misses(self):
        assert enumerate_mis(TRIANGLE) == [frozenset({0}), frozenset({1}), frozenset({2})]

    def test_square_misses(self):
        assert enumerate_mis(SQUARE) == [frozenset({0, 2}), frozenset({1, 3})]

    def test_bull_misses(self):
        assert enumerate_mis(BULL) == [
            frozenset({0, 2}),
            frozenset({0, 3, 4}),
            frozenset({1, 4}),
        ]

    def test_cap(self):
        with pytest.raises(GraphError):
            enumerate_mis(gen_path(17))

    def test_every_enumerated_set_is_a_mis(self):
        rng = random.Random(5)
        for i in range(40):
            g = gen_random_connected(rng.randint(1, 9), rng.uniform(0.1, 0.8), i)
            sets = enumerate_mis(g)
            assert len(set(sets)) == len(sets)
            for s in sets:
                assert is_mis(g, s)

    def test_enumeration_complete_against_powerset(self):
        rng = random.Random(6)
        for i in range(30):
            n = rng.randint(1, 7)
            g = gen_random_connected(n, rng.uniform(0.2, 0.8), 100 + i)
            by_filter = {
                frozenset(s)
                for mask in range(1 << n)
                if is_mis(g, s := {v for v in range(n) if mask >> v & 1})
            }
            assert set(enumerate_mis(g)) == by_filter


class TestEnumerateRobust:
    def test_gadget_has_exactly_the_two_complements(self):
        inst = gen_gk(0)
        assert set(enumerate_robust_mis(inst.graph)) == {inst.m1, inst.m2}

    def test_triangle_empty(self):
        assert enumerate_robust_mis(TRIANGLE) == []

    def test_bull_unique(self):
        assert enumerate_robust_mis(BULL) == [frozenset({0, 3, 4})]

    def test_results_pass_both_checkers(self):
        rng = random.Random(9)
        for i in range(40):
            g = gen_random_connected(rng.randint(2, 8), rng.uniform(0.15, 0.6), 200 + i)
            for s in enumerate_robust_mis(g):
                assert is_mis(g, s)
                assert is_robust_mis(g, s)
                assert is_robust_mis_bruteforce(g, s)


class TestOracleAgreement:
    def test_exhaustive_small(self):
        # polynomial criterion vs. definition, every MIS of every graph on <= 5 vertices
        for n in range(1, 6):
            for g in connected_graphs(n):
                for s in enumerate_mis(g):
                    assert is_robust_mis(g, s) == is_robust_mis_bruteforce(g, s)

    def test_random_medium(self):
        rng = random.Random(10)
        for i in range(80):
            g = gen_random_connected(rng.randint(6, 8), rng.uniform(0.15, 0.5), 300 + i)
            for s in enumerate_mis(g):
                assert is_robust_mis(g, s) == is_robust_mis_bruteforce(g, s, max_removable=24)

    def test_trees_every_mis_robust(self):
        rng = random.Random(11)
        for i in range(30):
            g = gen_random_connected(rng.randint(1, 9), 0.0, 400 + i)  # spanning-tree patch
            assert g.num_edges == g.n - 1
            for s in enumerate_mis(g):
                assert is_robust_mis(g, s)

    def test_gadget_solutions_are_complements(self):
        for k in range(4):
            inst = gen_gk(k)
            assert inst.m2 == frozenset(inst.graph.vertices) - inst.m1


class TestSetFormat:
    def test_roundtrip(self):
        assert parse_vertex_set("3,1,5") == frozenset({1, 3, 5})
        assert format_vertex_set({5, 1, 3}) == "1,3,5"
        assert parse_vertex_set("") == frozenset()

    def test_bad_input(self):
        with pytest.raises(GraphError):
            parse_vertex_set("1,x")
