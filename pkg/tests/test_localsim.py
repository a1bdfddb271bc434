import random
from dataclasses import dataclass, field

import pytest

from rmis.classify import is_complete_bipartite
from rmis.graph import (
    Graph,
    GraphError,
    ball,
    connected_components,
    diameter,
    induced_subgraph,
    pendant_vertices,
)
from rmis.generators import (
    gen_complete_bipartite,
    gen_gk,
    gen_path,
    gen_random_sputnik,
)
from rmis.localsim import (
    IN,
    OUT,
    NodeProgram,
    SimulationTimeout,
    forest_mis_program,
    identity_ids,
    indistinguishability_check,
    labeled_ball_view,
    random_ids,
    rmis_forall_program,
    run_sync,
)
from rmis.oracle import is_mis


class ConstantIn(NodeProgram):
    def init(self, ident, degree):
        return IN

    def send(self, state):
        return {}

    def step(self, state, inbox):
        return state

    def output(self, state):
        return state


class NeverDecides(ConstantIn):
    def init(self, ident, degree):
        return None


@dataclass
class _FloodState:
    ident: int
    degree: int
    radius: int
    round: int = 0
    adj: dict = field(default_factory=dict)
    port_ids: dict = field(default_factory=dict)
    done: bool = False


class FloodProbe(NodeProgram):
    """Gather full neighborhoods for `radius` rounds, then stop."""

    def __init__(self, radius):
        self.radius = radius

    def init(self, ident, degree):
        return _FloodState(ident, degree, self.radius)

    def send(self, state):
        if state.round == 0:
            return {p: ("id", state.ident) for p in range(state.degree)}
        if state.round < state.radius:
            return {p: dict(state.adj) for p in range(state.degree)}
        return {}

    def step(self, state, inbox):
        state.round += 1
        if state.round == 1:
            for port, (_, ident) in inbox.items():
                state.port_ids[port] = ident
            state.adj[state.ident] = frozenset(state.port_ids.values())
        else:
            for mapping in inbox.values():
                for ident, nbrs in mapping.items():
                    state.adj.setdefault(ident, nbrs)
        if state.round >= state.radius:
            state.done = True
        return state

    def output(self, state):
        return IN if state.done else None


def in_set(result):
    return {v for v, out in result.outputs.items() if out == IN}


class TestEngine:
    def test_immediate_output_costs_zero_rounds(self):
        g = gen_path(4)
        result = run_sync(g, ConstantIn(), identity_ids(g))
        assert result.rounds_total == 0
        assert set(result.termination_round.values()) == {0}

    def test_round_cap(self):
        g = gen_path(3)
        with pytest.raises(SimulationTimeout) as err:
            run_sync(g, NeverDecides(), identity_ids(g), max_rounds=5)
        assert set(err.value.undecided) == {0, 1, 2}

    def test_id_assignment_validation(self):
        g = gen_path(3)
        with pytest.raises(GraphError):
            run_sync(g, ConstantIn(), {0: 1, 1: 1, 2: 2})
        with pytest.raises(GraphError):
            run_sync(g, ConstantIn(), {0: 0, 1: 1})

    def test_disconnected_rejected(self):
        with pytest.raises(GraphError):
            run_sync(Graph(edges=[(0, 1), (2, 3)]), ConstantIn(), {0: 0, 1: 1, 2: 2, 3: 3})

    def test_flooding_matches_balls(self):
        # after three exchanges a node's knowledge is the whole of K3,3
        g = gen_complete_bipartite(3, 3)
        probe = FloodProbe(3)
        states = {}

        class Recorder(FloodProbe):
            def step(self, state, inbox):
                state = FloodProbe.step(self, state, inbox)
                states[state.ident] = state
                return state

        run_sync(g, Recorder(3), identity_ids(g))
        for v in g.vertices:
            known = Graph(
                set(states[v].adj),
                [(a, b) for a in states[v].adj for b in states[v].adj[a] if a < b],
            )
            expected, boundary = ball(g, v, 3)
            assert known == expected and boundary == set()

    def test_closure_detection_round_count_on_paths(self):
        # a node can tell its knowledge stopped growing one round after its
        # eccentricity; on a path that is the diameter plus one
        @dataclass
        class S(_FloodState):
            pass

        class ClosureProbe(FloodProbe):
            def __init__(self):
                super().__init__(radius=10**6)

            def step(self, state, inbox):
                state.round += 1
                if state.round == 1:
                    for port, (_, ident) in inbox.items():
                        state.port_ids[port] = ident
                    state.adj[state.ident] = frozenset(state.port_ids.values())
                else:
                    for mapping in inbox.values():
                        for ident, nbrs in mapping.items():
                            state.adj.setdefault(ident, nbrs)
                known = set(state.adj) | {w for ns in state.adj.values() for w in ns}
                if known and known == set(state.adj):
                    state.done = True
                return state

        g = gen_path(7)
        result = run_sync(g, ClosureProbe(), identity_ids(g))
        assert result.rounds_total == diameter(g) + 1


class TestRmisForallProgram:
    def test_complete_bipartite_rounds_and_convention(self):
        for m, n in ((1, 1), (2, 3), (4, 4), (1, 5)):
            g = gen_complete_bipartite(m, n)
            ids = random_ids(g, seed=m * 10 + n)
            result = run_sync(g, rmis_forall_program(), ids)
            assert set(result.termination_round.values()) == {3}
            chosen = in_set(result)
            assert is_mis(g, chosen)
            parts = is_complete_bipartite(g)
            lowest_vertex = min(g.vertices, key=lambda v: ids[v])
            side = parts[0] if lowest_vertex in parts[0] else parts[1]
            assert chosen == side

    def test_single_edge_splits(self):
        g = Graph(edges=[(0, 1)])
        result = run_sync(g, rmis_forall_program(), identity_ids(g))
        assert sorted(result.outputs.values()) == [IN, OUT]

    def test_sputnik_pendant_rules(self):
        rng = random.Random(3)
        for i in range(25):
            g = gen_random_sputnik(i, rng.randint(2, 60))
            if is_complete_bipartite(g) is not None:
                continue  # resolved by the bipartite convention instead
            result = run_sync(g, rmis_forall_program(), random_ids(g, i))
            chosen = in_set(result)
            assert is_mis(g, chosen)
            pend = pendant_vertices(g)
            assert pend <= chosen
            for v in g.vertices:
                if v not in pend and g.neighbors(v) & pend:
                    assert result.outputs[v] == OUT

    def test_chosen_set_is_pendants_plus_forest_mis(self):
        rng = random.Random(4)
        for i in range(15):
            g = gen_random_sputnik(100 + i, rng.randint(3, 50))
            if is_complete_bipartite(g) is not None:
                continue
            result = run_sync(g, rmis_forall_program(), random_ids(g, i))
            chosen = in_set(result)
            pend = pendant_vertices(g)
            leftover = {
                v for v in g.vertices if v not in pend and not (g.neighbors(v) & pend)
            }
            assert chosen - pend <= leftover
            if leftover:
                forest = induced_subgraph(g, leftover)
                # sputnik structure: what remains is acyclic (maybe disconnected)
                assert forest.num_edges == forest.n - len(connected_components(forest))
                assert is_mis(forest, chosen & leftover)

    def test_trees_work(self):
        g = gen_path(9)
        result = run_sync(g, rmis_forall_program(), identity_ids(g))
        assert is_mis(g, in_set(result))


class TestForestProgram:
    def test_priority_path(self):
        g = Graph([1, 2, 3], [(3, 1), (1, 2)])
        result = run_sync(g, forest_mis_program(), identity_ids(g))
        assert in_set(result) == {1}

    def test_star_with_small_center(self):
        g = gen_complete_bipartite(1, 4)  # center 0 has the smallest id
        result = run_sync(g, forest_mis_program(), identity_ids(g))
        assert in_set(result) == {0}

    def test_isolated_vertex_joins(self):
        g = Graph([5])
        result = run_sync(g, forest_mis_program(), identity_ids(g))
        assert result.outputs == {5: IN}

    def test_valid_mis_on_any_graph(self):
        rng = random.Random(5)
        for i in range(20):
            g = gen_random_sputnik(200 + i, rng.randint(1, 30))
            result = run_sync(g, forest_mis_program(), random_ids(g, i))
            assert is_mis(g, in_set(result))


class TestIndistinguishability:
    def test_holds_for_small_radii(self):
        for k in (1, 2, 3):
            assert indistinguishability_check(k)

    def test_same_instance_balls_differ(self):
        inst = gen_gk(2)
        g, nm = inst.graph, inst.names
        ids = identity_ids(g)
        ball_b, _ = ball(g, nm["b2"], 2)
        ball_beta, _ = ball(g, nm["beta2"], 2)
        assert labeled_ball_view(ball_b, nm["b2"], ids) != labeled_ball_view(
            ball_beta, nm["beta2"], ids
        )

    def test_rejects_radius_zero(self):
        with pytest.raises(GraphError):
            indistinguishability_check(0)
