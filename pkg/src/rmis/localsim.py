"""Synchronous message-passing execution and the distributed RMIS program.

The engine runs lock-step rounds: every node's outgoing messages are
collected, delivered, and only then does every node take its step. Message
size is unbounded. Nodes are addressed by ports (neighbor slots ordered by
the neighbors' assigned identifiers), so a node initially knows nothing
beyond its own identifier and degree.

Programs must treat received message objects as read-only and snapshot any
mutable payload they send.
"""

from __future__ import annotations

import random
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any

from .classify import is_complete_bipartite
from .generators import gen_gk
from .graph import Graph, GraphError, ball, is_connected

IN = "IN"
OUT = "OUT"

IdAssignment = dict[int, int]


class SimulationTimeout(Exception):
    """Round cap exceeded; carries the still-undecided vertices."""

    def __init__(self, limit: int, undecided: list[int]):
        super().__init__(f"{len(undecided)} nodes undecided after {limit} rounds: {undecided}")
        self.undecided = undecided


@dataclass
class SimResult:
    outputs: dict[int, str]
    rounds_total: int
    termination_round: dict[int, int]


class NodeProgram(ABC):
    """Per-node behavior. One program object serves every node; all mutable
    state lives in the state value returned by `init` and threaded through
    `step`. A round is: every node's `send`, delivery, every node's `step`.
    """

    @abstractmethod
    def init(self, ident: int, degree: int) -> Any: ...

    @abstractmethod
    def send(self, state: Any) -> dict[int, Any]:
        """Messages to emit this round, keyed by port."""

    @abstractmethod
    def step(self, state: Any, inbox: dict[int, Any]) -> Any:
        """Consume this round's received messages, return the new state."""

    @abstractmethod
    def output(self, state: Any) -> str | None:
        """None while undecided, IN or OUT once terminated."""


def identity_ids(g: Graph) -> IdAssignment:
    return {v: v for v in g.vertices}


def random_ids(g: Graph, seed: int) -> IdAssignment:
    rng = random.Random(seed)
    pool = rng.sample(range(10 * g.n + 10), g.n)
    return {v: pool[i] for i, v in enumerate(g.vertices)}


def run_sync(
    g: Graph,
    program: NodeProgram,
    ids: IdAssignment,
    max_rounds: int | None = None,
) -> SimResult:
    """Execute `program` on every node of `g` until all have decided.

    Raises SimulationTimeout when the cap (default 4n + 8) is exceeded.
    """
    if set(ids) != set(g.vertices):
        raise GraphError("id assignment must cover exactly the vertex set")
    if len(set(ids.values())) != g.n:
        raise GraphError("id assignment must be injective")
    if any(i < 0 for i in ids.values()):
        raise GraphError("identifiers must be non-negative")
    if not is_connected(g):
        raise GraphError("run_sync requires a connected graph")
    limit = max_rounds if max_rounds is not None else 4 * g.n + 8

    # port p of v leads to its p-th neighbor in order of assigned id
    port_to: dict[int, list[int]] = {
        v: sorted(g.neighbors(v), key=lambda u: ids[u]) for v in g.vertices
    }
    port_from: dict[int, dict[int, int]] = {
        v: {u: p for p, u in enumerate(port_to[v])} for v in g.vertices
    }

    states = {v: program.init(ids[v], g.degree(v)) for v in g.vertices}
    termination: dict[int, int] = {}
    for v in g.vertices:
        if program.output(states[v]) is not None:
            termination[v] = 0
    rounds = 0
    while len(termination) < g.n:
        rounds += 1
        if rounds > limit:
            undecided = [v for v in g.vertices if v not in termination]
            raise SimulationTimeout(limit, undecided)
        outboxes = {v: program.send(states[v]) for v in g.vertices}
        inboxes: dict[int, dict[int, Any]] = {v: {} for v in g.vertices}
        for v, msgs in outboxes.items():
            for port, msg in msgs.items():
                u = port_to[v][port]
                inboxes[u][port_from[u][v]] = msg
        for v in g.vertices:
            states[v] = program.step(states[v], inboxes[v])
        for v in g.vertices:
            if v not in termination and program.output(states[v]) is not None:
                termination[v] = rounds
    outputs = {v: program.output(states[v]) for v in g.vertices}
    rounds_total = max(termination.values()) if termination else 0
    return SimResult(outputs, rounds_total, termination)


# ---------------------------------------------------------------------------
# the distributed RMIS program for graphs where every MIS is robust

def _greedy_decision(ident: int, neighbors: dict[int, tuple[int, str | None]]) -> str | None:
    """Id-priority MIS rule over the given (id, status) neighbor table: join
    when no smaller-id neighbor is still undecided, leave when one joined.
    """
    if any(status == IN for _, status in neighbors.values()):
        return OUT
    if all(status == OUT or nb > ident for nb, status in neighbors.values()):
        return IN
    return None


@dataclass
class _GatherState:
    ident: int
    degree: int
    round: int = 0
    decision: str | None = None
    port_ids: dict[int, int] = field(default_factory=dict)  # port -> neighbor id
    adj: dict[int, frozenset[int]] = field(default_factory=dict)  # id -> full nbhd
    residual_ports: list[int] = field(default_factory=list)
    residual: dict[int, tuple[int, str | None]] = field(default_factory=dict)


class RmisForallProgram(NodeProgram):
    """Three rounds of neighborhood flooding, then a constant-time case
    split, then an id-priority MIS on the leftover forest.

    After the flooding a node holds every vertex within three hops, full
    adjacency out to two hops, and knows which collected vertices may have
    further unseen edges. If that knowledge is closed (nothing unseen) and
    forms a complete bipartite graph, the side holding the lowest identifier
    joins. Otherwise, on the graphs this program is meant for, every cycle
    vertex has a pendant neighbor: pendants join, their neighbors leave, and
    what remains induces a forest handled by the id-priority rule, ignoring
    edges into the already-decided part.

    The forest stage is a plain greedy; it can take a number of rounds
    linear in the forest size rather than the best known bounds, so only
    the outputs, not round counts, are contractual outside the complete
    bipartite case.
    """

    def init(self, ident: int, degree: int) -> _GatherState:
        return _GatherState(ident, degree)

    def send(self, state: _GatherState) -> dict[int, Any]:
        all_ports = range(state.degree)
        if state.round == 0:
            return {p: ("id", state.ident) for p in all_ports}
        if state.round in (1, 2):
            return {p: ("adj", dict(state.adj)) for p in all_ports}
        if state.residual_ports:
            return {p: ("status", state.ident, state.decision) for p in state.residual_ports}
        return {}

    def step(self, state: _GatherState, inbox: dict[int, Any]) -> _GatherState:
        state.round += 1
        if state.round == 1:
            for port, (_, ident) in sorted(inbox.items()):
                state.port_ids[port] = ident
            state.adj[state.ident] = frozenset(state.port_ids.values())
        elif state.round in (2, 3):
            for _, (_, mapping) in sorted(inbox.items()):
                for ident, nbrs in mapping.items():
                    state.adj.setdefault(ident, nbrs)
            if state.round == 3:
                self._gather_decision(state)
        elif state.decision is None:
            for port, (_, ident, status) in inbox.items():
                state.residual[port] = (ident, status)
            state.decision = _greedy_decision(state.ident, state.residual)
        return state

    def _gather_decision(self, state: _GatherState) -> None:
        known = set(state.adj)
        for nbrs in state.adj.values():
            known |= nbrs
        frontier = known - set(state.adj)
        if not frontier:
            whole = Graph(known, [(u, w) for u in state.adj for w in state.adj[u] if u < w])
            parts = is_complete_bipartite(whole)
            if parts is not None:
                lowest = min(known)
                side = parts[0] if lowest in parts[0] else parts[1]
                state.decision = IN if state.ident in side else OUT
                return
        if state.degree == 1:
            state.decision = IN
            return
        my_nbrs = state.adj[state.ident]
        if any(len(state.adj[u]) == 1 for u in my_nbrs):
            state.decision = OUT
            return
        # leftover-forest member: ignore edges toward nodes that have a
        # pendant neighbor, run the greedy on what remains
        for port, ident in sorted(state.port_ids.items()):
            if not any(len(state.adj[w]) == 1 for w in state.adj[ident]):
                state.residual_ports.append(port)
                state.residual[port] = (ident, None)

    def output(self, state: _GatherState) -> str | None:
        return state.decision


def rmis_forall_program() -> NodeProgram:
    return RmisForallProgram()


@dataclass
class _GreedyState:
    ident: int
    degree: int
    round: int = 0
    decision: str | None = None
    neighbors: dict[int, tuple[int, str | None]] = field(default_factory=dict)


class ForestMisProgram(NodeProgram):
    """Standalone id-priority MIS: a node joins once every smaller-id
    neighbor has left, leaves once a neighbor joined. Correct on any graph,
    meant for forests where it needs at most linearly many rounds.
    """

    def init(self, ident: int, degree: int) -> _GreedyState:
        return _GreedyState(ident, degree)

    def send(self, state: _GreedyState) -> dict[int, Any]:
        return {p: ("status", state.ident, state.decision) for p in range(state.degree)}

    def step(self, state: _GreedyState, inbox: dict[int, Any]) -> _GreedyState:
        state.round += 1
        for port, (_, ident, status) in inbox.items():
            state.neighbors[port] = (ident, status)
        if state.decision is None:
            state.decision = _greedy_decision(state.ident, state.neighbors)
        return state

    def output(self, state: _GreedyState) -> str | None:
        return state.decision


def forest_mis_program() -> NodeProgram:
    return ForestMisProgram()


# ---------------------------------------------------------------------------
# the locality lower-bound premise

def labeled_ball_view(
    ballg: Graph, center: int, ids: IdAssignment
) -> tuple[int, frozenset[int], frozenset[frozenset[int]]]:
    """A ball as seen through assigned identifiers: center id, id set, and
    id-level edge set. Two balls are isomorphic as labeled graphs exactly
    when these views are equal, since distinct ids force the matching.
    """
    return (
        ids[center],
        frozenset(ids[v] for v in ballg.vertices),
        frozenset(frozenset((ids[u], ids[v])) for u, v in ballg.edges()),
    )


def indistinguishability_check(k: int) -> bool:
    """Confirm the structural premise behind the distance lower bound on the
    two-solution ladder gadget: its two extremities admit identically
    labeled radius-k views in two differently labeled copies, even though
    any correct algorithm must give them opposite outputs.

    Three disjoint id pools label the two extremity neighborhoods across
    three copies of the gadget; the shared pool appears once at each
    extremity, and those two views must coincide.
    """
    if k < 1:
        raise GraphError("k must be at least 1")
    inst = gen_gk(k)
    g, names = inst.graph, inst.names
    mirror: dict[int, int] = {}
    for i in range(k + 1):
        for plain, marked in (("a", "alpha"), ("b", "beta"), ("c", "gamma")):
            mirror[names[f"{plain}{i}"]] = names[f"{marked}{i}"]
            mirror[names[f"{marked}{i}"]] = names[f"{plain}{i}"]

    b_end = names[f"b{k}"]
    beta_end = names[f"beta{k}"]
    ball_b, _ = ball(g, b_end, k)
    ball_beta, _ = ball(g, beta_end, k)
    if set(ball_b.vertices) & set(ball_beta.vertices):
        return False  # the two neighborhoods must not overlap at this radius

    positions = ball_b.vertices  # labelings are defined positionally
    pools = [
        {p: base + i for i, p in enumerate(positions)}
        for base in (10_000, 20_000, 30_000)
    ]

    def labeled_copy(b_pool: dict[int, int], beta_pool: dict[int, int]) -> IdAssignment:
        ids = dict(b_pool)
        for v in ball_beta.vertices:
            ids[v] = beta_pool[mirror[v]]
        filler = 40_000
        for v in g.vertices:
            if v not in ids:
                ids[v] = filler
                filler += 1
        return ids

    copy_one = labeled_copy(pools[0], pools[1])  # extremities see pools 1 and 2
    copy_three = labeled_copy(pools[1], pools[2])  # extremities see pools 2 and 3
    return labeled_ball_view(ball_beta, beta_end, copy_one) == labeled_ball_view(
        ball_b, b_end, copy_three
    )
