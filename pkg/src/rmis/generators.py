"""Deterministic constructors for the named instance families, plus seeded
random graphs for property testing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .classify import cycle_vertices
from .graph import Edge, Graph, GraphError, connected_components, pendant_vertices


@dataclass(frozen=True)
class GkInstance:
    """A ladder-of-diamonds gadget with exactly two robust MISs.

    Level i contributes vertices a_i, b_i, c_i, alpha_i, beta_i, gamma_i.
    Level 0 is a six-cycle; each further level hangs one diamond off b_{i-1}
    and one off beta_{i-1}. The two stored solutions are complements: m1
    holds every alpha, gamma, and b; m2 holds everything else.
    """

    graph: Graph
    names: dict[str, int]
    m1: frozenset[int]
    m2: frozenset[int]


def gen_gk(k: int) -> GkInstance:
    if k < 0:
        raise GraphError("k must be non-negative")
    names: dict[str, int] = {}
    for i in range(k + 1):
        base = 6 * i
        for offset, stem in enumerate(("a", "b", "c", "alpha", "beta", "gamma")):
            names[f"{stem}{i}"] = base + offset

    def v(stem: str, i: int) -> int:
        return names[f"{stem}{i}"]

    edges: list[Edge] = [
        (v("a", 0), v("b", 0)),
        (v("b", 0), v("c", 0)),
        (v("c", 0), v("gamma", 0)),
        (v("gamma", 0), v("beta", 0)),
        (v("beta", 0), v("alpha", 0)),
        (v("alpha", 0), v("a", 0)),
    ]
    for i in range(1, k + 1):
        edges += [
            (v("beta", i - 1), v("alpha", i)),
            (v("beta", i - 1), v("gamma", i)),
            (v("alpha", i), v("beta", i)),
            (v("gamma", i), v("beta", i)),
            (v("b", i - 1), v("a", i)),
            (v("b", i - 1), v("c", i)),
            (v("a", i), v("b", i)),
            (v("c", i), v("b", i)),
        ]
    g = Graph(range(6 * (k + 1)), edges)
    m1 = frozenset(
        names[f"{stem}{i}"] for i in range(k + 1) for stem in ("alpha", "gamma", "b")
    )
    m2 = frozenset(g.vertices) - m1
    return GkInstance(g, names, m1, m2)


def gen_complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise GraphError("both parts need at least one vertex")
    return Graph(range(m + n), [(i, m + j) for i in range(m) for j in range(n)])


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least three vertices")
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def gen_path(n: int) -> Graph:
    if n < 1:
        raise GraphError("a path needs at least one vertex")
    return Graph(range(n), [(i, i + 1) for i in range(n - 1)])


def gen_triangle() -> Graph:
    return gen_cycle(3)


def gen_square() -> Graph:
    return gen_cycle(4)


def gen_bull() -> Graph:
    """Triangle 1-2-3 with pendants 0 (on 1) and 4 (on 2)."""
    return Graph(range(5), [(0, 1), (1, 2), (1, 3), (2, 3), (2, 4)])


def gen_lollipop(path_len: int, clique_size: int) -> Graph:
    """A path joined by one bridge to a clique; vertex 0 is the pendant end."""
    if path_len < 1:
        raise GraphError("path needs at least one vertex")
    if clique_size < 3:
        raise GraphError("clique needs at least three vertices")
    edges = [(i, i + 1) for i in range(path_len - 1)]
    clique = range(path_len, path_len + clique_size)
    edges += list(combinations(clique, 2))
    edges.append((path_len - 1, path_len))
    return Graph(range(path_len + clique_size), edges)


def gen_random_connected(n: int, edge_prob: float, seed: int) -> Graph:
    """Seeded Erdos-Renyi draw, patched into connectivity by linking the
    components with a random tree instead of redrawing.
    """
    if n < 1:
        raise GraphError("need at least one vertex")
    if not 0.0 <= edge_prob <= 1.0:
        raise GraphError("edge_prob must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < edge_prob]
    g = Graph(range(n), edges)
    comps = connected_components(g)
    if len(comps) > 1:
        comps = list(comps)
        rng.shuffle(comps)
        for i in range(1, len(comps)):
            a = rng.choice(sorted(comps[rng.randrange(i)]))
            b = rng.choice(sorted(comps[i]))
            edges.append((a, b))
        g = Graph(range(n), edges)
    return g


def gen_random_sputnik(seed: int, size: int) -> Graph:
    """Random connected graph with a fresh pendant hung on every cycle
    vertex that lacks one; at most doubles the vertex count.
    """
    if size < 1:
        raise GraphError("need at least one vertex")
    rng = random.Random(seed)
    edge_prob = min(1.0, rng.uniform(1.2, 3.0) / max(size, 2))
    base = gen_random_connected(size, edge_prob, rng.randrange(2**32))
    pend = pendant_vertices(base)
    extra: list[Edge] = []
    next_id = max(base.vertices) + 1
    for v in sorted(cycle_vertices(base)):
        if not (base.neighbors(v) & pend):
            extra.append((v, next_id))
            next_id += 1
    if not extra:
        return base
    return Graph(base.vertices, list(base.edges()) + extra)
