"""Ground-truth verification for maximal independent sets and their robustness.

A set is a *robust* MIS when it stays maximal in every connected spanning
subgraph of the original graph. Two checkers live here: a polynomial one
based on a cut criterion, and an exponential one that enumerates connected
spanning subgraphs directly. The second exists to validate the first at
desk scale, so the two must stay independent.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable

from .graph import Graph, GraphError, bridges, is_connected, remove_edges

DEFAULT_VERTEX_CAP = 16
DEFAULT_REMOVABLE_CAP = 20


def _as_member_set(g: Graph, s: Iterable[int]) -> frozenset[int]:
    members = frozenset(s)
    for v in members:
        if v not in g:
            raise GraphError(f"unknown vertex {v} in candidate set")
    return members


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    """True iff no edge of `g` has both endpoints in `s`."""
    members = _as_member_set(g, s)
    return all(not (g.neighbors(v) & members) for v in members)


def is_mis(g: Graph, s: Iterable[int]) -> bool:
    """True iff `s` is independent and every vertex outside has a neighbor in it."""
    members = _as_member_set(g, s)
    if not is_independent(g, members):
        return False
    return all(g.neighbors(v) & members for v in g.vertices if v not in members)


def is_robust_mis(g: Graph, s: Iterable[int]) -> bool:
    """Polynomial robustness check.

    An MIS is robust iff for every vertex u outside it, deleting all edges
    between u and the set disconnects the graph: any connectivity-preserving
    removal then leaves u covered.
    """
    if not is_connected(g):
        raise GraphError("is_robust_mis requires a connected graph")
    members = _as_member_set(g, s)
    if not is_mis(g, members):
        return False
    for u in g.vertices:
        if u in members:
            continue
        if g.neighbors(u) <= members:
            # u loses all its edges, so the deletion isolates it
            continue
        if _connected_without_cut(g, u, members):
            return False
    return True


def _connected_without_cut(g: Graph, u: int, members: frozenset[int]) -> bool:
    """Connectivity of g after deleting every edge from u into `members`."""
    start = u
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if v == u and w in members:
                continue
            if w == u and v in members:
                continue
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n


def is_robust_mis_bruteforce(
    g: Graph, s: Iterable[int], *, max_removable: int = DEFAULT_REMOVABLE_CAP
) -> bool:
    """Definitional robustness check: `s` is an MIS of every connected
    spanning subgraph. Exponential in the number of removable edges.
    """
    if not is_connected(g):
        raise GraphError("is_robust_mis_bruteforce requires a connected graph")
    members = _as_member_set(g, s)
    if not is_mis(g, members):
        return False
    removable = sorted(set(g.edges()) - bridges(g))
    if len(removable) > max_removable:
        raise GraphError(
            f"{len(removable)} removable edges exceeds cap {max_removable}; "
            "use is_robust_mis instead"
        )

    # Depth-first over subsets of removable edges; a subset whose removal
    # already disconnects the graph is pruned with all its supersets.
    def survives(start: int, sub: Graph) -> bool:
        if not is_mis(sub, members):
            return False
        for j in range(start, len(removable)):
            smaller = remove_edges(sub, [removable[j]])
            if is_connected(smaller) and not survives(j + 1, smaller):
                return False
        return True

    return survives(0, g)


def enumerate_mis(g: Graph, *, max_vertices: int = DEFAULT_VERTEX_CAP) -> list[frozenset[int]]:
    """All maximal independent sets, canonically sorted.

    Backtracks over in/out decisions per vertex, pruning branches where a
    skipped vertex can no longer be dominated.
    """
    if g.n > max_vertices:
        raise GraphError(f"{g.n} vertices exceeds enumeration cap {max_vertices}")
    order = g.vertices
    rank = {v: i for i, v in enumerate(order)}
    found: list[frozenset[int]] = []

    def rec(i: int, chosen: set[int], blocked: set[int]) -> None:
        if i == len(order):
            if len(chosen) + len(blocked) == g.n:
                found.append(frozenset(chosen))
            return
        v = order[i]
        if v in blocked:
            rec(i + 1, chosen, blocked)
            return
        # include v
        chosen.add(v)
        newly = g.neighbors(v) - blocked
        blocked |= newly
        rec(i + 1, chosen, blocked)
        blocked -= newly
        chosen.remove(v)
        # exclude v: only viable if some later neighbor can still dominate it
        if any(rank[w] > i for w in g.neighbors(v)):
            rec(i + 1, chosen, blocked)

    rec(0, set(), set())
    found.sort(key=lambda m: tuple(sorted(m)))
    return found


def enumerate_robust_mis(
    g: Graph, *, max_vertices: int = DEFAULT_VERTEX_CAP
) -> list[frozenset[int]]:
    """All robust MISs: the enumeration filtered by the polynomial checker."""
    return [m for m in enumerate_mis(g, max_vertices=max_vertices) if is_robust_mis(g, m)]


def parse_vertex_set(text: str) -> frozenset[int]:
    """Parse the comma-separated id form used on the command line."""
    text = text.strip()
    if not text:
        return frozenset()
    try:
        return frozenset(int(p) for p in text.split(","))
    except ValueError:
        raise GraphError(f"bad vertex set {text!r}; expected comma-separated ids") from None


def format_vertex_set(s: Iterable[int]) -> str:
    return ",".join(str(v) for v in sorted(s))
