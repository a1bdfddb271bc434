"""Structural classification: complete bipartite graphs, sputniks, and the
class of graphs in which every MIS is robust (exactly the union of the two).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    Graph,
    GraphError,
    biconnected_components,
    is_bipartite,
    is_connected,
    pendant_vertices,
)


@dataclass(frozen=True)
class ClassVerdict:
    complete_bipartite: bool
    sputnik: bool
    rmis_forall: bool
    bipartition: tuple[frozenset[int], frozenset[int]] | None = None


def is_complete_bipartite(g: Graph) -> tuple[set[int], set[int]] | None:
    """The bipartition (V1, V2) if every V1-V2 pair is an edge and there are
    no others; None otherwise. A single vertex does not qualify (one side
    would be empty), a single edge does.
    """
    if not is_connected(g):
        raise GraphError("is_complete_bipartite requires a connected graph")
    parts = is_bipartite(g)
    if parts is None:
        return None
    v1, v2 = parts
    if not v1 or not v2:
        return None
    if g.num_edges != len(v1) * len(v2):
        return None
    return v1, v2


def cycle_vertices(g: Graph) -> set[int]:
    """Vertices lying on some cycle: members of a biconnected component with
    three or more vertices.
    """
    out: set[int] = set()
    for comp in biconnected_components(g):
        if len(comp) >= 3:
            out |= comp
    return out


def is_sputnik(g: Graph) -> bool:
    """True iff every vertex on a cycle has a degree-1 neighbor.

    Trees qualify vacuously, including the single-vertex graph.
    """
    if not is_connected(g):
        raise GraphError("is_sputnik requires a connected graph")
    pendants = pendant_vertices(g)
    return all(g.neighbors(v) & pendants for v in cycle_vertices(g))


def in_rmis_forall(g: Graph) -> ClassVerdict:
    """Does every MIS of `g` stay maximal under connectivity-preserving edge
    removal? Holds exactly when `g` is complete bipartite or a sputnik.
    """
    parts = is_complete_bipartite(g)
    sputnik = is_sputnik(g)
    return ClassVerdict(
        complete_bipartite=parts is not None,
        sputnik=sputnik,
        rmis_forall=parts is not None or sputnik,
        bipartition=(frozenset(parts[0]), frozenset(parts[1])) if parts else None,
    )
