"""A tour of robust maximal independent sets on three tiny graphs.

An MIS is robust when it stays maximal after any edge removals that keep
the graph connected. This walks the classic trio: a graph with no robust
MIS, one where a single MIS out of several is robust, and one where every
MIS is robust.
"""

from rmis import (
    enumerate_mis,
    enumerate_robust_mis,
    gen_bull,
    gen_square,
    gen_triangle,
    in_rmis_forall,
    is_robust_mis,
    is_robust_mis_bruteforce,
    remove_edges,
    is_mis,
)


def show(name, g):
    print(f"\n== {name}: {g.n} vertices, edges {list(g.edges())}")
    all_mis = enumerate_mis(g)
    robust = set(enumerate_robust_mis(g))
    for s in all_mis:
        mark = "robust" if s in robust else "fragile"
        agree = is_robust_mis_bruteforce(g, s)
        assert (s in robust) == agree, "polynomial and exhaustive checkers disagree"
        print(f"   MIS {sorted(s)!s:<12} {mark} (exhaustive check agrees)")
    verdict = in_rmis_forall(g)
    print(
        f"   complete bipartite: {verdict.complete_bipartite}, "
        f"sputnik: {verdict.sputnik} -> all MISs robust: {verdict.rmis_forall}"
    )


triangle = gen_triangle()
show("triangle", triangle)
print("   why: drop one edge next to the chosen vertex and it stops dominating;")
g2 = remove_edges(triangle, [(0, 1)])
print(f"   after removing (0,1): is {{0}} still an MIS? {is_mis(g2, {0})}")

bull = gen_bull()
show("bull (triangle 1-2-3, pendants 0 and 4)", bull)
print("   only the set holding both pendants plus the far triangle vertex survives:")
print(f"   is_robust_mis(bull, {{0,3,4}}) = {is_robust_mis(bull, {0, 3, 4})}")

show("square", gen_square())
print("   the square is complete bipartite, so either diagonal works forever.")
