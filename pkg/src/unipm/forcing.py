"""Forcing-set elimination: iterated degree-1 removal.

Succeeds iff some ordered vertex set forces a unique perfect matching.
On cographs and split graphs success is equivalent to the graph having
a unique perfect matching; on arbitrary graphs it is sufficient but not
necessary.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .graph import Graph, Matching, is_clique


@dataclass(frozen=True)
class ForcingCertificate:
    """Elimination order (u_i, v_i) plus the matching it forces.

    After deleting the closed neighborhoods of u_1..u_{i-1}, vertex u_i
    has degree exactly 1 and v_i is its sole remaining neighbor.
    """

    forced: tuple[tuple[int, int], ...]
    matching: Matching


def find_forcing_set(g: Graph) -> ForcingCertificate | None:
    """Certificate iff some set forces a unique perfect matching in g.

    Maintains live degrees and a worklist of degree-1 vertices;
    repeatedly pops the lowest-id degree-1 vertex u, records (u, its
    sole neighbor v), removes both, and pushes neighbors whose degree
    drops to 1.  Succeeds iff the graph empties.  Odd order or a
    stranded vertex returns None.
    """
    n = g.n_total
    removed = g.removed
    alive = [not removed[u] for u in range(n)]
    remaining = g.live_count
    if remaining % 2:
        return None
    deg = [0] * n
    for u in range(n):
        if alive[u]:
            deg[u] = sum(1 for w in g.adjacency[u] if alive[w])
    heap = [u for u in range(n) if alive[u] and deg[u] == 1]
    heapq.heapify(heap)
    forced: list[tuple[int, int]] = []
    while heap:
        u = heapq.heappop(heap)
        if not alive[u] or deg[u] != 1:
            continue  # stale entry
        v = next(w for w in g.adjacency[u] if alive[w])
        forced.append((u, v))
        alive[u] = False
        alive[v] = False
        remaining -= 2
        for gone in (u, v):
            for z in g.adjacency[gone]:
                if alive[z]:
                    deg[z] -= 1
                    if deg[z] == 1:
                        heapq.heappush(heap, z)
    if remaining != 0:
        return None
    return ForcingCertificate(tuple(forced), Matching(forced))


def split_balance(g: Graph, indep: set[int], clique: set[int]) -> bool:
    """True iff |C| - |S| is 0 or 2 for a valid split partition (S, C).

    Necessary condition for a split graph to have a unique perfect
    matching.  Raises on an invalid partition.
    """
    live = set(g.live_vertices())
    if indep & clique or (indep | clique) != live:
        raise ValueError("S and C must partition the live vertices")
    for u in indep:
        for w in g.adjacency[u]:
            if w in indep:
                raise ValueError(f"S is not independent: edge {u}-{w}")
    if not is_clique(g, clique):
        raise ValueError("C is not a clique")
    return len(clique) - len(indep) in (0, 2)
