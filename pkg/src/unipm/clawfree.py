"""Greedy perfect matching for connected claw-free graphs of even order.

The path grows by end-extensions and swap-extensions until neither
applies; the last path edge then belongs to some perfect matching, is
committed, and its endpoints are removed.  Monotone per-vertex neighbor
cursors make the whole run O(n + m): every adjacency list is traversed
at most once.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass

from .graph import Graph, Matching, connected_components
from .uniqueness import is_unique_pm


@dataclass
class PmincfStats:
    """Operation counters for the linearity checks."""

    cursor_advances: int = 0
    lm_nb_updates: int = 0
    reseeds: int = 0
    commits: int = 0
    edge_count: int = 0

    def as_dict(self) -> dict[str, int]:
        return {
            "cursor_advances": self.cursor_advances,
            "lm_nb_updates": self.lm_nb_updates,
            "reseeds": self.reseeds,
            "commits": self.commits,
            "edge_count": self.edge_count,
        }


def pmincf(g: Graph, stats: PmincfStats | None = None,
           debug_checks: bool = False,
           check_connectivity: bool = False) -> Matching:
    """Perfect matching of a connected claw-free graph of even live order.

    Claw-freeness and connectivity are promises of the caller; a claw
    is never checked here.  Raises ValueError on odd live order (before
    starting) and reports "disconnected input" if the promise fails in
    a detectable way.  The caller's graph is not mutated.

    ``debug_checks`` asserts, at every commit, that the path admits
    neither extension and that the lm_nb cache matches a direct
    recomputation (O(deg) per commit).  ``check_connectivity``
    additionally asserts the live graph stays connected after each
    removal (O(n + m) per commit; test scale only).
    """
    adj = g.adjacency
    live = g.live_count
    if live % 2:
        raise ValueError("odd number of live vertices")
    n = len(adj)
    # flatten adjacency into a compact int array: the cursor loop is
    # pure pointer-chasing, and packed storage keeps the working set
    # cache-resident an order of magnitude longer than list-of-lists
    starts = array("l", bytes(8 * (n + 1)))
    total = 0
    for i, a in enumerate(adj):
        starts[i] = total
        total += len(a)
    starts[n] = total
    flat = array("i")
    for a in adj:
        flat.extend(a)
    removed = bytearray(n)
    for i, r in enumerate(g.removed):
        if r:
            removed[i] = 1
    cursor = array("l", starts[:n])
    pos = [-1] * n
    lm_nb = [-1] * n
    path: list[int] = []
    pairs: list[tuple[int, int]] = []
    advances = 0
    lm_updates = 0
    reseeds = 0
    lowest = 0  # monotone pointer to the lowest-id live vertex

    while live >= 2:
        if not path:
            while lowest < n and removed[lowest]:
                lowest += 1
            u = lowest
            cu = cursor[u]
            end = starts[u + 1]
            v = -1
            while cu < end:
                w = flat[cu]
                if removed[w]:
                    cu += 1
                    advances += 1
                else:
                    v = w
                    break
            cursor[u] = cu
            if v < 0:
                raise ValueError("disconnected input")
            path = [u, v]
            pos[u] = 0
            pos[v] = 1
            reseeds += 1

        while True:
            uk = path[-1]
            # end-extension: first cursor-scanned live off-path neighbor
            cu = cursor[uk]
            end = starts[uk + 1]
            v = -1
            while cu < end:
                w = flat[cu]
                if removed[w] or pos[w] >= 0:
                    cu += 1
                    advances += 1
                else:
                    v = w
                    break
            cursor[uk] = cu
            if v >= 0:
                pos[v] = len(path)
                path.append(v)
                continue
            k = len(path)
            if k == 1:
                # a lone path vertex with no live neighbor left
                raise ValueError("disconnected input")
            if lm_nb[uk] == -1:
                # first computation: O(deg) via path positions
                hits = set()
                for idx in range(starts[uk], end):
                    w = flat[idx]
                    lm_updates += 1
                    if not removed[w] and pos[w] >= 0:
                        hits.add(pos[w])
                run = 0
                while k - 2 - run >= 0 and (k - 2 - run) in hits:
                    run += 1
                lm_nb[uk] = run
            if lm_nb[uk] >= 2:
                um = path[-2]
                cu = cursor[um]
                end = starts[um + 1]
                v = -1
                while cu < end:
                    w = flat[cu]
                    if removed[w] or pos[w] >= 0:
                        cu += 1
                        advances += 1
                    else:
                        v = w
                        break
                cursor[um] = cu
                if v >= 0:
                    # swap-extension: ... u_{k-2} u_k u_{k-1} v
                    lm_nb[uk] -= 1
                    lm_updates += 1
                    if lm_nb[um] != -1:
                        lm_nb[um] += 1
                        lm_updates += 1
                    path[-2] = uk
                    path[-1] = um
                    pos[uk] = k - 2
                    pos[um] = k - 1
                    pos[v] = k
                    path.append(v)
                    continue
            break

        if debug_checks:
            _assert_no_extension(adj, removed, pos, lm_nb, path)
        b = path.pop()
        a = path.pop()
        pairs.append((a, b))
        pos[a] = -1
        pos[b] = -1
        removed[a] = 1
        removed[b] = 1
        live -= 2
        if check_connectivity and live > 0:
            assert _live_connected(adj, removed, live), \
                "live graph disconnected after commit"

    if stats is not None:
        stats.cursor_advances += advances
        stats.lm_nb_updates += lm_updates
        stats.reseeds += reseeds
        stats.commits += len(pairs)
        stats.edge_count += g.edge_count
    assert advances <= 2 * g.edge_count, "cursor advances exceed 2m"
    return Matching(pairs)


def _assert_no_extension(adj, removed, pos, lm_nb, path) -> None:
    """Commit-time invariant: neither extension is available."""
    b = path[-1]
    a = path[-2]
    k = len(path)
    for w in adj[b]:
        assert removed[w] or pos[w] >= 0, \
            f"end-extension {b}->{w} available at commit"
    # direct lm_nb recomputation for the last vertex
    bset = set(adj[b])
    run = 0
    while run < k - 1 and path[k - 2 - run] in bset:
        run += 1
    assert lm_nb[b] == run, f"lm_nb cache {lm_nb[b]} != direct {run}"
    if run >= 2:
        for w in adj[a]:
            assert removed[w] or pos[w] >= 0, \
                f"swap-extension via {a}->{w} available at commit"


def _live_connected(adj, removed, live) -> bool:
    n = len(adj)
    start = next((u for u in range(n) if not removed[u]), -1)
    if start < 0:
        return True
    seen = [False] * n
    seen[start] = True
    stack = [start]
    count = 1
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not removed[w] and not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == live


def decide_unique_clawfree(g: Graph) -> Matching | None:
    """The unique perfect matching of a claw-free graph, or None.

    Components of odd order rule out a perfect matching immediately.
    Otherwise the greedy matcher runs (its reseed step walks components
    one by one, so a single pass covers disconnected even-order input)
    and the result is kept only if the uniqueness verifier agrees.
    """
    if g.live_count % 2:
        return None
    if any(len(c) % 2 for c in connected_components(g)):
        return None
    m = pmincf(g)
    return m if is_unique_pm(g, m) is None else None
