"""Slow, independently coded checks used to re-validate harness findings.

Nothing here touches the bitmask search code: digraphs are reduced to a
plain vertex list and a set of arcs, and every property is evaluated straight
from its definition (pair families by triple loops, reachability by
Warshall's closure, cycles by permutation or unpruned path enumeration).
"""

from __future__ import annotations

from itertools import combinations, permutations

from ..core import BipartiteDigraph, to_compact, vx, vy


def as_arc_set(G):
    """``(vertices, arcs)`` for a bipartite or general digraph."""
    if isinstance(G, BipartiteDigraph):
        vertices = [vx(i) for i in range(G.a)] + [vy(j) for j in range(G.a)]
        # read the adjacency through the compact string, not the masks
        text = to_compact(G)
        parts = dict(p.split("=") for p in text.split(";"))
        a = int(parts["a"])
        arcs = set()
        for tag, (s, t) in (("xy", (vx, vy)), ("yx", (vy, vx))):
            for pos, ch in enumerate(parts[tag]):
                if ch == "1":
                    arcs.add((s(pos // a), t(pos % a)))
        return vertices, arcs
    vertices = list(range(G.n))
    arcs = {(u, v) for u in vertices for v in vertices if u != v and G.has_arc(u, v)}
    return vertices, arcs


def degree(vertices, arcs, v):
    return sum(1 for (s, t) in arcs if s == v) + sum(1 for (s, t) in arcs if t == v)


def dominating(vertices, arcs):
    return {
        frozenset((u, v))
        for u, v in combinations(vertices, 2)
        if any((u, w) in arcs and (v, w) in arcs for w in vertices)
    }


def dominated(vertices, arcs):
    return {
        frozenset((u, v))
        for u, v in combinations(vertices, 2)
        if any((w, u) in arcs and (w, v) in arcs for w in vertices)
    }


def non_adjacent(vertices, arcs):
    return {
        frozenset((u, v))
        for u, v in combinations(vertices, 2)
        if (u, v) not in arcs and (v, u) not in arcs
    }


def condition_holds(G, name: str, k: int | None = None) -> bool:
    vertices, arcs = as_arc_set(G)
    n = len(vertices)
    a = n // 2
    deg = {v: degree(vertices, arcs, v) for v in vertices}

    def bk_ok(p):
        u, v = tuple(p)
        du, dv = deg[u], deg[v]
        return (du >= 2 * a - k and dv >= a + k) or (du >= a + k and dv >= 2 * a - k)

    def sum_ok(p, threshold):
        u, v = tuple(p)
        return deg[u] + deg[v] >= threshold

    if name == "aay-3a":
        return all(sum_ok(p, 3 * a) for p in non_adjacent(vertices, arcs))
    if name == "domdom-3a":
        fam = dominating(vertices, arcs) | dominated(vertices, arcs)
        return all(sum_ok(p, 3 * a) for p in fam)
    if name == "dk":
        return all(sum_ok(p, 3 * a + k) for p in dominating(vertices, arcs))
    if name == "dominated-dk":
        return all(sum_ok(p, 3 * a + k) for p in dominated(vertices, arcs))
    if name == "bk":
        return all(bk_ok(p) for p in dominating(vertices, arcs))
    if name == "dominated-bk":
        return all(bk_ok(p) for p in dominated(vertices, arcs))
    if name == "thomassen-2n":
        return all(sum_ok(p, 2 * n) for p in non_adjacent(vertices, arcs))
    raise ValueError(name)


def strongly_connected(G) -> bool:
    vertices, arcs = as_arc_set(G)
    reach = {(u, v): (u, v) in arcs or u == v for u in vertices for v in vertices}
    for w in vertices:
        for u in vertices:
            if reach[u, w]:
                for v in vertices:
                    if reach[w, v]:
                        reach[u, v] = True
    return all(reach.values())


def _has_cycle_of_length(vertices, arcs, length):
    succ = {v: [t for (s, t) in arcs if s == v] for v in vertices}

    def extend(path, on_path):
        if len(path) == length:
            return (path[-1], path[0]) in arcs
        for w in succ[path[-1]]:
            if w not in on_path:
                path.append(w)
                on_path.add(w)
                if extend(path, on_path):
                    return True
                path.pop()
                on_path.discard(w)
        return False

    return any(extend([s], {s}) for s in vertices)


def hamiltonian(G) -> bool:
    """Permutation brute force for small bipartite inputs, plain DFS otherwise."""
    vertices, arcs = as_arc_set(G)
    if isinstance(G, BipartiteDigraph) and G.a <= 4:
        a = G.a
        # cycles through x0: x0, y_q0, x_p1, y_q1, ...
        for xs in permutations(range(1, a)):
            order_x = (0,) + xs
            for ys in permutations(range(a)):
                seq = []
                for p, q in zip(order_x, ys):
                    seq += [vx(p), vy(q)]
                if all((seq[i], seq[(i + 1) % len(seq)]) in arcs for i in range(len(seq))):
                    return True
        return False
    return _has_cycle_of_length(vertices, arcs, len(vertices))


def cycle_lengths(G, lengths) -> dict:
    vertices, arcs = as_arc_set(G)
    return {L: _has_cycle_of_length(vertices, arcs, L) for L in lengths}


def bipancyclic(G: BipartiteDigraph) -> bool:
    return all(cycle_lengths(G, range(2, 2 * G.a + 1, 2)).values())


def directed_full_cycle(G) -> bool:
    vertices, arcs = as_arc_set(G)
    return (
        len(arcs) == len(vertices)
        and all(sum(1 for (s, _) in arcs if s == v) == 1 for v in vertices)
        and strongly_connected(G)
    )


def tournament(G) -> bool:
    vertices, arcs = as_arc_set(G)
    return all(((u, v) in arcs) != ((v, u) in arcs) for u, v in combinations(vertices, 2))


def complete_balanced_bipartite(G) -> bool:
    """Brute force over every half-size vertex subset."""
    vertices, arcs = as_arc_set(G)
    n = len(vertices)
    if n % 2:
        return False
    for side in combinations(vertices, n // 2):
        s = set(side)
        want = {(u, v) for u in vertices for v in vertices if (u in s) != (v in s)}
        if arcs == want:
            return True
    return False


def thomassen_outcome(G) -> bool:
    """True when ``G`` is a tournament, K*_{n/2,n/2}, or has cycles of every
    length 2..n."""
    if tournament(G) or complete_balanced_bipartite(G):
        return True
    n = G.n
    return all(cycle_lengths(G, range(2, n + 1)).values())


def perfect_matching_exists(rows, a: int) -> bool:
    """Permutation search over a one-direction 0/1 adjacency (``rows[i]`` bit j)."""
    return any(all(rows[i] >> p[i] & 1 for i in range(a)) for p in permutations(range(a)))


def cycle_cover_counts(G: BipartiteDigraph) -> list[int]:
    """Number of cycles of every cycle cover, by brute force over pairs of
    permutations ``x_i -> y_s(i)`` and ``y_j -> x_t(j)``."""
    vertices, arcs = as_arc_set(G)
    a = G.a
    out = []
    for s in permutations(range(a)):
        if not all((vx(i), vy(s[i])) in arcs for i in range(a)):
            continue
        for t in permutations(range(a)):
            if not all((vy(j), vx(t[j])) in arcs for j in range(a)):
                continue
            # walk x_i -> x_t(s(i)) and count orbits
            seen, cycles = set(), 0
            for i in range(a):
                if i not in seen:
                    cycles += 1
                    j = i
                    while j not in seen:
                        seen.add(j)
                        j = t[s[j]]
            out.append(cycles)
    return out
