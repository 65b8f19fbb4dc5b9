"""Perfect matchings, Hall violators and cycle factors.

A cycle factor of a balanced bipartite digraph is the same thing as a pair
of perfect matchings, one from X to Y and one from Y to X: following the two
matchings alternately from any vertex traces out a cycle, and these cycles
partition the vertex set.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ._bits import bits, hall_violator_mask, has_perfect_matching, max_matching
from .core import Arc, BipartiteDigraph, Cycle, CycleFactor, Vertex
from .errors import (
    BudgetExhausted,
    InputError,
    MergeInapplicable,
    NoCycleFactor,
    NoPerfectMatching,
)

DIRECTIONS = ("xy", "yx")


@dataclass(frozen=True)
class Matching:
    """``pairs[i] = j`` means the arc from source ``i`` to target ``j``.

    For direction ``"xy"`` sources are X indices and targets Y indices.
    """

    direction: str
    pairs: dict = field(hash=False)
    a: int = 0

    @property
    def is_perfect(self) -> bool:
        return len(self.pairs) == self.a

    def arcs(self):
        src, tgt = ("x", "y") if self.direction == "xy" else ("y", "x")
        return [Arc(Vertex(src, i), Vertex(tgt, j)) for i, j in sorted(self.pairs.items())]


def _rows(D: BipartiteDigraph, direction: str):
    if direction not in DIRECTIONS:
        raise InputError(f"direction must be 'xy' or 'yx', got {direction!r}")
    return D.xy_rows if direction == "xy" else D.yx_rows


def maximum_matching(D: BipartiteDigraph, direction: str) -> Matching:
    rows = _rows(D, direction)
    full = (1 << D.a) - 1
    m_src, _ = max_matching(rows, full, full)
    return Matching(direction, dict(m_src), D.a)


def hall_violator(D: BipartiteDigraph, direction: str) -> frozenset | None:
    """A source-side set S with ``|N+(S)| < |S|``, or None if none exists."""
    rows = _rows(D, direction)
    full = (1 << D.a) - 1
    S = hall_violator_mask(rows, full, full)
    if S is None:
        return None
    side = direction[0]
    return frozenset(Vertex(side, i) for i in bits(S))


def perfect_matching(D: BipartiteDigraph, direction: str) -> Matching:
    """Deterministic perfect matching; raises :class:`NoPerfectMatching`.

    Sources are scanned in increasing index and targets tried in increasing
    index, with a greedy first pass, so complete inputs give the identity.
    """
    m = maximum_matching(D, direction)
    if not m.is_perfect:
        raise NoPerfectMatching(direction, hall_violator(D, direction))
    return m


def _factor_from_successors(D, nxt) -> CycleFactor:
    """``nxt`` maps vertex id -> successor id and is a permutation."""
    seen = 0
    cycles = []
    for start in range(2 * D.a):
        if seen >> start & 1:
            continue
        seq = []
        v = start
        while not seen >> v & 1:
            seen |= 1 << v
            seq.append(D.vertex(v))
            v = nxt[v]
        cycles.append(Cycle(seq))
    return CycleFactor(cycles, D.a)


def cycle_factor(D: BipartiteDigraph) -> CycleFactor:
    """The cycle factor formed by the two deterministic perfect matchings."""
    try:
        mxy = perfect_matching(D, "xy")
        myx = perfect_matching(D, "yx")
    except NoPerfectMatching as exc:
        raise NoCycleFactor(exc.direction, exc.violator) from None
    a = D.a
    nxt = [0] * (2 * a)
    for i, j in mxy.pairs.items():
        nxt[i] = a + j
    for i, j in myx.pairs.items():
        nxt[a + i] = j
    factor = _factor_from_successors(D, nxt)
    factor.validate(D)
    return factor


def has_cycle_factor(D: BipartiteDigraph) -> bool:
    full = (1 << D.a) - 1
    return has_perfect_matching(D.xy_rows, full, full) and has_perfect_matching(D.yx_rows, full, full)


# ---------------------------------------------------------------------------
# merging cycles


def _successor_map(factor: CycleFactor) -> dict:
    nxt = {}
    for c in factor:
        vs = c.vertices
        for k, v in enumerate(vs):
            nxt[v] = vs[(k + 1) % len(vs)]
    return nxt


def _rebuild(nxt: dict, a: int) -> CycleFactor:
    seen = set()
    cycles = []
    for start in sorted(nxt):
        if start in seen:
            continue
        seq = []
        v = start
        while v not in seen:
            seen.add(v)
            seq.append(v)
            v = nxt[v]
        cycles.append(Cycle(seq))
    return CycleFactor(cycles, a)


def splice(D: BipartiteDigraph, factor: CycleFactor, u: Vertex, w: Vertex) -> CycleFactor:
    """Exchange the cycle arcs ``u -> u+`` and ``w -> w+`` (u, w on different
    cycles, same side) for ``u -> w+`` and ``w -> u+``, joining two cycles."""
    nxt = _successor_map(factor)
    if factor.cycle_of(u) == factor.cycle_of(w):
        raise MergeInapplicable(f"{u} and {w} lie on the same cycle")
    up, wp = nxt[u], nxt[w]
    for tail, head in ((u, wp), (w, up)):
        if not D.has_arc(tail, head):
            raise MergeInapplicable(f"missing arc {tail}->{head}")
    nxt[u], nxt[w] = wp, up
    return _rebuild(nxt, factor.a)


def merge_two_cycle(D, factor, c1_index, cj_index, x1, y1, xp, yp) -> CycleFactor:
    """Absorb the 2-cycle ``[x1, y1]`` into cycle ``cj`` by replacing its arc
    ``xp -> yp`` with the path ``(xp, y1, x1, yp)``."""
    c1 = factor[c1_index]
    cj = factor[cj_index]
    if c1_index == cj_index:
        raise MergeInapplicable("the two cycle indices coincide")
    if len(c1) != 2 or set(c1.vertices) != {x1, y1} or x1.side != "x" or y1.side != "y":
        raise MergeInapplicable(f"cycle {c1_index} is not the 2-cycle [{x1}, {y1}]")
    if xp not in cj.vertices or cj.successor(xp) != yp:
        raise MergeInapplicable(f"{xp}->{yp} is not an arc of cycle {cj_index}")
    for tail, head in ((xp, y1), (x1, yp)):
        if not D.has_arc(tail, head):
            raise MergeInapplicable(f"missing arc {tail}->{head}")
    merged = splice(D, factor, x1, xp)
    assert len(merged) == len(factor) - 1
    merged.validate(D)
    return merged


def greedy_merge(D: BipartiteDigraph, factor: CycleFactor) -> CycleFactor:
    """Apply splices until none applies; the cycle count never increases."""
    changed = True
    while changed and len(factor) > 1:
        changed = False
        for p in range(len(factor)):
            for q in range(p + 1, len(factor)):
                for u in factor[p]:
                    for w in factor[q]:
                        if u.side != w.side:
                            continue
                        try:
                            factor = splice(D, factor, u, w)
                        except MergeInapplicable:
                            continue
                        changed = True
                        break
                    if changed:
                        break
                if changed:
                    break
            if changed:
                break
    return factor


# ---------------------------------------------------------------------------
# minimum cycle factor


def minimal_cycle_factor(D: BipartiteDigraph, node_budget: int = 2_000_000) -> CycleFactor:
    """A cycle factor with the fewest cycles, by exact branch and bound.

    Seeded by :func:`cycle_factor` plus greedy merging.  The search repeatedly
    picks the lowest uncovered X vertex and branches over the cycles through
    it inside the uncovered set, pruning subsets without a cycle factor.
    Raises :class:`BudgetExhausted` (carrying the best factor found) once more
    than ``node_budget`` search nodes have been expanded.
    """
    best = greedy_merge(D, cycle_factor(D))
    if len(best) == 1:
        return best
    a = D.a
    succ = D.succ_masks
    x_ids = (1 << a) - 1
    state = {"best": best, "nodes": 0}

    def feasible(R):
        xs = R & x_ids
        ys = (R >> a) & x_ids
        return has_perfect_matching(D.xy_rows, xs, ys) and has_perfect_matching(D.yx_rows, ys, xs)

    def cycles_through(v, R, must_cover):
        # every cycle through v inside R; longest-first is not needed for correctness
        path = [v]

        def walk(u, used):
            state["nodes"] += 1
            if state["nodes"] > node_budget:
                raise BudgetExhausted(state["best"], state["nodes"])
            if succ[u] >> v & 1 and len(path) >= 2 and (not must_cover or used == R):
                yield list(path), used
            for w in bits(succ[u] & R & ~used):
                path.append(w)
                yield from walk(w, used | 1 << w)
                path.pop()

        yield from walk(v, 1 << v)

    def search(R, chosen):
        best_len = len(state["best"])
        allowed = best_len - len(chosen) - 1  # cycles still affordable, incl. the next one
        if allowed < 1 or not feasible(R):
            return
        v = (R & x_ids & -(R & x_ids)).bit_length() - 1
        for cyc, used in cycles_through(v, R, allowed == 1):
            rest = R & ~used
            picked = chosen + [cyc]
            if not rest:
                if len(picked) < len(state["best"]):
                    state["best"] = CycleFactor(
                        [Cycle(D.vertex(i) for i in c) for c in picked], a
                    )
                    if len(picked) == 1:
                        return
            elif len(picked) + 1 < len(state["best"]):
                search(rest, picked)
            if len(state["best"]) == 1:
                return

    search((1 << (2 * a)) - 1, [])
    result = state["best"]
    result.validate(D)
    return result


# ---------------------------------------------------------------------------
# arc bound around the shortest cycle of a minimum factor


def lemma4_bound(c1_len: int, a: int) -> int:
    """``c1_len * (2a - c1_len) / 2``; equals ``2t(a - t)`` with ``t = c1_len/2``."""
    if c1_len % 2 or not 2 <= c1_len <= 2 * a:
        raise InputError(f"cycle length must be even in [2, 2a], got {c1_len}")
    return c1_len * (2 * a - c1_len) // 2


@dataclass(frozen=True)
class Lemma4Audit:
    c1_len: int
    bound: int
    arcs: int
    within_bound: bool
    strongly_connected: bool
    d1_holds: bool
    hamiltonian: bool
    factor_minimal: bool | None
    status: str  # "vacuous" | "confirmed" | "VIOLATED"

    @property
    def hypotheses_met(self) -> bool:
        return self.strongly_connected and self.d1_holds and not self.hamiltonian and bool(self.factor_minimal)


def lemma4_check(D: BipartiteDigraph, factor: CycleFactor, node_budget: int = 200_000) -> Lemma4Audit:
    """Compare the arcs leaving the shortest cycle against the bound and record
    which of the bound's hypotheses hold.  Never raises on a failed bound."""
    from .conditions import check_condition, dk
    from .cycles import find_hamilton_cycle, is_strongly_connected

    if len(factor) < 2:
        raise InputError("the audit needs a factor with at least two cycles")
    factor.validate(D)
    c1 = factor[0]
    inside = set(c1.vertices)
    rest = [v for v in D.vertices() if v not in inside]
    arcs = D.arcs_between(inside, rest)
    bound = lemma4_bound(len(c1), D.a)
    strong = is_strongly_connected(D)
    d1 = check_condition(D, dk(1)).holds
    ham = find_hamilton_cycle(D) is not None
    try:
        minimal = len(minimal_cycle_factor(D, node_budget)) == len(factor)
    except BudgetExhausted:
        minimal = None
    met = strong and d1 and not ham and bool(minimal)
    status = "vacuous" if not met else ("confirmed" if arcs <= bound else "VIOLATED")
    return Lemma4Audit(len(c1), bound, arcs, arcs <= bound, strong, d1, ham, minimal, status)
