"""Connectivity and cycle search, plus the Hamilton-cycle moves used to
reduce bipancyclicity of a balanced bipartite digraph to pancyclicity of an
ordinary digraph of half the order.

All searches are exact.  They run on vertex-id bitmasks, so they accept both
:class:`~bbdigraph.core.BipartiteDigraph` and :class:`GeneralDigraph`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable

from ._bits import bits, has_perfect_matching
from .conditions import THOMASSEN_2N, check_condition
from .core import BipartiteDigraph, Cycle, Vertex, vx, vy
from .errors import ConsistencyError, InputError, ParseError, RerouteInapplicable


class GeneralDigraph:
    """Loopless digraph on vertices ``0..n-1``, adjacency as bitmasks."""

    __slots__ = ("n", "_succ", "_pred")

    def __init__(self, n: int, succ: Iterable[int]):
        succ = tuple(succ)
        if n < 1 or len(succ) != n:
            raise InputError("need n >= 1 and one successor mask per vertex")
        full = (1 << n) - 1
        for u, s in enumerate(succ):
            if s & ~full or s >> u & 1:
                raise InputError(f"bad successor mask for vertex {u}")
        pred = [0] * n
        for u, s in enumerate(succ):
            for v in bits(s):
                pred[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_succ", succ)
        object.__setattr__(self, "_pred", tuple(pred))

    def __setattr__(self, name, value):
        raise AttributeError("GeneralDigraph is immutable")

    @classmethod
    def from_arcs(cls, n: int, arcs) -> GeneralDigraph:
        succ = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise InputError(f"bad arc {u}->{v} for n={n}")
            succ[u] |= 1 << v
        return cls(n, succ)

    @classmethod
    def from_index(cls, n: int, index: int) -> GeneralDigraph:
        """Bits in row-major order over ordered pairs ``(u, v)``, ``u != v``."""
        succ = [0] * n
        bit = 0
        for u in range(n):
            for v in range(n):
                if u == v:
                    continue
                if index >> bit & 1:
                    succ[u] |= 1 << v
                bit += 1
        return cls(n, succ)

    @classmethod
    def complete(cls, n: int) -> GeneralDigraph:
        full = (1 << n) - 1
        return cls(n, [full & ~(1 << u) for u in range(n)])

    @property
    def order(self) -> int:
        return self.n

    @property
    def succ_masks(self):
        return self._succ

    @property
    def pred_masks(self):
        return self._pred

    def vertex(self, vid: int) -> int:
        return vid

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self._succ[u] >> v & 1)

    def arcs(self):
        return [(u, v) for u in range(self.n) for v in bits(self._succ[u])]

    def out_degree(self, u):
        return self._succ[u].bit_count()

    def in_degree(self, u):
        return self._pred[u].bit_count()

    def degree(self, u):
        return self._succ[u].bit_count() + self._pred[u].bit_count()

    def __eq__(self, other):
        return isinstance(other, GeneralDigraph) and self._succ == other._succ

    def __hash__(self):
        return hash(self._succ)

    def __repr__(self):
        return f"GeneralDigraph(n={self.n}, arcs={self.arcs()})"

    def __reduce__(self):
        return (GeneralDigraph, (self.n, self._succ))


def serialize_general(G: GeneralDigraph) -> str:
    lines = sorted(f"arc {u} {v}" for u, v in G.arcs())
    return "\n".join(["gd 1", f"n {G.n}", *lines, "end"]) + "\n"


def parse_general(text: str) -> GeneralDigraph:
    lines = text.split("\n")
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines or lines[0].strip() != "gd 1":
        raise ParseError("expected header 'gd 1'", 1)
    m = re.fullmatch(r"n (\d+)", lines[1].strip()) if len(lines) > 1 else None
    if not m or int(m.group(1)) < 1:
        raise ParseError("expected 'n <int>' with n >= 1", 2)
    n = int(m.group(1))
    succ = [0] * n
    ended = False
    for lineno, raw in enumerate(lines[2:], start=3):
        line = raw.strip()
        if ended:
            raise ParseError("content after 'end'", lineno)
        if line == "end":
            ended = True
            continue
        parts = line.split()
        if len(parts) != 3 or parts[0] != "arc" or not parts[1].isdigit() or not parts[2].isdigit():
            raise ParseError(f"malformed arc line {line!r}", lineno)
        u, v = int(parts[1]), int(parts[2])
        if u >= n or v >= n or u == v:
            raise ParseError(f"bad arc {line!r}", lineno)
        if succ[u] >> v & 1:
            raise ParseError(f"duplicate arc {line!r}", lineno)
        succ[u] |= 1 << v
    if not ended:
        raise ParseError("missing 'end'", len(lines))
    return GeneralDigraph(n, succ)


# ---------------------------------------------------------------------------
# connectivity


def _reach(masks, start, n):
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= masks[u]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_strongly_connected(G) -> bool:
    succ, pred = G.succ_masks, G.pred_masks
    n = len(succ)
    full = (1 << n) - 1
    return _reach(succ, 0, n) == full and _reach(pred, 0, n) == full


# ---------------------------------------------------------------------------
# fixed-length cycles


def _dist_to(pred, target, allowed):
    """Shortest path length from every allowed vertex to ``target``."""
    dist = {target: 0}
    frontier = 1 << target
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for u in bits(frontier):
            nxt |= pred[u]
        frontier = nxt & allowed & ~seen
        seen |= frontier
        for u in bits(frontier):
            dist[u] = d
    return dist


def _cycle_ids(G, length, starts):
    """Vertex ids of a cycle of exactly ``length`` whose smallest id is the
    first start that admits one, or None."""
    succ, pred = G.succ_masks, G.pred_masks
    n = len(succ)
    full = (1 << n) - 1
    for s in starts:
        allowed = full & ~((1 << s) - 1)
        dist = _dist_to(pred, s, allowed)
        if len(dist) < length:
            continue
        path = [s]

        def walk(u, used):
            depth = len(path)
            if depth == length:
                return bool(succ[u] >> s & 1)
            budget = length - depth
            for w in bits(succ[u] & allowed & ~used):
                dw = dist.get(w)
                if dw is None or dw > budget:
                    continue
                path.append(w)
                if walk(w, used | 1 << w):
                    return True
                path.pop()
            return False

        if walk(s, 1 << s):
            return path
    return None


def _hamilton_ids(G, hall_every=None):
    """Hamilton cycle through vertex 0 by backtracking, or None.

    Pruning: an unvisited vertex with no usable in- or out-neighbour kills the
    branch; every ``hall_every`` levels the remaining successor assignment is
    tested for a perfect matching.
    """
    succ, pred = G.succ_masks, G.pred_masks
    n = len(succ)
    if n == 1:
        return None
    if hall_every is None:
        hall_every = max(1, n // 4)
    full = (1 << n) - 1
    start_bit = 1

    def dead(end, unvisited, depth):
        for u in bits(unvisited):
            if not succ[u] & (unvisited | start_bit) or not pred[u] & (unvisited | 1 << end):
                return True
        if depth == 1 or depth % hall_every == 0:
            sources = unvisited | 1 << end
            targets = unvisited | start_bit
            if not has_perfect_matching(succ, sources, targets):
                return True
        return False

    path = [0]

    def walk(u, unvisited):
        if not unvisited:
            return bool(succ[u] & start_bit)
        if dead(u, unvisited, len(path)):
            return False
        for w in bits(succ[u] & unvisited):
            path.append(w)
            if walk(w, unvisited & ~(1 << w)):
                return True
            path.pop()
        return False

    if walk(0, full & ~start_bit):
        return path
    return None


def _ids_to_cycle(D: BipartiteDigraph, ids) -> Cycle:
    return Cycle(D.vertex(i) for i in ids)


def find_cycle_of_length(G, length: int):
    """A cycle of exactly ``length`` vertices, or None.

    Returns a :class:`~bbdigraph.core.Cycle` for bipartite input and a tuple of
    vertex ids (rotated to start at the smallest) for a general digraph.
    """
    n = len(G.succ_masks)
    if isinstance(G, BipartiteDigraph):
        if length % 2 or not 2 <= length <= n:
            raise InputError(f"cycle length must be even in [2, {n}], got {length}")
        if length == n:
            hc = find_hamilton_cycle(G)
            return None if hc is None else hc.cycle
        # every cycle meets X, whose ids come first
        ids = _cycle_ids(G, length, range(G.a))
        return None if ids is None else _ids_to_cycle(G, ids)
    if not 2 <= length <= n:
        raise InputError(f"cycle length must lie in [2, {n}], got {length}")
    ids = _hamilton_ids(G) if length == n else _cycle_ids(G, length, range(n))
    return None if ids is None else tuple(ids)


# ---------------------------------------------------------------------------
# Hamilton cycles in the labelled form [y_1, x_1, ..., y_a, x_a]


class HamiltonCycle:
    """Hamilton cycle ``[ys[0], xs[0], ys[1], xs[1], ...]`` of a bipartite digraph.

    Position ``p`` holds the pair ``(ys[p], xs[p])``; ``ys[p] -> xs[p]`` and
    ``xs[p] -> ys[p+1]`` are cycle arcs.  The labelling (which Y vertex comes
    first) is meaningful for :func:`reroute_hamilton` and :func:`contraction`.
    """

    __slots__ = ("ys", "xs")

    def __init__(self, ys, xs):
        ys, xs = tuple(int(i) for i in ys), tuple(int(i) for i in xs)
        a = len(ys)
        if len(xs) != a or sorted(ys) != list(range(a)) or sorted(xs) != list(range(a)):
            raise InputError("a Hamilton cycle must visit every vertex exactly once")
        object.__setattr__(self, "ys", ys)
        object.__setattr__(self, "xs", xs)

    def __setattr__(self, name, value):
        raise AttributeError("HamiltonCycle is immutable")

    @classmethod
    def from_sequence(cls, vertices) -> HamiltonCycle:
        vs = [Vertex(*v) for v in vertices]
        if not vs or vs[0].side != "y":
            raise InputError("labelled Hamilton cycle must start at a Y vertex")
        if any(v.side != ("y" if k % 2 == 0 else "x") for k, v in enumerate(vs)):
            raise InputError("labelled Hamilton cycle must alternate Y, X")
        return cls([v.index for v in vs[0::2]], [v.index for v in vs[1::2]])

    @classmethod
    def from_cycle(cls, cycle: Cycle) -> HamiltonCycle:
        """Rotate to start at the smallest Y vertex."""
        vs = list(cycle.vertices)
        k = min(range(len(vs)), key=lambda p: (vs[p].side != "y", vs[p]))
        return cls.from_sequence(vs[k:] + vs[:k])

    @classmethod
    def parse(cls, line: str) -> HamiltonCycle:
        text = line.strip()
        if text.startswith("cycle:"):
            text = text[len("cycle:"):]
        return cls.from_sequence(Vertex.parse(t) for t in text.split())

    @property
    def a(self) -> int:
        return len(self.ys)

    def sequence(self) -> list[Vertex]:
        out = []
        for yi, xi in zip(self.ys, self.xs):
            out += [vy(yi), vx(xi)]
        return out

    @property
    def cycle(self) -> Cycle:
        return Cycle(self.sequence())

    def canonical(self) -> HamiltonCycle:
        return HamiltonCycle.from_cycle(self.cycle)

    def validate(self, D: BipartiteDigraph) -> None:
        if D.a != self.a:
            raise InputError("Hamilton cycle has the wrong order")
        self.cycle.validate(D)

    def is_valid_in(self, D: BipartiteDigraph) -> bool:
        return D.a == self.a and self.cycle.is_valid_in(D)

    def __eq__(self, other):
        return isinstance(other, HamiltonCycle) and (self.ys, self.xs) == (other.ys, other.xs)

    def __hash__(self):
        return hash((self.ys, self.xs))

    def __str__(self):
        return "cycle: " + " ".join(map(str, self.sequence()))

    def __repr__(self):
        return f"HamiltonCycle({' '.join(map(str, self.sequence()))})"


def find_hamilton_cycle(D: BipartiteDigraph) -> HamiltonCycle | None:
    """Exact backtracking search; the witness starts at ``y_0``.

    The Hall test on the remaining successor assignment runs every
    ``max(1, a // 2)`` levels of the search.
    """
    ids = _hamilton_ids(D, hall_every=max(1, D.a // 2))
    if ids is None:
        return None
    return HamiltonCycle.from_cycle(_ids_to_cycle(D, ids))


def is_hamiltonian(G) -> bool:
    if isinstance(G, BipartiteDigraph):
        return find_hamilton_cycle(G) is not None
    return _hamilton_ids(G) is not None


def is_directed_full_cycle(D) -> bool:
    """True when ``D`` is exactly one directed cycle through all its vertices."""
    n = len(D.succ_masks)
    return sum(s.bit_count() for s in D.succ_masks) == n and n >= 2 and is_strongly_connected(D)


@dataclass(frozen=True)
class CycleSpectrum:
    """Per-length cycle witnesses; ``missing`` is the first absent length."""

    holds: bool
    witnesses: dict = field(hash=False)
    missing: int | None = None

    def __str__(self):
        lines = [f"length {L}: {w if isinstance(w, Cycle) else 'cycle: ' + ' '.join(map(str, w))}"
                 for L, w in sorted(self.witnesses.items())]
        lines.append("bipancyclic" if self.holds else f"missing: {self.missing}")
        return "\n".join(lines)


def is_bipancyclic(D: BipartiteDigraph) -> CycleSpectrum:
    """Cycles of every even length 2..2a, stopping at the first missing one."""
    witnesses = {}
    for L in range(2, 2 * D.a + 1, 2):
        c = find_cycle_of_length(D, L)
        if c is None:
            return CycleSpectrum(False, witnesses, L)
        witnesses[L] = c
    return CycleSpectrum(True, witnesses, None)


def cycle_spectrum(G, lengths) -> CycleSpectrum:
    witnesses = {}
    for L in lengths:
        c = find_cycle_of_length(G, L)
        if c is None:
            return CycleSpectrum(False, witnesses, L)
        witnesses[L] = c
    return CycleSpectrum(True, witnesses, None)


# ---------------------------------------------------------------------------
# rerouting, contraction, lifting


def reroute_hamilton(D: BipartiteDigraph, C: HamiltonCycle, l: int, m: int) -> HamiltonCycle:
    """Splice ``C`` into ``[y_0, x_l, ..., y_m, x_0, ..., y_l, x_m, ..., x_{a-1}]``.

    Positions are 0-based (``1 <= l < m <= a-1``).  The three pieces of ``C``
    are rejoined by the arcs ``y_0 -> x_l``, ``y_m -> x_0`` and
    ``y_l -> x_m``, all of which must be present in ``D``.
    """
    a = C.a
    if not (isinstance(l, int) and isinstance(m, int) and 1 <= l < m <= a - 1):
        raise InputError(f"need 1 <= l < m <= a-1, got l={l}, m={m}, a={a}")
    C.validate(D)
    ys, xs = C.ys, C.xs
    for yi, xi in ((0, l), (l, m), (m, 0)):
        if not D.has_arc(vy(ys[yi]), vx(xs[xi])):
            raise RerouteInapplicable(f"missing arc {vy(ys[yi])}->{vx(xs[xi])}")
    seq = [vy(ys[0])]
    seq += _piece(C, l, "x", m, "y")      # x_l ... y_m
    seq += _piece(C, 0, "x", l, "y")      # x_0 ... y_l
    seq += _piece(C, m, "x", a - 1, "x")  # x_m ... x_{a-1}
    out = HamiltonCycle.from_sequence(seq)
    if not out.is_valid_in(D):
        raise ConsistencyError(f"rerouted cycle {out} is not a Hamilton cycle of the digraph")
    return out


def _piece(C, p, p_side, q, q_side):
    """Vertices of C from position ``p`` (side ``p_side``) to ``q`` inclusive."""
    seq = C.sequence()
    start = 2 * p + (1 if p_side == "x" else 0)
    stop = 2 * q + (1 if q_side == "x" else 0)
    return seq[start:stop + 1]


def contraction(D: BipartiteDigraph, C: HamiltonCycle) -> GeneralDigraph:
    """Order-a digraph with ``v_p -> v_q`` (p != q) whenever ``x -> y`` in D for
    the X vertex at position p and the Y vertex at position q of ``C``."""
    if not C.is_valid_in(D):
        raise InputError("the labelled cycle is not a Hamilton cycle of the digraph")
    a = C.a
    pos_of_y = {yi: q for q, yi in enumerate(C.ys)}
    succ = [0] * a
    for p, xi in enumerate(C.xs):
        for yj in bits(D.xy_rows[xi]):
            q = pos_of_y[yj]
            if q != p:
                succ[p] |= 1 << q
    return GeneralDigraph(a, succ)


def lift_cycle(D: BipartiteDigraph, C: HamiltonCycle, g_cycle) -> Cycle:
    """``[v_{i1}, ..., v_{il}]`` in G becomes ``[y_{i1}, x_{i1}, ..., y_{il}, x_{il}]``."""
    seq = []
    for p in g_cycle:
        seq += [vy(C.ys[p]), vx(C.xs[p])]
    cyc = Cycle(seq)
    if not cyc.is_valid_in(D):
        raise ConsistencyError(f"lifted cycle {cyc!r} is not a cycle of the digraph")
    return cyc


# ---------------------------------------------------------------------------
# Thomassen classification


@dataclass(frozen=True)
class ThomassenClass:
    """``tag`` is one of ``pancyclic``, ``tournament``, ``complete-bipartite``,
    ``hypothesis-failed`` or ``outside`` (hypotheses hold, no alternative does).

    ``flags`` lists every alternative that applies; ``two_cycle_sensitive``
    marks digraphs whose pancyclicity depends on whether 2-cycles count.
    """

    tag: str
    reason: str | None = None
    flags: frozenset = frozenset()
    two_cycle_sensitive: bool = False


def is_tournament(G) -> bool:
    succ = G.succ_masks
    n = len(succ)
    for u in range(n):
        for v in range(u + 1, n):
            if (succ[u] >> v & 1) == (succ[v] >> u & 1):
                return False
    return True


def complete_bipartite_sides(G):
    """The bipartition witnessing ``G`` isomorphic to K*_{n/2,n/2}, or None."""
    succ, pred = G.succ_masks, G.pred_masks
    n = len(succ)
    if n % 2:
        return None
    full = (1 << n) - 1
    # in K*_{n/2,n/2} the side of vertex 0 is itself plus its non-neighbours
    side = full & ~(succ[0] | pred[0])
    if side.bit_count() != n // 2:
        return None
    other = full & ~side
    for u in range(n):
        want = other if side >> u & 1 else side
        if succ[u] != want or pred[u] != want:
            return None
    return side, other


def thomassen_classify(G) -> ThomassenClass:
    n = len(G.succ_masks)
    if n < 3:
        return ThomassenClass("hypothesis-failed", "order below 3")
    if not is_strongly_connected(G):
        return ThomassenClass("hypothesis-failed", "not strongly connected")
    verdict = check_condition(G, THOMASSEN_2N)
    if not verdict.holds:
        return ThomassenClass("hypothesis-failed", f"degree sum below 2n on {verdict.witness}")
    from_three = cycle_spectrum(G, range(3, n + 1)).holds
    pancyclic = from_three and find_cycle_of_length(G, 2) is not None
    flags = set()
    if pancyclic:
        flags.add("pancyclic")
    if is_tournament(G):
        flags.add("tournament")
    if complete_bipartite_sides(G) is not None:
        flags.add("complete-bipartite")
    sensitive = pancyclic != from_three
    for tag in ("pancyclic", "tournament", "complete-bipartite"):
        if tag in flags:
            return ThomassenClass(tag, None, frozenset(flags), sensitive)
    return ThomassenClass("outside", "no alternative of the trichotomy applies", frozenset(), sensitive)
