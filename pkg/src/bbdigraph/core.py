"""Balanced bipartite digraphs.

A digraph of order ``2a`` has partite sets ``X = {x_0..x_{a-1}}`` and
``Y = {y_0..y_{a-1}}``; every arc goes from one side to the other.  Arcs are
stored as two dense bit matrices: row ``i`` of ``xy`` is the bitmask of ``j``
with ``x_i -> y_j``, and row ``i`` of ``yx`` the bitmask of ``j`` with
``y_i -> x_j``.

Internally vertices also have an integer id: ``x_i`` is ``i`` and ``y_j`` is
``a + j``.  The search code in :mod:`bbdigraph.cycles` works on ids.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from ._bits import bits
from .errors import InputError, ParseError

MAX_ORDER_PARAM = 64


class Vertex(NamedTuple):
    side: str
    index: int

    def __str__(self):
        return f"{self.side}{self.index}"

    @classmethod
    def parse(cls, token: str) -> Vertex:
        m = re.fullmatch(r"([xy])(\d+)", token.strip())
        if not m:
            raise InputError(f"bad vertex token {token!r}")
        return cls(m.group(1), int(m.group(2)))


def vx(i: int) -> Vertex:
    return Vertex("x", i)


def vy(j: int) -> Vertex:
    return Vertex("y", j)


@dataclass(frozen=True, order=True)
class Arc:
    tail: Vertex
    head: Vertex

    def __post_init__(self):
        if self.tail.side == self.head.side:
            raise InputError(f"intra-side arc {self.tail}->{self.head}")

    def __str__(self):
        return f"{self.tail}->{self.head}"


def _transpose(rows, a):
    cols = [0] * a
    for i, row in enumerate(rows):
        for j in bits(row):
            cols[j] |= 1 << i
    return tuple(cols)


class Degrees(NamedTuple):
    """Degrees of a vertex restricted to a vertex set E and to its complement."""

    out_e: int
    in_e: int
    total_e: int
    out_ec: int
    in_ec: int
    total_ec: int


class BipartiteDigraph:
    """Immutable balanced bipartite digraph of order ``2a``."""

    __slots__ = ("_a", "_xy", "_yx", "_xy_in", "_yx_in", "_succ", "_pred", "_hash")

    def __init__(self, a: int, xy: Iterable[int], yx: Iterable[int]):
        if not isinstance(a, int) or not 1 <= a <= MAX_ORDER_PARAM:
            raise InputError(f"a must be an integer in [1, {MAX_ORDER_PARAM}], got {a!r}")
        xy = tuple(xy)
        yx = tuple(yx)
        full = (1 << a) - 1
        if len(xy) != a or len(yx) != a:
            raise InputError("adjacency must have exactly a rows per direction")
        for row in xy + yx:
            if row < 0 or row & ~full:
                raise InputError("adjacency row references an index >= a")
        self._init(a, xy, yx)

    def _init(self, a, xy, yx):
        set_ = object.__setattr__
        set_(self, "_a", a)
        set_(self, "_xy", xy)
        set_(self, "_yx", yx)
        set_(self, "_xy_in", _transpose(xy, a))
        set_(self, "_yx_in", _transpose(yx, a))
        set_(self, "_succ", tuple(r << a for r in xy) + yx)
        set_(self, "_pred", tuple(c << a for c in self._yx_in) + self._xy_in)
        set_(self, "_hash", hash((a, xy, yx)))

    def __setattr__(self, name, value):
        raise AttributeError("BipartiteDigraph is immutable")

    # -- construction ---------------------------------------------------

    @classmethod
    def from_arcs(cls, a: int, arcs: Iterable) -> BipartiteDigraph:
        """Build from arcs given as :class:`Arc` or ``(tail, head)`` vertex pairs."""
        xy = [0] * a
        yx = [0] * a
        for arc in arcs:
            tail, head = (arc.tail, arc.head) if isinstance(arc, Arc) else arc
            tail, head = Vertex(*tail), Vertex(*head)
            if tail.side == head.side:
                raise InputError(f"intra-side arc {tail}->{head}")
            for v in (tail, head):
                if not 0 <= v.index < a:
                    raise InputError(f"vertex {v} out of range for a={a}")
            if tail.side == "x":
                xy[tail.index] |= 1 << head.index
            else:
                yx[tail.index] |= 1 << head.index
        return cls(a, xy, yx)

    @classmethod
    def from_matrices(cls, xy, yx) -> BipartiteDigraph:
        """Build from two a-by-a 0/1 (or bool) nested sequences."""
        a = len(xy)
        rows = []
        for mat in (xy, yx):
            if len(mat) != a or any(len(r) != a for r in mat):
                raise InputError("matrices must both be a-by-a")
            rows.append([sum(1 << j for j, e in enumerate(r) if e) for r in mat])
        return cls(a, rows[0], rows[1])

    @classmethod
    def from_index(cls, a: int, index: int) -> BipartiteDigraph:
        """Decode the enumeration index: bit ``i*a+j`` is ``x_i -> y_j`` and
        bit ``a*a + i*a + j`` is ``y_i -> x_j``."""
        n = a * a
        if not 0 <= index < 1 << (2 * n):
            raise InputError(f"index {index} out of range for a={a}")
        full = (1 << a) - 1
        xy = [(index >> (i * a)) & full for i in range(a)]
        yx = [(index >> (n + i * a)) & full for i in range(a)]
        return cls(a, xy, yx)

    # -- basic accessors --------------------------------------------------

    @property
    def a(self) -> int:
        return self._a

    @property
    def order(self) -> int:
        return 2 * self._a

    @property
    def xy_rows(self) -> tuple:
        return self._xy

    @property
    def yx_rows(self) -> tuple:
        return self._yx

    @property
    def succ_masks(self) -> tuple:
        """Out-neighbour bitmask of every vertex id, over vertex ids."""
        return self._succ

    @property
    def pred_masks(self) -> tuple:
        return self._pred

    @property
    def index(self) -> int:
        a = self._a
        n = a * a
        out = 0
        for i in range(a):
            out |= self._xy[i] << (i * a)
            out |= self._yx[i] << (n + i * a)
        return out

    def vid(self, v: Vertex) -> int:
        self.check_vertex(v)
        return v.index if v.side == "x" else self._a + v.index

    def vertex(self, vid: int) -> Vertex:
        a = self._a
        return Vertex("x", vid) if vid < a else Vertex("y", vid - a)

    def vertices(self):
        return [vx(i) for i in range(self._a)] + [vy(j) for j in range(self._a)]

    def check_vertex(self, v) -> None:
        if not isinstance(v, tuple) or len(v) != 2 or v[0] not in ("x", "y"):
            raise InputError(f"not a vertex: {v!r}")
        if not isinstance(v[1], int) or not 0 <= v[1] < self._a:
            raise InputError(f"vertex {v[0]}{v[1]} out of range for a={self._a}")

    def has_arc(self, u: Vertex, v: Vertex) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        if u.side == v.side:
            return False
        rows = self._xy if u.side == "x" else self._yx
        return bool(rows[u.index] >> v.index & 1)

    def arcs(self) -> list[Arc]:
        out = []
        for i in range(self._a):
            out.extend(Arc(vx(i), vy(j)) for j in bits(self._xy[i]))
        for i in range(self._a):
            out.extend(Arc(vy(i), vx(j)) for j in bits(self._yx[i]))
        return out

    @property
    def arc_count(self) -> int:
        return sum(r.bit_count() for r in self._xy) + sum(r.bit_count() for r in self._yx)

    # -- degrees and neighbourhoods ----------------------------------------

    def out_degree(self, v: Vertex) -> int:
        return self._succ[self.vid(v)].bit_count()

    def in_degree(self, v: Vertex) -> int:
        return self._pred[self.vid(v)].bit_count()

    def degree(self, v: Vertex) -> int:
        i = self.vid(v)
        return self._succ[i].bit_count() + self._pred[i].bit_count()

    def degrees(self) -> list[int]:
        """Total degree of every vertex, indexed by vertex id."""
        return [s.bit_count() + p.bit_count() for s, p in zip(self._succ, self._pred)]

    def _set_mask(self, S) -> int:
        mask = 0
        for v in S:
            mask |= 1 << self.vid(Vertex(*v))
        return mask

    def _vertex_set(self, mask) -> frozenset:
        return frozenset(self.vertex(i) for i in bits(mask))

    def restricted_degrees(self, v: Vertex, E) -> Degrees:
        i = self.vid(v)
        e = self._set_mask(E)
        ec = ((1 << (2 * self._a)) - 1) & ~e
        s, p = self._succ[i], self._pred[i]
        oe, ie = (s & e).bit_count(), (p & e).bit_count()
        oc, ic = (s & ec).bit_count(), (p & ec).bit_count()
        return Degrees(oe, ie, oe + ie, oc, ic, oc + ic)

    def neighborhood(self, S, direction: str = "out") -> frozenset:
        """``N+(S)`` for ``direction='out'``, ``N-(S)`` for ``'in'``."""
        if direction not in ("out", "in"):
            raise InputError("direction must be 'out' or 'in'")
        masks = self._succ if direction == "out" else self._pred
        acc = 0
        for i in bits(self._set_mask(S)):
            acc |= masks[i]
        return self._vertex_set(acc)

    def arcs_between(self, S, T) -> int:
        """``|A[S,T]| + |A[T,S]|``."""
        s_mask = self._set_mask(S)
        t_mask = self._set_mask(T)
        total = 0
        for i in bits(s_mask):
            total += (self._succ[i] & t_mask).bit_count()
        for i in bits(t_mask):
            total += (self._succ[i] & s_mask).bit_count()
        return total

    def reverse(self) -> BipartiteDigraph:
        """Same vertices, every arc turned around."""
        return BipartiteDigraph(self._a, self._yx_in, self._xy_in)

    # -- dunder -------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, BipartiteDigraph):
            return NotImplemented
        return self._a == other._a and self._xy == other._xy and self._yx == other._yx

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"BipartiteDigraph({to_compact(self)!r})"

    def __reduce__(self):
        return (BipartiteDigraph, (self._a, self._xy, self._yx))


# ---------------------------------------------------------------------------
# Cycles and cycle factors


class Cycle:
    """A directed cycle ``[v_1, ..., v_m]`` of a bipartite digraph.

    Stored in canonical rotation, starting at its smallest vertex.  Validity
    against a particular digraph is checked by :meth:`validate`.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices: Iterable):
        vs = [Vertex(*v) for v in vertices]
        m = len(vs)
        if m < 2 or m % 2:
            raise InputError(f"cycle length must be even and >= 2, got {m}")
        if len(set(vs)) != m:
            raise InputError("cycle repeats a vertex")
        for k in range(m):
            if vs[k].side == vs[(k + 1) % m].side:
                raise InputError("cycle sides do not alternate")
        start = vs.index(min(vs))
        object.__setattr__(self, "vertices", tuple(vs[start:] + vs[:start]))

    def __setattr__(self, name, value):
        raise AttributeError("Cycle is immutable")

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __eq__(self, other):
        return isinstance(other, Cycle) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __lt__(self, other):
        return (len(self), self.vertices) < (len(other), other.vertices)

    def __repr__(self):
        return f"Cycle([{', '.join(map(str, self.vertices))}])"

    def __str__(self):
        return "cycle: " + " ".join(map(str, self.vertices))

    def __reduce__(self):
        return (Cycle, (self.vertices,))

    def arcs(self) -> list[Arc]:
        vs = self.vertices
        return [Arc(vs[k], vs[(k + 1) % len(vs)]) for k in range(len(vs))]

    def successor(self, v: Vertex) -> Vertex:
        k = self.vertices.index(v)
        return self.vertices[(k + 1) % len(self.vertices)]

    def validate(self, D: BipartiteDigraph) -> None:
        """Raise :class:`InputError` unless every arc of the cycle is in ``D``."""
        for arc in self.arcs():
            if not D.has_arc(arc.tail, arc.head):
                raise InputError(f"arc {arc} of {self!r} is not in the digraph")

    def is_valid_in(self, D: BipartiteDigraph) -> bool:
        try:
            self.validate(D)
        except InputError:
            return False
        return True

    @classmethod
    def parse(cls, line: str) -> Cycle:
        """Parse ``cycle: x0 y1 x3 y2`` (the ``cycle:`` prefix is optional)."""
        text = line.strip()
        if text.startswith("cycle:"):
            text = text[len("cycle:"):]
        return cls(Vertex.parse(tok) for tok in text.split())


class CycleFactor:
    """Vertex-disjoint cycles covering all ``2a`` vertices.

    Cycles are kept sorted by length, ties broken by their smallest vertex,
    so ``factor[0]`` is a shortest cycle.
    """

    __slots__ = ("a", "cycles")

    def __init__(self, cycles: Iterable[Cycle], a: int):
        cs = tuple(sorted(cycles))
        seen = set()
        for c in cs:
            for v in c:
                if v in seen:
                    raise InputError(f"cycle factor visits {v} twice")
                if v.index >= a:
                    raise InputError(f"vertex {v} out of range for a={a}")
                seen.add(v)
        if len(seen) != 2 * a:
            raise InputError("cycle factor does not cover every vertex")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "cycles", cs)

    def __setattr__(self, name, value):
        raise AttributeError("CycleFactor is immutable")

    def __len__(self):
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)

    def __getitem__(self, k):
        return self.cycles[k]

    def __eq__(self, other):
        return isinstance(other, CycleFactor) and self.cycles == other.cycles

    def __hash__(self):
        return hash(self.cycles)

    def __repr__(self):
        return f"CycleFactor({list(self.cycles)!r})"

    def __reduce__(self):
        return (CycleFactor, (self.cycles, self.a))

    def cycle_of(self, v: Vertex) -> int:
        for k, c in enumerate(self.cycles):
            if v in c.vertices:
                return k
        raise InputError(f"{v} not covered")

    def validate(self, D: BipartiteDigraph) -> None:
        if D.a != self.a:
            raise InputError("cycle factor built for a different order")
        for c in self.cycles:
            c.validate(D)

    def to_text(self) -> str:
        return "".join(str(c) + "\n" for c in self.cycles)


# ---------------------------------------------------------------------------
# Text formats


def serialize(D: BipartiteDigraph, fmt: str = "text") -> str:
    if fmt == "compact":
        return to_compact(D) + "\n"
    if fmt != "text":
        raise InputError(f"unknown format {fmt!r}")
    lines = []
    for i in range(D.a):
        lines.extend(f"xy {i} {j}" for j in bits(D.xy_rows[i]))
        lines.extend(f"yx {i} {j}" for j in bits(D.yx_rows[i]))
    lines.sort()
    return "\n".join(["bbd 1", f"a {D.a}", *lines, "end"]) + "\n"


def to_compact(D: BipartiteDigraph) -> str:
    a = D.a

    def dump(rows):
        return "".join("1" if rows[i] >> j & 1 else "0" for i in range(a) for j in range(a))

    return f"a={a};xy={dump(D.xy_rows)};yx={dump(D.yx_rows)}"


_COMPACT = re.compile(r"a=(\d+);xy=([01]*);yx=([01]*)")


def from_compact(text: str) -> BipartiteDigraph:
    m = _COMPACT.fullmatch(text.strip())
    if not m:
        raise ParseError("malformed compact digraph", 1)
    a = int(m.group(1))
    if not 1 <= a <= MAX_ORDER_PARAM:
        raise ParseError(f"a={a} out of range", 1)
    rows = []
    for s in (m.group(2), m.group(3)):
        if len(s) != a * a:
            raise ParseError(f"expected {a * a} bits, got {len(s)}", 1)
        rows.append([sum(1 << j for j in range(a) if s[i * a + j] == "1") for i in range(a)])
    return BipartiteDigraph(a, rows[0], rows[1])


def parse(text: str) -> BipartiteDigraph:
    """Parse either the canonical multi-line format or the compact one-liner."""
    stripped = text.strip()
    if stripped.startswith("a="):
        return from_compact(stripped)
    lines = text.split("\n")
    # drop trailing blank lines only; blank lines elsewhere are errors
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines or lines[0].strip() != "bbd 1":
        raise ParseError("expected header 'bbd 1'", 1)
    if len(lines) < 2:
        raise ParseError("missing 'a <n>' line", 2)
    m = re.fullmatch(r"a (\d+)", lines[1].strip())
    if not m:
        raise ParseError("expected 'a <n>'", 2)
    a = int(m.group(1))
    if not 1 <= a <= MAX_ORDER_PARAM:
        raise ParseError(f"a={a} out of range", 2)
    xy = [0] * a
    yx = [0] * a
    ended = False
    for lineno, raw in enumerate(lines[2:], start=3):
        line = raw.strip()
        if ended:
            raise ParseError("content after 'end'", lineno)
        if line == "end":
            ended = True
            continue
        parts = line.split()
        if len(parts) != 3 or not parts[1].isdigit() or not parts[2].isdigit():
            raise ParseError(f"malformed arc line {line!r}", lineno)
        tag, i, j = parts[0], int(parts[1]), int(parts[2])
        if tag in ("xx", "yy"):
            raise ParseError(f"intra-side arc {line!r}", lineno)
        if tag not in ("xy", "yx"):
            raise ParseError(f"unknown arc tag {tag!r}", lineno)
        if i >= a or j >= a:
            raise ParseError(f"index out of range for a={a}: {line!r}", lineno)
        rows = xy if tag == "xy" else yx
        if rows[i] >> j & 1:
            raise ParseError(f"duplicate arc {line!r}", lineno)
        rows[i] |= 1 << j
    if not ended:
        raise ParseError("missing 'end'", len(lines))
    return BipartiteDigraph(a, xy, yx)
