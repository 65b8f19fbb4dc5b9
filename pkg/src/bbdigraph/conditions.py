"""Dominating/dominated/non-adjacent pairs and the degree conditions on them.

Conditions are named by the strings used on the command line:

==================  =====================================================
``aay-3a``          d(u)+d(v) >= 3a over non-adjacent pairs
``domdom-3a``       d(u)+d(v) >= 3a over dominating or dominated pairs
``dk``              d(u)+d(v) >= 3a+k over dominating pairs
``bk``              {d(u),d(v)} >= {2a-k, a+k} (either order) over dominating pairs
``dominated-dk``    ``dk`` over dominated pairs
``dominated-bk``    ``bk`` over dominated pairs
``thomassen-2n``    d(u)+d(v) >= 2n over non-adjacent pairs of a general digraph
==================  =====================================================

A condition quantified over an empty pair family holds vacuously; the
verdict says so.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .core import BipartiteDigraph, Vertex
from .errors import InputError

CONDITION_NAMES = ("aay-3a", "domdom-3a", "dk", "bk", "dominated-dk", "dominated-bk", "thomassen-2n")
_NEEDS_K = {"dk", "bk", "dominated-dk", "dominated-bk"}


class Pair(NamedTuple):
    """Unordered vertex pair, stored with ``u < v``."""

    u: object
    v: object

    @classmethod
    def of(cls, u, v) -> Pair:
        if u == v:
            raise InputError("a pair needs two distinct vertices")
        return cls(u, v) if u < v else cls(v, u)

    def __str__(self):
        return f"{{{self.u}, {self.v}}}"


@dataclass(frozen=True)
class ConditionKind:
    name: str
    k: int | None = None

    def __post_init__(self):
        if self.name not in CONDITION_NAMES:
            raise InputError(f"unknown condition {self.name!r}; expected one of {', '.join(CONDITION_NAMES)}")
        if self.name in _NEEDS_K:
            if not isinstance(self.k, int) or self.k < 0:
                raise InputError(f"condition {self.name} needs an integer k >= 0")
        elif self.k is not None:
            raise InputError(f"condition {self.name} takes no k")

    def __str__(self):
        return self.name if self.k is None else f"{self.name}(k={self.k})"


AAY_3A = ConditionKind("aay-3a")
DOMDOM_3A = ConditionKind("domdom-3a")
THOMASSEN_2N = ConditionKind("thomassen-2n")


def dk(k: int) -> ConditionKind:
    return ConditionKind("dk", k)


def bk(k: int) -> ConditionKind:
    return ConditionKind("bk", k)


def dominated_dk(k: int) -> ConditionKind:
    return ConditionKind("dominated-dk", k)


def dominated_bk(k: int) -> ConditionKind:
    return ConditionKind("dominated-bk", k)


@dataclass(frozen=True)
class ConditionVerdict:
    kind: ConditionKind
    holds: bool
    witness: Pair | None = None
    vacuous: bool = False
    witness_degrees: tuple | None = None
    outside_theorem_range: bool = False

    def __str__(self):
        if self.holds:
            text = "holds (vacuous)" if self.vacuous else "holds"
        else:
            du, dv = self.witness_degrees
            text = f"fails: {self.witness.u} {self.witness.v} degrees {du} {dv}"
        if self.outside_theorem_range:
            text += " [outside theorem range]"
        return text


def parse_verdict_line(line: str) -> dict:
    """Inverse of ``str(verdict)``, for round-tripping CLI output."""
    text = line.strip()
    out = {"outside_theorem_range": text.endswith("[outside theorem range]")}
    text = text.replace("[outside theorem range]", "").strip()
    if text.startswith("holds"):
        out.update(holds=True, vacuous=text == "holds (vacuous)", witness=None)
        return out
    parts = text.split()
    if len(parts) != 6 or parts[0] != "fails:" or parts[3] != "degrees":
        raise InputError(f"not a verdict line: {line!r}")
    out.update(
        holds=False,
        vacuous=False,
        witness=Pair.of(Vertex.parse(parts[1]), Vertex.parse(parts[2])),
        witness_degrees=(int(parts[4]), int(parts[5])),
    )
    return out


# ---------------------------------------------------------------------------
# pair families (over vertex ids, fast path)


def _same_side_pairs(rows, offset):
    """Pairs (offset+i, offset+j), i<j, whose rows share a bit."""
    n = len(rows)
    out = []
    for i in range(n):
        ri = rows[i]
        if not ri:
            continue
        for j in range(i + 1, n):
            if ri & rows[j]:
                out.append((offset + i, offset + j))
    return out


def dominating_pair_ids(D: BipartiteDigraph) -> list[tuple[int, int]]:
    # a common out-neighbour of x_i, x_j lies in Y, so pairs are same-side
    return _same_side_pairs(D.xy_rows, 0) + _same_side_pairs(D.yx_rows, D.a)


def dominated_pair_ids(D: BipartiteDigraph) -> list[tuple[int, int]]:
    a = D.a
    pred = D.pred_masks
    return _same_side_pairs(pred[:a], 0) + _same_side_pairs(pred[a:], a)


def non_adjacent_pair_ids(G) -> list[tuple[int, int]]:
    """Works for bipartite and general digraphs alike (anything with masks)."""
    succ = G.succ_masks
    n = len(succ)
    out = []
    for u in range(n):
        su = succ[u]
        for v in range(u + 1, n):
            if not (su >> v & 1 or succ[v] >> u & 1):
                out.append((u, v))
    return out


def _to_pairs(D, ids):
    return [Pair(D.vertex(u), D.vertex(v)) for u, v in ids]


def dominating_pairs(D: BipartiteDigraph) -> list[Pair]:
    """All pairs with a common out-neighbour, sorted."""
    return sorted(_to_pairs(D, dominating_pair_ids(D)))


def dominated_pairs(D: BipartiteDigraph) -> list[Pair]:
    """All pairs with a common in-neighbour, sorted."""
    return sorted(_to_pairs(D, dominated_pair_ids(D)))


def non_adjacent_pairs(D: BipartiteDigraph) -> list[Pair]:
    """All pairs with no arc in either direction (same-side pairs included)."""
    return sorted(_to_pairs(D, non_adjacent_pair_ids(D)))


# ---------------------------------------------------------------------------


def valid_k_range(a: int, lower_fraction: Fraction | str | int = Fraction(1, 4)) -> list[int]:
    """Integers k with ``max(1, lower_fraction * a) < k <= a / 2``, exactly."""
    lam = Fraction(lower_fraction)
    if a < 1:
        raise InputError("a must be >= 1")
    if not 0 < lam <= Fraction(1, 2):
        raise InputError("lower_fraction must lie in (0, 1/2]")
    lo = max(Fraction(1), lam * a)
    return list(range(math.floor(lo) + 1, a // 2 + 1))


def bk_pair_ok(du: int, dv: int, a: int, k: int) -> bool:
    hi, lo = 2 * a - k, a + k
    return (du >= hi and dv >= lo) or (du >= lo and dv >= hi)


def _family_and_test(D, kind: ConditionKind):
    name, k = kind.name, kind.k
    if name == "thomassen-2n":
        n = len(D.succ_masks)
        return non_adjacent_pair_ids(D), lambda du, dv: du + dv >= 2 * n
    if not isinstance(D, BipartiteDigraph):
        raise InputError(f"condition {name} applies to balanced bipartite digraphs only")
    a = D.a
    if name == "aay-3a":
        return non_adjacent_pair_ids(D), lambda du, dv: du + dv >= 3 * a
    if name == "domdom-3a":
        fam = sorted(set(dominating_pair_ids(D)) | set(dominated_pair_ids(D)))
        return fam, lambda du, dv: du + dv >= 3 * a
    fam = dominating_pair_ids(D) if name in ("dk", "bk") else dominated_pair_ids(D)
    if name.endswith("dk"):
        return fam, lambda du, dv: du + dv >= 3 * a + k
    return fam, lambda du, dv: bk_pair_ok(du, dv, a, k)


def _outside_range(D, kind: ConditionKind) -> bool:
    if kind.name in ("dk", "dominated-dk"):
        return kind.k < 1
    if kind.name in ("bk", "dominated-bk"):
        return kind.k not in valid_k_range(D.a)
    return False


def check_condition(D, kind: ConditionKind) -> ConditionVerdict:
    """Evaluate ``kind`` on ``D``; on failure return the first violating pair
    (pairs scanned in vertex-id order)."""
    family, ok = _family_and_test(D, kind)
    succ, pred = D.succ_masks, D.pred_masks
    outside = _outside_range(D, kind)
    for u, v in family:
        du = succ[u].bit_count() + pred[u].bit_count()
        dv = succ[v].bit_count() + pred[v].bit_count()
        if not ok(du, dv):
            return ConditionVerdict(
                kind, False, Pair(D.vertex(u), D.vertex(v)), False, (du, dv), outside
            )
    return ConditionVerdict(kind, True, None, not family, None, outside)


def condition_holds(D, kind: ConditionKind) -> tuple[bool, bool]:
    """``(holds, vacuous)`` without building a verdict; used by the harness."""
    family, ok = _family_and_test(D, kind)
    if not family:
        return True, True
    deg = [s.bit_count() + p.bit_count() for s, p in zip(D.succ_masks, D.pred_masks)]
    return all(ok(deg[u], deg[v]) for u, v in family), False


def pair_slack(D, kind: ConditionKind) -> int | None:
    """How far the worst pair is from the condition's threshold.

    Non-negative when the condition holds; ``None`` for an empty family.  For
    sum conditions this is ``min(d(u)+d(v)) - threshold``; for ``bk`` kinds it
    is minus the smallest total degree shortfall over the two orderings.
    """
    family, _ = _family_and_test(D, kind)
    if not family:
        return None
    deg = D.degrees() if isinstance(D, BipartiteDigraph) else [
        s.bit_count() + p.bit_count() for s, p in zip(D.succ_masks, D.pred_masks)
    ]
    name, k = kind.name, kind.k
    if name.endswith("bk"):
        a = D.a
        hi, lo = 2 * a - k, a + k
        worst = 0
        for u, v in family:
            du, dv = deg[u], deg[v]
            short = min(
                max(0, hi - du) + max(0, lo - dv),
                max(0, lo - du) + max(0, hi - dv),
            )
            worst = max(worst, short)
        return -worst
    if name == "thomassen-2n":
        threshold = 2 * len(deg)
    elif name.endswith("dk"):
        threshold = 3 * D.a + k
    else:
        threshold = 3 * D.a
    return min(deg[u] + deg[v] for u, v in family) - threshold
