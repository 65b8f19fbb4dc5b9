"""Digraph generators: exhaustive enumeration, boundary objects, seeded sampling.

Every random generator is a pure function of its arguments.  Per-instance
seeds in the harness come from :func:`instance_seed`, so a sample stream is
the same no matter how it is split across workers.
"""

from __future__ import annotations

import hashlib
import random
from typing import Iterator

from ..core import BipartiteDigraph
from ..cycles import GeneralDigraph
from ..errors import InputError, RefusedError

DEFAULT_MAX_INSTANCES = 1 << 20


def instance_seed(seed: int, index: int) -> int:
    digest = hashlib.blake2b(f"{seed}:{index}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def directed_cycle(a: int) -> BipartiteDigraph:
    """The cycle ``[y_0, x_0, y_1, x_1, ..., y_{a-1}, x_{a-1}]``."""
    xy = [1 << ((i + 1) % a) for i in range(a)]
    yx = [1 << i for i in range(a)]
    return BipartiteDigraph(a, xy, yx)


def complete(a: int) -> BipartiteDigraph:
    """K*_{a,a}: every arc between the two sides, both directions."""
    full = (1 << a) - 1
    return BipartiteDigraph(a, [full] * a, [full] * a)


def empty(a: int) -> BipartiteDigraph:
    return BipartiteDigraph(a, [0] * a, [0] * a)


def _random_rows(a, p, rng):
    rows = []
    for _ in range(2 * a):
        row = 0
        for j in range(a):
            if rng.random() < p:
                row |= 1 << j
        rows.append(row)
    return rows[:a], rows[a:]


def random_digraph(a: int, arc_probability: float, seed: int) -> BipartiteDigraph:
    """Each of the ``2a^2`` possible arcs independently with the given probability.

    Arcs are drawn in the order ``xy`` rows then ``yx`` rows, row-major.
    """
    if not 0 <= arc_probability <= 1:
        raise InputError("arc probability must lie in [0, 1]")
    xy, yx = _random_rows(a, arc_probability, random.Random(seed))
    return BipartiteDigraph(a, xy, yx)


def biased_highdegree_digraph(
    a: int, degree_floor: int, seed: int, arc_probability: float = 0.5
) -> BipartiteDigraph:
    """A random digraph topped up so every vertex has total degree >= floor.

    Starts from :func:`random_digraph` with the same seed, then visits the
    vertices in id order and adds uniformly chosen missing incident arcs to
    any vertex still below the floor.  Adding arcs never lowers a degree, so
    one pass suffices.
    """
    if not 0 <= degree_floor <= 2 * a:
        raise InputError(f"degree floor must lie in [0, 2a] = [0, {2 * a}]")
    if not 0 <= arc_probability <= 1:
        raise InputError("arc probability must lie in [0, 1]")
    rng = random.Random(seed)
    xy, yx = _random_rows(a, arc_probability, rng)
    for side in ("x", "y"):
        out_rows, in_rows = (xy, yx) if side == "x" else (yx, xy)
        for i in range(a):
            out_row = out_rows[i]
            in_col = sum(1 << r for r in range(a) if in_rows[r] >> i & 1)
            deficit = degree_floor - out_row.bit_count() - in_col.bit_count()
            if deficit <= 0:
                continue
            # candidate arcs: ("out", j) is i -> j, ("in", j) is j -> i
            missing = [("out", j) for j in range(a) if not out_row >> j & 1]
            missing += [("in", j) for j in range(a) if not in_col >> j & 1]
            for kind, j in rng.sample(missing, deficit):
                if kind == "out":
                    out_rows[i] |= 1 << j
                else:
                    in_rows[j] |= 1 << i
    return BipartiteDigraph(a, xy, yx)


def random_general_digraph(n: int, arc_probability: float, seed: int) -> GeneralDigraph:
    rng = random.Random(seed)
    succ = [0] * n
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < arc_probability:
                succ[u] |= 1 << v
    return GeneralDigraph(n, succ)


def count_digraphs(a: int) -> int:
    return 1 << (2 * a * a)


def count_general_digraphs(n: int) -> int:
    return 1 << (n * (n - 1))


def _check_budget(count, max_instances, what):
    if count > max_instances:
        raise RefusedError(
            f"exhaustive enumeration of {what} needs {count} instances; "
            f"the budget is {max_instances}"
        )


def enumerate_digraphs(a: int, max_instances: int = DEFAULT_MAX_INSTANCES,
                       start: int = 0, stop: int | None = None) -> Iterator[BipartiteDigraph]:
    """All ``2^(2a^2)`` digraphs in index order (see ``BipartiteDigraph.from_index``)."""
    total = count_digraphs(a)
    _check_budget(total, max_instances, f"a={a}")
    stop = total if stop is None else min(stop, total)
    for idx in range(start, stop):
        yield BipartiteDigraph.from_index(a, idx)


def enumerate_general_digraphs(n: int, max_instances: int = DEFAULT_MAX_INSTANCES,
                               start: int = 0, stop: int | None = None) -> Iterator[GeneralDigraph]:
    total = count_general_digraphs(n)
    _check_budget(total, max_instances, f"n={n}")
    stop = total if stop is None else min(stop, total)
    for idx in range(start, stop):
        yield GeneralDigraph.from_index(n, idx)
