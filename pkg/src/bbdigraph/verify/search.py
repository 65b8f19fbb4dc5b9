"""Counterexample search for two open hamiltonicity questions.

``open-d0``
    strongly connected digraphs satisfying ``dk(0)`` that are not hamiltonian.
``open-bk``
    strongly connected digraphs satisfying ``bk(k)`` for some
    ``max(1, lam*a) < k <= a/2`` with ``lam < 1/4`` that are not hamiltonian.

A search report is an evidence log.  Every candidate is re-checked by the
oracle before it is emitted, and an exhaustive run without candidates claims
only that none exist at the scanned order.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction

from ..conditions import ConditionKind, bk, dk, pair_slack, valid_k_range
from ..core import BipartiteDigraph, to_compact
from ..cycles import is_hamiltonian, is_strongly_connected
from ..errors import ConsistencyError, InputError, RefusedError
from . import oracle
from .generate import DEFAULT_MAX_INSTANCES, biased_highdegree_digraph, count_digraphs, instance_seed
from .harness import P_GRID, _partition, run_ranges

TARGETS = ("open-d0", "open-bk")
NEAR_MISS_LIMIT = 10


@dataclass(frozen=True)
class SearchTarget:
    tag: str
    a: int
    lam: Fraction | None = None
    mode: str = "exhaustive"
    samples: int | None = None
    seed: int | None = None

    def __post_init__(self):
        if self.tag not in TARGETS:
            raise InputError(f"unknown search target {self.tag!r}; expected one of {TARGETS}")
        if self.a < 2:
            raise RefusedError("search needs a >= 2")
        if self.mode not in ("exhaustive", "sampled"):
            raise InputError(f"unknown mode {self.mode!r}")
        if self.mode == "sampled" and (self.samples is None or self.samples < 1 or self.seed is None):
            raise RefusedError("sampled mode needs samples >= 1 and an explicit seed")
        if self.tag == "open-bk":
            if self.lam is None:
                raise RefusedError("open-bk needs --lambda")
            lam = Fraction(self.lam)
            if lam >= Fraction(1, 4):
                raise RefusedError(f"lambda = {lam} is not below 1/4; that range is already settled")
            if lam <= 0:
                raise RefusedError("lambda must be positive")
            object.__setattr__(self, "lam", lam)
        elif self.lam is not None:
            raise RefusedError("open-d0 takes no lambda")

    @property
    def ks(self) -> list[int]:
        return valid_k_range(self.a, self.lam) if self.tag == "open-bk" else [0]

    def condition(self, k: int) -> ConditionKind:
        return bk(k) if self.tag == "open-bk" else dk(0)


@dataclass
class SearchTally:
    scanned: int = 0
    strongly_connected: int = 0
    non_hamiltonian: int = 0
    candidates: list = field(default_factory=list)   # (index, k, compact)
    near_misses: list = field(default_factory=list)  # (deficit, index, k, compact)

    def merge(self, other: SearchTally) -> None:
        self.scanned += other.scanned
        self.strongly_connected += other.strongly_connected
        self.non_hamiltonian += other.non_hamiltonian
        self.candidates.extend(other.candidates)
        self.near_misses = sorted(self.near_misses + other.near_misses)[:NEAR_MISS_LIMIT]


def _sample(target: SearchTarget, index: int):
    """Instance ``index`` of a sampled run and the k values it is tested against."""
    a = target.a
    rng = random.Random(instance_seed(target.seed, index))
    p = rng.choice(P_GRID)
    sub_seed = rng.getrandbits(64)
    if target.tag == "open-bk":
        ks = target.ks
        k = ks[index % len(ks)]
        floor = rng.randint(a + k - 1, 2 * a - k)
        return biased_highdegree_digraph(a, floor, sub_seed, p), [k]
    floor = rng.randint(a - 1, 2 * a - 1)
    return biased_highdegree_digraph(a, floor, sub_seed, p), [0]


def _instance(target: SearchTarget, index: int):
    if target.mode == "exhaustive":
        return BipartiteDigraph.from_index(target.a, index), target.ks
    return _sample(target, index)


def _scan(args) -> SearchTally:
    target, start, stop = args
    tally = SearchTally()
    for index in range(start, stop):
        D, ks = _instance(target, index)
        tally.scanned += 1
        if not is_strongly_connected(D):
            continue
        tally.strongly_connected += 1
        if is_hamiltonian(D):
            continue
        tally.non_hamiltonian += 1
        for k in ks:
            slack = pair_slack(D, target.condition(k))
            if slack is None or slack >= 0:
                tally.candidates.append((index, k, to_compact(D)))
            else:
                tally.near_misses.append((-slack, index, k, to_compact(D)))
        if len(tally.near_misses) > 4 * NEAR_MISS_LIMIT:
            tally.near_misses = sorted(tally.near_misses)[:NEAR_MISS_LIMIT]
    tally.near_misses = sorted(tally.near_misses)[:NEAR_MISS_LIMIT]
    return tally


def revalidate_candidate(target: SearchTarget, D: BipartiteDigraph, k: int) -> None:
    """Oracle re-check: pair-family brute force, Warshall closure, unpruned Hamilton search."""
    cond = target.condition(k)
    problems = []
    if not oracle.condition_holds(D, cond.name, cond.k):
        problems.append(f"{cond} fails")
    if not oracle.strongly_connected(D):
        problems.append("not strongly connected")
    if oracle.hamiltonian(D):
        problems.append("hamiltonian")
    if problems:
        raise ConsistencyError(f"candidate {to_compact(D)} did not re-validate: {', '.join(problems)}")


@dataclass
class SearchReport:
    target: SearchTarget
    tally: SearchTally

    @property
    def candidates(self) -> list[str]:
        return [c for _, _, c in self.tally.candidates]

    @property
    def statement(self) -> str:
        if not self.target.ks:
            return f"no k satisfies the lambda range at a={self.target.a}; nothing to search"
        if self.tally.candidates:
            return f"{len(self.tally.candidates)} candidates found and re-validated"
        if self.target.mode == "exhaustive":
            return f"none at this a (a={self.target.a}, every digraph scanned)"
        return "none among the samples drawn; this is not evidence of absence"

    def fields(self) -> dict:
        t = self.target
        return {
            "target": t.tag,
            "a": t.a,
            "lambda": None if t.lam is None else str(t.lam),
            "k_values": ",".join(map(str, t.ks)) if t.tag == "open-bk" else None,
            "mode": t.mode,
            "seed": t.seed,
            "samples": t.samples,
            "scanned": self.tally.scanned,
            "strongly_connected": self.tally.strongly_connected,
            "non_hamiltonian": self.tally.non_hamiltonian,
            "candidate_count": len(self.tally.candidates),
            "statement": self.statement,
            "candidates": [f"{i} k={k} {c}" for i, k, c in self.tally.candidates],
            "near_misses": [f"deficit={d} {i} k={k} {c}" for d, i, k, c in self.tally.near_misses],
        }

    def to_text(self) -> str:
        lines = []
        for key, value in self.fields().items():
            if isinstance(value, list):
                label = {"candidates": "candidate", "near_misses": "near_miss"}[key]
                lines += [f"{label}: {v}" for v in value]
            else:
                lines.append(f"{key}: {'-' if value is None else value}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(self.fields(), indent=2) + "\n"


def open_problem_search(target: SearchTarget, jobs: int = 1,
                        max_instances: int = DEFAULT_MAX_INSTANCES) -> SearchReport:
    if target.mode == "exhaustive":
        total = count_digraphs(target.a)
        if total > max_instances:
            raise RefusedError(
                f"exhaustive search at a={target.a} needs {total} instances; budget is {max_instances}"
            )
    else:
        total = target.samples
    tally = SearchTally()
    if target.ks:
        ranges = _partition(total, jobs * 4 if jobs > 1 else 1)
        for part in run_ranges(_scan, [(target, s, e) for s, e in ranges], jobs):
            tally.merge(part)
    for index, k, _ in tally.candidates:
        D, _ = _instance(target, index)
        revalidate_candidate(target, D, k)
    return SearchReport(target, tally)
