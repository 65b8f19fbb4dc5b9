"""Theorem-verification harness.

:func:`verify_theorem` streams digraphs (all of them for small order, or a
seeded biased sample), keeps the ones satisfying a theorem's hypotheses and
checks its conclusion on each.  Index ranges are scanned independently and
merged in range order, so the report does not depend on the worker count.
"""

from __future__ import annotations

import json
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable

from ..conditions import (
    AAY_3A,
    DOMDOM_3A,
    THOMASSEN_2N,
    ConditionKind,
    bk,
    condition_holds,
    dk,
    dominated_bk,
    dominated_dk,
    valid_k_range,
)
from ..core import BipartiteDigraph, to_compact
from ..cycles import (
    GeneralDigraph,
    find_hamilton_cycle,
    is_bipancyclic,
    is_directed_full_cycle,
    is_strongly_connected,
    serialize_general,
    thomassen_classify,
)
from ..errors import ConsistencyError, InputError, RefusedError
from . import oracle
from .audit import LEMMAS, STATUSES, lemma_audit
from .generate import (
    DEFAULT_MAX_INSTANCES,
    biased_highdegree_digraph,
    count_digraphs,
    count_general_digraphs,
    instance_seed,
    random_general_digraph,
)


class TheoremId(str, Enum):
    AAY_1_1 = "aay-1.1"
    A1_1_2 = "a1-1.2"
    A2_1_3 = "a2-1.3"
    WW_1_4 = "ww-1.4"
    BIPART_1_5 = "bipart-1.5"
    HAMIL_1_6 = "hamil-1.6"
    THOMASSEN_4_1 = "thomassen-4.1"
    DOMINATED_5_1 = "dominated-5.1"
    DOMINATED_5_2 = "dominated-5.2"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class TheoremSpec:
    condition: Callable[[int | None], ConditionKind]
    conclusion: str  # "hamiltonian" | "bip-or-cycle" | "trichotomy"
    min_a: int
    needs_k: bool = False
    general: bool = False
    audit: str | None = None
    audit_reversed: bool = False


THEOREMS = {
    TheoremId.AAY_1_1: TheoremSpec(lambda k: AAY_3A, "hamiltonian", 2),
    TheoremId.A1_1_2: TheoremSpec(lambda k: DOMDOM_3A, "hamiltonian", 3),
    TheoremId.A2_1_3: TheoremSpec(lambda k: DOMDOM_3A, "bip-or-cycle", 3),
    TheoremId.WW_1_4: TheoremSpec(bk, "hamiltonian", 3, needs_k=True, audit="bipart"),
    TheoremId.BIPART_1_5: TheoremSpec(bk, "bip-or-cycle", 3, needs_k=True, audit="bipart"),
    TheoremId.HAMIL_1_6: TheoremSpec(lambda k: dk(1), "hamiltonian", 2, audit="hamil"),
    TheoremId.THOMASSEN_4_1: TheoremSpec(lambda k: THOMASSEN_2N, "trichotomy", 3, general=True),
    TheoremId.DOMINATED_5_1: TheoremSpec(
        dominated_bk, "bip-or-cycle", 3, needs_k=True, audit="bipart", audit_reversed=True
    ),
    TheoremId.DOMINATED_5_2: TheoremSpec(
        lambda k: dominated_dk(1), "hamiltonian", 2, audit="hamil", audit_reversed=True
    ),
}

# outcome labels per conclusion type, in report order
OUTCOMES = {
    "hamiltonian": ("hamiltonian", "not-hamiltonian"),
    "bip-or-cycle": ("bipancyclic", "directed-cycle", "neither"),
    "trichotomy": ("pancyclic", "tournament", "complete-bipartite", "outside"),
}
VIOLATING_OUTCOMES = {"not-hamiltonian", "neither", "outside"}

# sampling bias: per instance a degree floor and an arc probability are drawn
P_GRID = (0.3, 0.4, 0.5, 0.6, 0.7, 0.8)


def bias_profile(theorem: TheoremId, a: int, k: int | None) -> dict:
    spec = THEOREMS[theorem]
    if spec.general:
        return {"generator": "random_general_digraph", "p_grid": list(P_GRID[2:]) + [0.9]}
    if spec.needs_k:
        lo, hi = a + k - 1, 2 * a - k
    else:
        lo, hi = a, 2 * a - 1
    return {"generator": "biased_highdegree_digraph", "floor_min": lo, "floor_max": hi, "p_grid": list(P_GRID)}


def sample_instance(theorem: TheoremId, a: int, k: int | None, seed: int, index: int):
    """The ``index``-th sampled instance for a run, fully determined by its arguments."""
    bias = bias_profile(theorem, a, k)
    rng = random.Random(instance_seed(seed, index))
    p = rng.choice(bias["p_grid"])
    sub_seed = rng.getrandbits(64)
    if THEOREMS[theorem].general:
        return random_general_digraph(a, p, sub_seed)
    floor = rng.randint(bias["floor_min"], bias["floor_max"])
    return biased_highdegree_digraph(a, floor, sub_seed, p)


# ---------------------------------------------------------------------------
# per-instance evaluation


@dataclass
class Tally:
    """Mergeable partial counts for one index range."""

    scanned: int = 0
    strongly_connected: int = 0
    hypothesis_satisfied: int = 0
    vacuous_condition: int = 0
    outcomes: Counter = field(default_factory=Counter)
    flags: Counter = field(default_factory=Counter)
    audit: Counter = field(default_factory=Counter)
    violations: list = field(default_factory=list)  # (index, serialized)

    def merge(self, other: Tally) -> None:
        self.scanned += other.scanned
        self.strongly_connected += other.strongly_connected
        self.hypothesis_satisfied += other.hypothesis_satisfied
        self.vacuous_condition += other.vacuous_condition
        self.outcomes.update(other.outcomes)
        self.flags.update(other.flags)
        self.audit.update(other.audit)
        self.violations.extend(other.violations)


def serialize_instance(G) -> str:
    if isinstance(G, BipartiteDigraph):
        return to_compact(G)
    return "gd:" + ";".join(f"{u}>{v}" for u, v in G.arcs()) + f";n={G.n}"


def _conclusion(spec: TheoremSpec, G) -> tuple[str, set]:
    if spec.conclusion == "hamiltonian":
        return ("hamiltonian" if find_hamilton_cycle(G) is not None else "not-hamiltonian"), set()
    if spec.conclusion == "bip-or-cycle":
        if is_bipancyclic(G).holds:
            return "bipancyclic", set()
        if is_directed_full_cycle(G):
            return "directed-cycle", set()
        return "neither", set()
    cls = thomassen_classify(G)
    flags = set()
    if cls.two_cycle_sensitive:
        flags.add("two-cycle-sensitive")
    if len(cls.flags) > 1:
        flags.add("multiple-labels")
    return cls.tag, flags


def evaluate(theorem: TheoremId, k: int | None, G, tally: Tally, index: int) -> None:
    """Scan one instance into ``tally``."""
    spec = THEOREMS[theorem]
    tally.scanned += 1
    if not is_strongly_connected(G):
        return
    tally.strongly_connected += 1
    holds, vacuous = condition_holds(G, spec.condition(k))
    if not holds:
        return
    tally.hypothesis_satisfied += 1
    if vacuous:
        tally.vacuous_condition += 1
    outcome, flags = _conclusion(spec, G)
    tally.outcomes[outcome] += 1
    tally.flags.update(flags)
    if outcome in VIOLATING_OUTCOMES:
        tally.violations.append((index, serialize_instance(G)))
    if spec.audit:
        target = G.reverse() if spec.audit_reversed else G
        ham = outcome != "not-hamiltonian" if spec.conclusion == "hamiltonian" else None
        bip = outcome == "bipancyclic" if spec.conclusion == "bip-or-cycle" else None
        results = lemma_audit(target, spec.audit, k, hamiltonian=ham, bipancyclic=bip)
        for name, res in results.items():
            tally.audit[(name, res.status)] += 1


def _instance(theorem, a, k, mode, seed, index):
    if mode == "exhaustive":
        if THEOREMS[theorem].general:
            return GeneralDigraph.from_index(a, index)
        return BipartiteDigraph.from_index(a, index)
    return sample_instance(theorem, a, k, seed, index)


def _scan_range(args) -> Tally:
    theorem, a, k, mode, seed, start, stop = args
    tally = Tally()
    for index in range(start, stop):
        evaluate(theorem, k, _instance(theorem, a, k, mode, seed, index), tally, index)
    return tally


# ---------------------------------------------------------------------------
# re-validation through the oracle path


def revalidate_violation(theorem: TheoremId, k: int | None, G) -> None:
    """Raise :class:`ConsistencyError` unless the oracle agrees that ``G``
    satisfies the hypotheses and fails the conclusion."""
    spec = THEOREMS[theorem]
    cond = spec.condition(k)
    if not (oracle.strongly_connected(G) and oracle.condition_holds(G, cond.name, cond.k)):
        raise ConsistencyError(f"reported violation {serialize_instance(G)} fails the hypotheses on re-check")
    if spec.conclusion == "hamiltonian":
        fails = not oracle.hamiltonian(G)
    elif spec.conclusion == "bip-or-cycle":
        fails = not (oracle.bipancyclic(G) or oracle.directed_full_cycle(G))
    else:
        fails = not oracle.thomassen_outcome(G)
    if not fails:
        raise ConsistencyError(f"reported violation {serialize_instance(G)} satisfies the conclusion on re-check")


# ---------------------------------------------------------------------------
# reports


@dataclass
class VerificationReport:
    theorem: TheoremId
    a: int
    k: int | None
    mode: str
    seed: int | None
    samples: int | None
    bias: dict | None
    tally: Tally
    wall_time: float = 0.0

    @property
    def scanned(self) -> int:
        return self.tally.scanned

    @property
    def hypothesis_satisfied(self) -> int:
        return self.tally.hypothesis_satisfied

    @property
    def vacuous_condition(self) -> int:
        return self.tally.vacuous_condition

    @property
    def non_vacuous_satisfied(self) -> int:
        return self.tally.hypothesis_satisfied - self.tally.vacuous_condition

    @property
    def conclusion_violations(self) -> list[str]:
        return [s for _, s in self.tally.violations]

    @property
    def lemma_audit_summary(self) -> dict:
        spec = THEOREMS[self.theorem]
        if not spec.audit:
            return {}
        return {
            name: {st: self.tally.audit.get((name, st), 0) for st in STATUSES}
            for name in LEMMAS[spec.audit]
        }

    def fields(self, timing: bool = False) -> dict:
        """Report content as an ordered dict (stable key order)."""
        spec = THEOREMS[self.theorem]
        out = {
            "theorem": self.theorem.value,
            "a": self.a,
            "k": self.k,
            "mode": self.mode,
            "seed": self.seed,
            "samples": self.samples,
            "bias": self.bias,
            "scanned": self.scanned,
            "strongly_connected": self.tally.strongly_connected,
            "hypothesis_satisfied": self.hypothesis_satisfied,
            "vacuous_condition": self.vacuous_condition,
            "outcomes": {o: self.tally.outcomes.get(o, 0) for o in OUTCOMES[spec.conclusion]},
            "flags": dict(sorted(self.tally.flags.items())),
            "violation_count": len(self.tally.violations),
            "conclusion_violations": [f"{i} {s}" for i, s in self.tally.violations],
            "lemma_audit_summary": self.lemma_audit_summary,
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def to_text(self, timing: bool = False) -> str:
        lines = []
        for key, value in self.fields(timing).items():
            if key == "conclusion_violations":
                lines += [f"violation: {v}" for v in value]
            elif isinstance(value, dict):
                for sub, v in value.items():
                    if isinstance(v, dict):
                        lines += [f"{key}.{sub}.{st}: {c}" for st, c in v.items()]
                    elif isinstance(v, list):
                        lines.append(f"{key}.{sub}: {','.join(map(str, v))}")
                    else:
                        lines.append(f"{key}.{sub}: {v}")
            else:
                lines.append(f"{key}: {'-' if value is None else value}")
        return "\n".join(lines) + "\n"

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.fields(timing), indent=2) + "\n"


def parse_report_text(text: str) -> dict:
    """Read back :meth:`VerificationReport.to_text` output as flat key/value pairs
    (violations collected under ``violation``)."""
    out = {"violation": []}
    for line in text.splitlines():
        if not line.strip():
            continue
        key, sep, value = line.partition(": ")
        if not sep:
            raise InputError(f"malformed report line {line!r}")
        if key == "violation":
            out["violation"].append(value)
        else:
            out[key] = value
    return out


# ---------------------------------------------------------------------------


def check_parameters(theorem: TheoremId, a: int, k: int | None) -> None:
    spec = THEOREMS[theorem]
    name = "n" if spec.general else "a"
    if a < spec.min_a:
        raise RefusedError(f"{theorem.value} requires {name} >= {spec.min_a}, got {a}")
    if spec.needs_k:
        ks = valid_k_range(a)
        if not ks:
            raise RefusedError(f"{theorem.value}: no integer k satisfies max(1, a/4) < k <= a/2 for a={a}")
        if k not in ks:
            raise RefusedError(f"{theorem.value}: k must be one of {ks} for a={a}, got {k}")
    elif k is not None:
        raise RefusedError(f"{theorem.value} takes no k")


def _partition(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    out = []
    start = 0
    for p in range(parts):
        stop = start + step + (1 if p < extra else 0)
        out.append((start, stop))
        start = stop
    return out


def run_ranges(worker, jobs_args: list, jobs: int):
    """Map ``worker`` over argument tuples, preserving order."""
    if jobs <= 1 or len(jobs_args) <= 1:
        return [worker(args) for args in jobs_args]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, jobs_args))


def verify_theorem(
    theorem: TheoremId | str,
    a: int,
    k: int | None = None,
    mode: str = "exhaustive",
    samples: int | None = None,
    seed: int | None = None,
    jobs: int = 1,
    max_instances: int = DEFAULT_MAX_INSTANCES,
) -> VerificationReport:
    """Verify a theorem over every digraph of order ``2a`` (``exhaustive``) or
    over ``samples`` seeded biased samples (``sampled``).

    For ``thomassen-4.1`` the parameter ``a`` is the order ``n`` of a general
    digraph.  Raises :class:`RefusedError` for parameters outside the theorem's
    range or beyond the exhaustive budget.
    """
    theorem = TheoremId(theorem)
    spec = THEOREMS[theorem]
    check_parameters(theorem, a, k)
    if mode == "exhaustive":
        total = count_general_digraphs(a) if spec.general else count_digraphs(a)
        if total > max_instances:
            raise RefusedError(
                f"exhaustive {theorem.value} at a={a} needs {total} instances; budget is {max_instances}"
            )
        seed = samples = bias = None
    elif mode == "sampled":
        if samples is None or samples < 1 or seed is None:
            raise RefusedError("sampled mode needs samples >= 1 and an explicit seed")
        total = samples
        bias = bias_profile(theorem, a, k)
    else:
        raise InputError(f"unknown mode {mode!r}")

    started = time.perf_counter()
    ranges = _partition(total, max(1, jobs) * 4 if jobs > 1 else 1)
    parts = run_ranges(_scan_range, [(theorem, a, k, mode, seed, s, e) for s, e in ranges], jobs)
    tally = Tally()
    for part in parts:
        tally.merge(part)
    for index, _ in tally.violations:
        revalidate_violation(theorem, k, _instance(theorem, a, k, mode, seed, index))
    return VerificationReport(theorem, a, k, mode, seed, samples, bias, tally, time.perf_counter() - started)


def scan_instances(theorem: TheoremId | str, a: int, k: int | None,
                   instances: Iterable, mode: str = "custom") -> VerificationReport:
    """Run the same per-instance evaluation over an explicit instance stream."""
    theorem = TheoremId(theorem)
    check_parameters(theorem, a, k)
    started = time.perf_counter()
    tally = Tally()
    kept = []
    for index, G in enumerate(instances):
        before = len(tally.violations)
        evaluate(theorem, k, G, tally, index)
        if len(tally.violations) > before:
            kept.append(G)
    for G in kept:
        revalidate_violation(theorem, k, G)
    return VerificationReport(theorem, a, k, mode, None, None, None, tally, time.perf_counter() - started)


def instance_text(G) -> str:
    return serialize_general(G) if isinstance(G, GeneralDigraph) else to_compact(G)
