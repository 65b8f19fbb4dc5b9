"""Implication audits for the intermediate lemmas behind the two main theorems.

Each lemma is evaluated on a single digraph as a material implication
``hypothesis => conclusion``.  An audit never raises on a failed conclusion;
it records ``VIOLATED`` with a witness so the harness can count it.

Contexts
--------
``hamil``
    standing assumptions: strongly connected, ``a >= 2``, condition ``dk(1)``.
    Lemmas ``lemma1`` (non-hamiltonian => every vertex is in a dominating
    pair), ``lemma2`` (non-hamiltonian => every degree >= a+1), ``lemma3``
    (a cycle factor exists) and ``lemma4`` (the arc bound around the shortest
    cycle of a minimum cycle factor of a non-hamiltonian digraph).
``bipart``
    standing assumptions: strongly connected, ``a >= 3``, ``k`` in the
    ``bk`` range, condition ``bk(k)``, hamiltonian, and not itself a single
    directed ``2a``-cycle.  Lemmas ``lemma5`` (every vertex is in a
    dominating pair and has degree >= a+k), ``remark_2cycle`` (every vertex
    lies on a 2-cycle) and ``lemma6a``/``lemma6b``/``lemma6c`` (degree facts
    for digraphs that are not bipancyclic).
``d0``
    the ``hamil`` context with ``dk(0)`` in place of ``dk(1)``; only
    ``lemma1`` and ``lemma3`` are evaluated.  These results are informational.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..conditions import bk, check_condition, dk, dominating_pair_ids, valid_k_range
from ..core import BipartiteDigraph
from ..cycles import is_bipancyclic, is_directed_full_cycle, is_hamiltonian, is_strongly_connected
from ..errors import BudgetExhausted, InputError
from ..matching import has_cycle_factor, lemma4_check, minimal_cycle_factor

CONTEXTS = ("hamil", "bipart", "d0")
LEMMAS = {
    "hamil": ("lemma1", "lemma2", "lemma3", "lemma4"),
    "bipart": ("lemma5", "remark_2cycle", "lemma6a", "lemma6b", "lemma6c"),
    "d0": ("lemma1", "lemma3"),
}
STATUSES = ("confirmed", "vacuous", "VIOLATED")


@dataclass(frozen=True)
class LemmaResult:
    status: str
    witness: str | None = None


VACUOUS = LemmaResult("vacuous")
CONFIRMED = LemmaResult("confirmed")


def _violated(witness) -> LemmaResult:
    return LemmaResult("VIOLATED", str(witness))


def standing_assumptions(D: BipartiteDigraph, context: str, k: int | None = None) -> bool:
    if context not in CONTEXTS:
        raise InputError(f"unknown audit context {context!r}")
    if context == "bipart":
        if k is None:
            raise InputError("the bipart context needs k")
        return (
            D.a >= 3
            and k in valid_k_range(D.a)
            and is_strongly_connected(D)
            and check_condition(D, bk(k)).holds
            and not is_directed_full_cycle(D)
            and is_hamiltonian(D)
        )
    cond = dk(1) if context == "hamil" else dk(0)
    return D.a >= 2 and is_strongly_connected(D) and check_condition(D, cond).holds


def _every_vertex_dominating(D):
    covered = 0
    for u, v in dominating_pair_ids(D):
        covered |= 1 << u | 1 << v
    for i in range(D.order):
        if not covered >> i & 1:
            return D.vertex(i)
    return None


def lemma_audit(
    D: BipartiteDigraph,
    context: str,
    k: int | None = None,
    hamiltonian: bool | None = None,
    bipancyclic: bool | None = None,
    node_budget: int = 200_000,
) -> dict[str, LemmaResult]:
    """Audit every lemma of ``context`` on ``D``.

    ``hamiltonian`` / ``bipancyclic`` may be passed when already known.  If the
    standing assumptions fail, every lemma is vacuous.
    """
    names = LEMMAS.get(context)
    if names is None:
        raise InputError(f"unknown audit context {context!r}")
    if not standing_assumptions(D, context, k):
        return {name: VACUOUS for name in names}
    a = D.a
    deg = D.degrees()
    if hamiltonian is None:
        hamiltonian = is_hamiltonian(D)
    out = {}

    if context in ("hamil", "d0"):
        if hamiltonian:
            out["lemma1"] = VACUOUS
        else:
            lonely = _every_vertex_dominating(D)
            out["lemma1"] = CONFIRMED if lonely is None else _violated(lonely)
        out["lemma3"] = CONFIRMED if has_cycle_factor(D) else _violated("no cycle factor")
        if context == "d0":
            return {name: out[name] for name in names}
        if hamiltonian:
            out["lemma2"] = VACUOUS
            out["lemma4"] = VACUOUS
        else:
            low = next((i for i in range(D.order) if deg[i] < a + 1), None)
            out["lemma2"] = CONFIRMED if low is None else _violated(D.vertex(low))
            out["lemma4"] = _lemma4(D, node_budget)
        return {name: out[name] for name in names}

    # bipart context
    succ, pred = D.succ_masks, D.pred_masks
    lonely = _every_vertex_dominating(D)
    low = next((i for i in range(D.order) if deg[i] < a + k), None)
    if lonely is not None:
        out["lemma5"] = _violated(lonely)
    elif low is not None:
        out["lemma5"] = _violated(D.vertex(low))
    else:
        out["lemma5"] = CONFIRMED
    no_two_cycle = next((i for i in range(D.order) if not succ[i] & pred[i]), None)
    out["remark_2cycle"] = CONFIRMED if no_two_cycle is None else _violated(D.vertex(no_two_cycle))

    if bipancyclic is None:
        bipancyclic = is_bipancyclic(D).holds
    if bipancyclic:
        out["lemma6a"] = out["lemma6b"] = out["lemma6c"] = VACUOUS
        return out
    out["lemma6a"] = CONFIRMED
    for i in range(D.order):
        dout, din = succ[i].bit_count(), pred[i].bit_count()
        if not (k + 1 <= din <= a - 1 and k + 1 <= dout <= a - 1):
            out["lemma6a"] = _violated(D.vertex(i))
            break
    out["lemma6b"] = CONFIRMED
    dom = set(dominating_pair_ids(D))
    for side in (range(a), range(a, 2 * a)):
        for u in side:
            for v in side:
                if u < v and (u, v) not in dom and (deg[u] >= 2 * a - k or deg[v] >= 2 * a - k):
                    out["lemma6b"] = _violated(f"{D.vertex(u)} {D.vertex(v)}")
    out["lemma6c"] = CONFIRMED
    for u in range(D.order):
        if deg[u] < 2 * a - k:
            continue
        for v in range(D.order):
            if v == u:
                continue
            if (succ[u].bit_count() + pred[v].bit_count() < a + 2
                    or succ[v].bit_count() + pred[u].bit_count() < a + 2):
                out["lemma6c"] = _violated(f"{D.vertex(u)} {D.vertex(v)}")
    return out


def _lemma4(D, node_budget):
    try:
        factor = minimal_cycle_factor(D, node_budget)
    except BudgetExhausted:
        return LemmaResult("vacuous", "budget exhausted")
    if len(factor) < 2:
        return VACUOUS
    audit = lemma4_check(D, factor, node_budget)
    if audit.status == "VIOLATED":
        return _violated(f"arcs {audit.arcs} > bound {audit.bound}")
    return LemmaResult(audit.status)
