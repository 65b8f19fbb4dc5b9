"""Balanced bipartite digraphs: degree conditions, cycle factors, Hamilton
cycles, and exhaustive or sampled verification of hamiltonicity theorems."""

from .conditions import (
    AAY_3A,
    DOMDOM_3A,
    THOMASSEN_2N,
    ConditionKind,
    ConditionVerdict,
    Pair,
    bk,
    check_condition,
    condition_holds,
    dk,
    dominated_bk,
    dominated_dk,
    dominated_pairs,
    dominating_pairs,
    non_adjacent_pairs,
    valid_k_range,
)
from .core import Arc, BipartiteDigraph, Cycle, CycleFactor, Vertex, parse, serialize, to_compact, vx, vy
from .cycles import (
    GeneralDigraph,
    HamiltonCycle,
    ThomassenClass,
    contraction,
    find_cycle_of_length,
    find_hamilton_cycle,
    is_bipancyclic,
    is_strongly_connected,
    lift_cycle,
    reroute_hamilton,
    thomassen_classify,
)
from .errors import (
    BudgetExhausted,
    ConsistencyError,
    InputError,
    MergeInapplicable,
    NoCycleFactor,
    NoPerfectMatching,
    ParseError,
    PreconditionError,
    RefusedError,
    RerouteInapplicable,
)
from .matching import (
    Matching,
    cycle_factor,
    hall_violator,
    lemma4_bound,
    lemma4_check,
    merge_two_cycle,
    minimal_cycle_factor,
    perfect_matching,
)

__version__ = "0.1.0"
