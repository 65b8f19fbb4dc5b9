"""Hamilton cycles, cycle factors, rerouting and contraction on a random dense digraph."""

from bbdigraph import (
    RerouteInapplicable,
    contraction,
    find_cycle_of_length,
    find_hamilton_cycle,
    is_bipancyclic,
    lift_cycle,
    minimal_cycle_factor,
    reroute_hamilton,
)
from bbdigraph.cycles import serialize_general
from bbdigraph.verify.generate import biased_highdegree_digraph

seed = 0
while True:
    D = biased_highdegree_digraph(5, 7, seed)
    C = find_hamilton_cycle(D)
    if C is not None:
        break
    seed += 1

print("seed", seed, "hamilton", C)
print("minimal factor:", minimal_cycle_factor(D))
spectrum = is_bipancyclic(D)
print("bipancyclic:", spectrum.holds, "missing:", spectrum.missing)

for l in range(1, 4):
    for m in range(l + 1, 5):
        try:
            print(f"reroute l={l} m={m}:", reroute_hamilton(D, C, l, m))
        except RerouteInapplicable as exc:
            print(f"reroute l={l} m={m}: not applicable ({exc})")

G = contraction(D, C)
print(serialize_general(G), end="")
for L in range(2, 6):
    ids = find_cycle_of_length(G, L)
    if ids is not None:
        print(f"length {L} in G {ids} lifts to", lift_cycle(D, C, ids))
