"""A short tour of the core objects: build a digraph, read degrees, check conditions."""

from bbdigraph import bk, check_condition, dk, dominating_pairs, serialize, valid_k_range, vx, vy
from bbdigraph.verify.generate import biased_highdegree_digraph, complete, directed_cycle

C = directed_cycle(3)
print(serialize(C))
print("degree of x0 in the 6-cycle:", C.degree(vx(0)))
print("dk(1) on the 6-cycle:", check_condition(C, dk(1)))

K = complete(3)
print("dominating pairs of K33:", [str(p) for p in dominating_pairs(K)])
print("dk(1) on K33:", check_condition(K, dk(1)))

# a dense random instance and the k values in range for it
D = biased_highdegree_digraph(6, 9, seed=1)
print("valid k at a=6:", valid_k_range(6))
for k in valid_k_range(6):
    print(f"bk({k}):", check_condition(D, bk(k)))
print("x0 -> y0 present:", D.has_arc(vx(0), vy(0)))
