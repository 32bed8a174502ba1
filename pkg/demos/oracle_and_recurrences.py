"""
Counting dominating sets, three ways
====================================

The exhaustive oracle enumerates every vertex subset.  The recurrences
build the same polynomial from smaller graphs.  Both should agree.
"""

from domipoly import domination_polynomial, find_roots
from domipoly.families import cycle_graph, k_path, k_star, k_wheel, path_graph
from domipoly.recurrences import d_cycle, d_kpath, d_kstar, d_kwheel, d_path, vertex_expansion

# The oracle: D(P_4, x) has 4 dominating pairs, 4 triples and the whole set
p4 = domination_polynomial(path_graph(4))
print("D(P_4) =", p4)
print("same from the path recurrence:", d_path(4) == p4)

# Cycles use the same three-term recurrence with different seeds
for n in range(3, 9):
    assert d_cycle(n) == domination_polynomial(cycle_graph(n))
print("cycle recurrence agrees for n = 3..8")

# Expanding at any vertex gives the same answer, whatever the graph
g = k_wheel(2, 7)
ref = domination_polynomial(g)
print("vertex expansion of W^2_7 agrees at every vertex:",
      all(vertex_expansion(g, u) == ref for u in range(g.n)))

# k-stars have a closed form
print("D(S_{3,4}) =", d_kstar(3, 7))
print("closed form matches enumeration:", d_kstar(3, 7) == domination_polynomial(k_star(3, 7)))

# The k-path recurrence needs one restricted count per step
print("D(P^2_12) via recurrence matches:", d_kpath(2, 12) == domination_polynomial(k_path(2, 12)))

# Wheels: the hub sees all n cycle vertices, so its term is x(1+x)**n
print("D(W^3_8) closed form matches:", d_kwheel(3, 8) == domination_polynomial(k_wheel(3, 8)))

# Values at x = -1 carry parity information
print("D(P^2_7, -1) =", domination_polynomial(k_path(2, 7))(-1))
