"""
Seed mutation and the pentagon
==============================

Mutate a rank-two seed until it comes back to itself, then count
cluster variables across the finite type A ladder.
"""

from clusterfrieze.exchange import cluster_variables, enumerate_seeds
from clusterfrieze.quiver import dynkin, is_finite_type
from clusterfrieze.seed import initial_seed, mutate_seed

# Start from the A2 quiver 1 -> 2 with cluster (x1, x2) and mutate in
# alternating directions.  Every new variable is a Laurent polynomial in
# x1, x2 -- denominators never acquire new factors.
s = initial_seed(dynkin("A", 2))
print("walking the A2 exchange graph:")
for step, k in enumerate([1, 2, 1, 2, 1], start=1):
    s = mutate_seed(s, k)
    pretty = ", ".join(str(v) for v in s.vars)
    print(f"  after mu_{k}: ({pretty})")

# Five steps later the cluster is (x2, x1): the exchange graph is a
# pentagon, five seeds joined in a cycle.
g = enumerate_seeds(dynkin("A", 2))
print(f"\nA2 exchange graph: {len(g.nodes)} seeds, {len(g.edges) // 2} edges")
print(g.to_dot())

# Type A_n has n(n+3)/2 cluster variables in total, one per diagonal of
# the (n+3)-gon.
print("cluster variable counts:")
for n in range(1, 7):
    count = len(cluster_variables(dynkin("A", n)))
    print(f"  A{n}: {count}")

# Finiteness of the mutation class is detectable: orientations of Dynkin
# diagrams close up, anything containing a double arrow runs away.
res = is_finite_type(dynkin("D", 4))
print(f"D4 orientation: finite={res.finite}, type={res.dynkin_type}")
from clusterfrieze.quiver import Quiver

kronecker = Quiver.from_json_obj({"n": 2, "arrows": [[1, 2, 2]]})
res = is_finite_type(kronecker)
print(f"Kronecker quiver: finite={res.finite}, witness={res.witness.to_json_obj()}")
