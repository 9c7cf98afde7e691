# Three independent ways to count: exhaustive search, transfer matrices and
# the closed forms. They should agree everywhere they all apply.

import time

from quasihom import (count_by_class, cyclic_hom_count, hom_cycle, hom_wheel,
                      hub_conditioned_count, make_family, quasi_complete_graph)

m = 5
h = quasi_complete_graph(m)
print("adjacency matrix of K_5^1:")
print(h.adjacency_matrix())

# Cycles: closed walks, i.e. the trace of a matrix power.
for n in range(4, 9):
    print(n, count_by_class(make_family(("cycle", n)), h), cyclic_hom_count(h, n), hom_cycle(n, m))

# Wheels: fix the hub image, then count closed walks on its neighbourhood.
for n in range(3, 8):
    print(n, count_by_class(make_family(("wheel", n)), h), hub_conditioned_count(h, n, "cycle"), hom_wheel(n, m))

# Search blows up quickly; the other two do not.
t0 = time.perf_counter()
print(hub_conditioned_count(quasi_complete_graph(12), 60, "cycle") == hom_wheel(60, 12),
      f"{time.perf_counter() - t0:.2f}s")
