# Counting homomorphisms into K_m^1, the complete graph on m vertices with the
# edge {0, 1} removed. Start small and check every number against a plain
# search over all vertex maps.

from quasihom import (FamilySpec, count, count_by_class, make_family,
                      quasi_complete_graph)

# The target for m = 4: six possible pairs, five edges.
h = quasi_complete_graph(4)
print("K_4^1 edges:", h.sorted_edges())

# A path on n vertices is n-1 edges in a row. Each edge of P_2 can land on
# any edge of the target in either direction, so hom(P_2, K_4^1) = 2 * 5.
print("hom(P_2, K_4^1) =", count(FamilySpec("path", 2), 4))

# Odd cycles need an odd closed walk. K_3^1 is a path on three vertices and
# has none, so every odd cycle count is 0 there.
for n in (4, 5, 6, 7):
    spec = FamilySpec("cycle", n)
    print(f"hom({spec}, K_3^1) = {count(spec, 3):>3}   search: {count_by_class(make_family(spec), quasi_complete_graph(3))}")

# Complete and quasi-complete sources have injective, surjective and
# bijective counts too.
spec = FamilySpec("quasi-complete", 4)
for cls in ("all", "inj", "sur", "bij"):
    print(f"{cls}: {count(spec, 4, cls)}")

# Wheels contain triangles, K_3^1 has none.
print([count(FamilySpec("wheel", n), 3) for n in range(3, 9)])

# Closed forms do not care how big the numbers get.
print("hom(W_60, K_12^1) =", count(FamilySpec("wheel", 60), 12))
