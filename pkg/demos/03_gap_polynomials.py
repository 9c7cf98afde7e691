# Runs of source vertices that avoid the pair {0, 1} contribute a polynomial
# factor in m. The polynomials come from a layered 0/1 graph: a 1 marks a
# vertex mapped next to the pair, a 0 anywhere else, and no two 1s touch.

from quasihom import gap_polynomial, gap_polynomial_rec, level_graph
from quasihom.poly import render

for i in range(1, 6):
    g = level_graph(i)
    print(f"level graph {i}: level sizes {g.level_sizes()}, {g.path_count()} top-to-bottom paths")

# Reading the factors off every path and adding up:
for i in range(0, 6):
    print(f"p_{i}:", render(gap_polynomial("p", i)))
    print(f"q_{i}:", render(gap_polynomial("q", i)))

# The same polynomials satisfy a two-term recurrence; compare far out.
i = 24
print("p_24 from paths == p_24 from recurrence:", gap_polynomial("p", i) == gap_polynomial_rec("p", i))
print("value of q_24 at m = 10:", gap_polynomial("q", i)(10))
