# Evaluate the displayed path and cycle sums literally and set them beside
# the counted values. Where they differ, the counted value is the one the
# search agrees with.

from quasihom import as_printed_term, bad_term_cycle, bad_term_path
from quasihom.errata import errata_csv, errata_rows, summand_deltas

print("path n=4, m=3, k=1:", as_printed_term("path", 4, 3, 1), "vs", bad_term_path(4, 3, 1))
print("cycle n=4, m=4, k=1:", as_printed_term("cycle", 4, 4, 1), "vs", bad_term_cycle(4, 4, 1))

# Which of the four summands are off?
for n, m, k in [(6, 4, 1), (6, 4, 2), (7, 5, 3)]:
    print(n, m, k, "path", summand_deltas("path", n, m, k), "cycle", summand_deltas("cycle", n, m, k))

# A small report in the same CSV layout the verify command writes.
print(errata_csv(errata_rows([4, 5], [4, 5], [3, 4], [3, 4])))
