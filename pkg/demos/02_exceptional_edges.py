# Every homomorphism into K_m^1 is a homomorphism into K_m that never uses
# the pair {0, 1}. Sort the maps into K_m by how many source edges land on
# that pair (k). Slice k = 0 is what we want; the others are subtracted.

from quasihom import bad_term_path, exceptional_histogram, hom_path, make_family
from quasihom.closed_form import base_path

g = make_family(("path", 5))
m = 4
hist = exceptional_histogram(g, m)
print("histogram over k:", hist)

# The closed form reproduces each slice separately...
print("closed-form slices:", [bad_term_path(5, m, k) for k in range(1, 5)])

# ...so the count is the chromatic count minus the slices.
print(base_path(5, m), "-", sum(hist[1:]), "=", hom_path(5, m), "(search says", hist[0], ")")

# Using every edge of a path is only possible by alternating 0 and 1, which
# can start at either end: always 2, whatever m is.
print([bad_term_path(n, 9, n - 1) for n in range(2, 10)])
