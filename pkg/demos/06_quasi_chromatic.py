# For a fixed source graph the count into K_m^1 is a polynomial in m, just as
# counts into K_m give the chromatic polynomial. Fit it from a few values and
# check a prediction.

from quasihom import FamilySpec, count, quasi_chromatic_polynomial

for spec in [FamilySpec("path", 2), FamilySpec("path", 4), FamilySpec("cycle", 4),
             FamilySpec("broken-wheel", 4), FamilySpec("wheel", 4), FamilySpec("quasi-complete", 4)]:
    poly = quasi_chromatic_polynomial(spec)
    m = spec.vertex_count + 10
    print(f"{str(spec):18} {poly}")
    print(f"{'':18} at m = {m}: {poly(m)} (closed form {count(spec, m)})")
