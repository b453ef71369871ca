"""
A half-factorial monoid in the plane
=====================================

Generators (1,0), (1,3), (1,5), (1,7): every factorization of an element
has the same length, read off by the functional (1, 0).
"""

import itertools

from catena import (
    betti_elements,
    catenary_element,
    catenary_monoid,
    new_semigroup,
    omega_monoid,
    tame_monoid,
)
from catena.fibers import common_part

S = new_semigroup([(1, 0), (1, 3), (1, 5), (1, 7)])
print("witness", [str(w) for w in S.omega], "half-factorial", S.half_factorial)

# here every distance is the length minus the common part
a = (4, 14)
fib = S.factorizations(a)
for u, v in itertools.combinations(fib, 2):
    print(u, v, sum(u) - sum(common_part(u, v)))

# Betti elements are exactly where the catenary degree hits the length
betti = betti_elements(S)
for b in betti:
    print("Betti", b.element, "c =", catenary_element(S, b.element).value)

# every other catenary degree already shows up at a Betti element
seen = {catenary_element(S, b.element).value for b in betti}
values = {}
for x, f in S.elements_up_to(8).items():
    if len(f) > 1:
        values.setdefault(catenary_element(S, x, f).value, []).append(x)
for c, xs in sorted(values.items()):
    print(f"c = {c} at {len(xs)} elements, first {min(xs)}", "(Betti value)" if c in seen else "(new!)")

print("c =", catenary_monoid(S))
print("omega =", omega_monoid(S))
print("t =", tame_monoid(S))
