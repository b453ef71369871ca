"""
Factorizations, distances and the shared-support graph
=======================================================

A walk through the numerical monoid generated by 31, 47 and 57.
"""

from catena import (
    betti_elements,
    catenary_element,
    catenary_monoid,
    distance,
    minimal_generators,
    nabla_graph,
    new_semigroup,
)

S = new_semigroup([(31,), (47,), (57,)])
print(S)

# 564 has three factorizations, of lengths 12, 14 and 16
fib = S.factorizations((564,))
for u in fib:
    print(u, "length", sum(u))

# the distance between two factorizations ignores what they have in common
for i in range(len(fib)):
    for j in range(i + 1, len(fib)):
        print(fib[i], fib[j], "distance", distance(fib[i], fib[j]))

# two factorizations are joined when they share a generator
g = nabla_graph(S, (564,))
print("edges", g.edges)
print("not joined", g.missing_pairs())
print("components", len(g.components))
print(g.to_dot(show_missing=True))

# 564 is connected, so it is not a Betti element; these are
for b in betti_elements(S):
    print("Betti element", b.element[0], "with", b.components, "components")

# a chain between the two far ends of the fiber never needs a step above 14
r = catenary_element(S, (564,))
print("c(564) =", r.value, "via", r.chain)

# the Betti elements carry the relations of a minimal presentation
print(minimal_generators(S).text())
print("c(S) =", catenary_monoid(S))
