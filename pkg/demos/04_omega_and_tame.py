"""
Omega-primality and tame degree
================================

Both invariants come from the minimal elements of the set of factorizations
that land on or above a given element.
"""

from catena import (
    minimal_fiber_cover,
    new_semigroup,
    omega_element,
    omega_monoid,
    tame_element,
    tame_monoid,
)
from catena.invariants import tame_candidates, tame_monoid_scan

S = new_semigroup([(2,), (3,)])

# u covers 3 when pi(u) - 3 is still in the monoid; only the minimal u matter
cover = minimal_fiber_cover(S, (3,))
print(cover.minimals, "-> longest", max(sum(u) for u in cover.minimals))

# omega of 3 is the longest minimal cover: 2+2+2 is divisible by 3 but no two of its summands are
print("omega(3) =", omega_element(S, (3,)))
print("omega(S) =", omega_monoid(S))

# the tame degree of 6: from 2+2+2 the nearest factorization using 3 is 3+3
print("Z(6) =", S.factorizations((6,)))
print("t(6) =", tame_element(S, (6,)))

# t(S) is a maximum over finitely many elements built from those covers
T = new_semigroup([(5,), (6,), (13,)])
print("candidates", tame_candidates(T)[:8], "...")
print("t(S) =", tame_monoid(T), "scan up to 200:", tame_monoid_scan(T, 200))
print("omega(S) =", omega_monoid(T))
