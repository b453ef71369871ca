"""
Catenary degree variants through lifted monoids
================================================

Prepending a 1 to every generator (and, for the homogeneous lift, adding
the unit vector e0) turns length restrictions into ordinary catenary
degrees of a half-factorial monoid.
"""

from catena import (
    catenary_monoid,
    equal_catenary_monoid,
    homogeneous_catenary_monoid,
    lift_eq,
    lift_hom,
    minimal_generators,
    monotone_catenary_monoid_bounded,
    new_semigroup,
)

S = new_semigroup([(10,), (11,), (14,), (19,)])
H = lift_hom(S)
print(H.generators)

# every generator of the lifted monoid has degree 1 under this functional
print("half-factorial witness", H.omega)

# the lifted toric ideal is homogeneous; its largest generator degree is c_hom
p = minimal_generators(H)
print(p.text(start=0))
print("max total degree", p.max_total_degree)
print("c =", catenary_monoid(S), " c_hom =", homogeneous_catenary_monoid(S))

# the equal lift only sees factorizations of one length
for values in ([11, 19, 32], [11, 19, 23]):
    T = new_semigroup([(v,) for v in values])
    print(values)
    print("  c     =", catenary_monoid(T))
    print("  c_eq  =", equal_catenary_monoid(T), "(via", len(lift_eq(T).generators), "lifted generators)")
    print("  c_hom =", homogeneous_catenary_monoid(T))

    # no lift is known for the monotone variant, so it is scanned up to a degree
    scan = monotone_catenary_monoid_bounded(T, 700)
    print("  c_mon =", scan.value, f"({scan.method} up to {scan.bound}, first reached at {scan.element[0]})")

# in <11, 19, 23> the element 115 has just two factorizations, far apart
T = new_semigroup([(11,), (19,), (23,)])
print(T.factorizations((115,)))
