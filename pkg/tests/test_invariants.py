import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catena import invariants as inv
from catena.catenary import catenary_monoid
from catena.diophantine import kernel_lattice_basis
from catena.errors import NotMinimalGenerating
from catena.semigroup import lift_hom, minimize, new_semigroup

import oracles
from instances import lifts, monoids


def numerical(values):
    return new_semigroup([(v,) for v in values])


TWO_D = new_semigroup([(1, 0), (1, 3), (1, 5), (1, 7)])
TWO_THREE = numerical([2, 3])
FREE2 = new_semigroup([(1, 0), (0, 1)])


def test_cover_examples():
    assert inv.minimal_fiber_cover(TWO_THREE, (2,)).minimals == ((0, 2), (1, 0))
    assert inv.minimal_fiber_cover(TWO_THREE, (3,)).minimals == ((0, 1), (3, 0))
    assert inv.minimal_fiber_cover(TWO_THREE, (0,)).minimals == ((0, 0),)


@pytest.mark.parametrize("S", [TWO_THREE, numerical([3, 5, 7]), numerical([4, 6, 9]), TWO_D])
def test_cover_matches_brute_force(S):
    elements = list(S.generators) + [tuple(2 * x for x in S.generators[0]), S.project([1] * S.n)]
    for a in elements:
        cover = inv.minimal_fiber_cover(S, a, method="diophantine").minimals
        assert oracles.is_antichain(cover)
        for u in cover:
            rest = tuple(x - y for x, y in zip(S.project(u), a))
            assert S.member(rest)
        reach = max(sum(u) for u in cover) + 2
        assert list(cover) == oracles.brute_cover(S.generators, S.rho, a, reach)


@settings(max_examples=100)
@given(monoids(max_entry=40))
def test_generator_routes_agree(S):
    for g in S.generators:
        assert inv.minimal_fiber_cover(S, g) == inv.minimal_fiber_cover(S, g, method="diophantine")


def test_graver_route_needs_a_generator():
    with pytest.raises(ValueError):
        inv.minimal_fiber_cover(TWO_THREE, (5,), method="graver")
    with pytest.raises(ValueError):
        inv.minimal_fiber_cover(TWO_THREE, (2,), method="simplex")


@settings(max_examples=100)
@given(monoids(max_entry=40))
def test_minimal_support_lemma(S):
    for i, g in enumerate(S.generators):
        for u in inv.minimal_fiber_cover(S, g).minimals:
            if u[i] == 1 and sum(u) == 1:
                continue
            for v in S.factorizations(S.project(u)):
                if v[i]:
                    assert not any(x and y for x, y in zip(u, v))


def test_omega_examples():
    assert inv.omega_monoid(TWO_D) == 7
    assert inv.omega_monoid(TWO_THREE) == 3
    assert inv.omega_monoid(FREE2) == 1
    assert inv.omega_monoid(numerical([31, 47, 57])) == 17


def test_omega_element():
    assert inv.omega_element(TWO_THREE, (2,)) == 2
    assert inv.omega_element(TWO_THREE, (3,)) == 3
    assert inv.omega_element(TWO_THREE, (6,)) == inv.omega_element(TWO_THREE, (6,), budget=10**6)


def test_tame_examples():
    assert inv.tame_monoid(TWO_D) == 7
    assert inv.tame_monoid(TWO_THREE) == 3
    assert inv.tame_monoid(FREE2) == 0
    assert inv.tame_monoid_scan(TWO_THREE, 30) == 3


def test_tame_element_singleton_fiber():
    assert inv.tame_element(TWO_THREE, (2,)) == 0
    with pytest.raises(ValueError):
        inv.tame_element(TWO_THREE, (1,))


@pytest.mark.parametrize("S", [TWO_THREE, numerical([3, 5, 7]), numerical([5, 6, 13]), numerical([31, 47, 57])])
def test_tame_candidates_against_scan(S):
    bound = 3 * max(S.degree(c) for c in inv.tame_candidates(S))
    assert inv.tame_monoid(S) == inv.tame_monoid_scan(S, bound)


def test_tame_element_matches_brute_force():
    S = numerical([5, 6, 13])
    for a, fib in S.elements_up_to(80).items():
        assert inv.tame_element(S, a, fib) == oracles.brute_tame_element(fib, S.n)


def test_lift_bound_check():
    t, t_hom = inv.tame_lift_bound_check(TWO_D)
    assert t == 7 and t <= t_hom
    assert inv.tame_lift_bound_check(FREE2) == (0, 0)
    t, t_hom = inv.tame_lift_bound_check(TWO_THREE)
    assert t == 3 and t <= t_hom


def test_requires_atoms():
    S = numerical([2, 3, 5])
    for fn in (inv.omega_monoid, inv.tame_monoid):
        with pytest.raises(NotMinimalGenerating):
            fn(S)
    assert inv.omega_monoid(minimize(S)) == 3


def _is_free(T):
    return not kernel_lattice_basis(T.generators)


@settings(max_examples=100)
@given(lifts())
def test_omega_equals_tame_for_half_factorial(T):
    omega, tame = inv.omega_monoid(T), inv.tame_monoid(T)
    if _is_free(T):
        # a free monoid has tame degree 0 and every atom prime
        assert (omega, tame) == (1, 0)
    else:
        assert omega == tame


@settings(max_examples=100)
@given(monoids(max_entry=40))
def test_catenary_below_omega(S):
    assert catenary_monoid(S) <= inv.omega_monoid(S)
    assert inv.omega_monoid(S) <= inv.tame_monoid(S) or _is_free(S)


def test_strict_gap_two_dimensional_example():
    assert catenary_monoid(TWO_D) == 4 < inv.omega_monoid(TWO_D) == 7


@given(st.integers(2, 9))
def test_lift_of_two_generators(k):
    T = lift_hom(numerical([1, k]))
    assert inv.omega_monoid(T) == inv.tame_monoid(T)
