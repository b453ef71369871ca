from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from catena import semigroup as sg
from catena.errors import (
    DuplicateGenerator,
    FiberCapExceeded,
    InvalidSemigroup,
    NotReduced,
    ZeroGenerator,
)

import oracles

TWO_D = [(1, 0), (1, 3), (1, 5), (1, 7)]


def numerical(values):
    return sg.new_semigroup([(v,) for v in values])


d1_gens = st.lists(st.integers(1, 40), min_size=1, max_size=4, unique=True)


def test_construction_examples():
    S = numerical([31, 47, 57])
    assert S.omega is None and not S.half_factorial
    assert S.rho == (1,)
    T = sg.new_semigroup(TWO_D)
    assert T.omega == (1, 0) and T.half_factorial
    with pytest.raises(NotReduced):
        sg.new_semigroup([(1, -1), (-1, 1)])


def test_validation_errors():
    with pytest.raises(ZeroGenerator):
        sg.new_semigroup([(0, 0), (1, 2)])
    with pytest.raises(DuplicateGenerator):
        numerical([3, 5, 3])
    with pytest.raises(InvalidSemigroup):
        sg.new_semigroup([(1, 2), (3,)])
    with pytest.raises(InvalidSemigroup):
        sg.new_semigroup([])
    with pytest.raises(InvalidSemigroup):
        sg.new_semigroup([(2,), (3,)], rho=[Fraction(1, 4)])


def test_rho_is_scaled_to_integral_degrees():
    S = numerical([10, 11, 14, 19])
    assert S.generator_degrees == (10, 11, 14, 19)
    U = sg.new_semigroup([(2, 1), (1, 3), (0, 5)])
    assert all(q.denominator == 1 and q >= 1 for q in U.generator_degrees)


def test_negative_coordinates_supported():
    S = sg.new_semigroup([(1, -1), (1, 2), (2, 1)])
    assert all(dg >= 1 for dg in S.generator_degrees)
    assert S.factorizations((3, 0)) == oracles.brute_fiber(S.generators, S.rho, (3, 0))


def test_atoms_flag():
    assert sg.atoms(numerical([31, 47, 57])) == ([(31,), (47,), (57,)], True)
    atoms, flag = sg.atoms(numerical([2, 3, 5]))
    assert atoms == [(2,), (3,)] and flag is False
    assert sg.atoms(sg.new_semigroup(TWO_D))[1] is True


def test_minimize():
    S = sg.minimize(numerical([2, 3, 5]))
    assert S.generators == ((2,), (3,)) and S.atoms_verified


def test_member_examples():
    S = numerical([31, 47, 57])
    assert sg.member(S, (0,))
    assert sg.member(S, (564,))
    assert not sg.member(S, (30,))


@given(d1_gens, st.integers(0, 120))
def test_member_matches_brute_force(values, x):
    S = numerical(values)
    assert S.member((x,)) == oracles.brute_member(S.generators, S.rho, (x,))


@given(d1_gens, st.integers(0, 90))
def test_fibers_match_brute_force(values, x):
    S = numerical(values)
    assert S.factorizations((x,)) == oracles.brute_fiber(S.generators, S.rho, (x,))


def test_fibers_2d_match_brute_force():
    S = sg.new_semigroup(TWO_D)
    for x in [(4, 12), (6, 21), (5, 20), (3, 4)]:
        assert S.factorizations(x) == oracles.brute_fiber(S.generators, S.rho, x)


@given(d1_gens.filter(lambda v: min(v) >= 3))
def test_elements_up_to_matches_brute_force(values):
    S = numerical(values)
    bound = 3 * max(values)
    assert S.elements_up_to(bound) == oracles.brute_elements(S.generators, S.rho, bound)


def test_fiber_cap():
    S = sg.new_semigroup([(1,), (2,), (3,)], fiber_cap=10)
    with pytest.raises(FiberCapExceeded):
        S.factorizations((30,))


def test_lift_examples():
    H = sg.lift_hom(numerical([10, 11, 14, 19]))
    assert H.generators == ((1, 0), (1, 10), (1, 11), (1, 14), (1, 19))
    E = sg.lift_eq(numerical([31, 47, 57]))
    assert E.generators == ((1, 31), (1, 47), (1, 57))
    for T in (H, E):
        assert T.omega == (1, 0)
        assert T.rho == (1, 0)


@given(d1_gens.filter(lambda v: min(v) >= 2), st.integers(0, 60), st.integers(0, 12))
def test_lift_eq_membership(values, a, i):
    # (i, a) lies in the equal lift iff a lies in S and i is a length of a
    S = numerical(values)
    E = sg.lift_eq(S)
    lens = {sum(u) for u in S.factorizations((a,))}
    assert E.member((i, a)) == (i in lens)


@given(d1_gens, st.integers(0, 50), st.integers(0, 10))
def test_lift_hom_fiber_law(values, a, i):
    S = numerical(values)
    H = sg.lift_hom(S)
    expect = sorted((i - sum(u),) + u for u in S.factorizations((a,)) if sum(u) <= i)
    assert H.factorizations((i, a)) == expect


def test_lift_eq_fiber_law():
    S = numerical([3, 5, 7])
    E = sg.lift_eq(S)
    for a in range(40):
        for i in range(15):
            expect = [u for u in S.factorizations((a,)) if sum(u) == i]
            assert E.factorizations((i, a)) == expect


def test_atoms_removal_changes_membership():
    S = numerical([5, 7, 9, 11])
    for k, g in enumerate(S.generators):
        rest = [h for j, h in enumerate(S.generators) if j != k]
        assert not sg.new_semigroup(rest).member(g)


def test_parse_generators():
    assert sg.parse_generators("31,47,57") == [(31,), (47,), (57,)]
    assert sg.parse_generators("1 0; 1 3; 1 5; 1 7") == TWO_D
    assert sg.parse_generators('{"generators": [[1, 0], [1, 3]]}') == [(1, 0), (1, 3)]
    assert sg.parse_generators("[2, 3]") == [(2,), (3,)]
    for bad in ["", "1,a", '{"gens": []}', "{", '{"generators": [[1, "x"]]}']:
        with pytest.raises(InvalidSemigroup):
            sg.parse_generators(bad)


def test_parse_element():
    assert sg.parse_element("564", 1) == (564,)
    assert sg.parse_element("4 12", 2) == (4, 12)
    with pytest.raises(InvalidSemigroup):
        sg.parse_element("4", 2)
    with pytest.raises(InvalidSemigroup):
        sg.parse_element("x", 1)


def test_equality_and_hash():
    assert numerical([2, 3]) == numerical([2, 3])
    assert len({numerical([2, 3]), numerical([2, 3])}) == 1
    assert "AffineSemigroup<2, 3>" == repr(numerical([2, 3]))
