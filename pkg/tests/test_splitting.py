from collections import Counter

import pytest
from hypothesis import assume, given, settings, strategies as st

from conftest import invariants
from jinvariant.errors import InconsistentInput, InvalidInput, LengthMismatch
from jinvariant.jprofile import JProfile
from jinvariant.polyring import IntPoly, evaluate
from jinvariant.splitting import (
    F_polynomial,
    SplittingInput,
    degree_one_multiset_rule,
    p_primary_part,
    split_transform,
    verify_identity,
)

D4_LIKE = JProfile(None, 2, [1, 1, 3, 5], [3, 3, 3, 3])
FLAT = JProfile(None, 2, [1, 1])


def test_F_polynomial_examples():
    assert F_polynomial(8, 1, 2) == IntPoly([1, 0, 1, 0, 1, 0, 1])
    assert F_polynomial(8, 0, 2) == IntPoly([1] * 8)
    assert F_polynomial(4, 2, 2) == IntPoly([1])
    with pytest.raises(InvalidInput):
        F_polynomial(4, 3, 2)
    with pytest.raises(InvalidInput):
        F_polynomial(6, 1, 2)


def test_input_validation():
    J = FLAT.invariant([2, 0])
    with pytest.raises(InvalidInput):
        SplittingInput(J, 12, 1)
    with pytest.raises(InvalidInput):
        SplittingInput(J, 4, 3)
    assert p_primary_part(12, 2) == 4
    assert p_primary_part(12, 3) == 3


def test_split_transform_d_case():
    res = split_transform(SplittingInput(D4_LIKE.invariant([2, 1, 1, 0]), 8, 2))
    assert res.components == (0, 1, 1, 0)
    assert sorted(res.J1_after) == [0, 1]
    assert res.higher_after == (1, 0)
    assert res.changed_slot == 0
    assert res.F == F_polynomial(8, 2, 2)


def test_split_transform_trivial_and_inconsistent():
    J = D4_LIKE.invariant([2, 1, 1, 0])
    res = split_transform(SplittingInput(J, 8, 0))
    assert res.components == J.components and res.changed_slot is None
    with pytest.raises(InconsistentInput):
        split_transform(SplittingInput(JProfile(None, 2, [1, 1]).invariant([1, 0]), 8, 3))


def test_canonical_slot_is_first_match():
    prof = JProfile(None, 3, [1, 1, 1, 2])
    res = split_transform(SplittingInput(prof.invariant([1, 2, 2, 1]), 27, 2))
    assert res.components == (1, 0, 2, 1)


def test_verify_identity_examples():
    J = FLAT.invariant([2, 0])
    ok = verify_identity(J, [0, 0], 4, 2)
    assert ok.holds and ok.divided_holds
    tm1 = IntPoly.t_power_minus_one
    assert ok.lhs == tm1(4) * tm1(1) * tm1(1)
    assert verify_identity(J, [2, 0], 4, 0)
    bad = verify_identity(J, [1, 0], 4, 2)
    assert not bad.holds and not bad
    assert bad.lhs != bad.rhs
    with pytest.raises(LengthMismatch):
        verify_identity(J, [0], 4, 2)


@st.composite
def splitting_inputs(draw):
    J = draw(invariants(primes=(2, 3), max_r=5, max_bound=3))
    p = J.profile.p
    ones = [j for d, j in zip(J.profile.degrees, J.components) if d == 1]
    jga = draw(st.sampled_from(sorted(set(ones) | {0})))
    s = draw(st.integers(jga, 6))
    return SplittingInput(J, p**s, jga)


@settings(max_examples=300, deadline=None)
@given(splitting_inputs())
def test_round_trip(inp):
    res = split_transform(inp)
    check = verify_identity(inp.J, res.components, inp.n, inp.jGA)
    assert check.holds and check.divided_holds
    degrees = inp.J.profile.degrees
    before1 = [j for d, j in zip(degrees, inp.J.components) if d == 1]
    assert res.higher_after == tuple(j for d, j in zip(degrees, inp.J.components) if d > 1)
    assert len(res.J1_after) == len(before1)
    assert degree_one_multiset_rule(before1, res.J1_after, inp.jGA)
    assert evaluate(res.F, 1) * inp.p**inp.jGA == inp.n
    q = inp.p**inp.jGA
    assert res.F == IntPoly.from_terms({k * q: 1 for k in range(inp.n // q)})
    if res.components != inp.J.components:
        k = res.changed_slot
        assert inp.J.components[k] != res.components[k] == 0 and degrees[k] == 1


@settings(max_examples=200, deadline=None)
@given(splitting_inputs(), st.data())
def test_wrong_after_fails_identity(inp, data):
    res = split_transform(inp)
    bounds = inp.J.profile.bounds
    other = tuple(data.draw(st.integers(0, k)) for k in bounds)
    degrees = inp.J.profile.degrees
    # identity pins the multiset of d_i p^j_i
    assume(Counter(d * inp.p**j for d, j in zip(degrees, other))
           != Counter(d * inp.p**j for d, j in zip(degrees, res.components)))
    assert not verify_identity(inp.J, other, inp.n, inp.jGA).holds


def test_multiset_rule():
    assert degree_one_multiset_rule([2, 1], [0, 1], 2)
    assert not degree_one_multiset_rule([2, 1], [1, 1], 2)
