from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from extsys.b2restrict import (
    WEYL_GROUP, GCharacter, GWeight, character_of, decompose, s1, s2, verify_b2_qsystem,
    weyl_character, weyl_dimension, weyl_numerator, wq_character, wq_decompose, wq_dimension,
    wq_expected, wq_points,
)
from extsys.errors import BadParams, NotACharacter, NotDominant


def as_counter(c: GCharacter) -> Counter:
    return Counter({tuple(w): v for w, v in c.items()})


def test_weyl_data_matches_frozen_oracle(frozen):
    for case in frozen["b2_weyl"]:
        lam = tuple(case["lam"])
        assert as_counter(weyl_numerator(lam)) == Counter({tuple(w): c for w, c in case["numerator"]})
        assert as_counter(weyl_character(lam)) == Counter({tuple(w): c for w, c in case["character"]})
        assert weyl_dimension(lam) == case["dim"] == weyl_character(lam).dim()


@pytest.mark.parametrize("lam", [(0, 0), (1, 0), (0, 1), (2, 1), (1, 3), (3, 2)])
def test_weyl_character_against_oracle(lam):
    assert as_counter(weyl_character(lam)) == oracles.b2_character_by_division(*lam)
    assert weyl_dimension(lam) == oracles.weyl_dim_b2(*lam)


def test_weyl_group():
    assert len(WEYL_GROUP) == 8
    images = {f(GWeight(3, 5)) for _, f in WEYL_GROUP}
    assert len(images) == 8
    assert sum(sign for sign, _ in WEYL_GROUP) == 0
    w = GWeight(2, -1)
    assert s1(s1(w)) == w and s2(s2(w)) == w


@settings(max_examples=40)
@given(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(1, 3), max_size=3))
def test_decompose_round_trip(mults):
    c = character_of(mults)
    assert c.is_weyl_symmetric()
    assert decompose(c) == {GWeight(*w): m for w, m in mults.items()}


def test_wq_examples():
    assert wq_decompose(1, 1, 1) == {GWeight(2, 1): 1, GWeight(0, 3): 1}
    assert wq_character(1, 1, 1).dim() == 60 == wq_dimension(1, 0, 1)
    assert wq_decompose(0, 3, 0) == {GWeight(0, 3): 1, GWeight(0, 1): 1}
    assert wq_points(1, 1, 1) == [(1, 0), (2, 5), (1, 10)]


@pytest.mark.parametrize("m,mid,n", [(1, 0, 0), (0, 2, 0), (2, 1, 0), (1, 2, 1), (0, 5, 0), (2, 3, 1)])
def test_wq_matches_closed_form(m, mid, n):
    got = wq_decompose(m, mid, n)
    assert got == wq_expected(m, mid, n)
    if mid % 2:
        assert sum(weyl_dimension(w) * c for w, c in got.items()) == wq_dimension(m, mid // 2, n)


def test_qsystem():
    rep = verify_b2_qsystem(1)
    assert rep.ok and {c.relation for c in rep.checks} == {1, 2, 3, 4}
    assert rep.to_json()["ok"] is True


def test_gcharacter_json_round_trip():
    c = weyl_character((1, 2)) * 2 - GCharacter.of((0, 0))
    assert GCharacter.from_json(c.to_json()) == c


def test_errors():
    with pytest.raises(NotDominant):
        weyl_character((-1, 0))
    with pytest.raises(NotACharacter):
        decompose(weyl_character((1, 0)) - weyl_character((0, 2)))
    with pytest.raises(NotACharacter):
        decompose(GCharacter.of((-1, 0)))
    with pytest.raises(BadParams):
        wq_points(-1, 0, 0)
    with pytest.raises(BadParams):
        verify_b2_qsystem(-1)
