import pytest
from hypothesis import given, strategies as st

from extsys.errors import InputError, InvalidLatticePoint, OutOfRange
from extsys.laurent import YMonomial, height
from extsys.lattice import (
    Algebra, a_monomial, algebra_from_json, algebra_to_json, check_point, in_lattice, iota,
    iota_inverse, parse_algebra, simple_root,
)

A2, A3, B2, B3 = Algebra("A", 2), Algebra("A", 3), Algebra("B", 2), Algebra("B", 3)


@pytest.mark.parametrize("text,expected", [("A2", A2), ("b3", B3), (" B 2 ", B2)])
def test_parse_algebra(text, expected):
    assert parse_algebra(text) == expected


@pytest.mark.parametrize("text", ["C3", "A0", "B1", "A", "", "A-1"])
def test_parse_algebra_rejects(text):
    with pytest.raises(InputError):
        parse_algebra(text)


def test_algebra_json_round_trip():
    for alg in (A2, B3):
        assert algebra_from_json(algebra_to_json(alg)) == alg


def test_cartan_type_b_long_short():
    assert B2.cartan(1, 2) == -1
    assert B2.cartan(2, 1) == -2
    assert B3.cartan(2, 3) == -1 and B3.cartan(3, 2) == -2
    assert A3.cartan(1, 3) == 0 and A3.cartan(2, 3) == -1


def test_symmetrizers():
    assert [B3.r(i) for i in B3.nodes] == [2, 2, 1]
    assert [A3.r(i) for i in A3.nodes] == [1, 1, 1]


def test_a_variables():
    assert a_monomial(A2, 1, 1) == YMonomial({(1, 0): 1, (1, 2): 1, (2, 1): -1})
    # the short root variable involves two shifts of the long neighbour
    assert a_monomial(B2, 1, 2) == YMonomial({(1, 0): 1, (1, 4): 1, (2, 1): -1, (2, 3): -1})
    assert a_monomial(B2, 2, 2) == YMonomial({(2, 1): 1, (2, 3): 1, (1, 2): -1})


def test_lattice_parity():
    assert in_lattice(A2, 1, 0) and not in_lattice(A2, 1, 1)
    assert in_lattice(B2, 2, 1) and not in_lattice(B2, 2, 0)
    assert in_lattice(B2, 1, 0) and not in_lattice(B2, 1, 1)
    with pytest.raises(InvalidLatticePoint):
        check_point(A2, 1, 1)
    with pytest.raises(InputError):
        check_point(A2, 3, 0)


def test_iota_examples():
    assert [iota(B2, *p) for p in [(1, 0), (2, 5), (1, 10)]] == [(2, 0), (3, 5), (4, 10)]
    assert iota(A3, 2, 1) == (2, 1)


def test_height():
    assert height(YMonomial({(1, 0): 1, (2, 3): 1}), B2) == 3
    assert height(YMonomial(), B2) == 0


def test_simple_root_weights():
    assert simple_root(A2, 1) == (2, -1)
    assert simple_root(B2, 1) == (2, -2)
    assert simple_root(B2, 2) == (-1, 2)


def _points(alg):
    return st.tuples(st.sampled_from(list(alg.nodes)), st.integers(-20, 40)).filter(
        lambda p: in_lattice(alg, *p)
    )


@given(st.sampled_from([A2, A3, Algebra("A", 5), B2, B3, Algebra("B", 4)]).flatmap(
    lambda a: st.tuples(st.just(a), _points(a))))
def test_iota_round_trip(case):
    alg, (i, k) = case
    assert iota_inverse(alg, *iota(alg, i, k)) == (i, k)


def test_iota_inverse_rejects_off_image():
    with pytest.raises(InvalidLatticePoint):
        iota_inverse(B2, 1, 0)
    with pytest.raises(OutOfRange):
        B2.check_node(3)
