import pytest
from hypothesis import given, settings, strategies as st

from extsys.errors import BadParams, NotApplicable, NotPrime, SnakeTooShort
from extsys.lattice import Algebra, in_lattice, parse_algebra
from extsys.snakes import snakes_in_window, validate_snake
from extsys.tsystem import (
    Family, RelationInstance, W, Wt, dominant_catalog, extended_relation, family_instance,
    nonprime_report, printed_participants, verify_nonprime, verify_relation,
)

A2, A3, B2, B3 = (parse_algebra(x) for x in ("A2", "A3", "B2", "B3"))


def rel(alg, *pts):
    return extended_relation(validate_snake(alg, list(pts)))


@pytest.mark.parametrize("alg,pts,line", [
    (A2, [(1, 0), (1, 2)], "3*3 = 6*1 + 1*3"),
    (B2, [(2, 1), (2, 3)], "4*4 = 11*1 + 1*5"),
    (B2, [(1, 0), (2, 5), (1, 10)], "16*16 = 60*4 + 4*4"),
])
def test_relation_dimensions(alg, pts, line):
    rep = verify_relation(rel(alg, *pts))
    assert rep.verified and rep.dims_line() == line


def test_relation_participants():
    r = rel(B2, (1, 0), (2, 5), (1, 10))
    assert r.left.points == ((1, 0), (2, 5)) and r.right.points == ((2, 5), (1, 10))
    assert r.bottom.points == ((2, 5),)
    assert {r.x.points, r.y.points} == {((2, 1),), ((2, 9),)}
    assert set(r.participants()) == set("LRTBXY")
    assert r.to_json()["T"] == [[1, 0], [2, 5], [1, 10]]


def test_relation_errors():
    with pytest.raises(SnakeTooShort):
        rel(A2, (1, 0))
    with pytest.raises(NotPrime):
        rel(A2, (1, 0), (1, 6))


def test_dominant_catalog():
    s = validate_snake(B2, [(1, 0), (2, 5), (1, 10)])
    lhs, tb = dominant_catalog(s)
    assert len(lhs) == 3 and tb == lhs[1:]
    assert lhs[-1] == s.drop_last().monomial() * s.drop_first().monomial()


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "B3"])
def test_relations_hold_in_window(name):
    alg = parse_algebra(name)
    for n in (2, 3):
        for s in snakes_in_window(alg, n, 0, 12, prime_only=True):
            rep = verify_relation(extended_relation(s))
            assert rep.verified, (str(s), rep.notes)
            assert len(rep.lhs_dominant) == len(s)


def test_nonprime():
    assert verify_nonprime(validate_snake(B2, [(2, 1), (2, 11)]))
    assert verify_nonprime(validate_snake(A2, [(1, 0), (1, 6)]))
    rep = nonprime_report(validate_snake(A2, [(1, 0), (1, 4), (1, 6)]))
    # nested strings: simple product with two dominant monomials
    assert rep.verified and not rep.special
    with pytest.raises(NotApplicable):
        verify_nonprime(validate_snake(A2, [(1, 0), (1, 2)]))
    with pytest.raises(SnakeTooShort):
        verify_nonprime(validate_snake(A2, [(1, 0)]))


def test_family_examples():
    r = family_instance(Family.KR, A2, {"i": 1, "k": 0, "m": 2})
    assert r.top.points == ((1, 0), (1, 2))
    r = family_instance(Family.KR, B2, {"i": 2, "k": 1, "m": 2})
    assert r.top.points == ((2, 1), (2, 3))
    r = family_instance(Family.B_WRAPPING, B2, {"k": 0, "lam": [1], "spin": 0, "lam_bar": [1]})
    assert r.top.points == ((1, 0), (2, 5), (1, 10))


def test_string_builders():
    assert W(A3, 1, 0, [2]) == validate_snake(A3, [(1, 0), (1, 2)]).monomial()
    assert W(A3, 1, 0, [1, 1]) == validate_snake(A3, [(1, 0), (2, 3)]).monomial()
    assert Wt(A3, 3, 0, [1, 1]) == validate_snake(A3, [(3, 0), (2, 3)]).monomial()


def test_family_bad_params():
    with pytest.raises(BadParams):
        family_instance(Family.KR, A2, {"i": 1})
    with pytest.raises(BadParams):
        family_instance(Family.B_WRAPPING, A2, {"k": 0, "lam": [1], "spin": 0, "lam_bar": [1]})
    with pytest.raises(BadParams):
        family_instance(Family.B_MIN_AFF, A3, {"k": 0, "lam": [1, 0, 1]})


def _first_k(alg, i):
    return next(k for k in range(4) if in_lattice(alg, i, k))


@pytest.mark.parametrize("name", ["A3", "A4", "B2", "B3"])
def test_kr_and_two_node_families(name):
    alg = parse_algebra(name)
    for i in alg.nodes:
        k = _first_k(alg, i)
        for m in (2, 3, 4):
            family_instance(Family.KR, alg, {"i": i, "k": k, "m": m})
        for m in (1, 2, 3):
            for n in (1, 2, 3):
                if i < alg.rank:
                    family_instance(Family.TWO_NODE, alg, {"i": i, "k": k, "m": m, "n": n})
                if i > 1:
                    family_instance(Family.TWO_NODE_TILDE, alg, {"i": i, "k": k, "m": m, "n": n})


@pytest.mark.parametrize("fam,name", [
    (Family.A_MIN_AFF, "A3"), (Family.A_MIN_AFF_TILDE, "A3"),
    (Family.B_MIN_AFF, "B3"), (Family.B_MIN_AFF_TILDE, "B3"),
])
def test_minimal_affinization_families(fam, name):
    import itertools
    alg = parse_algebra(name)
    built = 0
    for lam in itertools.product(range(3), repeat=alg.rank):
        for k in range(4):
            try:
                family_instance(fam, alg, {"k": k, "lam": list(lam)})
            except BadParams:
                continue
            built += 1
    assert built > 0


@pytest.mark.parametrize("name,longest", [("B2", 5), ("B3", 3)])
def test_wrapping_family(name, longest):
    import itertools
    alg = parse_algebra(name)
    built = 0
    for lam in itertools.product(range(2), repeat=alg.rank - 1):
        for bar in itertools.product(range(2), repeat=alg.rank - 1):
            for spin in (0, 1):
                try:
                    r = family_instance(Family.B_WRAPPING, alg,
                                        {"k": 0, "lam": list(lam), "spin": spin, "lam_bar": list(bar)})
                except BadParams:
                    continue
                if len(r.top.points) > longest:
                    continue
                built += 1
                assert verify_relation(r).identity_holds
    assert built > 0


def test_printed_participants_shape():
    p = printed_participants(Family.KR, A3, {"i": 2, "k": 1, "m": 3})
    assert set(p) == {"T", "L", "R", "B", "XY"} and len(p["XY"]) == 2


@settings(max_examples=25)
@given(st.sampled_from(["A2", "A3", "B2"]), st.integers(0, 10**6))
def test_shift_invariance(name, seed):
    import random
    alg = parse_algebra(name)
    pool = list(snakes_in_window(alg, 2, 0, 10, prime_only=True))
    s = random.Random(seed).choice(pool)
    a = verify_relation(extended_relation(s))
    b = verify_relation(extended_relation(s.shifted(4)))
    assert a.dims == b.dims and a.verified and b.verified
