import itertools
from collections import Counter
from math import comb

import pytest
from hypothesis import given, strategies as st

import oracles
from extsys.errors import MoveNotApplicable, NotPrimePosition
from extsys.laurent import Y, YMonomial, a_factorize
from extsys.lattice import Algebra, a_monomial, in_lattice
from extsys.paths import (
    bott, can_lower, corners, enumerate_paths, highest_path, lower, lowering_moves, lowest_path,
    path_from_points, path_monomial, raise_, raising_moves, snake_lowered_path, strictly_above,
    weakly_above,
)

A1, A2, B2, B3 = Algebra("A", 1), Algebra("A", 2), Algebra("B", 2), Algebra("B", 3)
SMALL = [A1, A2, Algebra("A", 3), B2, B3]


def test_path_counts_type_a(frozen):
    for n in range(1, 7):
        alg = Algebra("A", n)
        counts = [len(enumerate_paths(alg, i, (i + 1) % 2)) for i in alg.nodes]
        assert counts == frozen["type_a_path_counts"][f"A{n}"]
        assert counts == [comb(n + 1, i) for i in alg.nodes]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_path_counts_spinor(n):
    alg = Algebra("B", n)
    for k in (1, 3):
        assert len(enumerate_paths(alg, n, k)) == 2 ** n


def test_type_a_paths_match_step_words():
    for n, i, k in [(2, 1, 0), (3, 2, 1), (4, 2, 3), (4, 1, 2)]:
        ours = sorted(tuple((x, b) for x, b, _ in p.points) for p in enumerate_paths(Algebra("A", n), i, k))
        assert ours == sorted(oracles.type_a_paths(n, i, k))
        mons = Counter(frozenset(path_monomial(p).items()) for p in enumerate_paths(Algebra("A", n), i, k))
        want = Counter(frozenset(oracles.type_a_monomial(p).items()) for p in oracles.type_a_paths(n, i, k))
        assert mons == want


def _a_path(ys, i=1, k=0):
    return path_from_points(A2, i, k, [(x, y, 0) for x, y in enumerate(ys)])


def test_corner_examples():
    c = corners(_a_path([1, 0, 1, 2]))
    assert c.upper == {(1, 0)} and not c.lower
    c = corners(_a_path([1, 2, 1, 2]))
    assert c.upper == {(2, 1)} and c.lower == {(1, 2)}
    spin = path_from_points(B2, 2, 1, [(6, 4, 0), (4, 2, 0), (3, 1, -1)])
    assert corners(spin).upper == {(2, 1)} and not corners(spin).lower


def test_highest_and_lowest():
    assert path_monomial(highest_path(A2, 1, 0)) == Y(1, 0)
    assert (3, 1, -1) in highest_path(B2, 2, 1).points
    assert (3, 7, 1) in lowest_path(B2, 2, 1).points
    for alg in SMALL:
        for i in alg.nodes:
            k = next(k for k in range(4) if in_lattice(alg, i, k))
            assert not corners(highest_path(alg, i, k)).lower
            assert not corners(lowest_path(alg, i, k)).upper
            assert path_monomial(lowest_path(alg, i, k)).is_antidominant()


def test_moves_examples():
    p = lower(highest_path(A2, 1, 0), 1, 1)
    assert path_monomial(p) == Y(1, 2, -1) * Y(2, 1)
    q = lower(highest_path(B2, 2, 1), 2, 2)
    assert path_monomial(q) == Y(1, 2) * Y(2, 3, -1)
    with pytest.raises(MoveNotApplicable):
        raise_(highest_path(A2, 1, 0), 1, 1)


@pytest.mark.parametrize("alg", SMALL, ids=str)
def test_moves_are_inverse_and_connect_the_set(alg):
    for i in alg.nodes:
        k = next(k for k in range(4) if in_lattice(alg, i, k))
        paths = enumerate_paths(alg, i, k)
        top = highest_path(alg, i, k)
        reached, frontier = {top}, [top]
        while frontier:
            nxt = []
            for p in frontier:
                for j, l in lowering_moves(p):
                    q = lower(p, j, l)
                    assert path_monomial(q) == path_monomial(p) / a_monomial(alg, j, l)
                    assert raise_(q, j, l) == p
                    assert (j, l) in raising_moves(q)
                    if q not in reached:
                        reached.add(q)
                        nxt.append(q)
            frontier = nxt
        assert reached == set(paths)


@pytest.mark.parametrize("alg", SMALL, ids=str)
def test_monomials_lie_below_the_highest(alg):
    for i in alg.nodes:
        k = next(k for k in range(4) if in_lattice(alg, i, k))
        top = path_monomial(highest_path(alg, i, k))
        mons = [path_monomial(p) for p in enumerate_paths(alg, i, k)]
        assert len(set(mons)) == len(mons)
        for m in mons:
            f = a_factorize(m, top, alg)
            assert all(e < 0 for e in f.values())


def test_snake_lowered_examples():
    p = snake_lowered_path(A2, (1, 0), (1, 2))
    assert [b for _, b, _ in p.points] == [1, 2, 1, 2]
    assert corners(p).upper == {(2, 1)}
    q = snake_lowered_path(B2, (2, 5), (1, 10))
    assert corners(q).upper == {(2, 9)} and corners(q).lower == {(1, 10)}
    assert corners(snake_lowered_path(B2, (1, 0), (2, 5))).upper == {(2, 1)}
    with pytest.raises(NotPrimePosition):
        snake_lowered_path(A2, (1, 0), (1, 8))


def test_bott_and_order():
    paths = enumerate_paths(B2, 1, 0)
    for p, q in itertools.product(paths, repeat=2):
        b = bott(p, q)
        assert b in paths
        assert weakly_above(p, b) and weakly_above(q, b)
    top, bottom = highest_path(A2, 1, 0), highest_path(A2, 1, 4)
    assert strictly_above(top, bottom) and not strictly_above(bottom, top)


@given(st.sampled_from(SMALL).flatmap(lambda a: st.tuples(
    st.just(a), st.sampled_from(list(a.nodes)), st.integers(0, 6))))
def test_lowering_preserves_path_set(case):
    alg, i, k = case
    if not in_lattice(alg, i, k):
        return
    for p in enumerate_paths(alg, i, k):
        for j, l in lowering_moves(p):
            assert can_lower(p, j, l)
            assert lower(p, j, l) in enumerate_paths(alg, i, k)
