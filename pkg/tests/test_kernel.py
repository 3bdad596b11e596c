import numpy as np
import pytest
from hypothesis import given, strategies as st

from extsys import _kernel_py, kernel
from extsys.lattice import Algebra
from extsys.qchar import _path_arrays
from extsys.snakes import snakes_in_window

compiled = pytest.importorskip("extsys._kernel")


def _arrays(s):
    lo, hi = zip(*(_path_arrays(s.alg, i, k) for i, k in s.points))
    return list(lo), list(hi)


def _run(fn, lo, hi, cap):
    tuples, visited, overflow = fn(lo, hi, cap)
    return sorted(map(tuple, np.asarray(tuples).tolist())), visited, overflow


def test_backend_selected():
    assert kernel.BACKEND in ("cython", "python")


@pytest.mark.parametrize("name", ["A3", "B2", "B3"])
def test_backends_agree_on_snakes(name):
    kind, rank = name[0], int(name[1])
    for n in (1, 2, 3):
        for s in list(snakes_in_window(Algebra(kind, rank), n, 0, 12))[:40]:
            lo, hi = _arrays(s)
            assert _run(compiled.enumerate_tuples, lo, hi, 10**6) == _run(
                _kernel_py.enumerate_tuples, lo, hi, 10**6)


def test_backends_agree_on_overflow():
    s = next(iter(snakes_in_window(Algebra("B", 3), 3, 0, 12)))
    lo, hi = _arrays(s)
    for cap in (1, 5, 17):
        a = compiled.enumerate_tuples(lo, hi, cap)
        b = _kernel_py.enumerate_tuples(lo, hi, cap)
        assert a[2] and b[2] and a[1] == b[1]


def test_empty_input():
    for fn in (compiled.enumerate_tuples, _kernel_py.enumerate_tuples):
        tuples, visited, overflow = fn([], [], 10)
        assert tuples.shape == (1, 0) and visited == 0 and not overflow


@given(st.integers(1, 3), st.integers(1, 6), st.integers(1, 4), st.integers(0, 2**32 - 1))
def test_backends_agree_on_random_arrays(T, paths, width, seed):
    rng = np.random.default_rng(seed)
    lo, hi = [], []
    for _ in range(T):
        a = rng.integers(0, 12, size=(paths, width)).astype(np.int64)
        b = a + rng.integers(0, 3, size=(paths, width))
        lo.append(a)
        hi.append(b)
    assert _run(compiled.enumerate_tuples, lo, hi, 10**5) == _run(
        _kernel_py.enumerate_tuples, lo, hi, 10**5)
