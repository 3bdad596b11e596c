# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled tuple enumeration; same contract as the pure-Python version."""
import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef long long i64


def enumerate_tuples(list lo_list, list hi_list, i64 cap):
    cdef Py_ssize_t T = len(lo_list)
    if T == 0:
        return np.zeros((1, 0), dtype=np.int32), 0, False
    sizes = np.array([np.asarray(arr).shape[0] for arr in lo_list], dtype=np.int64)
    offs = np.zeros(T + 1, dtype=np.int64)
    offs[1:] = np.cumsum(sizes)
    cdef i64[:, ::1] LO = np.ascontiguousarray(np.concatenate(lo_list), dtype=np.int64)
    cdef i64[:, ::1] HI = np.ascontiguousarray(np.concatenate(hi_list), dtype=np.int64)
    cdef i64[::1] off = offs
    cdef Py_ssize_t W = LO.shape[1]
    cdef i64[:, ::1] floor = np.empty((T + 1, W), dtype=np.int64)
    cdef i64[::1] choice = np.full(T, -1, dtype=np.int64)
    cdef Py_ssize_t rows = 0, cap_rows = 1024
    out_arr = np.empty((cap_rows, T), dtype=np.int32)
    cdef int[:, ::1] out = out_arr
    cdef i64 visited = 0
    cdef Py_ssize_t t = 0, x, s, j
    cdef bint ok, overflow = False
    cdef i64 a, b
    for x in range(W):
        floor[0, x] = -(1LL << 60)
    while t >= 0:
        choice[t] += 1
        if off[t] + choice[t] >= off[t + 1]:
            choice[t] = -1
            t -= 1
            continue
        visited += 1
        if visited > cap:
            overflow = True
            break
        j = off[t] + choice[t]
        ok = True
        for x in range(W):
            if floor[t, x] >= LO[j, x]:
                ok = False
                break
        if not ok:
            continue
        for x in range(W):
            a = floor[t, x]
            b = HI[j, x]
            floor[t + 1, x] = a if a > b else b
        if t + 1 == T:
            if rows == cap_rows:
                cap_rows *= 2
                out_arr = np.resize(out_arr, (cap_rows, T))
                out = out_arr
            for s in range(T):
                out[rows, s] = <int>choice[s]
            rows += 1
        else:
            t += 1
    return np.array(out_arr[:rows]), visited, overflow
