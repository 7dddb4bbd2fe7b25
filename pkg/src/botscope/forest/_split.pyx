# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled split-search kernel.

Companion to _split_py: identical arithmetic and tie-breaking, run as a
single C pass per candidate column (copy, sort, prefix scan).
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND_NAME = "compiled"


cdef void _sort_pairs(double* xs, signed char* ys, Py_ssize_t lo, Py_ssize_t hi) noexcept nogil:
    # quicksort by xs with insertion sort below 16 elements; recursion only
    # on the smaller side keeps the stack logarithmic
    cdef Py_ssize_t i, j, li, ri
    cdef double pivot, tx
    cdef signed char ty
    while hi - lo > 15:
        # median-of-three pivot
        i = lo + (hi - lo) // 2
        if xs[i] < xs[lo]:
            tx = xs[i]; xs[i] = xs[lo]; xs[lo] = tx
            ty = ys[i]; ys[i] = ys[lo]; ys[lo] = ty
        if xs[hi] < xs[lo]:
            tx = xs[hi]; xs[hi] = xs[lo]; xs[lo] = tx
            ty = ys[hi]; ys[hi] = ys[lo]; ys[lo] = ty
        if xs[hi] < xs[i]:
            tx = xs[hi]; xs[hi] = xs[i]; xs[i] = tx
            ty = ys[hi]; ys[hi] = ys[i]; ys[i] = ty
        pivot = xs[i]
        li = lo
        ri = hi
        while li <= ri:
            while xs[li] < pivot:
                li += 1
            while xs[ri] > pivot:
                ri -= 1
            if li <= ri:
                tx = xs[li]; xs[li] = xs[ri]; xs[ri] = tx
                ty = ys[li]; ys[li] = ys[ri]; ys[ri] = ty
                li += 1
                ri -= 1
        if ri - lo < hi - li:
            _sort_pairs(xs, ys, lo, ri)
            lo = li
        else:
            _sort_pairs(xs, ys, li, hi)
            hi = ri
    for i in range(lo + 1, hi + 1):
        tx = xs[i]
        ty = ys[i]
        j = i - 1
        while j >= lo and xs[j] > tx:
            xs[j + 1] = xs[j]
            ys[j + 1] = ys[j]
            j -= 1
        xs[j + 1] = tx
        ys[j + 1] = ty


def best_split(double[:, ::1] X, signed char[::1] y, Py_ssize_t min_leaf):
    """Same contract and arithmetic as _split_py.best_split."""
    cdef Py_ssize_t n = X.shape[0]
    cdef Py_ssize_t k = X.shape[1]
    if n < 2 or k == 0:
        return None

    xs_arr = np.empty(n, dtype=np.float64)
    ys_arr = np.empty(n, dtype=np.int8)
    cdef double[::1] xs = xs_arr
    cdef signed char[::1] ys = ys_arr

    cdef Py_ssize_t total_pos = 0
    cdef Py_ssize_t i, j
    for i in range(n):
        total_pos += y[i]

    cdef double best_g = -np.inf
    cdef Py_ssize_t best_col = -1
    cdef Py_ssize_t best_i = -1
    cdef double best_a = 0.0
    cdef double best_b = 0.0

    cdef Py_ssize_t pos, nl, nr, posl, negl, posr, negr
    cdef double g, gl, gr, thr

    with nogil:
        for j in range(k):
            for i in range(n):
                xs[i] = X[i, j]
                ys[i] = y[i]
            _sort_pairs(&xs[0], &ys[0], 0, n - 1)
            pos = 0
            for i in range(n - 1):
                pos += ys[i]
                if xs[i] == xs[i + 1]:
                    continue
                nl = i + 1
                nr = n - nl
                if nl < min_leaf or nr < min_leaf:
                    continue
                posl = pos
                negl = nl - pos
                posr = total_pos - pos
                negr = nr - posr
                gl = (<double> (posl * posl + negl * negl)) / (<double> nl)
                gr = (<double> (posr * posr + negr * negr)) / (<double> nr)
                g = gl + gr
                if g > best_g:
                    best_g = g
                    best_col = j
                    best_i = i
                    best_a = xs[i]
                    best_b = xs[i + 1]

    if best_col < 0:
        return None
    thr = (best_a + best_b) / 2.0
    if thr >= best_b:
        thr = best_a
    return best_col, thr, best_g, best_i + 1
