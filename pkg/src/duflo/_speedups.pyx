# cython: language_level=3
"""Compiled exact-arithmetic kernels.

Mirrors duflo._kernels_py exactly; arithmetic stays on Python ints so
arbitrary precision is preserved, the speedup comes from typed loop
indices and list access.
"""

from math import gcd

BACKEND = "cython"


def matmul_pairs(list anum, list aden, list bnum, list bden,
                 Py_ssize_t n, Py_ssize_t k, Py_ssize_t m):
    cdef Py_ssize_t i, j, t, arow, out
    cdef object num, den, p, q, g
    cdef list cnum = [0] * (n * m)
    cdef list cden = [1] * (n * m)
    for i in range(n):
        arow = i * k
        for j in range(m):
            num = 0
            den = 1
            for t in range(k):
                p = anum[arow + t] * bnum[t * m + j]
                if p == 0:
                    continue
                q = aden[arow + t] * bden[t * m + j]
                num = num * q + p * den
                den = den * q
            if num:
                g = gcd(num, den)
                out = i * m + j
                cnum[out] = num // g
                cden[out] = den // g
    return cnum, cden


cdef void _reduce_row(list row, Py_ssize_t ncols):
    cdef Py_ssize_t j
    cdef object g = 0
    for j in range(ncols):
        if row[j]:
            g = gcd(g, row[j])
            if g == 1:
                return
    if g > 1:
        for j in range(ncols):
            row[j] = row[j] // g


def rref_int(rows, Py_ssize_t nrows, Py_ssize_t ncols):
    cdef Py_ssize_t r, c, i, j, sel
    cdef object p, f
    cdef list work = [list(row) for row in rows]
    cdef list wi, wr
    cdef list piv_cols = []
    r = 0
    for c in range(ncols):
        sel = -1
        for i in range(r, nrows):
            if (<list>work[i])[c] != 0:
                sel = i
                break
        if sel < 0:
            continue
        if sel != r:
            work[r], work[sel] = work[sel], work[r]
        wr = <list>work[r]
        if wr[c] < 0:
            for j in range(ncols):
                wr[j] = -wr[j]
        _reduce_row(wr, ncols)
        p = wr[c]
        for i in range(nrows):
            if i == r:
                continue
            wi = <list>work[i]
            if wi[c] == 0:
                continue
            f = wi[c]
            for j in range(ncols):
                wi[j] = wi[j] * p - wr[j] * f
            _reduce_row(wi, ncols)
        piv_cols.append(c)
        r += 1
        if r == nrows:
            break
    return piv_cols, work[:r]
