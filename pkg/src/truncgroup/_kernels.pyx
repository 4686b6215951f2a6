# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled sparse kernels.  Semantics mirror ``_kernels_py`` exactly."""

from cpython.dict cimport PyDict_GetItem, PyDict_SetItem, PyDict_Next
from cpython.ref cimport PyObject


def mul_into(dict out, dict a, dict b):
    cdef Py_ssize_t pa = 0, pb
    cdef PyObject *ka
    cdef PyObject *va
    cdef PyObject *kb
    cdef PyObject *vb
    cdef PyObject *prev
    cdef object k, term
    while PyDict_Next(a, &pa, &ka, &va):
        pb = 0
        while PyDict_Next(b, &pb, &kb, &vb):
            k = (<object>ka) + (<object>kb)
            term = (<object>va) * (<object>vb)
            prev = PyDict_GetItem(out, k)
            if prev is NULL:
                PyDict_SetItem(out, k, term)
            else:
                PyDict_SetItem(out, k, (<object>prev) + term)
    return out


def axpy_into(dict out, dict a, object c):
    cdef Py_ssize_t pos = 0
    cdef PyObject *k
    cdef PyObject *v
    cdef PyObject *prev
    cdef object term
    while PyDict_Next(a, &pos, &k, &v):
        term = c * (<object>v)
        prev = PyDict_GetItem(out, <object>k)
        if prev is NULL:
            PyDict_SetItem(out, <object>k, term)
        else:
            PyDict_SetItem(out, <object>k, (<object>prev) + term)
    return out


def add_into(dict out, dict a):
    cdef Py_ssize_t pos = 0
    cdef PyObject *k
    cdef PyObject *v
    cdef PyObject *prev
    while PyDict_Next(a, &pos, &k, &v):
        prev = PyDict_GetItem(out, <object>k)
        if prev is NULL:
            PyDict_SetItem(out, <object>k, <object>v)
        else:
            PyDict_SetItem(out, <object>k, (<object>prev) + (<object>v))
    return out


def pruned(dict d):
    cdef dict res = {}
    cdef Py_ssize_t pos = 0
    cdef PyObject *k
    cdef PyObject *v
    while PyDict_Next(d, &pos, &k, &v):
        if <object>v:
            PyDict_SetItem(res, <object>k, <object>v)
    return res


def sparse_mul(dict a, dict b):
    return pruned(mul_into({}, a, b))


def cyclo_mul(a, b, table):
    cdef Py_ssize_t deg = len(a), i, j, t
    cdef list la = list(a), lb = list(b)
    cdef list conv = [0] * (2 * deg - 1)
    cdef object row
    cdef object x, y, c
    for i in range(deg):
        x = la[i]
        if x:
            for j in range(deg):
                y = lb[j]
                if y:
                    conv[i + j] = conv[i + j] + x * y
    for j in range(2 * deg - 2, deg - 1, -1):
        c = conv[j]
        if c:
            row = table[j - deg]
            for t in range(deg):
                if row[t]:
                    conv[t] = conv[t] + c * row[t]
    return conv[:deg]
