# cython: boundscheck=False, wraparound=False
"""Compiled closure kernels.

Mirrors ``pyfallback`` exactly.  Permutations are packed into bytes
objects (one unsigned char per point), which keeps hashing and set
membership in C.  The dispatcher only routes degrees below 256 here.
"""

from cpython.bytes cimport PyBytes_AS_STRING, PyBytes_FromStringAndSize


cdef bytes _compose(bytes a, bytes g, Py_ssize_t n):
    # right action: result[i] = g[a[i]]
    cdef const unsigned char* pa = <const unsigned char*> PyBytes_AS_STRING(a)
    cdef const unsigned char* pg = <const unsigned char*> PyBytes_AS_STRING(g)
    cdef bytes out = PyBytes_FromStringAndSize(NULL, n)
    cdef unsigned char* po = <unsigned char*> PyBytes_AS_STRING(out)
    cdef Py_ssize_t i
    for i in range(n):
        po[i] = pg[pa[i]]
    return out


def closure(int degree, generators, int cap):
    cdef Py_ssize_t n = degree
    cdef list gens = [bytes(bytearray(raw)) for raw in generators]
    cdef bytes identity = bytes(bytearray(range(degree)))
    cdef set seen = {identity}
    cdef list frontier = [identity]
    cdef list nxt
    cdef bytes a, g, c
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = _compose(a, g, n)
                if c not in seen:
                    if len(seen) >= cap:
                        return None
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return sorted(tuple(e) for e in seen)


def orbit(int degree, generators, int point):
    cdef list gens = [bytes(bytearray(raw)) for raw in generators]
    cdef bytearray reached = bytearray(degree)
    cdef list frontier = [point]
    cdef list nxt
    cdef bytes g
    cdef const unsigned char* pg
    cdef int x, y
    reached[point] = 1
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                pg = <const unsigned char*> PyBytes_AS_STRING(g)
                y = pg[x]
                if not reached[y]:
                    reached[y] = 1
                    nxt.append(y)
        frontier = nxt
    return tuple(i for i in range(degree) if reached[i])


def pair_orbit(int degree, generators, int u, int v):
    cdef int n = degree
    cdef list gens = [bytes(bytearray(raw)) for raw in generators]
    cdef bytearray reached = bytearray(n * n)
    cdef list frontier = [(u, v)]
    cdef list out = [(u, v)]
    cdef list nxt
    cdef bytes g
    cdef const unsigned char* pg
    cdef int a, b, c, d, code
    reached[u * n + v] = 1
    while frontier:
        nxt = []
        for a, b in frontier:
            for g in gens:
                pg = <const unsigned char*> PyBytes_AS_STRING(g)
                c = pg[a]
                d = pg[b]
                code = c * n + d
                if not reached[code]:
                    reached[code] = 1
                    nxt.append((c, d))
                    out.append((c, d))
        frontier = nxt
    out.sort()
    return out
