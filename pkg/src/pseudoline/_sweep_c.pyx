# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled sweep kernel.

Mirrors ``_sweep_py`` exactly: same conventions, same return structures.
The hot loops run over C integer arrays; the results are converted back to
plain Python lists so downstream code sees identical objects either way.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

from ._sweep_py import SweepResult


cdef int* _alloc(Py_ssize_t count, int fill) except NULL:
    cdef int* buf = <int*> PyMem_Malloc(count * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(count):
        buf[i] = fill
    return buf


cdef list _to_list(int* buf, Py_ssize_t count):
    cdef Py_ssize_t i
    cdef list out = [0] * count
    for i in range(count):
        out[i] = buf[i]
    return out


def sweep_arrays(int n, swaps):
    """Sweep a validated swap sequence; no validation is repeated here."""
    cdef Py_ssize_t nsteps = len(swaps)
    cdef Py_ssize_t nfaces = n + 1 + nsteps
    cdef int wpl = n - 1

    cdef int* cross_u = NULL
    cdef int* cross_v = NULL
    cdef int* cross_track = NULL
    cdef int* wire_steps = NULL
    cdef int* upper_face = NULL
    cdef int* lower_face = NULL
    cdef int* face_open = NULL
    cdef int* face_close = NULL
    cdef int* face_region = NULL
    cdef int* perm = NULL
    cdef int* region_face = NULL
    cdef int* cross_count = NULL

    cdef Py_ssize_t s
    cdef int t, u, v, cu, cv, eu, ev, next_face, p, w, e, r

    try:
        cross_u = _alloc(nsteps, 0)
        cross_v = _alloc(nsteps, 0)
        cross_track = _alloc(nsteps, 0)
        wire_steps = _alloc(n * (n - 1), 0)
        upper_face = _alloc(n * n, -1)
        lower_face = _alloc(n * n, -1)
        face_open = _alloc(nfaces, -1)
        face_close = _alloc(nfaces, -1)
        face_region = _alloc(nfaces, 0)
        perm = _alloc(n, 0)
        region_face = _alloc(n + 1, 0)
        cross_count = _alloc(n + 1, 0)

        for r in range(n):
            perm[r] = r + 1
        for r in range(n + 1):
            region_face[r] = r
            face_region[r] = r
        next_face = n + 1

        for s in range(nsteps):
            t = swaps[s]
            u = perm[t - 1]
            v = perm[t]
            cross_u[s] = u
            cross_v[s] = v
            cross_track[s] = t
            cu = cross_count[u]
            cv = cross_count[v]
            eu = (u - 1) * n + cu
            ev = (v - 1) * n + cv
            upper_face[eu] = region_face[t - 1]
            lower_face[eu] = region_face[t]
            upper_face[ev] = region_face[t]
            lower_face[ev] = region_face[t + 1]
            face_close[region_face[t]] = <int> s
            face_open[next_face] = <int> s
            face_region[next_face] = t
            region_face[t] = next_face
            next_face += 1
            wire_steps[(u - 1) * wpl + cu] = <int> s
            wire_steps[(v - 1) * wpl + cv] = <int> s
            cross_count[u] = cu + 1
            cross_count[v] = cv + 1
            perm[t - 1] = v
            perm[t] = u

        for p in range(n):
            w = perm[p]
            e = (w - 1) * n + cross_count[w]
            upper_face[e] = region_face[p]
            lower_face[e] = region_face[p + 1]

        return SweepResult(
            n,
            _to_list(cross_u, nsteps),
            _to_list(cross_v, nsteps),
            _to_list(cross_track, nsteps),
            _to_list(wire_steps, n * (n - 1)),
            _to_list(upper_face, n * n),
            _to_list(lower_face, n * n),
            _to_list(face_open, nfaces),
            _to_list(face_close, nfaces),
            _to_list(face_region, nfaces),
        )
    finally:
        PyMem_Free(cross_u)
        PyMem_Free(cross_v)
        PyMem_Free(cross_track)
        PyMem_Free(wire_steps)
        PyMem_Free(upper_face)
        PyMem_Free(lower_face)
        PyMem_Free(face_open)
        PyMem_Free(face_close)
        PyMem_Free(face_region)
        PyMem_Free(perm)
        PyMem_Free(region_face)
        PyMem_Free(cross_count)


def census_sides(int n, swaps):
    """Sorted side counts of the bounded faces, without building edge arrays."""
    cdef unsigned char* opened = NULL
    cdef int* sides = NULL
    cdef Py_ssize_t s, nsteps = len(swaps)
    cdef int t, r
    cdef list out = []
    try:
        opened = <unsigned char*> PyMem_Malloc(n * sizeof(unsigned char))
        if opened == NULL:
            raise MemoryError()
        sides = _alloc(n, 2)
        for r in range(n):
            opened[r] = 0
        for s in range(nsteps):
            t = swaps[s]
            if opened[t]:
                out.append(sides[t])
            opened[t] = 1
            sides[t] = 2
            if t - 1 >= 1:
                sides[t - 1] += 1
            if t + 1 <= n - 1:
                sides[t + 1] += 1
        out.sort()
        return out
    finally:
        PyMem_Free(opened)
        PyMem_Free(sides)
