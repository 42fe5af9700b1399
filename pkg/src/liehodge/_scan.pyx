# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled cocharacter scan.  Same contract as ``_scan_py.scan``."""
import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memset

cnp.import_array()

BACKEND = "cython"

ctypedef long long i64


cdef struct Ctx:
    int rank
    int nweights
    int ncons
    i64 det
    i64 maxlevel
    i64 *adj       # rank x rank, row-major
    i64 *wa        # nweights x rank
    i64 *cons      # ncons x rank
    i64 *adjd      # (rank+1) x rank partial sums of adj . d
    i64 *lev       # (rank+1) x nweights partial sums of wa . d
    i64 *bud       # (rank+1) x ncons remaining budgets
    i64 *d         # current point
    i64 *hist      # 2*maxlevel+1
    i64 *hits
    i64 nhits
    i64 cap
    i64 candidates
    int oom


cdef inline bint _hodge_ok(Ctx *c, i64 *levels) noexcept nogil:
    cdef i64 m = c.maxlevel
    cdef i64 ell = -1, lo = 0, n
    cdef int k, i
    memset(c.hist, 0, (2 * m + 1) * sizeof(i64))
    for k in range(c.nweights):
        n = levels[k]
        if n < -m or n > m:
            return False
        c.hist[n + m] += 1
        if n > ell:
            ell = n
        if n < lo:
            lo = n
    if ell <= 0 or lo != -ell:
        return False
    # support must be exactly {2i - ell}; symmetric dimensions
    for k in range(<int>(-ell), <int>(ell + 1)):
        if (k + ell) % 2 == 0:
            if c.hist[k + m] == 0 or c.hist[k + m] != c.hist[-k + m]:
                return False
        elif c.hist[k + m] != 0:
            return False
    return c.hist[ell + m] >= 3 and c.hist[ell - 2 + m] >= 2


cdef void _leaf(Ctx *c) noexcept nogil:
    cdef int r = c.rank, i
    cdef i64 *adjd = c.adjd + r * r
    cdef i64 *lev = c.lev + r * c.nweights
    cdef i64 *tmp
    for i in range(r):
        if adjd[i] % c.det != 0:
            return
    c.candidates += 1
    # levels are exact multiples of det once adj.d is
    for i in range(c.nweights):
        lev[i] = lev[i] // c.det
    if _hodge_ok(c, lev):
        if c.nhits == c.cap:
            tmp = <i64 *> realloc(c.hits, 2 * c.cap * r * sizeof(i64))
            if tmp == NULL:
                c.oom = 1
                return
            c.hits = tmp
            c.cap *= 2
        for i in range(r):
            c.hits[c.nhits * r + i] = c.d[i]
        c.nhits += 1


cdef void _descend(Ctx *c, int j) noexcept nogil:
    cdef int r = c.rank, nw = c.nweights, nc = c.ncons, i
    cdef i64 *adjd0 = c.adjd + j * r
    cdef i64 *adjd1 = c.adjd + (j + 1) * r
    cdef i64 *lev0 = c.lev + j * nw
    cdef i64 *lev1 = c.lev + (j + 1) * nw
    cdef i64 *bud0 = c.bud + j * nc
    cdef i64 *bud1 = c.bud + (j + 1) * nc
    cdef i64 v = 0
    cdef bint feasible
    for i in range(r):
        adjd1[i] = adjd0[i]
    for i in range(nw):
        lev1[i] = lev0[i]
    for i in range(nc):
        bud1[i] = bud0[i]
    while True:
        c.d[j] = v
        if j + 1 == r:
            _leaf(c)
            # _leaf rescales lev in place; rebuild it for the next value
            for i in range(nw):
                lev1[i] = lev0[i] + (v + 1) * c.wa[i * r + j]
        else:
            _descend(c, j + 1)
            for i in range(nw):
                lev1[i] += c.wa[i * r + j]
        if c.oom:
            return
        v += 1
        feasible = True
        for i in range(nc):
            bud1[i] -= c.cons[i * r + j]
            if bud1[i] < 0:
                feasible = False
        if not feasible:
            break
        for i in range(r):
            adjd1[i] += c.adj[i * r + j]


def scan(adj, det, weights, constraints, budget, prefix):
    cdef cnp.ndarray[i64, ndim=2, mode="c"] a = np.ascontiguousarray(adj, dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=2, mode="c"] w = np.ascontiguousarray(weights, dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=2, mode="c"] k = np.ascontiguousarray(constraints, dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1, mode="c"] p = np.ascontiguousarray(prefix, dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=2, mode="c"] wa = np.ascontiguousarray(w @ a, dtype=np.int64)
    cdef int r = a.shape[0], nw = w.shape[0], nc = k.shape[0], plen = p.shape[0]
    cdef int i, j
    cdef Ctx c
    cdef i64 dt = det
    cdef cnp.ndarray[i64, ndim=1, mode="c"] b0 = np.ascontiguousarray(
        budget - (k[:, :plen] @ p if plen else np.zeros(nc, dtype=np.int64)), dtype=np.int64)
    if nc and b0.min() < 0:
        return np.zeros((0, r), dtype=np.int64), 0

    c.rank = r
    c.nweights = nw
    c.ncons = nc
    c.det = dt
    c.maxlevel = budget // dt + 1
    c.adj = &a[0, 0]
    c.wa = &wa[0, 0]
    c.cons = &k[0, 0]
    c.adjd = <i64 *> malloc((r + 1) * r * sizeof(i64))
    c.lev = <i64 *> malloc((r + 1) * nw * sizeof(i64))
    c.bud = <i64 *> malloc((r + 1) * (nc if nc else 1) * sizeof(i64))
    c.d = <i64 *> malloc(r * sizeof(i64))
    c.hist = <i64 *> malloc((2 * c.maxlevel + 1) * sizeof(i64))
    c.cap = 64
    c.hits = <i64 *> malloc(c.cap * r * sizeof(i64))
    c.nhits = 0
    c.candidates = 0
    c.oom = 0
    try:
        # state at depth plen from the fixed prefix
        for i in range(r):
            c.adjd[plen * r + i] = 0
            for j in range(plen):
                c.adjd[plen * r + i] += a[i, j] * p[j]
        for i in range(nw):
            c.lev[plen * nw + i] = 0
            for j in range(plen):
                c.lev[plen * nw + i] += wa[i, j] * p[j]
        for i in range(nc):
            c.bud[plen * nc + i] = b0[i]
        for j in range(plen):
            c.d[j] = p[j]
        with nogil:
            if plen == r:
                _leaf(&c)
            else:
                _descend(&c, plen)
        if c.oom:
            raise MemoryError("out of memory while collecting scan hits")
        out = np.empty((c.nhits, r), dtype=np.int64)
        for i in range(c.nhits):
            for j in range(r):
                out[i, j] = c.hits[i * r + j]
        return out, int(c.candidates)
    finally:
        free(c.adjd)
        free(c.lev)
        free(c.bud)
        free(c.d)
        free(c.hist)
        free(c.hits)
