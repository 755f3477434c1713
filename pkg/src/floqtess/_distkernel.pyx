# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Bit-parallel inner loop of the minimum-weight logical search.

Same contract as ``_distpure.search_weight``; qubit count must fit in a
64-bit word (callers fall back to the pure kernel beyond that).
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define FLOQ_POPCNT(x) __builtin_popcountll(x)
    #else
    static int FLOQ_POPCNT(unsigned long long x)
    { int c = 0; while (x) { x &= x - 1; ++c; } return c; }
    #endif
    """
    int FLOQ_POPCNT(unsigned long long) nogil


def search_weight(gen_x, gen_z, supports, int w):
    """Candidates of weight ``w`` commuting with every generator."""
    cdef Py_ssize_t ngen = len(gen_x)
    cdef Py_ssize_t nsup = len(supports)
    cdef Py_ssize_t i, j, s
    cdef int t
    cdef uint64_t cx, cz, bit
    cdef unsigned long long combos = 1
    for t in range(w):
        combos *= 3

    cdef uint64_t *gx = <uint64_t *> malloc(ngen * sizeof(uint64_t))
    cdef uint64_t *gz = <uint64_t *> malloc(ngen * sizeof(uint64_t))
    cdef uint64_t *qbit = <uint64_t *> malloc(w * sizeof(uint64_t) if w else sizeof(uint64_t))
    cdef int *digit = <int *> malloc(w * sizeof(int) if w else sizeof(int))
    if gx == NULL or gz == NULL or qbit == NULL or digit == NULL:
        free(gx); free(gz); free(qbit); free(digit)
        raise MemoryError()

    hits = []
    cdef unsigned long long step
    cdef bint ok
    try:
        for i in range(ngen):
            gx[i] = <uint64_t> gen_x[i]
            gz[i] = <uint64_t> gen_z[i]
        for s in range(nsup):
            sup = supports[s]
            for j in range(w):
                qbit[j] = (<uint64_t> 1) << (<int> sup[j])
                digit[j] = 0
            for step in range(combos):
                cx = 0
                cz = 0
                for j in range(w):
                    bit = qbit[j]
                    t = digit[j]
                    if t == 0:
                        cx |= bit
                    elif t == 1:
                        cx |= bit
                        cz |= bit
                    else:
                        cz |= bit
                ok = True
                for i in range(ngen):
                    if (FLOQ_POPCNT(cx & gz[i]) + FLOQ_POPCNT(cz & gx[i])) & 1:
                        ok = False
                        break
                if ok:
                    hits.append((int(cx), int(cz)))
                # odometer over base-3 digits
                for j in range(w):
                    digit[j] += 1
                    if digit[j] < 3:
                        break
                    digit[j] = 0
    finally:
        free(gx)
        free(gz)
        free(qbit)
        free(digit)
    return hits
