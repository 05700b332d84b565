# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled digit loops for word-size denominators.

Mirrors qadic._pure; callers must guarantee den * base < 2**63 (and, for
digit_cycle, den small enough for the position table).  qadic.kernels enforces
both guards.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc


def digit_cycle(unsigned long long num, unsigned long long den, unsigned long long base):
    """(preperiod, period) digit lists via a first-visit position table."""
    cdef Py_ssize_t size = <Py_ssize_t> den
    cdef int *pos = <int *> PyMem_Malloc(size * sizeof(int))
    if pos == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(size):
        pos[i] = -1
    cdef list digits = []
    cdef unsigned long long r = num
    cdef Py_ssize_t n = 0
    cdef Py_ssize_t start
    try:
        while pos[r] < 0:
            pos[r] = <int> n
            r *= base
            digits.append(r // den)
            r %= den
            n += 1
        start = pos[r]
    finally:
        PyMem_Free(pos)
    return digits[:start], digits[start:]


def scan_allowed(unsigned long long num, unsigned long long den, unsigned long long base,
                 unsigned long long mask, unsigned long long preperiod_len):
    """1 iff every expansion digit has its bit set in mask (base < 64)."""
    cdef unsigned long long r = num
    cdef unsigned long long d
    cdef unsigned long long i
    for i in range(preperiod_len):
        r *= base
        d = r // den
        r %= den
        if not (mask >> d) & 1:
            return 0
    cdef unsigned long long sentinel = r
    while True:
        r *= base
        d = r // den
        r %= den
        if not (mask >> d) & 1:
            return 0
        if r == sentinel:
            return 1


def digit_mask(unsigned long long num, unsigned long long den, unsigned long long base,
               unsigned long long preperiod_len):
    """Bitmask of occurring digits, stopping once all `base` digits were seen."""
    cdef unsigned long long full = (1ULL << base) - 1
    cdef unsigned long long mask = 0
    cdef unsigned long long r = num
    cdef unsigned long long d
    cdef unsigned long long i
    for i in range(preperiod_len):
        r *= base
        d = r // den
        r %= den
        mask |= 1ULL << d
        if mask == full:
            return mask
    cdef unsigned long long sentinel = r
    while True:
        r *= base
        d = r // den
        r %= den
        mask |= 1ULL << d
        if mask == full or r == sentinel:
            return mask
