# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; semantics identical to pure.py."""


def weighted_true_sum(const unsigned char[::1] table, int num_vars, const double[::1] probs):
    cdef unsigned long long n = 1ULL << num_vars
    cdef unsigned long long a
    cdef double total = 0.0
    cdef double w
    cdef int i
    for a in range(n):
        if (table[a >> 3] >> (a & 7)) & 1:
            w = 1.0
            for i in range(num_vars):
                if (a >> i) & 1:
                    w *= probs[i]
                else:
                    w *= 1.0 - probs[i]
            total += w
    return total


def minimal_true_points(const unsigned char[::1] table, int num_vars):
    cdef unsigned long long n = 1ULL << num_vars
    cdef unsigned long long a, b
    cdef int i, minimal
    out = []
    for a in range(n):
        if not (table[a >> 3] >> (a & 7)) & 1:
            continue
        minimal = 1
        for i in range(num_vars):
            if (a >> i) & 1:
                b = a & ~(1ULL << i)
                if (table[b >> 3] >> (b & 7)) & 1:
                    minimal = 0
                    break
        if minimal:
            out.append(a)
    return out
