# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan and scoring kernels. Must stay bit-compatible with
condensedly.kernels.pure: same match order, same float operation order.
No -ffast-math: float parity with CPython matters more than the last
few percent."""

import numpy as np

cimport numpy as cnp

from .automaton import fold_codepoints

cnp.import_array()


def ac_scan(automaton, text):
    codes_arr = fold_codepoints(text)
    cdef cnp.uint32_t[::1] codes = codes_arr
    cdef cnp.int64_t[::1] trans_offsets = automaton.trans_offsets
    cdef cnp.uint32_t[::1] trans_chars = automaton.trans_chars
    cdef cnp.int64_t[::1] trans_targets = automaton.trans_targets
    cdef cnp.int64_t[::1] fail = automaton.fail
    cdef cnp.int64_t[::1] out_offsets = automaton.out_offsets
    cdef cnp.int64_t[::1] out_patterns = automaton.out_patterns
    cdef cnp.int64_t[::1] lengths = automaton.pattern_lengths

    cdef Py_ssize_t n = codes.shape[0]
    cdef Py_ssize_t i, lo, hi, mid, pos, k
    cdef long long state = 0, pid
    cdef unsigned int code
    matches = []

    for i in range(n):
        code = codes[i]
        while True:
            lo = trans_offsets[state]
            hi = trans_offsets[state + 1]
            pos = -1
            while lo < hi:
                mid = (lo + hi) >> 1
                if trans_chars[mid] < code:
                    lo = mid + 1
                else:
                    hi = mid
            if lo < trans_offsets[state + 1] and trans_chars[lo] == code:
                state = trans_targets[lo]
                break
            if state == 0:
                break
            state = fail[state]
        for k in range(out_offsets[state], out_offsets[state + 1]):
            pid = out_patterns[k]
            matches.append((i + 1 - lengths[pid], pid))
    return matches


def bm25_accumulate(cnp.int64_t[::1] doc_indices, cnp.int64_t[::1] tfs,
                    cnp.int64_t[::1] doc_lengths, double idf, double k1,
                    double b, double avgdl, cnp.float64_t[::1] scores):
    cdef Py_ssize_t i, d
    cdef double tf, dl
    for i in range(doc_indices.shape[0]):
        d = doc_indices[i]
        tf = <double> tfs[i]
        dl = <double> doc_lengths[d]
        scores[d] += idf * (tf * (k1 + 1.0)) / (tf + k1 * (1.0 - b + b * dl / avgdl))
