# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled word-enumeration kernel.

Same contract and output order as the pure-Python fallback in
_wordkernel_py: pre-order depth-first over freely reduced words, children
in letter order A, A^-1, B, B^-1.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def enumerate_words(gens, int max_len, conj=None):
    cdef cnp.ndarray[cnp.float64_t, ndim=2] gens_arr = np.ascontiguousarray(gens, np.float64)
    if gens_arr.shape[0] != 4 or gens_arr.shape[1] != 4:
        raise ValueError("gens must be a (4, 4) array of matrix rows")
    if max_len < 1 or max_len > 30:
        raise ValueError("max_len must be in 1..30")

    total_py = 2 * (3 ** int(max_len) - 1)
    cdef unsigned long long total = total_py
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] codes = np.empty(total_py, np.uint64)
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] lengths = np.empty(total_py, np.uint8)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] mats = np.empty((total_py, 4), np.float64)

    cdef double g[4][4]
    cdef int i, j
    for i in range(4):
        for j in range(4):
            g[i][j] = gens_arr[i, j]

    cdef bint do_conj = conj is not None
    cdef double ga = 0.0, gb = 0.0, gc = 0.0, gd = 0.0
    if do_conj:
        ga, gb, gc, gd = (float(conj[0]), float(conj[1]), float(conj[2]), float(conj[3]))

    # per-depth DFS state; depth d holds a word of length d
    cdef double wa[32], wb[32], wc[32], wd[32]
    cdef unsigned long long code[32]
    cdef int letter[32]
    cdef int nxt[32]

    cdef unsigned long long idx = 0
    cdef int depth = 0
    cdef int l
    cdef double pa, pb, pc, pd
    nxt[0] = 0
    wa[0] = 1.0; wb[0] = 0.0; wc[0] = 0.0; wd[0] = 1.0
    code[0] = 0
    letter[0] = -1

    while depth >= 0:
        l = nxt[depth]
        if depth > 0 and l == (letter[depth] ^ 1):
            l += 1
        if l > 3:
            depth -= 1
            continue
        nxt[depth] = l + 1

        wa[depth + 1] = wa[depth] * g[l][0] + wb[depth] * g[l][2]
        wb[depth + 1] = wa[depth] * g[l][1] + wb[depth] * g[l][3]
        wc[depth + 1] = wc[depth] * g[l][0] + wd[depth] * g[l][2]
        wd[depth + 1] = wc[depth] * g[l][1] + wd[depth] * g[l][3]
        letter[depth + 1] = l
        code[depth + 1] = code[depth] | ((<unsigned long long> l) << (2 * depth))

        if do_conj:
            pa = wa[depth + 1] * ga + wb[depth + 1] * gc
            pb = wa[depth + 1] * gb + wb[depth + 1] * gd
            pc = wc[depth + 1] * ga + wd[depth + 1] * gc
            pd = wc[depth + 1] * gb + wd[depth + 1] * gd
            mats[idx, 0] = pa * wd[depth + 1] - pb * wc[depth + 1]
            mats[idx, 1] = -pa * wb[depth + 1] + pb * wa[depth + 1]
            mats[idx, 2] = pc * wd[depth + 1] - pd * wc[depth + 1]
            mats[idx, 3] = -pc * wb[depth + 1] + pd * wa[depth + 1]
        else:
            mats[idx, 0] = wa[depth + 1]
            mats[idx, 1] = wb[depth + 1]
            mats[idx, 2] = wc[depth + 1]
            mats[idx, 3] = wd[depth + 1]
        codes[idx] = code[depth + 1]
        lengths[idx] = <unsigned char> (depth + 1)
        idx += 1

        if depth + 1 < max_len:
            depth += 1
            nxt[depth] = 0

    return codes, lengths, mats
