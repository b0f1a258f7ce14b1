"""Pure-Python word-enumeration kernel.

Fallback for the compiled extension in _wordkernel.pyx; both expose the same
enumerate_words signature and produce identical output in the same order.
"""

import numpy as np


def enumerate_words(gens, max_len, conj=None):
    """Depth-first enumeration of all nonempty freely reduced words.

    gens is a (4, 4) float array whose rows are the matrices [a, b, c, d] of
    the letters A, A^-1, B, B^-1 (letter ^ 1 is the inverse letter).  Returns
    (codes, lengths, mats): codes pack the letters two bits each, first
    letter in the low bits; mats rows hold the word matrix W, or W g W^-1
    when conj (a 4-vector) is given.
    """
    total = 2 * (3**max_len - 1)
    codes = np.empty(total, np.uint64)
    lengths = np.empty(total, np.uint8)
    mats = np.empty((total, 4), np.float64)

    g = [(row[0], row[1], row[2], row[3]) for row in np.asarray(gens, float)]
    do_conj = conj is not None
    if do_conj:
        ga, gb, gc, gd = (float(x) for x in conj)

    idx = 0
    # stack entries: (letter, code, length, wa, wb, wc, wd)
    stack = [(l, l, 1, *g[l]) for l in (3, 2, 1, 0)]
    while stack:
        letter, code, length, wa, wb, wc, wd = stack.pop()
        if do_conj:
            pa = wa * ga + wb * gc
            pb = wa * gb + wb * gd
            pc = wc * ga + wd * gc
            pd = wc * gb + wd * gd
            row = (
                pa * wd - pb * wc,
                -pa * wb + pb * wa,
                pc * wd - pd * wc,
                -pc * wb + pd * wa,
            )
        else:
            row = (wa, wb, wc, wd)
        codes[idx] = code
        lengths[idx] = length
        mats[idx] = row
        idx += 1
        if length < max_len:
            shift = 2 * length
            for l in (3, 2, 1, 0):
                if l == letter ^ 1:
                    continue
                la, lb, lc, ld = g[l]
                stack.append(
                    (
                        l,
                        code | (l << shift),
                        length + 1,
                        wa * la + wb * lc,
                        wa * lb + wb * ld,
                        wc * la + wd * lc,
                        wc * lb + wd * ld,
                    )
                )
    assert idx == total
    return codes, lengths, mats
