"""Numba-jitted kernels (accelerated backend).

Loop-form twins of _kernels_numpy with the same contract; compiled lazily
with on-disk caching so repeat runs skip JIT.  All intermediates stay inside
int64/uint64: fraction sums need at most fbits+2 <= 34 bits, mantissas at
most 34 bits, and the final shifted product is clamp-checked before shifting
so nothing wraps.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _leading_one(v):
    k = 0
    while (v >> np.uint64(k + 1)) != np.uint64(0):
        k += 1
    return k


@njit(cache=True)
def mitchell_mul(a, b, width):
    F = width - 1
    out = np.empty(a.shape[0], dtype=np.uint64)
    for i in range(a.shape[0]):
        av = a[i]
        bv = b[i]
        if av == np.uint64(0) or bv == np.uint64(0):
            out[i] = np.uint64(0)
            continue
        k1 = _leading_one(av)
        k2 = _leading_one(bv)
        x1 = (np.int64(av) - (np.int64(1) << np.int64(k1))) << np.int64(F - k1)
        x2 = (np.int64(bv) - (np.int64(1) << np.int64(k2))) << np.int64(F - k2)
        s = x1 + x2
        e = s >> np.int64(F)
        f = s - (e << np.int64(F))
        mant = np.uint64((np.int64(1) << np.int64(F)) + f)
        shift = np.int64(k1 + k2) + e - np.int64(F)
        if shift >= 0:
            out[i] = mant << np.uint64(shift)
        else:
            out[i] = mant >> np.uint64(-shift)
    return out


@njit(cache=True)
def mitchell_div(a, b, width, qbits=0):
    F = width - 1
    out = np.empty(a.shape[0], dtype=np.uint64)
    for i in range(a.shape[0]):
        av = a[i]
        if av == np.uint64(0):
            out[i] = np.uint64(0)
            continue
        bv = b[i]
        k1 = _leading_one(av)
        k2 = _leading_one(bv)
        x1 = (np.int64(av) - (np.int64(1) << np.int64(k1))) << np.int64(F - k1)
        x2 = (np.int64(bv) - (np.int64(1) << np.int64(k2))) << np.int64(F - k2)
        s = x1 - x2
        e = s >> np.int64(F)
        f = s - (e << np.int64(F))
        mant = np.uint64((np.int64(1) << np.int64(F)) + f)
        shift = np.int64(k1 - k2 + qbits) + e - np.int64(F)
        if shift >= 0:
            out[i] = mant << np.uint64(shift)
        else:
            out[i] = mant >> np.uint64(-shift)
    return out


@njit(cache=True)
def corrected_mul(a, b, width, coeffs, m, n):
    F = width - 1
    Fp = F if F > n else n
    maxval = np.uint64((1 << (2 * width)) - 1)
    out = np.empty(a.shape[0], dtype=np.uint64)
    over = np.zeros(a.shape[0], dtype=np.bool_)
    for i in range(a.shape[0]):
        av = a[i]
        bv = b[i]
        if av == np.uint64(0) or bv == np.uint64(0):
            out[i] = np.uint64(0)
            continue
        k1 = _leading_one(av)
        k2 = _leading_one(bv)
        x1 = (np.int64(av) - (np.int64(1) << np.int64(k1))) << np.int64(F - k1)
        x2 = (np.int64(bv) - (np.int64(1) << np.int64(k2))) << np.int64(F - k2)
        r = ((x1 >> np.int64(F - m)) << np.int64(m)) | (x2 >> np.int64(F - m))
        c = coeffs[r] << np.int64(Fp - n)
        s = ((x1 + x2) << np.int64(Fp - F)) + c
        e = s >> np.int64(Fp)
        f = s - (e << np.int64(Fp))
        mant = np.uint64((np.int64(1) << np.int64(Fp)) + f)
        shift = np.int64(k1 + k2) + e - np.int64(Fp)
        if shift >= 0:
            if mant > (maxval >> np.uint64(shift)):
                out[i] = maxval
                over[i] = True
            else:
                out[i] = mant << np.uint64(shift)
        else:
            out[i] = mant >> np.uint64(-shift)
    return out, over


@njit(cache=True)
def corrected_div(a, b, width, coeffs, m, n, qbits=0):
    F = width - 1
    Fp = F if F > n else n
    maxval = np.uint64(((1 << width) - 1) << qbits)
    out = np.empty(a.shape[0], dtype=np.uint64)
    over = np.zeros(a.shape[0], dtype=np.bool_)
    for i in range(a.shape[0]):
        av = a[i]
        if av == np.uint64(0):
            out[i] = np.uint64(0)
            continue
        bv = b[i]
        k1 = _leading_one(av)
        k2 = _leading_one(bv)
        x1 = (np.int64(av) - (np.int64(1) << np.int64(k1))) << np.int64(F - k1)
        x2 = (np.int64(bv) - (np.int64(1) << np.int64(k2))) << np.int64(F - k2)
        r = ((x1 >> np.int64(F - m)) << np.int64(m)) | (x2 >> np.int64(F - m))
        c = coeffs[r] << np.int64(Fp - n)
        s = ((x1 - x2) << np.int64(Fp - F)) + c
        e = s >> np.int64(Fp)
        f = s - (e << np.int64(Fp))
        mant = np.uint64((np.int64(1) << np.int64(Fp)) + f)
        shift = np.int64(k1 - k2 + qbits) + e - np.int64(Fp)
        if shift >= 0:
            if mant > (maxval >> np.uint64(shift)):
                out[i] = maxval
                over[i] = True
            else:
                out[i] = mant << np.uint64(shift)
        else:
            out[i] = mant >> np.uint64(-shift)
    return out, over


@njit(cache=True)
def mitchell_div_value(a, b, width):
    F = width - 1
    out = np.empty(a.shape[0], dtype=np.float64)
    for i in range(a.shape[0]):
        av = a[i]
        if av == np.uint64(0):
            out[i] = 0.0
            continue
        bv = b[i]
        k1 = _leading_one(av)
        k2 = _leading_one(bv)
        x1 = (np.int64(av) - (np.int64(1) << np.int64(k1))) << np.int64(F - k1)
        x2 = (np.int64(bv) - (np.int64(1) << np.int64(k2))) << np.int64(F - k2)
        s = x1 - x2
        e = s >> np.int64(F)
        f = s - (e << np.int64(F))
        out[i] = (1.0 + f / np.float64(1 << F)) * 2.0 ** np.float64(k1 - k2 + e)
    return out


@njit(cache=True)
def corrected_div_value(a, b, width, coeffs, m, n):
    F = width - 1
    Fp = F if F > n else n
    maxval = np.float64((1 << width) - 1)
    out = np.empty(a.shape[0], dtype=np.float64)
    over = np.zeros(a.shape[0], dtype=np.bool_)
    for i in range(a.shape[0]):
        av = a[i]
        if av == np.uint64(0):
            out[i] = 0.0
            continue
        bv = b[i]
        k1 = _leading_one(av)
        k2 = _leading_one(bv)
        x1 = (np.int64(av) - (np.int64(1) << np.int64(k1))) << np.int64(F - k1)
        x2 = (np.int64(bv) - (np.int64(1) << np.int64(k2))) << np.int64(F - k2)
        r = ((x1 >> np.int64(F - m)) << np.int64(m)) | (x2 >> np.int64(F - m))
        c = coeffs[r] << np.int64(Fp - n)
        s = ((x1 - x2) << np.int64(Fp - F)) + c
        e = s >> np.int64(Fp)
        f = s - (e << np.int64(Fp))
        val = (1.0 + f / np.float64(1 << Fp)) * 2.0 ** np.float64(k1 - k2 + e)
        if val > maxval:
            out[i] = maxval
            over[i] = True
        else:
            out[i] = val
    return out, over
