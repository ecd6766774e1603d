"""Pure-numpy vectorized kernels (fallback backend).

Same contract as _kernels_numba: uint64 operand arrays in, uint64 results
out, bit-identical across the two builds.  Shift counts are always cast to
uint64 because numpy refuses mixed-sign shift operands.
"""

from __future__ import annotations

import numpy as np

_U1 = np.uint64(1)


def _log_parts(v, width):
    """(k, frac) with frac left-aligned in width-1 bits; v must be > 0."""
    k = (np.frexp(v.astype(np.float64))[1] - 1).astype(np.int64)
    frac = (v.astype(np.int64) - (np.int64(1) << k)) << (np.int64(width - 1) - k)
    return k, frac


def _shift_floor_u64(mantissa, shift):
    """floor(mantissa * 2**shift) elementwise; mantissa uint64, shift int64."""
    up = np.maximum(shift, 0).astype(np.uint64)
    down = np.maximum(-shift, 0).astype(np.uint64)
    return np.where(shift >= 0, mantissa << up, mantissa >> down)


def _reconstruct(k_sum, s, fbits):
    """Anti-log floor(2**(k_sum + e) * (1 + f)) from the ternary/binary
    fraction sum ``s`` (int64, may be negative)."""
    e = s >> np.int64(fbits)
    f = s - (e << np.int64(fbits))
    mantissa = ((np.int64(1) << np.int64(fbits)) + f).astype(np.uint64)
    return _shift_floor_u64(mantissa, k_sum + e - fbits)


def mitchell_mul(a, b, width):
    k1, x1 = _log_parts(np.maximum(a, _U1), width)
    k2, x2 = _log_parts(np.maximum(b, _U1), width)
    out = _reconstruct(k1 + k2, x1 + x2, width - 1)
    return np.where((a == 0) | (b == 0), np.uint64(0), out)


def mitchell_div(a, b, width, qbits=0):
    """b is zero-extended to ``width``; qbits adds fixed-point fraction bits
    to the quotient.  Caller guarantees b > 0."""
    k1, x1 = _log_parts(np.maximum(a, _U1), width)
    k2, x2 = _log_parts(b, width)
    out = _reconstruct(k1 - k2 + qbits, x1 - x2, width - 1)
    return np.where(a == 0, np.uint64(0), out)


def _clamped_shift(mantissa, shift, maxval):
    """Like _shift_floor_u64 but saturating at maxval; wide corrected products
    can exceed 64 bits before the clamp, so test against maxval >> shift."""
    up = np.maximum(shift, 0).astype(np.uint64)
    down = np.maximum(-shift, 0).astype(np.uint64)
    over = (shift >= 0) & (mantissa > (maxval >> up))
    out = np.where(shift >= 0, mantissa << up, mantissa >> down)
    out = np.where(over, maxval, out)
    return out, over


def corrected_mul(a, b, width, coeffs, m, n):
    """Correction coefficients are added into the fraction sum before the
    anti-log.  ``coeffs`` is the flat int64 table (2**(2m) entries) in units
    of 2**-n; the ternary sum runs at max(width-1, n) fraction bits.

    Returns (results, clamp_mask)."""
    F = width - 1
    Fp = max(F, n)
    k1, x1 = _log_parts(np.maximum(a, _U1), width)
    k2, x2 = _log_parts(np.maximum(b, _U1), width)
    r = ((x1 >> np.int64(F - m)) << np.int64(m)) | (x2 >> np.int64(F - m))
    c = coeffs[r] << np.int64(Fp - n)
    s = ((x1 + x2) << np.int64(Fp - F)) + c
    e = s >> np.int64(Fp)
    f = s - (e << np.int64(Fp))
    mantissa = ((np.int64(1) << np.int64(Fp)) + f).astype(np.uint64)
    maxval = np.uint64((1 << (2 * width)) - 1)
    out, over = _clamped_shift(mantissa, k1 + k2 + e - Fp, maxval)
    zero = (a == 0) | (b == 0)
    return np.where(zero, np.uint64(0), out), over & ~zero


def corrected_div(a, b, width, coeffs, m, n, qbits=0):
    """Divider counterpart: signed coefficient added to the fraction
    difference; quotient clamped to the dividend's representable range
    (scaled by qbits).  Caller guarantees b > 0."""
    F = width - 1
    Fp = max(F, n)
    k1, x1 = _log_parts(np.maximum(a, _U1), width)
    k2, x2 = _log_parts(b, width)
    r = ((x1 >> np.int64(F - m)) << np.int64(m)) | (x2 >> np.int64(F - m))
    c = coeffs[r] << np.int64(Fp - n)
    s = ((x1 - x2) << np.int64(Fp - F)) + c
    e = s >> np.int64(Fp)
    f = s - (e << np.int64(Fp))
    mantissa = ((np.int64(1) << np.int64(Fp)) + f).astype(np.uint64)
    maxval = np.uint64(((1 << width) - 1) << qbits)
    out, over = _clamped_shift(mantissa, k1 - k2 + qbits + e - Fp, maxval)
    zero = a == 0
    return np.where(zero, np.uint64(0), out), over & ~zero


def mitchell_div_value(a, b, width):
    """Continuous (pre-floor) quotient reconstruction as float64, used by the
    error sweeps; every value is an exact dyadic so results are deterministic."""
    F = width - 1
    k1, x1 = _log_parts(np.maximum(a, _U1), width)
    k2, x2 = _log_parts(b, width)
    s = x1 - x2
    e = s >> np.int64(F)
    f = s - (e << np.int64(F))
    val = (1.0 + f / np.float64(1 << F)) * np.exp2((k1 - k2 + e).astype(np.float64))
    return np.where(a == 0, 0.0, val)


def corrected_div_value(a, b, width, coeffs, m, n):
    """Continuous corrected quotient (float64), clamp reported as a mask."""
    F = width - 1
    Fp = max(F, n)
    k1, x1 = _log_parts(np.maximum(a, _U1), width)
    k2, x2 = _log_parts(b, width)
    r = ((x1 >> np.int64(F - m)) << np.int64(m)) | (x2 >> np.int64(F - m))
    c = coeffs[r] << np.int64(Fp - n)
    s = ((x1 - x2) << np.int64(Fp - F)) + c
    e = s >> np.int64(Fp)
    f = s - (e << np.int64(Fp))
    val = (1.0 + f / np.float64(1 << Fp)) * np.exp2((k1 - k2 + e).astype(np.float64))
    maxval = np.float64((1 << width) - 1)
    over = val > maxval
    val = np.where(over, maxval, val)
    zero = a == 0
    return np.where(zero, 0.0, val), over & ~zero
