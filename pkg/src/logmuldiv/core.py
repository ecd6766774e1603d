"""Bit-accurate scalar arithmetic: exact reference ops and the uncorrected
logarithmic (Mitchell) multiplier and divider.

A positive integer ``a`` decomposes as ``a = 2**k * (1 + x)`` where ``k`` is
the position of its leading one and ``x`` in [0, 1) is formed by the bits
below it.  Approximating ``log2(1 + x) ~ x`` turns multiplication into
addition of the ``(k, x)`` parts and division into subtraction; the result is
rebuilt with a shift (the linear anti-log) and floored to an integer.

Fractions are held losslessly in ``F = width - 1`` fixed-point bits, so the
results here depend only on the algorithm, never on register truncation.
All functions are pure; values are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass

SUPPORTED_WIDTHS = (8, 16, 32)


@dataclass(frozen=True)
class UIntWord:
    """Unsigned integer operand with an explicit bit width."""

    value: int
    width: int

    def __post_init__(self):
        if self.width not in SUPPORTED_WIDTHS:
            raise ValueError(f"width must be one of {SUPPORTED_WIDTHS}, got {self.width}")
        if not 0 <= self.value < (1 << self.width):
            raise ValueError(f"value {self.value} does not fit in {self.width} bits")

    @property
    def frac_width(self) -> int:
        return self.width - 1


@dataclass(frozen=True)
class LogApprox:
    """Approximate base-2 log of a word: leading-one position ``k`` plus an
    ``frac_width``-bit fraction register holding the bits below the leading
    one, left-aligned (value ``x = frac_bits / 2**frac_width``)."""

    k: int
    frac_bits: int
    frac_width: int
    is_zero: bool = False

    def __post_init__(self):
        if self.is_zero and (self.k != 0 or self.frac_bits != 0):
            raise ValueError("zero log must have k = 0 and frac_bits = 0")
        if not 0 <= self.frac_bits < (1 << self.frac_width):
            raise ValueError("frac_bits out of range for fraction register")

    @property
    def fraction(self) -> float:
        return self.frac_bits / (1 << self.frac_width)


@dataclass(frozen=True)
class LodSegmentResult:
    """Leading-one detection over one 4-bit segment."""

    zero_flag: bool
    position: int = 0


def lod_segment(nibble: int) -> LodSegmentResult:
    """Detect the leading one inside a 4-bit segment.

    ``zero_flag`` doubles as the all-zero indicator; ``position`` is the index
    of the highest set bit (bit 3 -> 3) and is meaningful only when the flag
    is clear.
    """
    if not 0 <= nibble < 16:
        raise ValueError(f"nibble out of range: {nibble}")
    if nibble == 0:
        return LodSegmentResult(zero_flag=True)
    return LodSegmentResult(zero_flag=False, position=nibble.bit_length() - 1)


def leading_one(a: UIntWord) -> int | None:
    """Position of the leading one of ``a``, or None for the zero word.

    Composed from per-nibble segment detectors: the most significant
    non-zero segment wins, exactly as a wide detector built from 4-bit
    slices resolves it.
    """
    if a.value == 0:
        return None
    for seg in range(a.width // 4 - 1, -1, -1):
        r = lod_segment((a.value >> (4 * seg)) & 0xF)
        if not r.zero_flag:
            return 4 * seg + r.position
    raise AssertionError("unreachable: nonzero word had no nonzero segment")


def log_approx(a: UIntWord) -> LogApprox:
    """Decompose ``a`` into its approximate log parts.

    The ``k`` bits below the leading one are left-aligned into the fraction
    register and zero-padded on the right; zero is representable via the
    ``is_zero`` flag rather than rejected.
    """
    F = a.frac_width
    k = leading_one(a)
    if k is None:
        return LogApprox(k=0, frac_bits=0, frac_width=F, is_zero=True)
    frac = (a.value - (1 << k)) << (F - k)
    return LogApprox(k=k, frac_bits=frac, frac_width=F)


def _shift_floor(mantissa: int, shift: int) -> int:
    """floor(mantissa * 2**shift) for a non-negative mantissa."""
    if shift >= 0:
        return mantissa << shift
    return mantissa >> -shift


def _reconstruct(k_sum: int, s: int, fbits: int) -> int:
    """Anti-log of ``k_sum + s/2**fbits``: the carry (or borrow) of the
    fraction sum moves into the exponent and the mantissa ``1 + f`` is
    shifted into place, flooring.  ``s`` may be negative (division)."""
    e = s >> fbits
    f = s - (e << fbits)
    mantissa = (1 << fbits) + f
    return _shift_floor(mantissa, k_sum + e - fbits)


def mitchell_mul(a: UIntWord, b: UIntWord) -> int:
    """Approximate product via log-domain addition, floored to an integer.

    Returns a ``2 * width``-bit result; zero operands short-circuit to 0.
    """
    if a.width != b.width:
        raise ValueError(f"operand widths differ: {a.width} vs {b.width}")
    if a.value == 0 or b.value == 0:
        return 0
    F = a.frac_width
    la, lb = log_approx(a), log_approx(b)
    return _reconstruct(la.k + lb.k, la.frac_bits + lb.frac_bits, F)


def mitchell_div(dividend: UIntWord, divisor: UIntWord, frac_bits: int = 0) -> int:
    """Approximate quotient via log-domain subtraction, floored.

    A divisor narrower than the dividend is zero-extended to the dividend's
    width first.  ``frac_bits`` selects a fixed-point quotient with that many
    fractional bits (0 = plain integer quotient); reconstructions below one
    output unit floor to 0.
    """
    if divisor.value == 0:
        raise ZeroDivisionError("division by zero")
    if divisor.width > dividend.width:
        raise ValueError("divisor wider than dividend")
    if dividend.value == 0:
        return 0
    wide_divisor = UIntWord(divisor.value, dividend.width)
    F = dividend.frac_width
    la, lb = log_approx(dividend), log_approx(wide_divisor)
    return _reconstruct(la.k - lb.k + frac_bits, la.frac_bits - lb.frac_bits, F)


def exact_mul(a: UIntWord, b: UIntWord) -> int:
    """Exact product (the oracle all error metrics are measured against)."""
    if a.width != b.width:
        raise ValueError(f"operand widths differ: {a.width} vs {b.width}")
    return a.value * b.value


def exact_div(dividend: UIntWord, divisor: UIntWord, frac_bits: int = 0) -> int:
    """Exact floored quotient, optionally in fixed point."""
    if divisor.value == 0:
        raise ZeroDivisionError("division by zero")
    if divisor.width > dividend.width:
        raise ValueError("divisor wider than dividend")
    return (dividend.value << frac_bits) // divisor.value
