"""Backend selection for the digit loops.

The compiled backend (qadic._native, built from _native.pyx) handles word-size
inputs; everything else, and installs without a compiler, goes through the
pure-Python backend with identical semantics.
"""

from __future__ import annotations

from qadic import _pure

try:
    from qadic import _native
except ImportError:
    _native = None

# den * base must stay below 2**63 for the unsigned 64-bit loops
_WORD_LIMIT = 1 << 62
# digit_cycle allocates a position table of `den` ints
_TABLE_LIMIT = 1 << 22


def backend() -> str:
    return "native+pure" if _native is not None else "pure"


def digit_cycle(num: int, den: int, base: int) -> tuple[list[int], list[int]]:
    if _native is not None and den <= _TABLE_LIMIT and den * base < _WORD_LIMIT:
        return _native.digit_cycle(num, den, base)
    return _pure.digit_cycle(num, den, base)


def scan_allowed(num: int, den: int, base: int, mask: int, preperiod_len: int) -> bool:
    if _native is not None and base < 64 and den * base < _WORD_LIMIT:
        return bool(_native.scan_allowed(num, den, base, mask, preperiod_len))
    return _pure.scan_allowed(num, den, base, mask, preperiod_len)


def digit_mask(num: int, den: int, base: int, preperiod_len: int) -> int:
    if _native is not None and base < 64 and den * base < _WORD_LIMIT:
        return _native.digit_mask(num, den, base, preperiod_len)
    return _pure.digit_mask(num, den, base, preperiod_len)


def mask_of(digits) -> int:
    mask = 0
    for d in digits:
        mask |= 1 << d
    return mask


def mask_digits(mask: int) -> tuple[int, ...]:
    out = []
    d = 0
    while mask:
        if mask & 1:
            out.append(d)
        mask >>= 1
        d += 1
    return tuple(out)
