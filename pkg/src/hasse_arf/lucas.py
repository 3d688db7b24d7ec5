"""Binomial coefficients modulo a prime, for any integer upper index."""

from __future__ import annotations

from typing import List

from .core_arith import FpElement, vp_int
from .errors import InputError


def base_p_digits(m: int, p: int) -> List[int]:
    """Little-endian base-``p`` digits of ``m >= 0``; ``[0]`` for zero."""
    if m < 0:
        raise InputError(f"base_p_digits needs m >= 0, got {m}")
    if m == 0:
        return [0]
    digits = []
    while m:
        m, d = divmod(m, p)
        digits.append(d)
    return digits


def _lucas(m: int, n: int, p: int) -> int:
    # m, n >= 0
    result = 1
    while n:
        m, mi = divmod(m, p)
        n, ni = divmod(n, p)
        if ni > mi:
            return 0
        # small binomial, digits < p
        num = den = 1
        for k in range(ni):
            num = num * (mi - k) % p
            den = den * (k + 1) % p
        result = result * num * pow(den, -1, p) % p
    return result


def binom_mod_p(m: int, n: int, p: int) -> FpElement:
    """``C(m, n) mod p`` where ``C(m, n) = m(m-1)...(m-n+1)/n!``.

    Negative ``m`` goes through ``C(m, n) = (-1)^n C(n - m - 1, n)``.
    """
    if n < 0:
        raise InputError(f"binomial lower index must be >= 0, got {n}")
    if n == 0:
        return FpElement(1, p)
    if m >= 0:
        return FpElement(_lucas(m, n, p), p)
    v = _lucas(n - m - 1, n, p)
    return FpElement(-v if n % 2 else v, p)


def first_nonzero_binom_index(m: int, p: int) -> int:
    """Least ``n > 0`` with ``C(m, n) != 0 mod p``; equals ``p^v_p(m)``."""
    if m == 0:
        raise InputError("first_nonzero_binom_index undefined for m = 0")
    return p ** vp_int(m, p)


def leading_binom_value(m: int, p: int) -> FpElement:
    """``C(m, p^v_p(m)) mod p``, which is ``m / p^v_p(m) mod p``."""
    if m == 0:
        raise InputError("leading_binom_value undefined for m = 0")
    return FpElement(m // p ** vp_int(m, p), p)
