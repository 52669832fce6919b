"""Closed-form reference bounds, evaluated in double precision.

Unspecified multiplicative constants are taken to be 1.
"""

from __future__ import annotations

import math
from typing import NamedTuple

SIX_AP_BASE = 5.709
FIVE_FOUR_LEADING = 7.0
FIVE_FOUR_CORRECTION = math.sqrt(2) / (2 - math.sqrt(3))


def bound_rs_lower(n: float, r: int, s: int) -> float:
    """n^((r-s)/(r-1)) * (ln n)^(1/(r-1)): every (n, r, s)-system has
    independence number at least a constant times this."""
    if not (r > s >= 2 and n >= r and n >= 3):
        raise ValueError(f"need n >= r > s >= 2 and n >= 3, got n={n}, r={r}, s={s}")
    return n ** ((r - s) / (r - 1)) * math.log(n) ** (1 / (r - 1))


def bound_pp20(k: float) -> float:
    """Size above which a subset of Z_6^k must contain a 6-term progression
    (asymptotic in k)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return SIX_AP_BASE**k


def bound_five_four(k: float) -> float:
    """7 n^(log_3 2) - (sqrt 2 / (2 - sqrt 3)) n^(1/2) at n = 3^k."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return FIVE_FOUR_LEADING * 2.0**k - FIVE_FOUR_CORRECTION * 3.0 ** (k / 2)


class ProductBound(NamedTuple):
    t: int
    h: float


def product_t_raw(n1: int, r1: int, f: float, g: float) -> float:
    """The quantity whose ceiling is the exponent t."""
    if f <= 1 or g <= 1:
        raise ValueError(f"need f > 1 and g > 1, got f={f}, g={g}")
    log_num = (r1 - 1) * math.log(n1) + math.log(f) - math.lgamma(r1 + 1)
    return log_num / math.log(g)


def bound_product_h(n1: int, n2: int, r1: int, f: float, g: float) -> ProductBound:
    """Exponent t and factor h with alpha(H1 x H2) < n1 n2 / h whenever
    alpha(H1) < n1 / f and alpha(H2) < n2 / g.

    t is clamped to at least 1; when the raw value is <= 0 any positive t
    satisfies the counting inequality.
    """
    if n1 < 1 or n2 < 1 or r1 < 1:
        raise ValueError("n1, n2 and r1 must be positive")
    t = max(1, math.ceil(product_t_raw(n1, r1, f, g)))
    return ProductBound(t, (f / 2) ** (1 / t))
