"""Exact arithmetic over Z_r^k and over GF(2^ell).

Field elements are ell-bit integers in the polynomial basis: bit i is the
coefficient of x^i. The reduction polynomial is stored as an (ell+1)-bit
mask including the leading term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, reduce

import numpy as np

MAX_FIELD_DEGREE = 32


class DimensionError(ValueError):
    """Operands live in different groups or fields."""


@dataclass(frozen=True)
class ZVector:
    """An element of Z_r^k."""

    coords: tuple[int, ...]
    r: int

    def __post_init__(self):
        if self.r < 2:
            raise ValueError(f"modulus must be >= 2, got {self.r}")
        if len(self.coords) < 1:
            raise ValueError("dimension must be >= 1")
        if any(not 0 <= c < self.r for c in self.coords):
            raise ValueError(f"coordinates {self.coords} not reduced mod {self.r}")

    @classmethod
    def of(cls, coords, r: int) -> ZVector:
        return cls(tuple(int(c) % r for c in coords), r)

    @property
    def k(self) -> int:
        return len(self.coords)

    def __add__(self, other: ZVector) -> ZVector:
        return vec_add(self, other)

    def __rmul__(self, c: int) -> ZVector:
        return vec_scale(c, self)


def _check_same_group(u: ZVector, v: ZVector) -> None:
    if (u.r, u.k) != (v.r, v.k):
        raise DimensionError(f"Z_{u.r}^{u.k} and Z_{v.r}^{v.k} do not match")


def vec_add(u: ZVector, v: ZVector) -> ZVector:
    _check_same_group(u, v)
    return ZVector(tuple((a + b) % u.r for a, b in zip(u.coords, v.coords)), u.r)


def vec_scale(c: int, v: ZVector) -> ZVector:
    if c < 0:
        raise ValueError("scalar must be non-negative")
    return ZVector(tuple((c * a) % v.r for a in v.coords), v.r)


def additive_order(v: ZVector) -> int:
    """Least t >= 1 with t*v = 0."""
    return reduce(math.lcm, (v.r // math.gcd(c, v.r) for c in v.coords), 1)


# -- GF(2)[x] helpers --------------------------------------------------------


def poly_degree(p: int) -> int:
    return p.bit_length() - 1


def poly_mod(a: int, m: int) -> int:
    dm = poly_degree(m)
    while a and poly_degree(a) >= dm:
        a ^= m << (poly_degree(a) - dm)
    return a


def clmul(a: int, b: int) -> int:
    """Carry-less product of two GF(2) polynomials."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def is_irreducible(p: int) -> bool:
    """Trial division by every polynomial of degree 1..deg(p)//2."""
    d = poly_degree(p)
    if d < 1:
        return False
    for q in range(2, 1 << (d // 2 + 1)):
        if poly_mod(p, q) == 0:
            return False
    return True


def least_irreducible(ell: int) -> int:
    # Constant term forced to 1: for ell=1 this selects x+1 over x, and for
    # ell >= 2 it only skips polynomials divisible by x.
    for low in range(1, 1 << ell, 2):
        p = (1 << ell) | low
        if is_irreducible(p):
            return p
    raise AssertionError(f"no irreducible polynomial of degree {ell}")  # pragma: no cover


# -- the field ----------------------------------------------------------------


@dataclass(frozen=True)
class FieldCtx:
    """GF(2^ell) realised as GF(2)[x] / (poly)."""

    ell: int
    poly: int

    def __post_init__(self):
        if not 1 <= self.ell <= MAX_FIELD_DEGREE:
            raise ValueError(f"field degree must be in [1, {MAX_FIELD_DEGREE}], got {self.ell}")
        if poly_degree(self.poly) != self.ell:
            raise ValueError(f"poly {self.poly:#b} does not have degree {self.ell}")

    @property
    def order(self) -> int:
        return 1 << self.ell

    def __call__(self, bits: int) -> FieldElem:
        return FieldElem(self, bits)

    def _check(self, x: int) -> None:
        if not 0 <= x < self.order:
            raise ValueError(f"{x} is not an element of GF(2^{self.ell})")

    def add(self, x: int, y: int) -> int:
        return x ^ y

    def mul(self, x: int, y: int) -> int:
        out = 0
        top = self.order
        while y:
            if y & 1:
                out ^= x
            y >>= 1
            x <<= 1
            if x & top:
                x ^= self.poly
        return out

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("zero has no inverse in GF(2^ell)")
        # x^(2^ell - 2) by square-and-multiply
        e = self.order - 2
        out, base = 1, x
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    # Vectorised variants used by the cross-edge enumeration.

    def mul_array(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        x, y = np.broadcast_arrays(np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64))
        x = x.copy()
        out = np.zeros(x.shape, dtype=np.int64)
        top = self.order
        for i in range(self.ell):
            out ^= np.where((y >> i) & 1, x, 0)
            x <<= 1
            x ^= np.where(x & top, self.poly, 0)
        return out

    @cached_property
    def inverse_table(self) -> np.ndarray:
        """inverse_table[x] = x^-1 for x != 0; entry 0 is 0."""
        if self.ell > 24:
            raise ValueError("inverse table only built for ell <= 24")
        x = np.arange(self.order, dtype=np.int64)
        out = np.ones_like(x)
        base = x.copy()
        e = self.order - 2
        while e:
            if e & 1:
                out = self.mul_array(out, base)
            base = self.mul_array(base, base)
            e >>= 1
        out[0] = 0
        return out


@dataclass(frozen=True)
class FieldElem:
    ctx: FieldCtx
    bits: int

    def __post_init__(self):
        self.ctx._check(self.bits)

    def __add__(self, other: FieldElem) -> FieldElem:
        return gf_add(self, other)

    __sub__ = __add__

    def __mul__(self, other: FieldElem) -> FieldElem:
        return gf_mul(self, other)

    def __truediv__(self, other: FieldElem) -> FieldElem:
        return gf_div(self, other)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __repr__(self) -> str:
        return f"FieldElem({self.bits:#0{self.ctx.ell + 2}b})"


def field_make(ell: int) -> FieldCtx:
    if not 1 <= ell <= MAX_FIELD_DEGREE:
        raise ValueError(f"field degree must be in [1, {MAX_FIELD_DEGREE}], got {ell}")
    return FieldCtx(ell, least_irreducible(ell))


def _same_field(x: FieldElem, y: FieldElem) -> FieldCtx:
    if x.ctx != y.ctx:
        raise DimensionError("operands belong to different fields")
    return x.ctx


def gf_add(x: FieldElem, y: FieldElem) -> FieldElem:
    return FieldElem(_same_field(x, y), x.bits ^ y.bits)


def gf_mul(x: FieldElem, y: FieldElem) -> FieldElem:
    ctx = _same_field(x, y)
    return FieldElem(ctx, ctx.mul(x.bits, y.bits))


def gf_inv(x: FieldElem) -> FieldElem:
    return FieldElem(x.ctx, x.ctx.inv(x.bits))


def gf_div(x: FieldElem, y: FieldElem) -> FieldElem:
    ctx = _same_field(x, y)
    return FieldElem(ctx, ctx.div(x.bits, y.bits))
