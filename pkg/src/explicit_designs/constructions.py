"""Explicit constructions: AP hypergraphs, the recursive (n,5,4)-system and
the product pipeline producing (n, r, s)-systems for s - 1 = 3^a 4^b 5^c 6^d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .algebra import FieldCtx, field_make
from .hypergraph import DesignParams, Hypergraph, Provenance, induced, product, product_params, shadow

AP_MAX_VERTICES = 10_000
FIVE_FOUR_MAX_LEVEL = 6
FIVE_FOUR_BASE_LEVEL = 3
_CROSS_CHUNK = 1 << 22


# -- A(r, k) ------------------------------------------------------------------


def _digits(r: int, k: int) -> np.ndarray:
    """Row v holds the base-r digits of v, most significant first."""
    ids = np.arange(r**k, dtype=np.int64)
    powers = r ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return (ids[:, None] // powers) % r


def ap_system(r: int, k: int) -> Hypergraph:
    """All nontrivial r-term progressions in Z_r^k.

    Vertex ids are base-r encodings of vectors (first coordinate most
    significant). A progression {a + i*d} has r distinct points exactly when d
    has additive order r, and the point set is the coset a + <d>.
    """
    if r < 3 or k < 1:
        raise ValueError(f"need r >= 3 and k >= 1, got r={r}, k={k}")
    if r**k > AP_MAX_VERTICES:
        raise OverflowError(f"{r}^{k} vertices exceeds the limit of {AP_MAX_VERTICES}")
    n = r**k
    V = _digits(r, k)
    weights = r ** np.arange(k - 1, -1, -1, dtype=np.int64)
    order = np.lcm.reduce(r // np.gcd(V, r), axis=1)
    D = V[order == r]
    # one direction per cyclic subgroup: the generator with least id
    units = [u for u in range(1, r) if math.gcd(u, r) == 1]
    gen_ids = np.stack([((u * D) % r) @ weights for u in units])
    D = D[(D @ weights) == gen_ids.min(axis=0)]

    steps = np.arange(r, dtype=np.int64)
    chunk = max(1, _CROSS_CHUNK // (n * r * k))
    parts = []
    for lo in range(0, len(D), chunk):
        Dc = D[lo : lo + chunk]
        pts = (V[:, None, None, :] + steps[None, None, :, None] * Dc[None, :, None, :]) % r
        parts.append((pts @ weights).reshape(-1, r))
    edges = np.concatenate(parts) if parts else np.empty((0, r), dtype=np.int64)
    return Hypergraph(n, r, edges)


def ap_params(r: int, k: int) -> DesignParams:
    return DesignParams(r**k, r, 2, Provenance("ap", {"r": r, "k": k}))


# -- trimming and shadows with parameter bookkeeping ---------------------------


def trim(H: Hypergraph, n: int) -> Hypergraph:
    """Induced sub-hypergraph on ids 0..n-1."""
    if not 0 <= n <= H.n:
        raise ValueError(f"cannot trim {H.n} vertices to {n}")
    if n == H.n:
        return H
    return induced(H, range(n))


def trim_params(p: DesignParams, n: int) -> DesignParams:
    return DesignParams(n, p.r, p.s, Provenance("trim", {"n": n}, (p.provenance,)))


def shadow_params(p: DesignParams, r_prime: int) -> DesignParams:
    if not p.s < r_prime <= p.r:
        raise ValueError(f"shadow uniformity must lie in ({p.s}, {p.r}], got {r_prime}")
    return DesignParams(p.n, r_prime, p.s, Provenance("shadow", {"r": r_prime}, (p.provenance,)))


# -- the (n, 5, 4) recursion ----------------------------------------------------


@dataclass(frozen=True)
class FiveFourLevel:
    """Embedding data for building level k+1 from three copies of level k.

    Every copy uses the same injection: vertex j maps to the field element
    with bit pattern j + 1, which is nonzero and fits because 3^k is odd and
    at most 2^ell.
    """

    k: int
    ell: int
    field: FieldCtx

    @property
    def copy_size(self) -> int:
        return 3**self.k

    @property
    def embedding(self) -> np.ndarray:
        return np.arange(1, self.copy_size + 1, dtype=np.int64)

    def psi(self, copy: int, vertex: int) -> int:
        if copy not in (0, 1, 2) or not 0 <= vertex < self.copy_size:
            raise ValueError(f"no vertex {vertex} in copy {copy}")
        return vertex + 1


def five_four_level(k: int) -> FiveFourLevel:
    size = 3**k
    ell = (size - 1).bit_length()  # least ell with 2^ell >= 3^k
    assert 2**ell >= size > 2 ** (ell - 1) and size <= 2**ell - 1
    return FiveFourLevel(k, ell, field_make(ell))


def five_four_cross(level: FiveFourLevel) -> np.ndarray:
    """Cross edges {a, a', b, b', c}: offsets a, a' from copy 0, slopes b, b'
    from copy 1 and c from copy 2 with psi(a) + psi(b)psi(c) = psi(a') + psi(b')psi(c).

    For each unordered offset pair and slope pair the equation forces
    c = (psi(a) + psi(a')) / (psi(b) + psi(b')), whichever way the slopes are
    paired with the offsets. Ids are level-(k+1) ids: copy i vertex j is
    i * 3^k + j.
    """
    N = level.copy_size
    ctx = level.field
    vals = level.embedding
    lo, hi = np.triu_indices(N, 1)
    diff = vals[lo] ^ vals[hi]
    assert (diff != 0).all(), "distinct vertices of one copy share a field value"
    inv_diff = ctx.inverse_table[diff]
    to_vertex = np.full(ctx.order, -1, dtype=np.int64)
    to_vertex[vals] = np.arange(N)

    P = len(diff)
    chunk = max(1, _CROSS_CHUNK // max(P, 1))
    parts = []
    for start in range(0, P, chunk):
        num = diff[start : start + chunk]
        c = to_vertex[ctx.mul_array(num[:, None], inv_diff[None, :])]
        i, j = np.nonzero(c >= 0)
        off = start + i
        parts.append(np.stack([lo[off], hi[off], N + lo[j], N + hi[j], 2 * N + c[i, j]], axis=1))
    return np.concatenate(parts) if parts else np.empty((0, 5), dtype=np.int64)


@lru_cache(maxsize=4)
def five_four(k: int) -> Hypergraph:
    """The recursive (3^k, 5, 4)-system.

    Levels up to 3 are edgeless: 3^k is already below the independence
    bound there, so no edges are needed.
    """
    if not 1 <= k <= FIVE_FOUR_MAX_LEVEL:
        raise ValueError(f"five_four level must lie in [1, {FIVE_FOUR_MAX_LEVEL}], got {k}")
    if k <= FIVE_FOUR_BASE_LEVEL:
        return Hypergraph(3**k, 5)
    prev = five_four(k - 1)
    N = prev.n
    copies = [prev.edges + i * N for i in range(3)]
    cross = five_four_cross(five_four_level(k - 1))
    return Hypergraph(3 * N, 5, np.concatenate(copies + [cross]))


def five_four_params(k: int) -> DesignParams:
    return DesignParams(3**k, 5, 4, Provenance("five_four", {"k": k}))


# -- the (n, r, s) pipeline ----------------------------------------------------


class SExponents(NamedTuple):
    """Exponents with s - 1 = 3^l1 * 4^l2 * 5^l3 * 6^l4."""

    l1: int
    l2: int
    l3: int
    l4: int

    @property
    def s(self) -> int:
        return 3**self.l1 * 4**self.l2 * 5**self.l3 * 6**self.l4 + 1

    @property
    def factor(self) -> int | None:
        """Leading factor in priority order 3, 4, 5, 6; None when s = 2."""
        for f, e in zip((3, 4, 5, 6), self):
            if e:
                return f
        return None

    def without_factor(self) -> SExponents:
        f = self.factor
        if f is None:
            raise ValueError("s = 2 has no factor to remove")
        i = (3, 4, 5, 6).index(f)
        return self._replace(**{self._fields[i]: self[i] - 1})


def decompose_s(s: int) -> SExponents:
    """Write s - 1 over {3, 4, 5, 6}, maximising l1, then l2, then l3.

    With s - 1 = 2^x 3^y 5^z the constraints are x = 2 l2 + l4 and
    y = l1 + l4, so l1 is maximal when l4 = x mod 2.
    """
    if s < 2:
        raise ValueError(f"s must be >= 2, got {s}")
    rest = s - 1
    x = y = z = 0
    while rest % 2 == 0:
        rest, x = rest // 2, x + 1
    while rest % 3 == 0:
        rest, y = rest // 3, y + 1
    while rest % 5 == 0:
        rest, z = rest // 5, z + 1
    l4 = x % 2
    if rest != 1 or l4 > y:
        raise ValueError(f"s - 1 = {s - 1} is not a product of 3, 4, 5 and 6")
    return SExponents(y - l4, (x - l4) // 2, z, l4)


def capacity(exps: SExponents) -> int:
    """Largest admissible uniformity R(s)."""
    return (exps.factor or 6) * (exps.s - 1)


def _check_rs(n: int, r: int, s: int) -> SExponents:
    exps = decompose_s(s)
    if s == 2:
        if not 3 <= r <= 6:
            raise ValueError(f"for s = 2 the uniformity must lie in [3, 6], got {r}")
    elif not 2 * s <= r <= capacity(exps):
        raise ValueError(f"for s = {s} the uniformity must lie in [{2 * s}, {capacity(exps)}], got {r}")
    if n < r:
        raise ValueError(f"need n >= r, got n={n}, r={r}")
    return exps


def build_rs_system(n: int, r: int, s: int) -> tuple[Hypergraph, DesignParams]:
    """An n-vertex r-uniform hypergraph claimed to be an (n, r, s)-system.

    s = 2 comes from a shadow of A(6, k) with 6^k >= n. Larger s peels one
    factor f off s - 1 and takes the product of a ceil(sqrt n)-vertex
    (f(s1-1), s1)-system with a ceil(sqrt n)-vertex (f, 2)-system, which is
    R(s)-uniform with parameter s; then shadow to r and trim to n.
    """
    return _build(n, r, _check_rs(n, r, s))


def _build(n: int, r: int, exps: SExponents) -> tuple[Hypergraph, DesignParams]:
    f = exps.factor
    if f is None:
        k = 1
        while 6**k < n:
            k += 1
        H, p = ap_system(6, k), ap_params(6, k)
    else:
        sub = exps.without_factor()
        m = math.isqrt(n - 1) + 1
        H1, p1 = _build(m, f * (sub.s - 1), sub)
        H2, p2 = _build(m, f, SExponents(0, 0, 0, 0))
        H, p = product(H1, H2), product_params(p1, p2)
        assert (p.r, p.s) == (capacity(exps), exps.s)
    if r != H.r:
        H, p = shadow(H, r), shadow_params(p, r)
    if n != H.n:
        H, p = trim(H, n), trim_params(p, n)
    return H, p
