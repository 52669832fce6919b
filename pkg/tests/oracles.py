"""Brute-force reference implementations used only by the tests.

Nothing here imports the package's arithmetic or search code.
"""

from __future__ import annotations

import itertools
import random

import numpy as np


# -- vectors ------------------------------------------------------------------

_SLOT = 1 << 32


def pack(coords) -> int:
    """Vector as one big integer, one 32-bit slot per coordinate."""
    out = 0
    for c in coords:
        out = out * _SLOT + c
    return out


def unpack_mod(x: int, k: int, r: int) -> tuple[int, ...]:
    out = []
    for _ in range(k):
        x, c = divmod(x, _SLOT)
        out.append(c % r)
    return tuple(reversed(out))


def order_by_iteration(coords, r: int) -> int:
    t, cur = 1, list(coords)
    while any(c % r for c in cur):
        t += 1
        cur = [c * t % r for c in coords]
    return t


# -- GF(2)[x] -------------------------------------------------------------------


def _schoolbook(a: int, b: int) -> int:
    bits = [i for i in range(b.bit_length()) if b >> i & 1]
    out = 0
    for i in bits:
        out ^= a << i
    return out


def reducible_masks(ell: int) -> set[int]:
    """Every degree-ell polynomial that factors into lower-degree pieces."""
    out = set()
    for da in range(1, ell // 2 + 1):
        for a in range(1 << da, 1 << (da + 1)):
            for b in range(1 << (ell - da), 1 << (ell - da + 1)):
                out.add(_schoolbook(a, b))
    return out


def least_irreducible_by_enumeration(ell: int) -> int:
    bad = reducible_masks(ell)
    return next(p for p in range((1 << ell) + 1, 1 << (ell + 1), 2) if p not in bad)


def log_tables(ell: int, poly: int):
    """Discrete log / antilog built by repeated multiplication by a
    generator; the generator is found by orbit length."""
    order = 1 << ell

    def times_x(v):
        v <<= 1
        return v ^ poly if v & order else v

    # multiply-by-g for candidate g via repeated doubling-and-adding
    def times(v, g):
        out, cur = 0, v
        for i in range(ell):
            if g >> i & 1:
                out ^= cur
            cur = times_x(cur)
        return out

    for g in range(2, order):
        seen, v = [1], times(1, g)
        while v != 1:
            seen.append(v)
            v = times(v, g)
        if len(seen) == order - 1:
            return {v: i for i, v in enumerate(seen)}, seen
    # GF(2): the only nonzero element is 1
    return {1: 0}, [1]


def mul_by_logs(x: int, y: int, logs, antilogs) -> int:
    if x == 0 or y == 0:
        return 0
    return antilogs[(logs[x] + logs[y]) % len(antilogs)]


# -- hypergraphs ------------------------------------------------------------------


def ap_edges_bruteforce(r: int, k: int) -> set[frozenset[int]]:
    """Every point set {a + i d} of r distinct points, keyed by base-r id."""
    V = list(itertools.product(range(r), repeat=k))
    enc = {v: sum(c * r ** (k - 1 - j) for j, c in enumerate(v)) for v in V}
    edges = set()
    for a in V:
        for d in V:
            pts = {tuple((a[j] + i * d[j]) % r for j in range(k)) for i in range(r)}
            if len(pts) == r:
                edges.add(frozenset(enc[p] for p in pts))
    return edges


def design_violation(edges, s: int):
    """First pair of edges sharing >= s vertices, by scanning all pairs."""
    sets = [frozenset(e) for e in edges]
    for i, j in itertools.combinations(range(len(sets)), 2):
        if len(sets[i] & sets[j]) >= s:
            return sets[i], sets[j]
    return None


def alpha_bruteforce(n: int, edges) -> int:
    """Maximum independent set size by scanning all 2^n vertex subsets."""
    masks = np.arange(1 << n, dtype=np.int64)
    ok = np.ones(1 << n, dtype=bool)
    for e in edges:
        em = sum(1 << v for v in e)
        ok &= (masks & em) != em
    sizes = np.zeros(1 << n, dtype=np.int64)
    for v in range(n):
        sizes += (masks >> v) & 1
    return int(sizes[ok].max())


def random_hypergraph_edges(rng: random.Random, n: int, r: int, m: int) -> list[tuple[int, ...]]:
    return [tuple(rng.sample(range(n), r)) for _ in range(m)]


def random_packing(rng: random.Random, n: int, r: int, s: int, attempts: int = 200) -> list[tuple[int, ...]]:
    """Random (n, r, s)-system grown by rejection."""
    edges: list[frozenset[int]] = []
    for _ in range(attempts):
        e = frozenset(rng.sample(range(n), r))
        if all(len(e & f) < s for f in edges):
            edges.append(e)
    return [tuple(sorted(e)) for e in edges]


def has_three_ap_z3(points, k: int) -> bool:
    """Whether the Z_3^k points (as base-3 ids) contain u, v, w distinct
    with u + w = 2v."""
    vecs = [tuple(p // 3 ** (k - 1 - j) % 3 for j in range(k)) for p in points]
    vs = set(vecs)
    for u, w in itertools.combinations(vecs, 2):
        mid = tuple((-(a + b)) % 3 for a, b in zip(u, w))  # 2v = u + w  <=>  v = -(u + w) mod 3
        if mid in vs and mid != u and mid != w:
            return True
    return False
