"""Independence number: exact branch and bound, randomized greedy with local search."""

from __future__ import annotations

from dataclasses import dataclass

import numba
import numpy as np

from ..hypergraph import Hypergraph

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class AlphaResult:
    """Outcome of a (possibly truncated) exact search.

    ``lower`` is the size of ``witness``; ``upper`` is certified. They agree
    iff the search completed.
    """

    lower: int
    upper: int
    witness: tuple[int, ...]
    nodes: int

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def status(self) -> str:
        return "exact" if self.exact else "bounds"

    @property
    def value(self) -> int:
        if not self.exact:
            raise ValueError(f"search incomplete: {self.lower} <= alpha <= {self.upper}")
        return self.lower


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _propagate(I: int, F: int, alive: list[int]) -> tuple[int, list[int]]:
    """Exclude every free vertex that is the last missing vertex of an edge."""
    while True:
        allowed = I | F
        forced = 0
        keep = []
        for e in alive:
            if e & ~allowed:
                continue
            free = e & F
            if free & (free - 1) == 0:
                forced |= free
            else:
                keep.append(free)
        alive = keep
        if not forced:
            return F, alive
        F &= ~forced


def alpha_exact(H: Hypergraph, budget: int = DEFAULT_BUDGET) -> AlphaResult:
    """Maximum independent set by depth-first branch and bound.

    A node fixes some vertices in (I) and some out; the rest are free (F).
    Only edges avoiding the excluded vertices matter, and each such edge must
    lose one of its free vertices, so |I| + |F| minus a greedy packing of
    disjoint free parts bounds every completion. Branching takes the free
    vertex lying in most live edges, include-branch first.
    """
    edges = [sum(1 << v for v in e) for e in H]
    best, best_set = 0, 0
    nodes = 0
    # stack entries: (I, F, free parts of live edges, bound inherited from parent)
    stack: list[tuple[int, int, list[int], int]] = [(0, (1 << H.n) - 1, edges, H.n)]
    while stack:
        I, F, alive, parent_ub = stack.pop()
        if parent_ub <= best:
            continue
        if nodes >= budget:
            upper = max([best, parent_ub] + [ub for *_, ub in stack])
            return AlphaResult(best, upper, _bits(best_set), nodes)
        nodes += 1
        F, alive = _propagate(I, F, alive)
        if not alive:
            size = (I | F).bit_count()
            if size > best:
                best, best_set = size, I | F
            continue
        alive.sort(key=int.bit_count)
        used = packing = 0
        for free in alive:
            if not free & used:
                used |= free
                packing += 1
        ub = I.bit_count() + F.bit_count() - packing
        if ub <= best:
            continue
        if I.bit_count() > best:
            best, best_set = I.bit_count(), I
        counts: dict[int, int] = {}
        for free in alive:
            x = free
            while x:
                low = x & -x
                counts[low] = counts.get(low, 0) + 1
                x ^= low
        v = max(counts, key=counts.__getitem__)
        stack.append((I, F & ~v, alive, ub))
        stack.append((I | v, F & ~v, alive, ub))
    return AlphaResult(best, best, _bits(best_set), nodes)


# -- greedy ---------------------------------------------------------------------


def _incidence(H: Hypergraph) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    edges = np.ascontiguousarray(H.edges, dtype=np.int64).reshape(-1, H.r)
    flat = edges.ravel()
    order = np.argsort(flat, kind="stable")
    ptr = np.zeros(H.n + 1, dtype=np.int64)
    np.cumsum(np.bincount(flat, minlength=H.n), out=ptr[1:])
    return edges, ptr, (order // H.r).astype(np.int64)


@numba.njit(cache=True)
def _addable(v, r, counts, ptr, inc):
    for p in range(ptr[v], ptr[v + 1]):
        if counts[inc[p]] == r - 1:
            return False
    return True


@numba.njit(cache=True)
def _add(v, member, counts, ptr, inc, delta):
    member[v] = delta > 0
    for p in range(ptr[v], ptr[v + 1]):
        counts[inc[p]] += delta


@numba.njit(cache=True)
def _fill(order, r, member, counts, ptr, inc):
    size = 0
    for v in order:
        if not member[v] and _addable(v, r, counts, ptr, inc):
            _add(v, member, counts, ptr, inc, 1)
        size += member[v]
    return size


@numba.njit(cache=True)
def _swap_candidates(n, r, edges, member, counts, ptr, inc):
    """For each non-member x, the vertices of I lying in every edge that
    blocks x (edges whose other r-1 vertices are all in I). Removing any one
    of them makes x addable. Returned as (x, u) pairs."""
    xs = np.empty(n * r, dtype=np.int64)
    us = np.empty(n * r, dtype=np.int64)
    cnt = 0
    common = np.empty(r, dtype=np.int64)
    for x in range(n):
        if member[x]:
            continue
        size = -1
        for p in range(ptr[x], ptr[x + 1]):
            e = inc[p]
            if counts[e] != r - 1:
                continue
            if size < 0:
                size = 0
                for j in range(r):
                    if edges[e, j] != x:
                        common[size] = edges[e, j]
                        size += 1
            else:
                keep = 0
                for i in range(size):
                    hit = False
                    for j in range(r):
                        if edges[e, j] == common[i]:
                            hit = True
                    if hit:
                        common[keep] = common[i]
                        keep += 1
                size = keep
            if size == 0:
                break
        for i in range(max(size, 0)):
            xs[cnt] = x
            us[cnt] = common[i]
            cnt += 1
    return xs[:cnt], us[:cnt]


@numba.njit(cache=True)
def _greedy_search(n, r, edges, ptr, inc, iterations, seed):
    np.random.seed(seed)
    m = edges.shape[0]
    best = -1
    best_member = np.zeros(n, dtype=np.bool_)
    for _ in range(iterations):
        member = np.zeros(n, dtype=np.bool_)
        counts = np.zeros(m, dtype=np.int64)
        size = _fill(np.random.permutation(n), r, member, counts, ptr, inc)
        improved = True
        while improved:
            improved = False
            xs, us = _swap_candidates(n, r, edges, member, counts, ptr, inc)
            if xs.shape[0] < 2:
                break
            for u in np.random.permutation(n):
                if not member[u]:
                    continue
                cand = np.random.permutation(xs[us == u])
                if cand.shape[0] < 2:
                    continue
                _add(u, member, counts, ptr, inc, -1)
                added = np.empty(cand.shape[0], dtype=np.int64)
                k = 0
                for x in cand:
                    if not member[x] and _addable(x, r, counts, ptr, inc):
                        _add(x, member, counts, ptr, inc, 1)
                        added[k] = x
                        k += 1
                if k >= 2:
                    size = _fill(np.random.permutation(n), r, member, counts, ptr, inc)
                    improved = True
                    break
                for i in range(k):
                    _add(added[i], member, counts, ptr, inc, -1)
                _add(u, member, counts, ptr, inc, 1)
        if size > best:
            best = size
            best_member[:] = member
    return best, best_member


def alpha_greedy(H: Hypergraph, iterations: int = 100, seed: int = 0) -> tuple[int, tuple[int, ...]]:
    """Largest independent set found by randomized greedy plus (1,2)-swaps.

    Each iteration builds a maximal independent set in a random order, then
    repeatedly removes one member u and adds two vertices that only u was
    blocking. Returns (size, witness).
    """
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    if H.num_edges == 0:
        return H.n, tuple(range(H.n))
    edges, ptr, inc = _incidence(H)
    size, member = _greedy_search(H.n, H.r, edges, ptr, inc, iterations, seed)
    return int(size), tuple(np.flatnonzero(member).tolist())
