"""Dependent random choice on bipartite graphs, run as a Las Vegas search."""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

log = logging.getLogger(__name__)


class DrcPreconditionError(ValueError):
    """The counting inequality that guarantees success does not hold."""


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with left side 0..n1-1 and right side 0..n2-1.

    ``adjacency[u]`` is the set of right neighbours of left vertex u.
    """

    n1: int
    n2: int
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.adjacency) != self.n1:
            raise ValueError("need one neighbourhood per left vertex")
        for nbrs in self.adjacency:
            if any(not 0 <= w < self.n2 for w in nbrs):
                raise ValueError(f"right vertex out of range [0, {self.n2})")

    @classmethod
    def from_edges(cls, n1: int, n2: int, edges: Iterable[tuple[int, int]]) -> BipartiteGraph:
        adj: list[set[int]] = [set() for _ in range(n1)]
        for u, w in edges:
            adj[u].add(w)
        return cls(n1, n2, tuple(frozenset(a) for a in adj))

    @classmethod
    def random(cls, n1: int, n2: int, density: float, seed: int) -> BipartiteGraph:
        rng = random.Random(seed)
        return cls.from_edges(n1, n2, ((u, w) for u in range(n1) for w in range(n2) if rng.random() < density))

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency)

    @property
    def avg_left_degree(self) -> float:
        return self.num_edges / self.n1 if self.n1 else 0.0

    @cached_property
    def _left_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << w for w in a) for a in self.adjacency)

    @cached_property
    def _right_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n2
        for u, a in enumerate(self.adjacency):
            for w in a:
                masks[w] |= 1 << u
        return tuple(masks)

    def common_right(self, left: Iterable[int]) -> int:
        """Number of right vertices adjacent to every vertex in ``left``."""
        mask = (1 << self.n2) - 1
        for u in left:
            mask &= self._left_masks[u]
        return mask.bit_count()

    def common_left(self, right: Iterable[int]) -> frozenset[int]:
        mask = (1 << self.n1) - 1
        for w in right:
            mask &= self._right_masks[w]
        return frozenset(u for u in range(self.n1) if mask >> u & 1)


@dataclass(frozen=True)
class DrcParams:
    t: int
    r: int
    m: int
    a: int

    def __post_init__(self):
        if min(self.t, self.r, self.m, self.a) < 1:
            raise ValueError(f"all of t, r, m, a must be positive: {self}")


def _expectations(G: BipartiteGraph, p: DrcParams) -> tuple[float, float]:
    # lower bound on E|A| and upper bound on E[#poor r-subsets of A]
    expected_x = G.n1 * (G.avg_left_degree / G.n2) ** p.t
    expected_y = math.comb(G.n1, p.r) * (p.m / G.n2) ** p.t
    return expected_x, expected_y


def drc_margin(G: BipartiteGraph, p: DrcParams) -> float:
    """n1 d1^t / n2^t - C(n1, r) (m / n2)^t - a; success is guaranteed when >= 0."""
    if G.n1 == 0 or G.n2 == 0:
        return -float(p.a)
    expected_x, expected_y = _expectations(G, p)
    return expected_x - expected_y - p.a


def is_rich(G: BipartiteGraph, U: Iterable[int], r: int, m: int) -> bool:
    """Every r-subset of U has at least m common right neighbours."""
    return all(G.common_right(S) >= m for S in combinations(sorted(U), r))


def drc_find(G: BipartiteGraph, p: DrcParams, max_tries: int = 1000, seed: int = 0) -> frozenset[int] | None:
    """A left set U with |U| >= a whose r-subsets each have >= m common neighbours.

    Each try samples t right vertices with repetition, takes their common
    neighbourhood A, and deletes one vertex from every r-subset of A with
    fewer than m common neighbours. The result is re-checked before it is
    returned; None means every try fell short.
    """
    margin = drc_margin(G, p)
    if margin < 0:
        raise DrcPreconditionError(f"counting inequality fails (margin {margin:.4g}) for {p}")
    log.debug("drc: E[X] >= %.4g, E[Y] <= %.4g", *_expectations(G, p))
    rng = random.Random(seed)
    for attempt in range(1, max_tries + 1):
        T = [rng.randrange(G.n2) for _ in range(p.t)]
        A = sorted(G.common_left(T))
        U = set(A)
        for S in combinations(A, p.r):
            if U.issuperset(S) and G.common_right(S) < p.m:
                U.discard(S[-1])
        if len(U) >= p.a and is_rich(G, U, p.r, p.m):
            log.debug("drc: success after %d tries, |A|=%d, |U|=%d", attempt, len(A), len(U))
            return frozenset(U)
    log.debug("drc: no set found in %d tries", max_tries)
    return None
