"""Uniform hypergraphs over integer vertex ids and their structural operations.

Edges live in an (m, r) int64 array. Every row is sorted ascending and the
rows are unique and lexicographically sorted, so two hypergraphs with the
same edge set have identical arrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Iterable, Iterator

import numpy as np

# Above this many s-subsets a pairwise intersection count is cheaper.
_HASH_PAIRWISE_RATIO = 1


class ArityError(ValueError):
    """An edge has the wrong size, repeats a vertex, or names a missing vertex."""


def _fits_int64(base: int, digits: int) -> bool:
    return digits == 0 or base ** digits < 2**62


def _row_keys(rows: np.ndarray, base: int) -> np.ndarray:
    keys = np.zeros(len(rows), dtype=np.int64)
    for j in range(rows.shape[1]):
        keys = keys * base + rows[:, j]
    return keys


def _canonical(edges, n: int, r: int) -> np.ndarray:
    arr = np.asarray(edges, dtype=np.int64)
    if arr.size == 0:
        return np.empty((0, r), dtype=np.int64)
    if arr.ndim != 2 or arr.shape[1] != r:
        raise ArityError(f"edges must have exactly {r} vertices")
    arr = np.sort(arr, axis=1)
    if arr[:, 0].min() < 0 or arr[:, -1].max() >= n:
        raise ArityError(f"vertex id out of range [0, {n})")
    if r > 1 and not (np.diff(arr, axis=1) > 0).all():
        raise ArityError("edge repeats a vertex")
    if _fits_int64(max(n, 2), r):
        _, idx = np.unique(_row_keys(arr, max(n, 2)), return_index=True)
        return np.ascontiguousarray(arr[idx])
    return np.unique(arr, axis=0)


class Hypergraph:
    """An r-uniform hypergraph on vertices 0..n-1. Immutable."""

    __slots__ = ("n", "r", "_edges")

    def __init__(self, n: int, r: int, edges=()):
        if n < 0 or r < 1:
            raise ValueError(f"need n >= 0 and r >= 1, got n={n}, r={r}")
        self.n = int(n)
        self.r = int(r)
        arr = _canonical(edges, self.n, self.r)
        arr.flags.writeable = False
        self._edges = arr

    @property
    def edges(self) -> np.ndarray:
        return self._edges

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def __len__(self) -> int:
        return len(self._edges)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        for row in self._edges.tolist():
            yield tuple(row)

    def edge_set(self) -> set[tuple[int, ...]]:
        return set(self)

    def degrees(self) -> np.ndarray:
        return np.bincount(self._edges.ravel(), minlength=self.n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.n, self.r) == (other.n, other.r) and np.array_equal(self._edges, other._edges)

    __hash__ = None

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, r={self.r}, m={self.num_edges})"


def make(n: int, r: int) -> Hypergraph:
    return Hypergraph(n, r)


def add_edge(H: Hypergraph, ids: Iterable[int]) -> Hypergraph:
    ids = [int(i) for i in ids]
    if len(ids) != H.r or len(set(ids)) != H.r:
        raise ArityError(f"edge {ids} is not a set of {H.r} distinct ids")
    return Hypergraph(H.n, H.r, np.vstack([H.edges, np.array([ids], dtype=np.int64)]))


def _vertex_mask(n: int, S: Iterable[int]) -> np.ndarray:
    ids = np.fromiter((int(v) for v in S), dtype=np.int64)
    if ids.size and (ids.min() < 0 or ids.max() >= n):
        raise ArityError(f"vertex id out of range [0, {n})")
    mask = np.zeros(n, dtype=bool)
    mask[ids] = True
    return mask


def induced(H: Hypergraph, S: Iterable[int]) -> Hypergraph:
    """Sub-hypergraph on S; vertex S[i] (sorted) becomes id i."""
    mask = _vertex_mask(H.n, S)
    relabel = np.cumsum(mask) - 1
    keep = mask[H.edges].all(axis=1) if H.num_edges else np.zeros(0, dtype=bool)
    return Hypergraph(int(mask.sum()), H.r, relabel[H.edges[keep]])


def shadow(H: Hypergraph, r_prime: int) -> Hypergraph:
    """Replace every edge by its r_prime smallest vertices."""
    if not 1 <= r_prime <= H.r:
        raise ArityError(f"r' must lie in [1, {H.r}], got {r_prime}")
    return Hypergraph(H.n, r_prime, H.edges[:, :r_prime])


def product(H1: Hypergraph, H2: Hypergraph) -> Hypergraph:
    """Direct product: vertex (u, v) is u*n2 + v, edges are E1 x E2."""
    e1, e2 = H1.edges, H2.edges
    block = e1[:, None, :, None] * H2.n + e2[None, :, None, :]
    edges = block.reshape(len(e1) * len(e2), H1.r * H2.r)
    return Hypergraph(H1.n * H2.n, H1.r * H2.r, edges)


# -- verification -------------------------------------------------------------


@dataclass(frozen=True)
class DesignCheck:
    ok: bool
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    def __bool__(self) -> bool:
        return self.ok


def _witness_for_subset(H: Hypergraph, subset: np.ndarray) -> DesignCheck:
    hits = np.isin(H.edges, subset).sum(axis=1) == len(subset)
    i, j = np.flatnonzero(hits)[:2]
    return DesignCheck(False, (tuple(H.edges[i].tolist()), tuple(H.edges[j].tolist())))


def _verify_hashing(H: Hypergraph, s: int) -> DesignCheck:
    edges = H.edges
    combos = [list(c) for c in combinations(range(H.r), s)]
    base = max(H.n, 2)
    if _fits_int64(base, s):
        keys = np.concatenate([_row_keys(edges[:, c], base) for c in combos])
        keys.sort()
        dup = np.flatnonzero(keys[1:] == keys[:-1])
        if dup.size == 0:
            return DesignCheck(True)
        key = int(keys[dup[0]])
        subset = []
        for _ in range(s):
            key, digit = divmod(key, base)
            subset.append(digit)
        return _witness_for_subset(H, np.array(subset[::-1]))
    rows = np.concatenate([edges[:, c] for c in combos])
    uniq, counts = np.unique(rows, axis=0, return_counts=True)
    bad = np.flatnonzero(counts > 1)
    if bad.size == 0:
        return DesignCheck(True)
    return _witness_for_subset(H, uniq[bad[0]])


def _verify_pairwise(H: Hypergraph, s: int, block: int = 1024) -> DesignCheck:
    m = H.num_edges
    inc = np.zeros((m, H.n), dtype=np.float32)
    inc[np.repeat(np.arange(m), H.r), H.edges.ravel()] = 1.0
    for lo in range(0, m, block):
        inter = inc[lo : lo + block] @ inc.T
        rows, cols = np.nonzero(inter >= s)
        off = rows + lo != cols
        if off.any():
            i, j = rows[off][0] + lo, cols[off][0]
            return DesignCheck(False, (tuple(H.edges[i].tolist()), tuple(H.edges[j].tolist())))
    return DesignCheck(True)


def verify_design(H: Hypergraph, s: int, method: str = "auto") -> DesignCheck:
    """Check that every s-set of vertices lies in at most one edge.

    ``method`` is ``"hash"`` (hash every s-subset of every edge),
    ``"pairwise"`` (count all pairwise intersections) or ``"auto"``, which
    hashes unless C(r, s) exceeds the edge count.
    """
    if not 1 <= s <= H.r:
        raise ValueError(f"s must lie in [1, {H.r}], got {s}")
    if H.num_edges < 2:
        return DesignCheck(True)
    if method == "auto":
        method = "hash" if math.comb(H.r, s) <= _HASH_PAIRWISE_RATIO * H.num_edges else "pairwise"
    if method == "hash":
        return _verify_hashing(H, s)
    if method == "pairwise":
        return _verify_pairwise(H, s)
    raise ValueError(f"unknown method {method!r}")


def contained_edge(H: Hypergraph, S: Iterable[int]) -> tuple[int, ...] | None:
    """Some edge of H lying inside S, or None if S is independent."""
    mask = _vertex_mask(H.n, S)
    if H.num_edges == 0:
        return None
    inside = np.flatnonzero(mask[H.edges].all(axis=1))
    return tuple(H.edges[inside[0]].tolist()) if inside.size else None


def is_independent(H: Hypergraph, S: Iterable[int]) -> bool:
    return contained_edge(H, S) is None


# -- claimed parameters -------------------------------------------------------


@dataclass(frozen=True)
class Provenance:
    """One node of a construction expression tree."""

    op: str
    args: dict[str, Any] = field(default_factory=dict)
    children: tuple[Provenance, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"op": self.op, **self.args}
        if self.children:
            out["children"] = [c.to_dict() for c in self.children]
        return out


@dataclass(frozen=True)
class DesignParams:
    """A claimed (n, r, s) triple and the construction that produced it."""

    n: int
    r: int
    s: int
    provenance: Provenance = field(default_factory=lambda: Provenance("given"))

    def __post_init__(self):
        # n < r is allowed: small trims and the edgeless base levels are
        # (trivially) valid designs.
        if not self.r > self.s >= 1 or self.n < 0:
            raise ValueError(f"invalid design parameters (n={self.n}, r={self.r}, s={self.s})")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n, self.r, self.s)


def product_params(p1: DesignParams, p2: DesignParams) -> DesignParams:
    s = max(p1.r * (p2.s - 1) + 1, p2.r * (p1.s - 1) + 1)
    node = Provenance("product", {"n": p1.n * p2.n, "r": p1.r * p2.r, "s": s}, (p1.provenance, p2.provenance))
    return DesignParams(p1.n * p2.n, p1.r * p2.r, s, node)
