"""Bundle verification, independence estimates and reference bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Iterator

from ..hypergraph import DesignParams, Hypergraph, Provenance, verify_design
from .bounds import bound_five_four, bound_pp20, bound_product_h, bound_rs_lower
from .independence import alpha_exact, alpha_greedy


@dataclass
class BoundReport:
    n: int
    r: int
    s: int
    edges: int
    verified: bool
    witness: list[list[int]] | None
    alpha_greedy: int
    alpha_exact: int | list[int] | None
    alpha_exact_status: str
    bounds: dict[str, float | int | None]
    provenance: dict[str, Any]
    seed: int
    greedy_witness: list[int] = field(default_factory=list, repr=False)

    def to_json(self) -> dict[str, Any]:
        """The report in its serialised schema (alpha_exact is a [lower, upper]
        pair when the search ran out of budget)."""
        return {
            "n": self.n,
            "r": self.r,
            "s": self.s,
            "edges": self.edges,
            "verified": self.verified,
            "witness": self.witness,
            "alpha_greedy": self.alpha_greedy,
            "alpha_exact": self.alpha_exact,
            "alpha_exact_status": self.alpha_exact_status,
            "bounds": dict(self.bounds),
            "provenance": self.provenance,
            "seed": self.seed,
        }


def _walk(node: Provenance) -> Iterator[Provenance]:
    yield node
    for child in node.children:
        yield from _walk(child)


def _level(params: DesignParams, op: str, **match) -> float | None:
    """k of the first matching construction node; None if absent."""
    for node in _walk(params.provenance):
        if node.op == op and all(node.args.get(key) == val for key, val in match.items()):
            return node.args["k"]
    return None


def reference_bounds(params: DesignParams, product_factors: tuple | None = None) -> dict[str, float | int | None]:
    """Every closed-form bound that applies to the claimed parameters.

    The 6-AP and (n,5,4) values use the level recorded in the provenance if
    there is one, otherwise the level an n-vertex design of that shape would
    be cut from. ``product_factors`` is (n1, n2, r1, f, g).
    """
    n, r, s = params.as_tuple()
    out: dict[str, float | int | None] = dict.fromkeys(("rs_lower_shape", "pp20", "five_four", "product_h", "product_t"))
    if r > s >= 2 and n >= max(r, 3):
        out["rs_lower_shape"] = bound_rs_lower(n, r, s)
    if s == 2 and n > 1:
        k = _level(params, "ap", r=6)
        if k is None:
            k = max(1, math.ceil(math.log(n, 6) - 1e-12))
        out["pp20"] = bound_pp20(k)
    k = _level(params, "five_four")
    if k is None and (r, s) == (5, 4) and n >= 3:
        k = math.log(n, 3)
    if k is not None and k >= 1:
        out["five_four"] = bound_five_four(k)
    if product_factors is not None:
        t, h = bound_product_h(*product_factors)
        out["product_t"], out["product_h"] = t, h
    return out


def report(
    H: Hypergraph,
    params: DesignParams,
    *,
    seed: int = 0,
    greedy_iters: int = 100,
    exact_budget: int | None = None,
    product_factors: tuple | None = None,
) -> BoundReport:
    """Verify H against its claimed s and measure its independence number.

    The exact search only runs when ``exact_budget`` is given. A failed
    verification is recorded in the report, not raised.
    """
    check = verify_design(H, params.s)
    greedy, greedy_set = alpha_greedy(H, greedy_iters, seed)
    if exact_budget is None:
        exact, status = None, "skipped"
    else:
        res = alpha_exact(H, exact_budget)
        exact = res.lower if res.exact else [res.lower, res.upper]
        status = res.status
    return BoundReport(
        n=H.n,
        r=H.r,
        s=params.s,
        edges=H.num_edges,
        verified=check.ok,
        witness=None if check.ok else [list(e) for e in check.witness],
        alpha_greedy=greedy,
        alpha_exact=exact,
        alpha_exact_status=status,
        bounds=reference_bounds(params, product_factors),
        provenance=params.provenance.to_dict(),
        seed=seed,
        greedy_witness=list(greedy_set),
    )
