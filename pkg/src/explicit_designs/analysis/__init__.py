from .bounds import ProductBound, bound_five_four, bound_pp20, bound_product_h, bound_rs_lower, product_t_raw
from .drc import BipartiteGraph, DrcParams, DrcPreconditionError, drc_find, drc_margin, is_rich
from .independence import AlphaResult, alpha_exact, alpha_greedy
from .report import BoundReport, reference_bounds, report

__all__ = [
    "AlphaResult",
    "BipartiteGraph",
    "BoundReport",
    "DrcParams",
    "DrcPreconditionError",
    "ProductBound",
    "alpha_exact",
    "alpha_greedy",
    "bound_five_four",
    "bound_pp20",
    "bound_product_h",
    "bound_rs_lower",
    "drc_find",
    "drc_margin",
    "is_rich",
    "product_t_raw",
    "reference_bounds",
    "report",
]
