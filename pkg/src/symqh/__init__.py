"""Exact quantum cohomology of symmetric products of a curve, eta-theta subring."""

from .chern import ChernExpr, gw1_oracle, gw2_oracle, ht_monomial_eval, segre_complete, virtual_class_m11
from .gw import UNKNOWN, GWQuery, RegimeReport, gw1, gw2, gw_e, regime
from .quantum import QClass, QSeries, qpow, qprod, qprod_eta
from .ring import Ambient, CohClass, Monomial, cup, dim_invariant_subring, eval_top, pair, reduce

__all__ = [
    "Ambient", "ChernExpr", "CohClass", "GWQuery", "Monomial", "QClass", "QSeries",
    "RegimeReport", "UNKNOWN", "cup", "dim_invariant_subring", "eval_top", "gw1", "gw1_oracle",
    "gw2", "gw2_oracle", "gw_e", "ht_monomial_eval", "pair", "qpow", "qprod", "qprod_eta",
    "reduce", "regime", "segre_complete", "virtual_class_m11",
]
