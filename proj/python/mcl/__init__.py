"""Exact monomial and binomial ideal toolkit."""

import json

try:
    from . import _mcl as _core  # installed wheel layout
except ImportError:  # in-tree build: the extension sits on PYTHONPATH
    import _mcl as _core

DomainError = _core.DomainError
DimensionMismatch = _core.DimensionMismatch
InternalCheckError = _core.InternalCheckError

MonomialIdeal = _core.MonomialIdeal
zero = _core.zero
unit = _core.unit

parse_ideal = _core.parse_ideal
format_ideal = _core.format_ideal
format_monomial = _core.format_monomial
ideal_to_json = _core.ideal_to_json
ideal_from_json = _core.ideal_from_json

contains = _core.contains
is_subset = _core.is_subset
multiply = _core.multiply
power = _core.power
intersect = _core.intersect
colon = _core.colon

integral_closure = _core.integral_closure
is_integrally_closed = _core.is_integrally_closed
is_normal_up_to = _core.is_normal_up_to
block_ideal = _core.block_ideal

colon_chain = _core.colon_chain
is_ratliff_rush_up_to = _core.is_ratliff_rush_up_to

gamma_ideal = _core.gamma_ideal
excluded_by_lemma = _core.excluded_by_lemma


def analyze(n, m0, d=1, power=1, rr_horizon=4):
    """Full curve report as a nested dict; see analyze_curve for raw JSON."""
    return json.loads(_core.analyze_curve(n, m0, d, power, rr_horizon))


analyze_curve = _core.analyze_curve

__all__ = [
    "DomainError",
    "DimensionMismatch",
    "InternalCheckError",
    "MonomialIdeal",
    "zero",
    "unit",
    "parse_ideal",
    "format_ideal",
    "format_monomial",
    "ideal_to_json",
    "ideal_from_json",
    "contains",
    "is_subset",
    "multiply",
    "power",
    "intersect",
    "colon",
    "integral_closure",
    "is_integrally_closed",
    "is_normal_up_to",
    "block_ideal",
    "colon_chain",
    "is_ratliff_rush_up_to",
    "gamma_ideal",
    "excluded_by_lemma",
    "analyze",
    "analyze_curve",
]
