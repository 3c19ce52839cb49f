"""Hodge integrals, ELSV, graph contributions and the relations built from them."""

from .graphs import (
    GAMMA_KINDS,
    cutjoin_relation_check,
    cutjoin_relation_sides,
    gamma_value,
    positional_relation_sides,
)
from .integrals import (
    ExtractionResult,
    HodgeDataMissing,
    HodgeKey,
    HodgeTable,
    default_hodge_table,
    elsv_rhs,
    extract_hodge_table,
    gamma_r,
    hodge_expansion,
    hodge_rational_integral,
    lambda_integral,
    mumford_genus1,
)
from .starstar import StarStarReport, starstar_numeric_check, starstar_report, starstar_terms
from .theorem import (
    DSeriesEntry,
    Theorem1Report,
    d_bullet,
    d_connected,
    disconnected_hurwitz_table,
    phi_bullet,
    theorem1_check,
    theorem1_coefficient,
    theorem1_report,
)

__all__ = [
    "DSeriesEntry",
    "ExtractionResult",
    "GAMMA_KINDS",
    "HodgeDataMissing",
    "HodgeKey",
    "HodgeTable",
    "StarStarReport",
    "Theorem1Report",
    "cutjoin_relation_check",
    "cutjoin_relation_sides",
    "d_bullet",
    "d_connected",
    "default_hodge_table",
    "disconnected_hurwitz_table",
    "elsv_rhs",
    "extract_hodge_table",
    "gamma_r",
    "gamma_value",
    "hodge_expansion",
    "hodge_rational_integral",
    "lambda_integral",
    "mumford_genus1",
    "phi_bullet",
    "positional_relation_sides",
    "starstar_numeric_check",
    "starstar_report",
    "starstar_terms",
    "theorem1_check",
    "theorem1_coefficient",
    "theorem1_report",
]
