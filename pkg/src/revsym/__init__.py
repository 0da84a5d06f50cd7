"""Exact counting of restricted polygon dissections via reversive symbols.

A reversive symbol is a small rational function alpha(F) whose compositional
inverse, divided by x, generates a dissection-counting sequence.  The package
computes such sequences four independent ways (Lagrange inversion, direct
series reversion, closed binomial sums, and brute-force enumeration) and
cross-checks them against each other.
"""

from .closed_forms import (
    DomainError,
    catalan_term,
    even_term,
    motzkin_term,
    odd_term,
    schroeder_term,
    triangle_free_term,
)
from .dissection_oracle import (
    CapExceeded,
    Dissection,
    Tile,
    count_by_series,
    count_chord_diagrams,
    enumerate_count,
    iter_dissections,
    tiles_of,
)
from .exact_arith import DivisibilityViolation, ZeroDivisor, binomial, exact_div
from .power_series import (
    NonIntegerCoefficient,
    NonUnitSeries,
    NonZeroInnerConstant,
    NotRevertible,
    TruncatedSeries,
    lagrange_coefficients,
    revert_direct,
)
from .symbols import (
    ANY_TILES,
    EVEN_ONLY,
    NO_TRIANGLES,
    ODD_ONLY,
    TRIANGLES_ONLY,
    InvalidTileSet,
    ParseError,
    Polynomial,
    ReversiveSymbol,
    TileKind,
    TileRule,
    catalog,
    expand,
    format_symbol,
    parse_symbol,
    parse_tile_spec,
    symbol_from_tile_rule,
    verify_inverse,
    verify_tautological,
)

__version__ = "0.1.0"

__all__ = [
    "ANY_TILES",
    "CapExceeded",
    "Dissection",
    "DivisibilityViolation",
    "DomainError",
    "EVEN_ONLY",
    "InvalidTileSet",
    "NO_TRIANGLES",
    "NonIntegerCoefficient",
    "NonUnitSeries",
    "NonZeroInnerConstant",
    "NotRevertible",
    "ODD_ONLY",
    "ParseError",
    "Polynomial",
    "ReversiveSymbol",
    "TRIANGLES_ONLY",
    "Tile",
    "TileKind",
    "TileRule",
    "TruncatedSeries",
    "ZeroDivisor",
    "binomial",
    "catalan_term",
    "catalog",
    "count_by_series",
    "count_chord_diagrams",
    "enumerate_count",
    "even_term",
    "exact_div",
    "expand",
    "format_symbol",
    "iter_dissections",
    "lagrange_coefficients",
    "motzkin_term",
    "odd_term",
    "parse_symbol",
    "parse_tile_spec",
    "revert_direct",
    "schroeder_term",
    "symbol_from_tile_rule",
    "tiles_of",
    "triangle_free_term",
    "verify_inverse",
    "verify_tautological",
]
