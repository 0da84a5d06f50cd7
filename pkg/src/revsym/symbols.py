"""Reversive symbols: rational functions that encode dissection counts.

A reversive symbol is a rational function alpha(F) = P(F)/Q(F) with integer
coefficients, P(0) = 0 and unit slope; the compositional inverse of alpha is
x * A(x) where A is the generating function of the counting sequence the
symbol stands for.  This module holds the symbol and tile-rule types, the
six-entry catalog, synthesis of a symbol from a tile-size rule, the two
functional-equation verifiers, and the one-line text format used by the CLI.

A tile rule S (a set of permitted tile side-counts, each >= 3) turns into a
symbol through the root-edge decomposition of a dissection: a tile with s
sides glued to the root edge contributes x^{s-2} A^{s-1}, so

    A = 1 + sum_{s in S} x^{s-2} A^{s-1}

and substituting F = xA gives alpha(F) = F - sum_{s in S} F^{s-1}, summed in
closed rational form whenever S is finite or finite plus an arithmetic tail.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Sequence

from .power_series import TruncatedSeries

__all__ = [
    "Polynomial",
    "ReversiveSymbol",
    "TileKind",
    "TileRule",
    "InvalidTileSet",
    "ParseError",
    "ANY_TILES",
    "TRIANGLES_ONLY",
    "NO_TRIANGLES",
    "ODD_ONLY",
    "EVEN_ONLY",
    "catalog",
    "symbol_from_tile_rule",
    "expand",
    "verify_inverse",
    "verify_tautological",
    "format_symbol",
    "parse_symbol",
    "parse_tile_spec",
]


class InvalidTileSet(ValueError):
    """A tile rule that admits no side-count, or one below 3."""


class ParseError(ValueError):
    """Malformed symbol text or tile-rule spec."""


@dataclass(frozen=True)
class Polynomial:
    """Integer-coefficient polynomial, coeffs[i] the coefficient of degree i.

    Trailing zero coefficients are trimmed; the zero polynomial is ().
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not isinstance(c, int):
                raise TypeError("polynomial coefficients must be int")
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: Polynomial) -> Polynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.coeff(i) + other.coeff(i) for i in range(n))

    def __sub__(self, other: Polynomial) -> Polynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.coeff(i) - other.coeff(i) for i in range(n))

    def __mul__(self, other: Polynomial) -> Polynomial:
        if self.is_zero() or other.is_zero():
            return Polynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    def shifted(self, k: int) -> Polynomial:
        """Multiply by y^k."""
        if self.is_zero():
            return self
        return Polynomial((0,) * k + self.coeffs)


@dataclass(frozen=True)
class ReversiveSymbol:
    """Named rational function alpha(F) = numerator/denominator.

    Invariants, checked at construction: numerator has no constant term,
    the denominator has a nonzero constant term, and the expanded series
    has linear coefficient exactly 1 (unit slope), which forces the
    inverse series to start x + ... , i.e. a_0 = 1.
    """

    name: str
    numerator: Polynomial
    denominator: Polynomial

    def __post_init__(self) -> None:
        if self.numerator.coeff(0) != 0:
            raise ValueError(f"symbol {self.name!r}: numerator must vanish at 0")
        q0 = self.denominator.coeff(0)
        if q0 == 0:
            raise ValueError(f"symbol {self.name!r}: denominator must not vanish at 0")
        if self.numerator.coeff(1) != q0:
            raise ValueError(f"symbol {self.name!r}: expansion must have unit slope")


class TileKind(Enum):
    ANY = "any"
    TRIANGLES_ONLY = "triangles"
    NO_TRIANGLES = "notriangles"
    ODD_ONLY = "odd"
    EVEN_ONLY = "even"
    CUSTOM = "custom"


@dataclass(frozen=True)
class TileRule:
    """Predicate on tile side-counts.

    The named kinds cover the catalog; CUSTOM takes a finite set of allowed
    side-counts plus an optional "and every size >= all_from" tail.
    """

    kind: TileKind
    sizes: frozenset[int] = field(default_factory=frozenset)
    all_from: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind is not TileKind.CUSTOM:
            if self.sizes or self.all_from is not None:
                raise InvalidTileSet("size data is only meaningful for CUSTOM rules")
            return
        if not self.sizes and self.all_from is None:
            raise InvalidTileSet("custom rule admits no side-count")
        if any(s < 3 for s in self.sizes):
            raise InvalidTileSet("tile side-counts must be >= 3")
        if self.all_from is not None and self.all_from < 3:
            raise InvalidTileSet("tail threshold must be >= 3")

    @classmethod
    def custom(cls, sizes: Iterable[int] = (), all_from: Optional[int] = None) -> TileRule:
        return cls(TileKind.CUSTOM, frozenset(sizes), all_from)

    def allows(self, side_count: int) -> bool:
        k = self.kind
        if k is TileKind.ANY:
            return True
        if k is TileKind.TRIANGLES_ONLY:
            return side_count == 3
        if k is TileKind.NO_TRIANGLES:
            return side_count != 3
        if k is TileKind.ODD_ONLY:
            return side_count % 2 == 1
        if k is TileKind.EVEN_ONLY:
            return side_count % 2 == 0
        if side_count in self.sizes:
            return True
        return self.all_from is not None and side_count >= self.all_from

    def finite_and_tail(self) -> tuple[tuple[int, ...], Optional[int]]:
        """Canonical (sorted finite sizes below the tail, tail threshold)."""
        if self.kind is not TileKind.CUSTOM:
            raise InvalidTileSet("only CUSTOM rules carry explicit size data")
        tail = self.all_from
        finite = tuple(sorted(s for s in self.sizes if tail is None or s < tail))
        return finite, tail

    def label(self) -> str:
        if self.kind is not TileKind.CUSTOM:
            return self.kind.value
        finite, tail = self.finite_and_tail()
        parts = [str(s) for s in finite]
        if tail is not None:
            parts.append(f"{tail}+")
        return "tiles(" + ",".join(parts) + ")"


ANY_TILES = TileRule(TileKind.ANY)
TRIANGLES_ONLY = TileRule(TileKind.TRIANGLES_ONLY)
NO_TRIANGLES = TileRule(TileKind.NO_TRIANGLES)
ODD_ONLY = TileRule(TileKind.ODD_ONLY)
EVEN_ONLY = TileRule(TileKind.EVEN_ONLY)


def _size_generating_pair(rule: TileRule) -> tuple[Polynomial, Polynomial]:
    """g(y) = sum_{s in S} y^{s-2} as a rational pair (numerator, denominator).

    The arithmetic tails fold into geometric denominators: every size from
    s0 up contributes y^{s0-2}/(1-y), the odd and even progressions
    y^{1}/(1-y^2) and y^{2}/(1-y^2).
    """
    k = rule.kind
    if k is TileKind.ANY:
        return Polynomial((0, 1)), Polynomial((1, -1))
    if k is TileKind.TRIANGLES_ONLY:
        return Polynomial((0, 1)), Polynomial((1,))
    if k is TileKind.NO_TRIANGLES:
        return Polynomial((0, 0, 1)), Polynomial((1, -1))
    if k is TileKind.ODD_ONLY:
        return Polynomial((0, 1)), Polynomial((1, 0, -1))
    if k is TileKind.EVEN_ONLY:
        return Polynomial((0, 0, 1)), Polynomial((1, 0, -1))
    finite, tail = rule.finite_and_tail()
    finite_part = Polynomial(())
    for s in finite:
        finite_part = finite_part + Polynomial((1,)).shifted(s - 2)
    if tail is None:
        return finite_part, Polynomial((1,))
    one_minus_y = Polynomial((1, -1))
    num = finite_part * one_minus_y + Polynomial((1,)).shifted(tail - 2)
    return num, one_minus_y


def symbol_from_tile_rule(rule: TileRule) -> ReversiveSymbol:
    """Synthesize alpha(F) = F - sum_{s in S} F^{s-1} in closed rational form.

    With g(y) = sum_{s in S} y^{s-2} = Ng/Dg this is
    alpha = F (Dg(F) - Ng(F)) / Dg(F).
    """
    g_num, g_den = _size_generating_pair(rule)
    numerator = (g_den - g_num).shifted(1)
    return ReversiveSymbol(rule.label(), numerator, g_den)


def _poly_series(p: Polynomial, precision: int) -> TruncatedSeries:
    return TruncatedSeries(p.coeff(i) for i in range(precision + 1))


def expand(symbol: ReversiveSymbol, precision: int) -> TruncatedSeries:
    """Taylor coefficients of numerator/denominator to the given precision."""
    num = _poly_series(symbol.numerator, precision)
    den = _poly_series(symbol.denominator, precision)
    return num * den.reciprocal()


# The six catalog entries.  Coefficient tuples are in increasing degree, so
# e.g. schroeder is (F - 2F^2)/(1 - F).  Motzkin carries no tile rule: it
# counts chord diagrams, not dissections, and is checked against the chord
# oracle instead.
_CATALOG: tuple[tuple[ReversiveSymbol, Optional[TileRule]], ...] = (
    (ReversiveSymbol("trianglefree", Polynomial((0, 1, -1, -1)), Polynomial((1, -1))), NO_TRIANGLES),
    (ReversiveSymbol("oddtiles", Polynomial((0, 1, -1, -1)), Polynomial((1, 0, -1))), ODD_ONLY),
    (ReversiveSymbol("eventiles", Polynomial((0, 1, 0, -2)), Polynomial((1, 0, -1))), EVEN_ONLY),
    (ReversiveSymbol("schroeder", Polynomial((0, 1, -2)), Polynomial((1, -1))), ANY_TILES),
    (ReversiveSymbol("catalan", Polynomial((0, 1, -1)), Polynomial((1,))), TRIANGLES_ONLY),
    (ReversiveSymbol("motzkin", Polynomial((0, 1, -1)), Polynomial((1, 0, 0, -1))), None),
)


def catalog() -> list[tuple[ReversiveSymbol, Optional[TileRule]]]:
    """The shipped symbols, each with its tile rule where one applies."""
    return list(_CATALOG)


def verify_inverse(symbol: ReversiveSymbol, terms: Sequence[int]) -> bool:
    """Check alpha(F(x)) = x to precision N+1 for F = sum terms[n] x^{n+1}."""
    if not terms:
        raise ValueError("need at least a_0")
    n = len(terms)  # precision N+1
    inverse = TruncatedSeries([0, *terms])
    alpha = expand(symbol, n)
    return alpha.compose(inverse) == TruncatedSeries.identity(n)


def verify_tautological(rule: TileRule, terms: Sequence[int]) -> bool:
    """Check A = 1 + sum_{s in S} x^{s-2} A^{s-1} to precision N.

    A is the series with the given coefficients; the sum is evaluated in
    its closed rational form g, so sizes with s-2 > N drop out exactly as
    the truncation demands.
    """
    if not terms:
        raise ValueError("need at least a_0")
    n = len(terms) - 1
    a = TruncatedSeries(terms)
    xa = TruncatedSeries([0, *terms[:n]])
    g_num, g_den = _size_generating_pair(rule)
    g = _poly_series(g_num, n).compose(xa) * _poly_series(g_den, n).compose(xa).reciprocal()
    rhs = TruncatedSeries.one(n) + a * g
    return rhs == a


def format_symbol(symbol: ReversiveSymbol, include_name: bool = True) -> str:
    """Render as ``name: (p0,p1,...)/(q0,q1,...)`` (or bare, without name)."""
    num = ",".join(str(c) for c in symbol.numerator.coeffs)
    den = ",".join(str(c) for c in symbol.denominator.coeffs)
    body = f"({num})/({den})"
    return f"{symbol.name}: {body}" if include_name else body


def _parse_int_list(text: str, what: str) -> list[int]:
    items = [p.strip() for p in text.split(",")]
    if items == [""]:
        raise ParseError(f"empty {what} coefficient list")
    try:
        return [int(p) for p in items]
    except ValueError as exc:
        raise ParseError(f"bad integer in {what}: {exc}") from None


def parse_symbol(text: str, default_name: str = "custom") -> ReversiveSymbol:
    """Parse the symbol text format; the ``name:`` prefix is optional."""
    body = text.strip()
    name = default_name
    if ":" in body:
        name, body = body.split(":", 1)
        name = name.strip()
        body = body.strip()
        if not name:
            raise ParseError("empty symbol name")
    if "/" not in body:
        raise ParseError("expected (numerator)/(denominator)")
    num_part, den_part = body.split("/", 1)
    num_part = num_part.strip()
    den_part = den_part.strip()
    for part in (num_part, den_part):
        if not (part.startswith("(") and part.endswith(")")):
            raise ParseError(f"expected a parenthesized coefficient list, got {part!r}")
    num = _parse_int_list(num_part[1:-1], "numerator")
    den = _parse_int_list(den_part[1:-1], "denominator")
    try:
        return ReversiveSymbol(name, Polynomial(num), Polynomial(den))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


_RULE_KEYWORDS = {
    "any": ANY_TILES,
    "triangles": TRIANGLES_ONLY,
    "notriangles": NO_TRIANGLES,
    "odd": ODD_ONLY,
    "even": EVEN_ONLY,
}


def parse_tile_spec(text: str) -> TileRule:
    """Parse a tile rule: a keyword, or ``3,5`` / ``4+`` / ``3,6+`` lists.

    A trailing ``+`` on the last entry means "and every larger size".
    """
    spec = text.strip().lower()
    if not spec:
        raise ParseError("empty tile spec")
    if spec in _RULE_KEYWORDS:
        return _RULE_KEYWORDS[spec]
    sizes: set[int] = set()
    all_from: Optional[int] = None
    parts = spec.split(",")
    for idx, part in enumerate(parts):
        part = part.strip()
        if not part:
            raise ParseError(f"empty entry in tile spec {text!r}")
        tail = part.endswith("+")
        if tail and idx != len(parts) - 1:
            raise ParseError("'+' is only allowed on the last entry")
        digits = part[:-1] if tail else part
        try:
            value = int(digits)
        except ValueError:
            raise ParseError(f"bad tile size {part!r}") from None
        if tail:
            all_from = value
        else:
            sizes.add(value)
    return TileRule.custom(sizes, all_from)
