"""Ground-truth combinatorics for restricted polygon dissections.

Everything here is deliberately independent of the series-reversion
machinery so it can serve as an oracle for it:

* :func:`enumerate_count` literally generates every non-crossing diagonal
  set of the labelled (n+2)-gon by backtracking and keeps those whose
  tiles all satisfy a rule.  Exponential; capped at desk scale.
* :func:`count_by_series` iterates the self-referential tile equation
  A = 1 + sum_{s in S} x^{s-2} A^{s-1} to a fixed point on truncated
  integer series.  Polynomial time; the fast path.
* :func:`count_chord_diagrams` exhaustively counts placements of pairwise
  disjoint chords (no shared endpoints, no crossings) on labelled circle
  points, the model behind the motzkin entry.

Vertices are labelled 0..n+1 in convex position; dissections are distinct
as diagonal sets, with no quotient by rotation or reflection.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .symbols import TileKind, TileRule

__all__ = [
    "DEFAULT_DISSECTION_CAP",
    "DEFAULT_CHORD_CAP",
    "CapExceeded",
    "Dissection",
    "Tile",
    "tiles_of",
    "iter_dissections",
    "enumerate_count",
    "count_by_series",
    "count_chord_diagrams",
    "dissection_line",
]

DEFAULT_DISSECTION_CAP = 12
DEFAULT_CHORD_CAP = 16


class CapExceeded(ValueError):
    """An exhaustive enumeration was asked to run beyond its configured cap."""


def _crosses(a: int, b: int, c: int, d: int) -> bool:
    """Open-interior crossing of chords {a,b}, {c,d} with a<b, c<d."""
    return a < c < b < d or c < a < d < b


@dataclass(frozen=True)
class Tile:
    """A diagonal-free face, as its vertex labels in cyclic order."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) < 3:
            raise ValueError("a tile has at least 3 sides")

    @property
    def side_count(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class Dissection:
    """A set of pairwise non-crossing diagonals of the labelled (n+2)-gon.

    Requires n >= 1 (the degenerate 2-gon has no tiles and is handled by
    the counting conventions, not by this type).  Diagonals are stored as
    (i, j) pairs with i < j; construction validates that each pair is a
    genuine diagonal, that no two cross, and that at most n-1 are present.
    """

    n: int
    diagonals: frozenset[tuple[int, int]]

    def __init__(self, n: int, diagonals: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ValueError("need n >= 1 (a polygon with at least 3 vertices)")
        v = n + 2
        normed = set()
        for pair in diagonals:
            i, j = pair
            if i > j:
                i, j = j, i
            if not (0 <= i < j <= v - 1):
                raise ValueError(f"vertex out of range in diagonal {pair}")
            if j - i < 2 or (i == 0 and j == v - 1):
                raise ValueError(f"{(i, j)} is an edge of the polygon, not a diagonal")
            normed.add((i, j))
        pairs = sorted(normed)
        for x in range(len(pairs)):
            for y in range(x + 1, len(pairs)):
                a, b = pairs[x]
                c, d = pairs[y]
                if _crosses(a, b, c, d):
                    raise ValueError(f"diagonals {(a, b)} and {(c, d)} cross")
        if len(pairs) > n - 1:
            raise ValueError(f"at most {n - 1} pairwise non-crossing diagonals fit")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "diagonals", frozenset(pairs))


def _canonical_cycle(cycle: tuple[int, ...]) -> tuple[int, ...]:
    i = cycle.index(min(cycle))
    return cycle[i:] + cycle[:i]


def tiles_of(d: Dissection) -> list[Tile]:
    """The m+1 faces of the subdivision, split recursively along diagonals."""
    diags = sorted(d.diagonals)
    pending = [tuple(range(d.n + 2))]
    faces: list[tuple[int, ...]] = []
    while pending:
        region = pending.pop()
        size = len(region)
        for a, b in diags:
            if a in region and b in region:
                ia = region.index(a)
                ib = region.index(b)
                if ia > ib:
                    ia, ib = ib, ia
                if ib - ia == 1 or (ia == 0 and ib == size - 1):
                    continue  # already an edge of this region
                pending.append(region[ia:ib + 1])
                pending.append(region[ib:] + region[:ia + 1])
                break
        else:
            faces.append(_canonical_cycle(region))
    faces.sort()
    return [Tile(f) for f in faces]


def _candidate_diagonals(n: int) -> list[tuple[int, int]]:
    v = n + 2
    return [
        (i, j)
        for i in range(v)
        for j in range(i + 2, v)
        if not (i == 0 and j == v - 1)
    ]


def _conflict_masks(cands: list[tuple[int, int]]) -> list[int]:
    masks = [0] * len(cands)
    for x, (a, b) in enumerate(cands):
        for y in range(x + 1, len(cands)):
            c, d = cands[y]
            if _crosses(a, b, c, d):
                masks[x] |= 1 << y
                masks[y] |= 1 << x
    return masks


def iter_dissections(n: int, cap: int = DEFAULT_DISSECTION_CAP) -> Iterator[Dissection]:
    """Yield every dissection of the (n+2)-gon, in lexicographic DFS order."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n > cap:
        raise CapExceeded(f"n = {n} exceeds the exhaustive cap {cap}")
    cands = _candidate_diagonals(n)
    conflict = _conflict_masks(cands)
    chosen: list[tuple[int, int]] = []

    def rec(start: int, avail: int) -> Iterator[Dissection]:
        yield Dissection(n, chosen)
        x = avail >> start << start
        while x:
            low = x & -x
            i = low.bit_length() - 1
            x ^= low
            chosen.append(cands[i])
            yield from rec(i + 1, avail & ~conflict[i])
            chosen.pop()

    return rec(0, (1 << len(cands)) - 1)


def enumerate_count(n: int, rule: TileRule, cap: int = DEFAULT_DISSECTION_CAP) -> int:
    """Count dissections of the (n+2)-gon whose every tile satisfies the rule.

    Backtracks over candidate diagonals in lexicographic order, pruning with
    precomputed crossing masks; tiles are maintained incrementally (adding a
    diagonal splits exactly one face in two).  The undissected polygon
    counts iff n+2 itself satisfies the rule; n = 0 returns 1 by convention
    since the 2-gon has no tiles to test.
    """
    if n < 0:
        raise ValueError("need n >= 0")
    if n == 0:
        return 1
    if n > cap:
        raise CapExceeded(f"n = {n} exceeds the exhaustive cap {cap}")
    cands = _candidate_diagonals(n)
    conflict = _conflict_masks(cands)
    full = (1 << len(cands)) - 1

    if rule.kind is TileKind.ANY:
        # no tile predicate to track: just count non-crossing subsets
        total = 0

        def rec_any(start: int, avail: int) -> None:
            nonlocal total
            total += 1
            x = avail >> start << start
            while x:
                low = x & -x
                i = low.bit_length() - 1
                x ^= low
                rec_any(i + 1, avail & ~conflict[i])

        rec_any(0, full)
        return total

    ok = [False] * (n + 3)
    for s in range(3, n + 3):
        ok[s] = rule.allows(s)
    tiles: list[tuple[int, ...]] = [tuple(range(n + 2))]
    total = 0

    def rec(start: int, avail: int, nbad: int) -> None:
        nonlocal total
        if nbad == 0:
            total += 1
        x = avail >> start << start
        while x:
            low = x & -x
            i = low.bit_length() - 1
            x ^= low
            a, b = cands[i]
            # a compatible diagonal lies inside exactly one current face
            for ti, t in enumerate(tiles):
                if a in t and b in t:
                    break
            ia = t.index(a)
            ib = t.index(b)
            if ia > ib:
                ia, ib = ib, ia
            t1 = t[ia:ib + 1]
            t2 = t[ib:] + t[:ia + 1]
            # bad-tile count change, with ok[] as 0/1
            delta = ok[len(t)] - ok[len(t1)] - ok[len(t2)] + 1
            tiles[ti] = t1
            tiles.append(t2)
            rec(i + 1, avail & ~conflict[i], nbad + delta)
            tiles.pop()
            tiles[ti] = t

    rec(0, full, 0 if ok[n + 2] else 1)
    return total


# --- series counter ------------------------------------------------------
#
# Independent integer-series kernels (not shared with power_series): this
# route is meant to cross-check the reversion machinery, so it brings its
# own arithmetic.

def _iconv(a: list[int], b: list[int], n: int) -> list[int]:
    out = [0] * (n + 1)
    for i, ai in enumerate(a):
        if ai == 0 or i > n:
            continue
        hi = min(n - i, len(b) - 1)
        for j in range(hi + 1):
            if b[j]:
                out[i + j] += ai * b[j]
    return out


def _irecip_unit(q: list[int], n: int) -> list[int]:
    # requires q[0] == 1, which holds for every rule denominator below
    out = [0] * (n + 1)
    out[0] = 1
    for m in range(1, n + 1):
        s = 0
        for k in range(1, min(m, len(q) - 1) + 1):
            if q[k]:
                s += q[k] * out[m - k]
        out[m] = -s
    return out


def _ieval_poly(p: list[int], y: list[int], n: int) -> list[int]:
    res = [0] * (n + 1)
    res[0] = p[-1]
    for c in reversed(p[:-1]):
        res = _iconv(res, y, n)
        res[0] += c
    return res


def _rule_weight_pair(rule: TileRule) -> tuple[list[int], list[int]]:
    """sum_{s in S} y^{s-2} as integer numerator/denominator lists."""
    k = rule.kind
    if k is TileKind.ANY:
        return [0, 1], [1, -1]
    if k is TileKind.TRIANGLES_ONLY:
        return [0, 1], [1]
    if k is TileKind.NO_TRIANGLES:
        return [0, 0, 1], [1, -1]
    if k is TileKind.ODD_ONLY:
        return [0, 1], [1, 0, -1]
    if k is TileKind.EVEN_ONLY:
        return [0, 0, 1], [1, 0, -1]
    finite, tail = rule.finite_and_tail()
    top = max([s - 2 for s in finite] + ([tail - 2] if tail is not None else []))
    num = [0] * (top + 1)
    for s in finite:
        num[s - 2] += 1
    if tail is None:
        return num, [1]
    den = [1, -1]
    num = _iconv(num, den, top + 1)
    num[tail - 2] += 1
    return num, den


def count_by_series(n_max: int, rule: TileRule) -> list[int]:
    """Coefficients a_0..a_{n_max} from the tile equation's fixed point.

    Starts from A = 1 and substitutes A into
    1 + sum_{s in S} x^{s-2} A^{s-1} repeatedly; coefficients 0..k are
    stable after k substitutions, so pass k runs at truncation order k.
    The size sum is applied in its closed rational form (sizes with
    s-2 > k vanish under truncation either way).
    """
    if n_max < 0:
        raise ValueError("need n_max >= 0")
    g_num, g_den = _rule_weight_pair(rule)
    a = [1]
    for k in range(1, n_max + 1):
        xa = [0] + a[:k]
        num_y = _ieval_poly(g_num, xa, k)
        den_y = _ieval_poly(g_den, xa, k)
        weight = _iconv(num_y, _irecip_unit(den_y, k), k)
        nxt = _iconv(a, weight, k)
        nxt[0] += 1
        a = nxt
    return a


def count_chord_diagrams(p: int, cap: int = DEFAULT_CHORD_CAP) -> int:
    """Count sets of pairwise disjoint chords on p labelled circle points.

    Disjoint means segment-disjoint: chords may neither share an endpoint
    nor cross in the interior.  The empty placement counts, so p = 0
    gives 1.
    """
    if p < 0:
        raise ValueError("need p >= 0")
    if p > cap:
        raise CapExceeded(f"p = {p} exceeds the exhaustive cap {cap}")
    cands = [(i, j) for i in range(p) for j in range(i + 1, p)]
    m = len(cands)
    conflict = [0] * m
    for x, (a, b) in enumerate(cands):
        for y in range(x + 1, m):
            c, d = cands[y]
            if a in (c, d) or b in (c, d) or _crosses(a, b, c, d):
                conflict[x] |= 1 << y
                conflict[y] |= 1 << x
    total = 0

    def rec(start: int, avail: int) -> None:
        nonlocal total
        total += 1
        x = avail >> start << start
        while x:
            low = x & -x
            i = low.bit_length() - 1
            x ^= low
            rec(i + 1, avail & ~conflict[i])

    rec(0, (1 << m) - 1)
    return total


def dissection_line(d: Dissection) -> str:
    """Debug dump: ``n=<n> diagonals=(i,j);(k,l) tiles=[s1,s2,...]``."""
    diags = ";".join(f"({i},{j})" for i, j in sorted(d.diagonals))
    sides = ",".join(str(t.side_count) for t in tiles_of(d))
    return f"n={d.n} diagonals={diags} tiles=[{sides}]"
