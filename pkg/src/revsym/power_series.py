"""Truncated formal power series over exact rationals.

A series here is a finite coefficient vector c_0..c_N ("precision N"); all
identities hold modulo x^{N+1}.  Binary operations truncate to the smaller
precision of their operands and never extend a series with invented
coefficients.

Coefficients are Python ints whenever the value is integral and
``fractions.Fraction`` otherwise, so the convolution kernels run on machine
integers for the (common) integer-coefficient case without giving up
exactness anywhere.

Two independent reversion routes are provided:

* :func:`lagrange_coefficients` extracts the inverse-series coefficients
  a_{n-1} = (1/n) [t^{n-1}] (t/alpha(t))^n  directly from a reversive
  symbol, certifying that every coefficient is an integer.
* :func:`revert_direct` solves the triangular linear system
  [x^n] alpha(G(x)) = delta_{n,1} coefficient by coefficient, without the
  Lagrange formula, and serves as a cross-check on the first route.
"""

from __future__ import annotations

from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, Sequence, Union

if TYPE_CHECKING:
    from .symbols import ReversiveSymbol

__all__ = [
    "Coeff",
    "TruncatedSeries",
    "NonUnitSeries",
    "NonZeroInnerConstant",
    "NonIntegerCoefficient",
    "NotRevertible",
    "lagrange_coefficients",
    "revert_direct",
]

Coeff = Union[int, Fraction]


class NonUnitSeries(ValueError):
    """Reciprocal of a series whose constant term is zero."""


class NonZeroInnerConstant(ValueError):
    """Composition with an inner series whose constant term is nonzero."""


class NonIntegerCoefficient(ArithmeticError):
    """A reversion coefficient failed the exact-integrality check."""


class NotRevertible(ValueError):
    """Direct reversion of a series without the shape x + O(x^2)-with-unit."""


def _norm(c: Coeff) -> Coeff:
    """Canonical scalar: plain int when integral, Fraction otherwise."""
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"series coefficients must be int or Fraction, got {type(c).__name__}")


def _conv(a: Sequence[Coeff], b: Sequence[Coeff], n: int) -> list[Coeff]:
    """Cauchy product of coefficient lists, truncated at degree n."""
    out: list[Coeff] = [0] * (n + 1)
    for i, ai in enumerate(a):
        if ai == 0 or i > n:
            continue
        hi = min(n - i, len(b) - 1)
        for j in range(hi + 1):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def _recip_raw(q: Sequence[Coeff], n: int) -> list[Coeff]:
    """1/q mod x^{n+1} via the standard triangular recurrence."""
    q0 = q[0]
    if q0 == 0:
        raise NonUnitSeries("reciprocal requires a nonzero constant term")
    out: list[Coeff]
    if q0 == 1 or q0 == -1:
        # unit constant term: everything stays in the ground ring
        out = [0] * (n + 1)
        out[0] = q0
        for m in range(1, n + 1):
            s = 0
            for k in range(1, min(m, len(q) - 1) + 1):
                qk = q[k]
                if qk:
                    s += qk * out[m - k]
            out[m] = -s * q0
        return out
    inv = Fraction(1, 1) / q0
    out = [0] * (n + 1)
    out[0] = inv
    for m in range(1, n + 1):
        s = 0
        for k in range(1, min(m, len(q) - 1) + 1):
            qk = q[k]
            if qk:
                s += qk * out[m - k]
        out[m] = -s * inv
    return out


def _pow_raw(base: Sequence[Coeff], e: int, n: int) -> list[Coeff]:
    """base**e mod x^{n+1} by repeated squaring; e >= 0."""
    res: list[Coeff] = [0] * (n + 1)
    res[0] = 1
    b = list(base[: n + 1])
    while e:
        if e & 1:
            res = _conv(res, b, n)
        e >>= 1
        if e:
            b = _conv(b, b, n)
    return res


def _compose_raw(outer: Sequence[Coeff], inner: Sequence[Coeff], n: int) -> list[Coeff]:
    """outer(inner(x)) mod x^{n+1} by Horner; inner[0] must be 0."""
    res: list[Coeff] = [0] * (n + 1)
    res[0] = outer[-1]
    for c in reversed(outer[:-1]):
        res = _conv(res, inner, n)
        res[0] += c
    return res


class TruncatedSeries:
    """Immutable truncated power series c_0 + c_1 x + ... + c_N x^N."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coeff]):
        cs = tuple(_norm(c) for c in coeffs)
        if not cs:
            raise ValueError("a truncated series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", cs)

    @property
    def precision(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, precision: int) -> TruncatedSeries:
        return cls([0] * (precision + 1))

    @classmethod
    def one(cls, precision: int) -> TruncatedSeries:
        return cls([1] + [0] * precision)

    @classmethod
    def identity(cls, precision: int) -> TruncatedSeries:
        """The series x (requires precision >= 1)."""
        if precision < 1:
            raise ValueError("identity series needs precision >= 1")
        return cls([0, 1] + [0] * (precision - 1))

    def __getitem__(self, i: int) -> Coeff:
        if not 0 <= i <= self.precision:
            raise IndexError(f"coefficient {i} is beyond precision {self.precision}")
        return self.coeffs[i]

    def truncate(self, precision: int) -> TruncatedSeries:
        if precision > self.precision:
            raise ValueError("cannot extend a series beyond its known precision")
        return TruncatedSeries(self.coeffs[: precision + 1])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)!r})"

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(-c for c in self.coeffs)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = min(self.precision, other.precision)
        a, b = self.coeffs, other.coeffs
        return TruncatedSeries(a[i] + b[i] for i in range(n + 1))

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = min(self.precision, other.precision)
        a, b = self.coeffs, other.coeffs
        return TruncatedSeries(a[i] - b[i] for i in range(n + 1))

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = min(self.precision, other.precision)
        return TruncatedSeries(_conv(self.coeffs, other.coeffs, n))

    def __pow__(self, e: int) -> TruncatedSeries:
        if e < 0:
            raise ValueError("negative powers: use reciprocal() first")
        return TruncatedSeries(_pow_raw(self.coeffs, e, self.precision))

    def reciprocal(self) -> TruncatedSeries:
        """Multiplicative inverse r with self * r = 1 to this precision."""
        return TruncatedSeries(_recip_raw(self.coeffs, self.precision))

    def compose(self, inner: TruncatedSeries) -> TruncatedSeries:
        """self(inner(x)), truncated to the smaller precision."""
        if inner.coeffs[0] != 0:
            raise NonZeroInnerConstant("composition needs inner constant term 0")
        n = min(self.precision, inner.precision)
        return TruncatedSeries(_compose_raw(self.coeffs[: n + 1], inner.coeffs[: n + 1], n))


def _symbol_ratio_raw(alpha: "ReversiveSymbol", n: int) -> list[Coeff]:
    """Coefficients of t/alpha(t) = Q(t) / (P(t)/t) to precision n."""
    num = alpha.numerator.coeffs
    den = alpha.denominator.coeffs
    shifted = list(num[1:])  # P/t; valid because P(0) = 0
    return _conv(den, _recip_raw(shifted, n), n)


def _certify_integer(value: Coeff, n: int) -> int:
    """value / n as an exact int, for the Lagrange prefactor 1/n."""
    if isinstance(value, Fraction):
        q = value / n
        if q.denominator != 1:
            raise NonIntegerCoefficient(f"a_{n - 1} = {value}/{n} is not an integer")
        return q.numerator
    q, r = divmod(value, n)
    if r != 0:
        raise NonIntegerCoefficient(f"a_{n - 1} = {value}/{n} is not an integer")
    return q


def lagrange_coefficients(alpha: "ReversiveSymbol", N: int) -> list[int]:
    """Inverse-series coefficients a_0..a_N of a reversive symbol.

    a_{n-1} = (1/n) [t^{n-1}] (t/alpha(t))^n for n = 1..N+1, each division
    checked exact.  F(x) = sum a_n x^{n+1} then satisfies alpha(F(x)) = x.

    The powers are built incrementally (R^n = R^{n-1} * R at full
    precision), which yields bit-identical values to re-expanding
    (t/alpha)^n from scratch for each n; the naive route is kept in
    :func:`_lagrange_coefficients_naive` and pinned to this one by tests.
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    ratio = _symbol_ratio_raw(alpha, N)
    out: list[int] = []
    power = ratio
    for n in range(1, N + 2):
        out.append(_certify_integer(power[n - 1], n))
        if n <= N:
            power = _conv(power, ratio, N)
    return out


def _lagrange_coefficients_naive(alpha: "ReversiveSymbol", N: int) -> list[int]:
    """Reference route: expand (t/alpha)^n freshly per n by repeated squaring."""
    out: list[int] = []
    for n in range(1, N + 2):
        ratio = _symbol_ratio_raw(alpha, n - 1)
        power = _pow_raw(ratio, n, n - 1)
        out.append(_certify_integer(power[n - 1], n))
    return out


def revert_direct(alpha_series: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse G of a truncated series, no Lagrange formula.

    Requires alpha_series = s_1 x + s_2 x^2 + ... with s_1 != 0.  Writing
    G = g_1 x + g_2 x^2 + ..., the condition [x^n] alpha(G) = delta_{n,1}
    is triangular in the g_n: the coefficient [x^n] G^m for m >= 2 only
    involves g_1..g_{n-1}.  The table W[m][j] = [x^j] G^m is filled one
    column at a time, giving

        g_n = (delta_{n,1} - sum_{m>=2} s_m W[m][n]) / s_1.

    Cost is O(N^3) coefficient operations for precision N.
    """
    N = alpha_series.precision
    s = alpha_series.coeffs
    if N < 1 or s[0] != 0 or s[1] == 0:
        raise NotRevertible("need constant term 0 and a nonzero linear coefficient")
    s1 = s[1]
    unit = s1 == 1 or s1 == -1
    inv1: Coeff = s1 if unit else Fraction(1, 1) / s1

    g: list[Coeff] = [0] * (N + 1)
    # W[m][j] = [x^j] G^m; rows 0 and 1 are the scalar 1 and G itself.
    W: list[list[Coeff]] = [[0] * (N + 1) for _ in range(N + 1)]
    g[1] = inv1
    W[1][1] = inv1
    M = len(s) - 1
    for n in range(2, N + 1):
        for m in range(2, n + 1):
            acc: Coeff = 0
            prev = W[m - 1]
            for i in range(1, n - m + 2):
                gi = g[i]
                if gi:
                    acc += gi * prev[n - i]
            W[m][n] = acc
        c: Coeff = 0
        for m in range(2, min(n, M) + 1):
            sm = s[m]
            if sm:
                c += sm * W[m][n]
        gn = -c * inv1
        g[n] = gn
        W[1][n] = gn
    return TruncatedSeries(g)
