"""Truncated power series and Laurent polynomials over exact rationals.

Everything here is exact: coefficients are ``fractions.Fraction`` and all
identities are checked coefficient-by-coefficient up to the truncation order.
The module provides second-kind Chebyshev polynomials, the Laurent recursion
they solve, the generating function of the classical half-line walk, and the
generating function of the mod-ell constrained row sums, obtained by clearing
Laurent denominators and dividing ordinary power series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

Rational = int | Fraction


class RationalSeries:
    """Power series truncated at a fixed order, coefficients exact rationals.

    Arithmetic never reads beyond the truncation; binary operations truncate
    to the shorter operand.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational], truncation: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if truncation is not None:
            if truncation < 0:
                raise ValueError("truncation order must be nonnegative")
            cs = cs[: truncation + 1] + [Fraction(0)] * (truncation + 1 - len(cs))
        if not cs:
            raise ValueError("series needs at least the constant coefficient")
        self.coeffs = tuple(cs)

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> Fraction:
        if not 0 <= n <= self.truncation:
            raise IndexError(f"degree {n} beyond truncation {self.truncation}")
        return self.coeffs[n]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalSeries) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.truncation >= 8 else ""
        return f"RationalSeries([{head}{tail}]; order {self.truncation})"

    def _common_order(self, other: "RationalSeries") -> int:
        return min(self.truncation, other.truncation)

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        n = self._common_order(other)
        return RationalSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)]
        )

    def __sub__(self, other: "RationalSeries") -> "RationalSeries":
        n = self._common_order(other)
        return RationalSeries(
            [self.coeffs[i] - other.coeffs[i] for i in range(n + 1)]
        )

    def __mul__(self, other: "RationalSeries") -> "RationalSeries":
        n = self._common_order(other)
        out = [Fraction(0)] * (n + 1)
        for i, ci in enumerate(self.coeffs[: n + 1]):
            if not ci:
                continue
            for j in range(n + 1 - i):
                cj = other.coeffs[j]
                if cj:
                    out[i + j] += ci * cj
        return RationalSeries(out)

    def __truediv__(self, other: "RationalSeries") -> "RationalSeries":
        """Series division; the divisor needs an invertible constant term."""
        if not other.coeffs[0]:
            raise ZeroDivisionError("divisor has zero constant term")
        n = self._common_order(other)
        inv0 = 1 / other.coeffs[0]
        out = [Fraction(0)] * (n + 1)
        for k in range(n + 1):
            acc = self.coeffs[k]
            for i in range(1, k + 1):
                di = other.coeffs[i] if i <= other.truncation else Fraction(0)
                if di and out[k - i]:
                    acc -= di * out[k - i]
            out[k] = acc * inv0
        return RationalSeries(out)

    def scale(self, c: Rational) -> "RationalSeries":
        c = Fraction(c)
        return RationalSeries([c * x for x in self.coeffs])

    def shift_down(self, k: int) -> "RationalSeries":
        """Divide by x^k; the k lowest coefficients must vanish."""
        if any(self.coeffs[i] for i in range(min(k, len(self.coeffs)))):
            raise ValueError(f"series is not divisible by x^{k}")
        rest = self.coeffs[k:]
        return RationalSeries(rest if rest else [Fraction(0)])

    def as_strings(self) -> list[str]:
        """Coefficients as "numerator/denominator" strings."""
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]


def series_from_ints(values: Iterable[int], truncation: int | None = None) -> RationalSeries:
    return RationalSeries(values, truncation)


def sqrt_series(s: RationalSeries) -> RationalSeries:
    """Square root of a series with constant term 1, truncation-exact."""
    if s.coeffs[0] != 1:
        raise ValueError("square root requires constant term 1")
    n = s.truncation
    t = [Fraction(0)] * (n + 1)
    t[0] = Fraction(1)
    for k in range(1, n + 1):
        acc = s.coeffs[k]
        for i in range(1, k):
            acc -= t[i] * t[k - i]
        t[k] = acc / 2
    return RationalSeries(t)


@dataclass(frozen=True)
class ChebPoly:
    """Second-kind Chebyshev polynomial; ``coeffs[i]`` multiplies x^i."""

    index: int
    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, x: Rational) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def cheb_u(j: int) -> ChebPoly:
    """U_j with U_0 = 1, U_1 = 2x and U_j = 2x U_{j-1} - U_{j-2}."""
    if j < 0:
        raise ValueError(f"index must be nonnegative, got {j}")
    prev = [1]
    if j == 0:
        return ChebPoly(0, (1,))
    cur = [0, 2]
    for _ in range(2, j + 1):
        nxt = [0] + [2 * c for c in cur]
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, nxt
    return ChebPoly(j, tuple(cur))


class LaurentPoly:
    """Finite Laurent polynomial: map from integer exponent to rational.

    Zero coefficients are never stored.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, Rational]):
        self.coeffs = {e: Fraction(c) for e, c in coeffs.items() if Fraction(c)}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        terms = " + ".join(
            f"({c})x^{e}" for e, c in sorted(self.coeffs.items())
        )
        return f"LaurentPoly({terms or '0'})"

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return LaurentPoly(out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) - c
        return LaurentPoly(out)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by x^k."""
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def min_exponent(self) -> int:
        return min(self.coeffs, default=0)

    def to_series(self, truncation: int) -> RationalSeries:
        """Embed as a power series; negative exponents must be absent."""
        if self.min_exponent() < 0:
            raise ValueError("Laurent polynomial has negative exponents")
        out = [Fraction(0)] * (truncation + 1)
        for e, c in self.coeffs.items():
            if e <= truncation:
                out[e] = c
        return RationalSeries(out)


def cheb_at_inv_2x(u: ChebPoly) -> LaurentPoly:
    """U_j evaluated at 1/(2x), as a Laurent polynomial in x."""
    return LaurentPoly(
        {-i: Fraction(c, 2**i) for i, c in enumerate(u.coeffs) if c}
    )


def r_poly(ell: int, j: int) -> LaurentPoly:
    """Laurent solution R_{ell-j} of the walk transfer recursion.

    Seeded by R_{ell-2} = 1 and R_{ell-3} = 1/x, with
    R_{ell-j} = (1/x) R_{ell-j+1} - R_{ell-j+2}; equals U_{j-2}(1/(2x)).
    """
    if ell < 2:
        raise ValueError(f"modulus must be at least 2, got {ell}")
    if not 2 <= j <= ell:
        raise ValueError(f"offset {j} not in range 2..{ell}")
    prev = LaurentPoly({0: 1})
    if j == 2:
        return prev
    cur = LaurentPoly({-1: 1})
    for _ in range(3, j):
        prev, cur = cur, cur.shift(-1) - prev
    return cur


def gf_a_half_line(truncation: int) -> RationalSeries:
    """Generating function of endpoint-0 half-line walks: Catalan numbers
    at even degrees, zeros at odd degrees: (1 - sqrt(1 - 4x^2)) / (2x^2)."""
    if truncation < 0:
        raise ValueError("truncation order must be nonnegative")
    inner = RationalSeries([1, 0, -4], truncation + 2)
    root = sqrt_series(inner)
    one = RationalSeries([1], truncation + 2)
    return (one - root).shift_down(2).scale(Fraction(1, 2))


def _cheb_partial_sum(j_max: int) -> LaurentPoly:
    """Sum of U_k(1/(2x)) for k = 0..j_max."""
    total = LaurentPoly({})
    for k in range(j_max + 1):
        total = total + cheb_at_inv_2x(cheb_u(k))
    return total


def cleared_denominator(ell: int) -> RationalSeries:
    """x^{ell-1} U_{ell-1}(1/(2x)) as an ordinary polynomial (constant term 1)."""
    if ell < 2:
        raise ValueError(f"modulus must be at least 2, got {ell}")
    lp = cheb_at_inv_2x(cheb_u(ell - 1)).shift(ell - 1)
    return lp.to_series(ell - 1)


def gf_b(ell: int, truncation: int, c_series: RationalSeries) -> RationalSeries:
    """Generating function of the mod-ell constrained row sums.

    ``c_series`` must be the exact series of classical walk counts ending in
    the residue class ``ell - 1``.  Both Laurent quotients are cleared by
    x^{ell-1}, after which the denominator has constant term 1 and ordinary
    series division applies.  The case ell = 2 collapses to a reindexing of
    the classical walk and is not covered by this formula.
    """
    if ell < 3:
        raise ValueError("generating function requires modulus at least 3")
    if truncation < 0:
        raise ValueError("truncation order must be nonnegative")
    if c_series.truncation < truncation:
        raise ValueError("residue-class series is shorter than the requested order")
    den = cheb_at_inv_2x(cheb_u(ell - 1)).shift(ell - 1).to_series(truncation)
    num1 = _cheb_partial_sum(ell - 1).shift(ell - 1).to_series(truncation)
    num2 = _cheb_partial_sum(ell - 2).shift(ell - 2).to_series(truncation)
    c = RationalSeries(c_series.coeffs, truncation)
    return (num1 * c + num2) / den


def _poly_mul(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] += a * b
    return out


def _one_minus_power(k: int) -> list[Fraction]:
    """Coefficients of 1 - w^k."""
    out = [Fraction(0)] * (k + 1)
    out[0] = Fraction(1)
    out[k] -= 1
    return out


def _one_plus_power(k: int) -> list[Fraction]:
    out = [Fraction(0)] * (k + 1)
    out[0] = Fraction(1)
    out[k] += 1
    return out


def poly_divide_exact(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    """Exact polynomial long division; raises if the remainder is nonzero."""
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    while den and not den[-1]:
        den.pop()
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    r = list(num)
    for i in range(len(num) - len(den), -1, -1):
        coef = r[i + len(den) - 1] / den[-1]
        q[i] = coef
        if coef:
            for j, d in enumerate(den):
                r[i + j] -= coef * d
    if any(r):
        raise ValueError("polynomial division left a nonzero remainder")
    return q


def mixed_factor_series(p: int, ell: int, truncation: int) -> RationalSeries:
    """Series expansion of (1-w^{ell-1})(1+w^p) / ((1-w^{p-1})(1+w^ell)).

    Relates growth at quantum characteristic ``ell`` over a field of
    characteristic ``p`` to the equal-parameter case; the factor has constant
    term 1 for every admissible pair.
    """
    if p < 2 or ell < 2:
        raise ValueError("both parameters must be at least 2")
    num = _poly_mul(_one_minus_power(ell - 1), _one_plus_power(p))
    den = _poly_mul(_one_minus_power(p - 1), _one_plus_power(ell))
    return RationalSeries(num, truncation) / RationalSeries(den, truncation)


def mixed_factor_limit(p: int, ell: int) -> Fraction:
    """Value of the mixed factor as w -> 1: cancel (1-w) from numerator and
    denominator exactly, then evaluate at w = 1; equals (ell-1)/(p-1)."""
    if p == 1:
        raise ZeroDivisionError("denominator vanishes identically at p = 1")
    if p < 2 or ell < 2:
        raise ValueError("both parameters must be at least 2")
    one_minus_w = [Fraction(1), Fraction(-1)]
    num_red = poly_divide_exact(_one_minus_power(ell - 1), one_minus_w)
    den_red = poly_divide_exact(_one_minus_power(p - 1), one_minus_w)
    num_val = sum(num_red, Fraction(0)) * sum(_one_plus_power(p), Fraction(0))
    den_val = sum(den_red, Fraction(0)) * sum(_one_plus_power(ell), Fraction(0))
    return num_val / den_val
