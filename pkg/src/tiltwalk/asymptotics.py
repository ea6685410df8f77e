"""Closed-form growth approximants and their verification against exact counts.

The classical half-line walk grows like sqrt(2/pi) * n^{-1/2} * 2^n; residue
class, constrained and wall counts share the same shape with a constant or
2-periodic prefactor.  Exact counts reach 2^2000 and beyond, so nothing here
ever subtracts huge numbers: exact integers are divided by 2^n as exact
rationals first, and approximants are evaluated through their prefactor times
n^{-1/2}, keeping every float comfortably inside double range.  A scaled
(mantissa, base-2 exponent) form is used whenever the un-normalized value is
wanted.  An independent spectral-integral oracle recomputes the classical
counts by adaptive high-precision quadrature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import mpmath

from .walks import GrowthSequence

SQRT_2_OVER_PI = math.sqrt(2.0 / math.pi)


@dataclass(frozen=True)
class ScaledReal:
    """A positive real stored as mantissa * 2^exp2 so that 2^n never
    overflows a double."""

    mantissa: float
    exp2: int

    def to_float(self) -> float:
        """Plain float value; raises OverflowError when out of range."""
        return math.ldexp(self.mantissa, self.exp2)


@dataclass(frozen=True)
class Approximant:
    """Growth law prefactor(n) * n^tau * beta^n.

    The prefactor is constant or 2-periodic in n and, except for parity-zero
    wall classes, bounded away from 0 and infinity.
    """

    tau: Fraction
    beta: int
    prefactor: Callable[[int], float]
    label: str


def a_approx(n: int) -> ScaledReal:
    """sqrt(2/pi) * n^{-1/2} * 2^n in scaled form."""
    if n < 1:
        raise ValueError("the approximant is defined for n >= 1")
    return ScaledReal(mantissa=SQRT_2_OVER_PI / math.sqrt(n), exp2=n)


def b_prefactor(ell: int, n: int) -> Fraction:
    """Prefactor of the constrained count relative to the classical
    approximant: (ell+1)/(2 ell) for odd ell, alternating
    (ell + 1 + (-1)^{n+1})/(2 ell) for even ell."""
    if ell < 2:
        raise ValueError(f"modulus must be at least 2, got {ell}")
    if ell % 2 == 1:
        return Fraction(ell + 1, 2 * ell)
    return Fraction(ell + 1 + (-1) ** (n + 1), 2 * ell)


def b_approx(ell: int, n: int) -> ScaledReal:
    base = a_approx(n)
    return ScaledReal(mantissa=float(b_prefactor(ell, n)) * base.mantissa, exp2=n)


def c_prefactor(ell: int, r: int, n: int) -> Fraction:
    """Residue classes are evenly spread: 1/ell for odd ell; for even ell the
    class is empty off-parity and carries 2/ell on-parity."""
    if ell < 2:
        raise ValueError(f"modulus must be at least 2, got {ell}")
    if not 0 <= r < ell:
        raise ValueError(f"residue {r} not in range 0..{ell - 1}")
    if ell % 2 == 1:
        return Fraction(1, ell)
    if r % 2 != n % 2:
        return Fraction(0)
    return Fraction(2, ell)


def c_approx(ell: int, r: int, n: int) -> ScaledReal:
    base = a_approx(n)
    return ScaledReal(mantissa=float(c_prefactor(ell, r, n)) * base.mantissa, exp2=n)


def w_approx(ell: int, n: int) -> ScaledReal:
    """Wall counts are the residue class r = ell - 1."""
    return c_approx(ell, ell - 1, n)


def w_ratio_limit(ell: int, parity: int) -> Fraction:
    """Limit of wall count over constrained count along a parity class:
    2/(ell+1) for odd ell; 0 on even n and 4/(ell+2) on odd n for even ell."""
    if ell < 2:
        raise ValueError(f"modulus must be at least 2, got {ell}")
    if parity not in (0, 1):
        raise ValueError(f"parity must be 0 or 1, got {parity}")
    if ell % 2 == 1:
        return Fraction(2, ell + 1)
    return Fraction(0) if parity == 0 else Fraction(4, ell + 2)


def a_approximant() -> Approximant:
    return Approximant(
        tau=Fraction(-1, 2), beta=2, prefactor=lambda n: SQRT_2_OVER_PI,
        label="halfline",
    )


def b_approximant(ell: int) -> Approximant:
    return Approximant(
        tau=Fraction(-1, 2),
        beta=2,
        prefactor=lambda n: float(b_prefactor(ell, n)) * SQRT_2_OVER_PI,
        label=f"mod-{ell} constrained",
    )


def w_approximant(ell: int) -> Approximant:
    return Approximant(
        tau=Fraction(-1, 2),
        beta=2,
        prefactor=lambda n: float(c_prefactor(ell, ell - 1, n)) * SQRT_2_OVER_PI,
        label=f"wall counts mod {ell}",
    )


def normalized_count(value: int, n: int, beta: int = 2, tau: Fraction = Fraction(-1, 2)) -> float:
    """value / (n^tau * beta^n) as a float, via an exact rational first."""
    if n < 1:
        raise ValueError("normalization is defined for n >= 1")
    return float(Fraction(value, beta**n)) * float(n) ** (-float(tau))


def ratio_to_approx(value: int, n: int, approx: Approximant) -> float:
    """Exact count over approximant value, safely normalized."""
    return normalized_count(value, n, approx.beta, approx.tau) / approx.prefactor(n)


def spectral_an(n: int, dps: int = 40) -> mpmath.mpf:
    """Classical count a_n recomputed as the spectral integral
    (2/pi) * int_0^pi (2 cos t)^n * (1 + cos t)/2 dt.

    Adaptive quadrature at ``dps`` working digits, split at pi/2 where the
    integrand changes sign for odd n.  Independent of both the recursion and
    the binomial closed form.
    """
    if not 0 <= n <= 60:
        raise ValueError("the quadrature oracle covers 0 <= n <= 60")
    if dps < 15:
        raise ValueError("need at least 15 working digits")
    with mpmath.workdps(dps):
        def integrand(t: mpmath.mpf) -> mpmath.mpf:
            c = mpmath.cos(t)
            return (2 * c) ** n * (1 + c) / 2

        val, err = mpmath.quad(
            integrand, [0, mpmath.pi / 2, mpmath.pi], error=True
        )
        val = val * 2 / mpmath.pi
        tol = mpmath.mpf(10) ** (-(dps - 12)) * max(abs(val), mpmath.mpf(1))
        if err > tol:
            raise ArithmeticError(
                f"quadrature failed to converge at n={n}: error estimate {err}"
            )
        return +val


@dataclass(frozen=True)
class ErrorReport:
    """Normalized deviations e_n = |exact_n - approx_n| / (n^tau * beta^n)
    over a window, their envelope constant, and a trend verdict."""

    ns: tuple[int, ...]
    errors: tuple[float, ...]
    constant: float  # max of n * e_n over the window
    lower_max: float
    upper_max: float
    passed: bool


def error_envelope(
    exact: GrowthSequence | Sequence[int],
    approx: Approximant,
    window: tuple[int, int],
    step: int = 1,
) -> ErrorReport:
    """Check that n * e_n shows no upward trend over the window.

    The verdict compares the maximum of n * e_n over the upper half of the
    window against the lower half; growth beyond a factor 1.2 fails.  A step
    of 2 restricts to one parity class (needed for wall counts at even
    modulus, where the other class is exactly zero).
    """
    values = exact.values if isinstance(exact, GrowthSequence) else exact
    n_lo, n_hi = window
    if n_lo < 1 or n_hi < n_lo:
        raise ValueError(f"bad window [{n_lo}, {n_hi}]")
    if n_hi >= len(values):
        raise ValueError("window extends beyond the exact sequence")
    ns = tuple(range(n_lo, n_hi + 1, step))
    errors = []
    for n in ns:
        norm = normalized_count(values[n], n, approx.beta, approx.tau)
        errors.append(abs(norm - approx.prefactor(n)))
    weighted = [n * e for n, e in zip(ns, errors)]
    mid = len(ns) // 2
    lower_max = max(weighted[:mid], default=0.0)
    upper_max = max(weighted[mid:], default=0.0)
    passed = upper_max <= 1.2 * lower_max if lower_max > 0 else upper_max == 0.0
    return ErrorReport(
        ns=ns,
        errors=tuple(errors),
        constant=max(weighted, default=0.0),
        lower_max=lower_max,
        upper_max=upper_max,
        passed=passed,
    )
