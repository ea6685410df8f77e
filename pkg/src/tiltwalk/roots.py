"""Root-system statistics and growth-envelope constants for simple types.

Static data only: positive-root counts and Coxeter numbers for the simple
families, the Steinberg dimension ``ell^(#positive roots)``, the bound on the
number of Weyl factors of an indecomposable projective, the sharper rank-2
constants, and the resulting two-sided envelope for the normalized summand
count of tilting tensor powers.  No general-type multiplicities are computed
here; only type A1 envelopes can be validated against exact sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class RootSystemStats:
    family: str
    rank: int
    num_positive_roots: int
    coxeter_number: int
    rho: tuple[int, ...]  # all-ones in the fundamental-weight basis

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"


_EXCEPTIONAL = {
    ("E", 6): (36, 12),
    ("E", 7): (63, 18),
    ("E", 8): (120, 30),
    ("F", 4): (24, 12),
    ("G", 2): (6, 6),
}


def stats(family: str, rank: int) -> RootSystemStats:
    """Positive-root count and Coxeter number of a simple root system.

    Accepted: A(n>=1), B(n>=2), C(n>=2), D(n>=3), E6-E8, F4, G2.
    """
    family = family.upper()
    if family == "A" and rank >= 1:
        data = (rank * (rank + 1) // 2, rank + 1)
    elif family in ("B", "C") and rank >= 2:
        data = (rank * rank, 2 * rank)
    elif family == "D" and rank >= 3:
        data = (rank * (rank - 1), 2 * rank - 2)
    elif (family, rank) in _EXCEPTIONAL:
        data = _EXCEPTIONAL[(family, rank)]
    else:
        raise ValueError(f"{family}{rank} is not a simple root system type")
    num_pos, cox = data
    return RootSystemStats(
        family=family,
        rank=rank,
        num_positive_roots=num_pos,
        coxeter_number=cox,
        rho=(1,) * rank,
    )


def parse_type(name: str) -> RootSystemStats:
    """Parse a label like "A2" or "G2"."""
    name = name.strip()
    if len(name) < 2 or not name[0].isalpha():
        raise ValueError(f"cannot parse root system type {name!r}")
    return stats(name[0], int(name[1:]))


def steinberg_dim(st: RootSystemStats, ell: int) -> int:
    """Dimension of the Steinberg module: ell^(#positive roots)."""
    if ell < 2:
        raise ValueError(f"quantum characteristic must be at least 2, got {ell}")
    return ell**st.num_positive_roots


def projective_delta_bound(st: RootSystemStats, ell: int) -> int:
    """Bound on the Weyl-factor count of an indecomposable projective:
    ell^(#R+) in general, h^(#R+) once ell >= h (the multiplicities stop
    depending on ell from the Coxeter number on)."""
    if ell < 2:
        raise ValueError(f"quantum characteristic must be at least 2, got {ell}")
    return min(ell, st.coxeter_number) ** st.num_positive_roots


_RANK2_IMPROVED = {"A2": 12, "B2": 32, "C2": 32, "G2": 348}

# smallest quantum characteristic for which the sharper rank-2 divisor applies
_RANK2_MIN_ELL = {"A2": 3, "B2": 5, "C2": 5, "G2": 7}


def rank2_improved_bound(type_name: str) -> int:
    """Sharper lower-bound divisor in rank 2: 12 (A2), 32 (B2/C2), 348 (G2)."""
    key = type_name.strip().upper()
    if key not in _RANK2_IMPROVED:
        raise ValueError(f"no improved rank-2 bound for type {type_name!r}")
    return _RANK2_IMPROVED[key]


@dataclass(frozen=True)
class ThetaEnvelope:
    """Two-sided growth envelope: the normalized summand count
    b_n / (n^tau * beta^n) is asymptotically caught between the constants."""

    tau: Fraction
    beta: int
    lower_const: float
    upper_const: float
    lower_divisor: int

    def contains(self, normalized: float) -> bool:
        return self.lower_const <= normalized <= self.upper_const


def theta_envelope(
    st: RootSystemStats, dim_t: int, char_zero_const: float, ell: int
) -> ThetaEnvelope:
    """Envelope with exponent -#R+/2 and base dim(T).

    The upper constant is the characteristic-zero leading constant supplied by
    the caller; the lower constant divides it by the projective Weyl-factor
    bound, or by the sharper rank-2 divisor when the characteristic admits it.
    """
    if dim_t < 1:
        raise ValueError(f"dimension must be positive, got {dim_t}")
    if char_zero_const <= 0:
        raise ValueError("the characteristic-zero constant must be positive")
    divisor = projective_delta_bound(st, ell)
    name = st.name
    if name in _RANK2_IMPROVED and ell >= _RANK2_MIN_ELL[name]:
        divisor = min(divisor, _RANK2_IMPROVED[name])
    return ThetaEnvelope(
        tau=Fraction(-st.num_positive_roots, 2),
        beta=dim_t,
        lower_const=char_zero_const / divisor,
        upper_const=char_zero_const,
        lower_divisor=divisor,
    )
