"""Tensor-power decomposition engine for quantum-sl2 tilting modules.

Weights are nonnegative integers; the dominant datum for the weight ``k`` is
``k + 1`` written as ``a*ell + b`` with ``0 <= b < ell``.  The trichotomy is

* fundamental alcove: ``a == 0``,
* wall: ``a != 0`` and ``b == 0``,
* interior of the projective cone: ``a != 0`` and ``b != 0``.

The indecomposable tilting module ``T(k)`` has Weyl factor ``D(k)`` and, in
the cone interior, a second factor ``D(j)`` with ``j + 1 = a*ell - b`` (the
digit ``b`` flips sign).  Everything below works at the level of characters:
multisets of Weyl factors with arbitrary-precision multiplicities, combined by
the multiplicity-free Clebsch-Gordan rule and resolved into indecomposable
tiltings by peeling from the highest weight, which is valid because the
Weyl-factor matrix of the tiltings is unitriangular for the dominance order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

# A DeltaMultiset maps a highest weight to the multiplicity of its Weyl
# factor; entries are always positive.
DeltaMultiset = dict[int, int]


@dataclass(frozen=True)
class TiltingDecomposition:
    """Multiplicities of the indecomposable tiltings in a decomposition."""

    summands: tuple[tuple[int, int], ...]  # (weight, multiplicity), descending
    ell: int

    def multiplicity(self, k: int) -> int:
        for weight, mult in self.summands:
            if weight == k:
                return mult
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.summands)


def _check_ell(ell: int) -> None:
    if ell < 2:
        raise ValueError(f"quantum characteristic must be at least 2, got {ell}")


def _check_weight(k: int) -> None:
    if k < 0:
        raise ValueError(f"highest weight must be nonnegative, got {k}")


def delta_factors(k: int, ell: int) -> DeltaMultiset:
    """Weyl factors of T(k): itself, plus the digit-flip partner off the wall."""
    _check_weight(k)
    _check_ell(ell)
    a, b = divmod(k + 1, ell)
    if a == 0 or b == 0:
        return {k: 1}
    return {k: 1, a * ell - b - 1: 1}


def dim_tilting(k: int, ell: int) -> int:
    """Dimension of T(k): k+1 on the wall and in the alcove, 2*a*ell inside
    the cone (the two Weyl factors have dimensions a*ell + b and a*ell - b)."""
    _check_weight(k)
    _check_ell(ell)
    a, b = divmod(k + 1, ell)
    if a == 0 or b == 0:
        return k + 1
    return 2 * a * ell


def cg_square_free_product(d1: DeltaMultiset, d2: DeltaMultiset) -> DeltaMultiset:
    """Clebsch-Gordan product of Weyl-factor multisets.

    Bilinear extension of D(a) x D(b) = sum of D(a+b-2i), i = 0..min(a,b);
    each Clebsch-Gordan constituent appears exactly once.
    """
    out: DeltaMultiset = {}
    for a, ma in d1.items():
        for b, mb in d2.items():
            m = ma * mb
            for c in range(a + b, abs(a - b) - 1, -2):
                out[c] = out.get(c, 0) + m
    return out


def count_weyl(d: DeltaMultiset) -> int:
    """Total number of Weyl factors, with multiplicity."""
    return sum(d.values())


def count_summands(td: TiltingDecomposition) -> int:
    """Total number of indecomposable summands, with multiplicity."""
    return sum(m for _, m in td.summands)


def dim_delta_multiset(d: DeltaMultiset) -> int:
    return sum(m * (k + 1) for k, m in d.items())


def dim_decomposition(td: TiltingDecomposition) -> int:
    return sum(m * dim_tilting(k, td.ell) for k, m in td.summands)


def tilting_decompose(d: DeltaMultiset, ell: int) -> TiltingDecomposition:
    """Resolve a Weyl-factor multiset into indecomposable tiltings.

    Greedy peel from the highest weight: the partner factor of T(k) has a
    strictly smaller weight, so the top weight always belongs to T(top).  A
    negative intermediate multiplicity means the input was not the factor
    multiset of a tilting module.
    """
    _check_ell(ell)
    remaining = dict(d)
    summands: list[tuple[int, int]] = []
    for k in sorted(remaining, reverse=True):
        mult = remaining.get(k, 0)
        if mult == 0:
            continue
        if mult < 0:
            raise ValueError(
                f"multiplicity of weight {k} driven to {mult}: "
                "input is not a tilting character"
            )
        summands.append((k, mult))
        for j in delta_factors(k, ell):
            remaining[j] = remaining.get(j, 0) - mult
        del remaining[k]
    return TiltingDecomposition(summands=tuple(summands), ell=ell)


def expand_decomposition(td: TiltingDecomposition) -> DeltaMultiset:
    """Weyl-factor multiset of a tilting decomposition (inverse of the peel)."""
    out: DeltaMultiset = {}
    for k, mult in td.summands:
        for j in delta_factors(k, td.ell):
            out[j] = out.get(j, 0) + mult
    return out


def tensor_power(k: int, n: int, ell: int) -> tuple[TiltingDecomposition, DeltaMultiset]:
    """Decomposition data of the n-th tensor power of T(k).

    Returns the tilting decomposition together with the raw Weyl-factor
    multiset, which is also the decomposition of the tensor power of the
    characteristic-zero counterpart into simples.
    """
    _check_weight(k)
    _check_ell(ell)
    if n < 0:
        raise ValueError(f"tensor power must be nonnegative, got {n}")
    factor = delta_factors(k, ell)
    raw: DeltaMultiset = {0: 1}
    for _ in range(n):
        raw = cg_square_free_product(raw, factor)
    return tilting_decompose(raw, ell), raw


def wall_summands(td: TiltingDecomposition, ell: int) -> int:
    """Multiplicity of summands whose weight sits on the wall: ell | k+1."""
    _check_ell(ell)
    return sum(m for k, m in td.summands if (k + 1) % ell == 0)


def char_zero_rate_constant(k: int) -> float:
    """Leading constant sqrt(6 / ((k^2-1) pi)) of the characteristic-zero
    summand count for a module of dimension context k; needs k >= 2."""
    if k < 2:
        raise ValueError("rate constant is singular below dimension context 2")
    return math.sqrt(6 / ((k * k - 1) * math.pi))


@dataclass(frozen=True)
class BoundsRow:
    n: int
    weyl: int
    summands: int
    ok: bool
    rate_ratio: float | None


@dataclass(frozen=True)
class BoundsReport:
    k: int
    ell: int
    rows: tuple[BoundsRow, ...]

    @property
    def all_ok(self) -> bool:
        return all(row.ok for row in self.rows)


def bounds_check(k: int, ell: int, n_max: int) -> BoundsReport:
    """Check ceil(weyl/2) <= summands <= weyl for powers of V = T(k-1).

    Every indecomposable tilting has one or two Weyl factors, so the summand
    count is squeezed by the exact Weyl-factor count.  For k >= 2 each row
    also reports the ratio of the Weyl count to its closed-form approximant
    sqrt(6/((k^2-1) pi)) * n^{-1/2} * (dim V)^n.
    """
    if k < 1:
        raise ValueError(f"dimension context must be at least 1, got {k}")
    if n_max < 1:
        raise ValueError(f"power range must reach at least 1, got {n_max}")
    _check_ell(ell)
    weight = k - 1
    dim_v = dim_tilting(weight, ell)
    const = char_zero_rate_constant(k) if k >= 2 else None
    factor = delta_factors(weight, ell)
    raw: DeltaMultiset = {0: 1}
    rows: list[BoundsRow] = []
    for n in range(1, n_max + 1):
        raw = cg_square_free_product(raw, factor)
        weyl = count_weyl(raw)
        summ = count_summands(tilting_decompose(raw, ell))
        ok = 2 * summ >= weyl and summ <= weyl
        ratio = None
        if const is not None:
            approx = const / math.sqrt(n)
            ratio = float(Fraction(weyl, dim_v**n)) / approx
        rows.append(BoundsRow(n=n, weyl=weyl, summands=summ, ok=ok, rate_ratio=ratio))
    return BoundsReport(k=k, ell=ell, rows=tuple(rows))


def projective_closure_check(a: int, b: int, ell: int) -> bool:
    """True if every summand of T(a) (x) T(b) has weight at least ell - 1.

    Requires T(a) projective, i.e. a + 1 >= ell: projectives form a tensor
    ideal, so the product may contain no summand outside the cone.
    """
    _check_ell(ell)
    _check_weight(a)
    _check_weight(b)
    if a + 1 < ell:
        raise ValueError(
            f"weight {a} is not projective at quantum characteristic {ell}"
        )
    product = cg_square_free_product(delta_factors(a, ell), delta_factors(b, ell))
    td = tilting_decompose(product, ell)
    return all(k >= ell - 1 for k, _ in td.summands)
