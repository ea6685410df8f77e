"""Self-verification harness: golden fixtures plus cross-module oracles.

Each check recomputes one slice of the library through an independent route
(closed form vs recursion, generating function vs row sums, tilting engine vs
walk table, quadrature vs exact integers, asymptotic ratio vs exact sequence)
and reports PASS or FAIL together with the measured quantity.  The ``quick``
profile stays under a few seconds; ``full`` extends the asymptotic window to
n = 2000 and runs the quadrature oracle.

The theta-envelope check is expected to FAIL at even moduli: on the even
parity class the exact normalized sequence approaches the asymptotic lower
constant from below, so a finite window sits marginally outside the envelope.
The check states the measured margin; see the README.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from . import asymptotics as asy
from . import roots, series, tilting, walks

SEQUENCE_FIXTURES = {
    2: [1, 1, 1, 3, 3, 10, 10, 35, 35, 126, 126],
    3: [1, 1, 2, 2, 5, 6, 15, 21, 50, 77, 176],
    4: [1, 1, 2, 3, 5, 9, 14, 29, 43, 99, 142],
    5: [1, 1, 2, 3, 6, 9, 19, 28, 62, 91, 208],
}

GOLDEN_CLASSICAL = "classical_table_16.csv"
GOLDEN_MODULAR = "modular_table_ell3_16.csv"
GOLDEN_SEQUENCES = "growth_sequences.json"

# the golden modular matrix is the ell = 3 table
GOLDEN_MODULAR_ELL = 3


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _read_golden(name: str, golden_dir: str | None) -> str:
    if golden_dir is not None:
        return Path(golden_dir, name).read_text()
    return resources.files("tiltwalk.data").joinpath(name).read_text()


def check_golden_classical(golden_dir: str | None = None) -> CheckResult:
    want = _read_golden(GOLDEN_CLASSICAL, golden_dir)
    got = walks.table_to_csv(walks.classical_table(15))
    return CheckResult(
        "golden-classical-table",
        got == want,
        "16x16 classical table matches byte for byte" if got == want
        else "computed classical table differs from the golden file",
    )


def check_golden_modular(golden_dir: str | None = None) -> CheckResult:
    want = _read_golden(GOLDEN_MODULAR, golden_dir)
    got = walks.table_to_csv(walks.modular_table(GOLDEN_MODULAR_ELL, 15))
    return CheckResult(
        "golden-modular-table",
        got == want,
        f"16x16 constrained table (ell={GOLDEN_MODULAR_ELL}) matches byte for byte"
        if got == want
        else "computed constrained table differs from the golden file",
    )


def check_sequence_fixtures(golden_dir: str | None = None) -> CheckResult:
    fixtures = json.loads(_read_golden(GOLDEN_SEQUENCES, golden_dir))
    bad = []
    for key, want in fixtures.items():
        ell = int(key)
        got = list(walks.sequences(ell, len(want) - 1).b.values)
        if got != [int(v) for v in want]:
            bad.append(ell)
    return CheckResult(
        "sequence-fixtures",
        not bad,
        "b_n matches the fixture lists for ell in {2,3,4,5}" if not bad
        else f"mismatch at ell in {bad}",
    )


def check_ballot_formula(n_max: int = 200) -> CheckResult:
    table = walks.classical_table(n_max)
    for n in range(n_max + 1):
        for m in range(n + 1):
            if walks.ballot_formula(n, m) != table.entry(n, m):
                return CheckResult(
                    "ballot-closed-form", False, f"mismatch at (n, m) = ({n}, {m})"
                )
    return CheckResult(
        "ballot-closed-form", True, f"closed form equals recursion up to n = {n_max}"
    )


def check_generating_function(n_max: int = 200) -> CheckResult:
    for ell in range(3, 10):
        c = series.RationalSeries(
            walks.classical_residue_sums(ell, ell - 1, n_max).values, n_max
        )
        f = series.gf_b(ell, n_max, c)
        b = walks.sequences(ell, n_max).b
        for n in range(n_max + 1):
            if f.coefficient(n) != b[n]:
                return CheckResult(
                    "gf-row-sums", False, f"ell={ell}: coefficient {n} differs"
                )
    seq2 = walks.sequences(2, n_max)
    for n in range(n_max + 1):
        want = seq2.a[n] if n % 2 == 1 else (seq2.a[n - 1] if n >= 1 else 1)
        if seq2.b[n] != want:
            return CheckResult(
                "gf-row-sums", False, f"ell=2 reduction fails at n = {n}"
            )
    return CheckResult(
        "gf-row-sums", True,
        f"series coefficients equal row sums up to n = {n_max} for ell in 3..9, "
        "ell=2 via the parity reduction",
    )


def check_tilting_oracle(n_max: int = 200) -> CheckResult:
    for ell in range(2, 10):
        table = walks.modular_table(ell, n_max)
        raw: tilting.DeltaMultiset = {0: 1}
        step = tilting.delta_factors(1, ell)
        dim_step = tilting.dim_tilting(1, ell)
        for n in range(1, n_max + 1):
            raw = tilting.cg_square_free_product(raw, step)
            td = tilting.tilting_decompose(raw, ell)
            got = td.as_dict()
            want = {m: table.entry(n, m) for m in range(n + 1) if table.entry(n, m)}
            if got != want:
                return CheckResult(
                    "tilting-walk-oracle", False,
                    f"ell={ell}, n={n}: tensor-power multiplicities differ",
                )
            if tilting.dim_decomposition(td) != dim_step**n:
                return CheckResult(
                    "tilting-walk-oracle", False,
                    f"ell={ell}, n={n}: dimension not conserved",
                )
    return CheckResult(
        "tilting-walk-oracle", True,
        f"tensor powers of T(1) match the constrained table up to n = {n_max} "
        "for ell in 2..9, dimensions conserved",
    )


def check_wall_counts(n_max: int = 200) -> CheckResult:
    for ell in range(2, 10):
        seq = walks.sequences(ell, n_max)
        raw: tilting.DeltaMultiset = {0: 1}
        step = tilting.delta_factors(1, ell)
        for n in range(1, n_max + 1):
            raw = tilting.cg_square_free_product(raw, step)
            td = tilting.tilting_decompose(raw, ell)
            if tilting.wall_summands(td, ell) != seq.w[n]:
                return CheckResult(
                    "wall-counts", False, f"ell={ell}, n={n}: wall summands differ"
                )
    return CheckResult(
        "wall-counts", True,
        f"wall summands equal the residue-class counts up to n = {n_max}",
    )


def check_chebyshev_identity(ell_max: int = 12) -> CheckResult:
    for ell in range(2, ell_max + 1):
        for j in range(2, ell + 1):
            if series.r_poly(ell, j) != series.cheb_at_inv_2x(series.cheb_u(j - 2)):
                return CheckResult(
                    "chebyshev-transfer-identity", False, f"ell={ell}, j={j}"
                )
    return CheckResult(
        "chebyshev-transfer-identity", True,
        f"transfer recursion equals U_(j-2)(1/(2x)) for ell up to {ell_max}",
    )


def check_mixed_factor(order: int = 64) -> CheckResult:
    for p in range(2, 8):
        for ell in range(2, 8):
            limit = series.mixed_factor_limit(p, ell)
            if limit != Fraction(ell - 1, p - 1):
                return CheckResult("mixed-factor", False, f"limit wrong at ({p}, {ell})")
            f = series.mixed_factor_series(p, ell, order)
            num = series.RationalSeries(series._poly_mul(
                series._one_minus_power(ell - 1), series._one_plus_power(p)), order)
            den = series.RationalSeries(series._poly_mul(
                series._one_minus_power(p - 1), series._one_plus_power(ell)), order)
            if f * den != num:
                return CheckResult(
                    "mixed-factor", False, f"cross-multiplication fails at ({p}, {ell})"
                )
    return CheckResult(
        "mixed-factor", True,
        "limits equal (ell-1)/(p-1) and the series satisfies the defining "
        f"identity to order {order} for p, ell in 2..7",
    )


def check_rank2_constants() -> CheckResult:
    improved = {t: roots.rank2_improved_bound(t) for t in ("A2", "B2", "C2", "G2")}
    plain = {
        t: roots.projective_delta_bound(roots.parse_type(t), 100)
        for t in ("A2", "B2", "C2", "G2")
    }
    ok = improved == {"A2": 12, "B2": 32, "C2": 32, "G2": 348} and plain == {
        "A2": 27, "B2": 256, "C2": 256, "G2": 46656,
    }
    return CheckResult(
        "rank2-constants",
        ok,
        f"improved {improved}, unimproved {plain}",
    )


def check_asymptotic_ratio(n_max: int = 2000) -> CheckResult:
    details = []
    for ell in range(2, 10):
        seq = walks.sequences(ell, n_max)
        approx = asy.b_approximant(ell)
        ratio = asy.ratio_to_approx(seq.b[n_max], n_max, approx)
        if abs(ratio - 1) > 0.01:
            return CheckResult(
                "asymptotic-ratio", False,
                f"ell={ell}: |ratio - 1| = {abs(ratio - 1):.2e} at n = {n_max}",
            )
        report = asy.error_envelope(seq.b, approx, (max(200, n_max // 10), n_max))
        if not report.passed:
            return CheckResult(
                "asymptotic-ratio", False,
                f"ell={ell}: error envelope trends upward "
                f"({report.lower_max:.4f} -> {report.upper_max:.4f})",
            )
        details.append(f"ell={ell}: C={report.constant:.3f}")
    return CheckResult("asymptotic-ratio", True, "; ".join(details))


def check_wall_ratio_limits(n_max: int = 2001) -> CheckResult:
    details = []
    for ell in range(2, 10):
        seq = walks.sequences(ell, n_max)
        for n in (n_max - 1, n_max):
            limit = asy.w_ratio_limit(ell, n % 2)
            ratio = Fraction(seq.w[n], seq.b[n])
            if abs(float(ratio - limit)) > 0.02:
                return CheckResult(
                    "wall-ratio-limits", False,
                    f"ell={ell}, n={n}: w/b = {float(ratio):.4f}, "
                    f"limit {float(limit):.4f}",
                )
        details.append(f"ell={ell}: ok")
    return CheckResult(
        "wall-ratio-limits", True,
        f"wall/summand ratios within 0.02 of their limits near n = {n_max}",
    )


def check_quadrature(n_max: int = 60, dps: int = 40) -> CheckResult:
    exact = walks.classical_row_sums(n_max)
    worst = 0.0
    for n in range(n_max + 1):
        val = asy.spectral_an(n, dps=dps)
        rel = abs(float((val - exact[n]) / exact[n]))
        worst = max(worst, rel)
        if rel > 1e-9:
            return CheckResult(
                "quadrature-oracle", False,
                f"n={n}: relative error {rel:.2e} exceeds 1e-9",
            )
    return CheckResult(
        "quadrature-oracle", True,
        f"spectral integral matches exact counts to {worst:.1e} for n <= {n_max}",
    )


def check_theta_envelope(n_lo: int = 50, n_hi: int = 2000) -> CheckResult:
    """Literal envelope containment over [n_lo, n_hi]; fails at even moduli
    where the even parity class approaches the lower constant from below."""
    env = roots.theta_envelope(
        roots.stats("A", 1), 2, tilting.char_zero_rate_constant(2), ell=2
    )
    worst: tuple[float, int, int] | None = None
    for ell in range(2, 10):
        seq = walks.sequences(ell, n_hi)
        for n in range(n_lo, n_hi + 1):
            norm = asy.normalized_count(seq.b[n], n)
            margin = min(norm - env.lower_const, env.upper_const - norm)
            if worst is None or margin < worst[0]:
                worst = (margin, ell, n)
    assert worst is not None
    margin, ell, n = worst
    ok = margin >= 0
    return CheckResult(
        "theta-envelope",
        ok,
        f"worst margin {margin:+.5f} at ell={ell}, n={n} for the envelope "
        f"[{env.lower_const:.5f}, {env.upper_const:.5f}]"
        + ("" if ok else " (even parity class sits below the asymptotic constant)"),
    )


def run_checks(
    profile: str, golden_dir: str | None = None, precision: int = 40
) -> list[CheckResult]:
    if profile not in ("quick", "full"):
        raise ValueError(f"unknown profile {profile!r}")
    results = [
        check_golden_classical(golden_dir),
        check_golden_modular(golden_dir),
        check_sequence_fixtures(golden_dir),
        check_ballot_formula(),
        check_generating_function(),
        check_tilting_oracle(),
        check_wall_counts(),
        check_chebyshev_identity(),
        check_mixed_factor(),
        check_rank2_constants(),
    ]
    if profile == "full":
        results += [
            check_asymptotic_ratio(),
            check_wall_ratio_limits(),
            check_quadrature(dps=precision),
            check_theta_envelope(),
        ]
    return results


def format_report(results: list[CheckResult]) -> str:
    lines = [
        f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}" for r in results
    ]
    n_fail = sum(not r.passed for r in results)
    lines.append(
        f"{len(results) - n_fail}/{len(results)} checks passed"
        + (f", {n_fail} failed" if n_fail else "")
    )
    return "\n".join(lines) + "\n"
