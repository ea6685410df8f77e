import math
from fractions import Fraction

import pytest

from tiltwalk import asymptotics as asy
from tiltwalk import walks


def test_a_approx_scaled_form():
    s = asy.a_approx(4)
    assert s.exp2 == 4
    assert s.mantissa == pytest.approx(math.sqrt(2 / math.pi) / 2)
    assert s.to_float() == pytest.approx(16 * math.sqrt(2 / math.pi) / 2)


def test_a_approx_rejects_zero():
    with pytest.raises(ValueError):
        asy.a_approx(0)


def test_a_approx_monotone():
    # compare log2 values to dodge the 2^n overflow
    prev = None
    for n in range(1, 3000):
        val = math.log2(asy.a_approx(n).mantissa) + n
        if prev is not None:
            assert val > prev
        prev = val


def test_a_ratio_converges(long_sequences):
    seq = long_sequences[2]
    approx = asy.a_approximant()
    assert asy.ratio_to_approx(seq.a[2000], 2000, approx) == pytest.approx(1, abs=0.01)
    # n * |ratio - 1| stays bounded over the window
    worst = max(
        n * abs(asy.ratio_to_approx(seq.a[n], n, approx) - 1)
        for n in range(100, 2001, 13)
    )
    assert worst < 1.0


def test_b_prefactor_values():
    assert asy.b_prefactor(3, 10) == Fraction(2, 3)
    assert asy.b_prefactor(3, 11) == Fraction(2, 3)
    # alternating prefactor at even modulus: (3 + (-1)^(n+1)) / 4 at ell = 2
    assert asy.b_prefactor(2, 10) == Fraction(1, 2)
    assert asy.b_prefactor(2, 11) == Fraction(1)
    assert asy.b_prefactor(4, 7) == Fraction(6, 8)


def test_b_prefactor_ell2_matches_parity_reduction():
    """The alternating prefactor agrees with dropping the last step: on even
    n the approximant halves, matching the count of one step earlier."""
    for n in (10**3, 10**6):
        b = asy.b_approx(2, n)
        a_prev = asy.a_approx(n - 1)
        # b_approx(2, n) = a_approx(n-1) * sqrt((n-1)/n) on even n
        ratio = (b.mantissa * 2.0) / a_prev.mantissa  # exp2 differ by one
        assert ratio == pytest.approx(math.sqrt((n - 1) / n), rel=1e-12)


def test_b_ratio_at_2000(long_sequences):
    for ell in range(2, 10):
        seq = long_sequences[ell]
        ratio = asy.ratio_to_approx(seq.b[2000], 2000, asy.b_approximant(ell))
        assert abs(ratio - 1) <= 0.01


def test_c_prefactor_cases():
    assert asy.c_prefactor(5, 2, 9) == Fraction(1, 5)
    assert asy.c_prefactor(4, 1, 8) == 0
    assert asy.c_prefactor(4, 1, 9) == Fraction(1, 2)


def test_c_prefactors_sum_to_one():
    for ell in range(2, 10):
        for n in (6, 7):
            total = sum(asy.c_prefactor(ell, r, n) for r in range(ell))
            assert total == 1


def test_residue_classes_evenly_spread(classical_200):
    n = 200
    a_n = walks.row_sum(classical_200, n)
    for r in range(5):
        c = walks.residue_sum(classical_200, n, r, 5)
        assert abs(c / a_n - 1 / 5) < 0.01


def test_w_approx_is_last_residue_class():
    for ell in (3, 4, 7):
        for n in (9, 10):
            assert asy.w_approx(ell, n) == asy.c_approx(ell, ell - 1, n)


def test_w_ratio_limit_values():
    assert asy.w_ratio_limit(3, 0) == Fraction(1, 2)
    assert asy.w_ratio_limit(3, 1) == Fraction(1, 2)
    assert asy.w_ratio_limit(4, 0) == 0
    assert asy.w_ratio_limit(4, 1) == Fraction(2, 3)
    with pytest.raises(ValueError):
        asy.w_ratio_limit(4, 2)


def test_wall_counts_vanish_exactly_on_even_parity(long_sequences):
    for ell in (2, 4, 6, 8):
        w = long_sequences[ell].w
        for n in range(0, 2001, 2):
            assert w[n] == 0


def test_w_over_b_converges(long_sequences):
    for ell in range(2, 10):
        seq = long_sequences[ell]
        for n in (2000, 2001):
            limit = asy.w_ratio_limit(ell, n % 2)
            ratio = Fraction(seq.w[n], seq.b[n])
            assert abs(float(ratio - limit)) < 0.02


def test_spectral_oracle_small_values():
    assert float(asy.spectral_an(0)) == pytest.approx(1, rel=1e-12)
    assert float(asy.spectral_an(4)) == pytest.approx(6, rel=1e-12)


def test_spectral_oracle_matches_exact_counts():
    exact = walks.classical_row_sums(60)
    for n in (1, 7, 20, 41, 60):
        val = asy.spectral_an(n)
        assert abs(float((val - exact[n]) / exact[n])) < 1e-9


def test_spectral_oracle_domain():
    with pytest.raises(ValueError):
        asy.spectral_an(61)
    with pytest.raises(ValueError):
        asy.spectral_an(-1)


def test_error_envelope_synthetic_zero():
    values = [0] + [2**n for n in range(1, 33)]
    approx = asy.Approximant(
        tau=Fraction(-1, 2),
        beta=2,
        prefactor=lambda n: asy.normalized_count(values[n], n),
        label="synthetic",
    )
    report = asy.error_envelope(values, approx, (4, 32))
    assert report.passed
    assert report.constant == 0
    assert all(e == 0 for e in report.errors)


def test_error_envelope_a_sequence(long_sequences):
    report = asy.error_envelope(long_sequences[2].a, asy.a_approximant(), (100, 2000))
    assert report.passed
    assert report.upper_max <= 1.2 * report.lower_max


def test_error_envelope_b_sequence(long_sequences):
    report = asy.error_envelope(
        long_sequences[5].b, asy.b_approximant(5), (100, 2000)
    )
    assert report.passed


def test_error_envelope_parity_step(long_sequences):
    report = asy.error_envelope(
        long_sequences[4].w, asy.w_approximant(4), (101, 2001), step=2
    )
    assert report.passed


def test_error_envelope_window_validation():
    with pytest.raises(ValueError):
        asy.error_envelope([1, 1, 1], asy.a_approximant(), (2, 1))
    with pytest.raises(ValueError):
        asy.error_envelope([1, 1, 1], asy.a_approximant(), (1, 5))


def test_normalized_count_safe_at_large_n():
    value = walks.classical_row_sums(2000)[2000]
    norm = asy.normalized_count(value, 2000)
    assert 0.7 < norm < 0.8  # close to sqrt(2/pi)
