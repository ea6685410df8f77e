import math
from fractions import Fraction

import pytest

from tiltwalk import asymptotics as asy
from tiltwalk import roots, tilting


def test_stats_examples():
    a1 = roots.stats("A", 1)
    assert (a1.num_positive_roots, a1.coxeter_number) == (1, 2)
    a2 = roots.stats("A", 2)
    assert (a2.num_positive_roots, a2.coxeter_number) == (3, 3)
    g2 = roots.stats("G", 2)
    assert (g2.num_positive_roots, g2.coxeter_number) == (6, 6)
    assert a2.rho == (1, 1)


def test_stats_rejects_invalid():
    for family, rank in (("D", 2), ("E", 9), ("F", 5), ("G", 3), ("A", 0), ("H", 3)):
        with pytest.raises(ValueError):
            roots.stats(family, rank)


def test_positive_roots_coxeter_identity():
    cases = (
        [("A", n) for n in range(1, 9)]
        + [("B", n) for n in range(2, 9)]
        + [("C", n) for n in range(2, 9)]
        + [("D", n) for n in range(3, 9)]
        + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
    )
    for family, rank in cases:
        st = roots.stats(family, rank)
        assert 2 * st.num_positive_roots == st.rank * st.coxeter_number


def test_parse_type():
    assert roots.parse_type("B2").name == "B2"
    assert roots.parse_type("e6").coxeter_number == 12
    with pytest.raises(ValueError):
        roots.parse_type("Q1")


def test_steinberg_dim():
    assert roots.steinberg_dim(roots.stats("A", 1), 5) == 5
    assert roots.steinberg_dim(roots.stats("A", 2), 5) == 125
    assert roots.steinberg_dim(roots.stats("B", 2), 7) == 2401


def test_projective_delta_bound():
    assert roots.projective_delta_bound(roots.stats("A", 2), 2) == 8
    assert roots.projective_delta_bound(roots.stats("A", 2), 7) == 27
    for ell in range(2, 9):
        assert roots.projective_delta_bound(roots.stats("A", 1), ell) == 2


def test_rank2_improved_values():
    assert roots.rank2_improved_bound("A2") == 12
    assert roots.rank2_improved_bound("B2") == 32
    assert roots.rank2_improved_bound("C2") == 32
    assert roots.rank2_improved_bound("G2") == 348
    with pytest.raises(ValueError):
        roots.rank2_improved_bound("A3")


def test_rank2_improvement_beats_unimproved():
    for name, h_pow in (("A2", 27), ("B2", 256), ("C2", 256), ("G2", 46656)):
        st = roots.parse_type(name)
        assert roots.projective_delta_bound(st, st.coxeter_number) == h_pow
        assert roots.rank2_improved_bound(name) < h_pow


def test_theta_envelope_a1():
    const = tilting.char_zero_rate_constant(2)
    env = roots.theta_envelope(roots.stats("A", 1), 2, const, ell=5)
    assert env.tau == Fraction(-1, 2)
    assert env.beta == 2
    assert env.lower_divisor == 2
    assert env.upper_const == pytest.approx(math.sqrt(2 / math.pi))
    assert env.lower_const == pytest.approx(env.upper_const / 2)


def test_theta_envelope_trivial_dimension():
    env = roots.theta_envelope(roots.stats("A", 1), 1, 1.0, ell=3)
    assert env.beta == 1
    assert env.lower_const <= env.upper_const


def test_theta_envelope_rank2_divisor_gating():
    g2 = roots.stats("G", 2)
    assert roots.theta_envelope(g2, 14, 1.0, ell=7).lower_divisor == 348
    # below the admissible characteristic the generic bound applies
    assert roots.theta_envelope(g2, 14, 1.0, ell=5).lower_divisor == 5**6


def test_theta_envelope_validation():
    st = roots.stats("A", 1)
    with pytest.raises(ValueError):
        roots.theta_envelope(st, 0, 1.0, ell=3)
    with pytest.raises(ValueError):
        roots.theta_envelope(st, 2, -1.0, ell=3)


def test_a1_envelope_contains_odd_moduli(long_sequences):
    """Desk-scale envelope check for the defining module at odd moduli; the
    even-modulus sequences graze the lower constant from below on the even
    parity class, see the acceptance suite."""
    const = tilting.char_zero_rate_constant(2)
    for ell in (3, 5, 7, 9):
        env = roots.theta_envelope(roots.stats("A", 1), 2, const, ell)
        seq = long_sequences[ell]
        for n in range(50, 2001):
            assert env.contains(asy.normalized_count(seq.b[n], n))


def test_a1_envelope_upper_bound_all_moduli(long_sequences):
    const = tilting.char_zero_rate_constant(2)
    for ell in range(2, 10):
        env = roots.theta_envelope(roots.stats("A", 1), 2, const, ell)
        seq = long_sequences[ell]
        for n in range(1, 2001):
            assert asy.normalized_count(seq.b[n], n) <= env.upper_const
