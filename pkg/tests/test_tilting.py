import random

import pytest

from tiltwalk import tilting, walks


def test_delta_factors_examples():
    assert tilting.delta_factors(3, 3) == {3: 1, 1: 1}
    assert tilting.delta_factors(4, 5) == {4: 1}  # wall: 5 = 1*5 + 0
    for k in range(4):  # fundamental alcove at ell = 5
        assert tilting.delta_factors(k, 5) == {k: 1}


def test_delta_factors_size_trichotomy():
    """One factor exactly in the alcove and on the wall, two otherwise."""
    for ell in range(2, 13):
        for k in range(0, 400):
            size = len(tilting.delta_factors(k, ell))
            simple = (k + 1) <= ell or (k + 1) % ell == 0
            assert size == (1 if simple else 2)


def test_one_or_two_weyl_factors_large_range():
    for ell in (2, 3, 7, 12):
        for k in range(10_000 + 1):
            assert len(tilting.delta_factors(k, ell)) in (1, 2)


def test_dim_tilting():
    assert tilting.dim_tilting(3, 3) == 6
    assert tilting.dim_tilting(0, 5) == 1
    assert tilting.dim_tilting(1, 2) == 2  # wall: 2 = 1*2 + 0
    for ell in range(2, 8):
        for k in range(200):
            expected = sum(
                (j + 1) * m for j, m in tilting.delta_factors(k, ell).items()
            )
            assert tilting.dim_tilting(k, ell) == expected


def test_cg_product_examples():
    assert tilting.cg_square_free_product({3: 1}, {1: 1}) == {4: 1, 2: 1}
    d = {5: 2, 1: 3}
    assert tilting.cg_square_free_product({0: 1}, d) == d
    # the constituent count of a product of two irreducibles is min + 1
    for a in range(8):
        for b in range(8):
            prod = tilting.cg_square_free_product({a: 1}, {b: 1})
            assert sum(prod.values()) == min(a, b) + 1


def test_cg_product_associative_and_commutative():
    rng = random.Random(3)
    for _ in range(20):
        ds = [
            {rng.randint(0, 9): rng.randint(1, 4) for _ in range(rng.randint(1, 3))}
            for _ in range(3)
        ]
        left = tilting.cg_square_free_product(
            tilting.cg_square_free_product(ds[0], ds[1]), ds[2]
        )
        right = tilting.cg_square_free_product(
            ds[0], tilting.cg_square_free_product(ds[1], ds[2])
        )
        assert left == right
        assert tilting.cg_square_free_product(ds[0], ds[1]) == (
            tilting.cg_square_free_product(ds[1], ds[0])
        )


def test_decompose_worked_example():
    """T(3) squared at ell = 3: the unitriangular peel of the multiset
    {6:1, 4:3, 2:4, 0:2} gives T(6) + 2 T(4) + 4 T(2), and re-expansion
    recovers the multiset (T(6) = D6+D4, T(4) = D4+D0, T(2) = D2)."""
    td, raw = tilting.tensor_power(3, 2, 3)
    assert raw == {6: 1, 4: 3, 2: 4, 0: 2}
    assert td.as_dict() == {6: 1, 4: 2, 2: 4}
    assert tilting.expand_decomposition(td) == raw
    assert tilting.count_summands(td) == 7
    assert tilting.count_weyl(raw) == 10
    assert tilting.dim_decomposition(td) == tilting.dim_tilting(3, 3) ** 2 == 36


def test_decompose_alcove_singleton():
    td = tilting.tilting_decompose({2: 1}, 5)
    assert td.as_dict() == {2: 1}


def test_decompose_detects_non_tilting_input():
    # D4 alone cannot occur: T(4) at ell = 3 drags D0 along
    with pytest.raises(ValueError):
        tilting.tilting_decompose({4: 1, 0: -1}, 3)


def test_decompose_random_products_reexpand():
    rng = random.Random(17)
    for _ in range(40):
        ell = rng.randint(2, 9)
        n = rng.randint(0, 6)
        k = rng.randint(0, 20)
        td, raw = tilting.tensor_power(k, n, ell)
        assert tilting.expand_decomposition(td) == raw
        assert all(m > 0 for _, m in td.summands)


def test_tensor_power_trivial_cases():
    td, raw = tilting.tensor_power(5, 0, 3)
    assert td.as_dict() == {0: 1}
    assert raw == {0: 1}
    td1, raw1 = tilting.tensor_power(3, 1, 3)
    assert td1.as_dict() == {3: 1}
    assert raw1 == tilting.delta_factors(3, 3)


def test_tensor_power_summand_counts_match_row_sums():
    expected = [1, 1, 2, 3, 5, 9, 14, 29, 43, 99, 142]
    for n in range(11):
        td, _ = tilting.tensor_power(1, n, 4)
        assert tilting.count_summands(td) == expected[n]


def test_counts_squeeze():
    for ell in (2, 3, 5):
        for n in range(9):
            td, raw = tilting.tensor_power(2, n, ell)
            s = tilting.count_summands(td)
            w = tilting.count_weyl(raw)
            assert s <= w <= 2 * s


def test_dimension_conservation():
    for ell in (2, 3, 4, 7):
        for k in (0, 1, 2, 3, 6):
            dim = tilting.dim_tilting(k, ell)
            for n in range(7):
                td, raw = tilting.tensor_power(k, n, ell)
                assert tilting.dim_decomposition(td) == dim**n
                assert tilting.dim_delta_multiset(raw) == dim**n


def test_weyl_count_preserved_by_decomposition():
    for ell in (2, 3, 5):
        for n in range(8):
            td, raw = tilting.tensor_power(3, n, ell)
            assert tilting.count_weyl(tilting.expand_decomposition(td)) == (
                tilting.count_weyl(raw)
            )


def test_wall_summands():
    td, _ = tilting.tensor_power(1, 7, 4)
    assert tilting.wall_summands(td, 4) == 15  # a[7][3] + a[7][7]
    assert tilting.wall_summands(td, 4) == walks.wall_count(4, 7)
    td_even, _ = tilting.tensor_power(1, 8, 4)
    assert tilting.wall_summands(td_even, 4) == 0
    td33, _ = tilting.tensor_power(3, 2, 3)
    assert tilting.wall_summands(td33, 3) == 4  # the four T(2) summands


@pytest.mark.parametrize("ell", range(2, 10))
def test_cross_oracle_multiplicities(ell):
    """Per-weight multiplicities of powers of T(1) equal the constrained
    walk table."""
    n_max = 120
    table = walks.modular_table(ell, n_max)
    raw = {0: 1}
    step = tilting.delta_factors(1, ell)
    for n in range(1, n_max + 1):
        raw = tilting.cg_square_free_product(raw, step)
        td = tilting.tilting_decompose(raw, ell)
        want = {m: v for m, v in enumerate(table.rows[n]) if v}
        assert td.as_dict() == want


def test_bounds_check_trivial_module():
    report = tilting.bounds_check(1, 3, 10)
    assert report.all_ok
    assert all(row.weyl == row.summands == 1 for row in report.rows)
    assert all(row.rate_ratio is None for row in report.rows)


def test_bounds_check_integer_inequalities():
    for ell in (3, 4, 5):
        for k in (3, 4, 6):  # modules T(2), T(3), T(5)
            report = tilting.bounds_check(k, ell, 20)
            assert report.all_ok


def test_bounds_check_t1_matches_walks():
    report = tilting.bounds_check(2, 5, 40)
    b = walks.sequences(5, 40).b
    assert [row.summands for row in report.rows] == list(b.values)[1:]


def test_bounds_check_argument_validation():
    with pytest.raises(ValueError):
        tilting.bounds_check(0, 3, 5)
    with pytest.raises(ValueError):
        tilting.char_zero_rate_constant(1)


def test_projective_closure():
    assert tilting.projective_closure_check(2, 1, 3)
    assert tilting.projective_closure_check(1, 1, 2)
    for b in range(8):
        assert tilting.projective_closure_check(4, b, 3)
    with pytest.raises(ValueError):
        tilting.projective_closure_check(0, 1, 3)


def test_steinberg_square_at_two():
    # T(1) is the Steinberg module at ell = 2; its square is projective
    td, _ = tilting.tensor_power(1, 2, 2)
    assert td.as_dict() == {2: 1}
    assert all(k >= 1 for k in td.as_dict())
