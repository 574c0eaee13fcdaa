import pytest
from hypothesis import given, strategies as st

from mexparity.series import (
    MOD2,
    TruncatedSeries,
    alternating_triangular,
    dissect,
    euler_pentagonal,
    euler_product,
    jacobi_cube,
    nonzero_indices,
    reduce_mod2,
    series_mul,
    series_recip,
    theta_psi,
    _gf2_mul,
    _int_kron_mul,
)
from oracles import gf2_schoolbook_mul, partition_counts, schoolbook_mul

int_series = st.lists(st.integers(min_value=-99, max_value=99), min_size=1, max_size=40).map(
    lambda cs: TruncatedSeries(cs)
)
mod2_series = st.lists(st.integers(min_value=0, max_value=1), min_size=1, max_size=80).map(
    lambda cs: TruncatedSeries(cs, MOD2)
)


class TestConstruction:
    def test_order_matches_length(self):
        s = TruncatedSeries([1, 2, 3])
        assert s.order == 3
        assert s.coeffs == (1, 2, 3)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            TruncatedSeries([])

    def test_mod2_coefficients_validated(self):
        with pytest.raises(ValueError):
            TruncatedSeries([1, 2], MOD2)

    def test_coeff_outside_window_is_an_error(self):
        s = TruncatedSeries([1, 2, 3])
        with pytest.raises(IndexError):
            s.coeff(3)
        with pytest.raises(IndexError):
            s.coeff(-1)

    def test_immutable(self):
        s = TruncatedSeries([1])
        with pytest.raises(AttributeError):
            s.order = 5

    def test_bits_view_only_for_mod2(self):
        assert TruncatedSeries([1, 0, 1], MOD2).bits == 0b101
        with pytest.raises(ValueError):
            TruncatedSeries([1, 0, 1]).bits


class TestMul:
    def test_difference_of_squares(self):
        a = TruncatedSeries([1, 1, 0])
        b = TruncatedSeries([1, -1, 0])
        assert series_mul(a, b).coeffs == (1, 0, -1)

    def test_identity(self):
        s = TruncatedSeries([3, 1, 4, 1, 5])
        assert series_mul(s, TruncatedSeries.one(5)) == s

    def test_hand_expansion(self):
        a = TruncatedSeries([1, 1, 1, 0])
        b = TruncatedSeries([1, 1, 0, 0])
        assert series_mul(a, b).coeffs == (1, 2, 2, 1)

    def test_domain_mismatch(self):
        with pytest.raises(ValueError):
            series_mul(TruncatedSeries([1, 1]), TruncatedSeries([1, 1], MOD2))

    def test_order_is_min(self):
        a = TruncatedSeries([1] * 7)
        b = TruncatedSeries([1] * 4)
        assert series_mul(a, b).order == 4

    @given(int_series, int_series)
    def test_matches_schoolbook(self, a, b):
        order = min(a.order, b.order)
        assert list(series_mul(a, b).coeffs) == schoolbook_mul(a.coeffs, b.coeffs, order)

    @given(mod2_series, mod2_series)
    def test_mod2_matches_schoolbook(self, a, b):
        order = min(a.order, b.order)
        assert series_mul(a, b).bits == gf2_schoolbook_mul(a.bits, b.bits, order)

    def test_gf2_dense_path_matches_shift_xor(self):
        # popcounts above the sparse cutoff force the Kronecker packing path
        import random

        rng = random.Random(20240)
        order = 1400
        a = sum(1 << i for i in range(order) if rng.random() < 0.8)
        b = sum(1 << i for i in range(order) if rng.random() < 0.8)
        assert min(a.bit_count(), b.bit_count()) > 512
        assert _gf2_mul(a, b, order) == gf2_schoolbook_mul(a, b, order)

    def test_int_kronecker_matches_schoolbook(self):
        import random

        rng = random.Random(77)
        a = [rng.randint(-(10**30), 10**30) for _ in range(180)]
        b = [rng.randint(-(10**6), 10**6) for _ in range(140)]
        got = _int_kron_mul(tuple(a), tuple(b), 140, 180)
        assert list(got) == schoolbook_mul(a, b, 180)


class TestRecip:
    def test_partition_numbers(self):
        got = series_recip(euler_product(1, 1, 11)).coeffs
        assert got == (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42)
        assert list(got) == partition_counts(11)

    def test_recip_of_one(self):
        assert series_recip(TruncatedSeries.one(6)) == TruncatedSeries.one(6)

    def test_geometric(self):
        assert series_recip(TruncatedSeries([1, -1, 0, 0])).coeffs == (1, 1, 1, 1)

    def test_non_unit_rejected(self):
        with pytest.raises(ValueError):
            series_recip(TruncatedSeries([2, 1]))
        with pytest.raises(ValueError):
            series_recip(TruncatedSeries([0, 1], MOD2))

    def test_negative_unit(self):
        a = TruncatedSeries([-1, 2, 5, -3])
        assert series_mul(a, series_recip(a)) == TruncatedSeries.one(4)

    @given(st.lists(st.integers(-9, 9), min_size=1, max_size=30), st.sampled_from([1, -1]))
    def test_roundtrip(self, tail, unit):
        a = TruncatedSeries([unit] + tail)
        assert series_mul(a, series_recip(a)) == TruncatedSeries.one(a.order)

    @given(st.lists(st.integers(0, 1), min_size=1, max_size=60))
    def test_mod2_roundtrip(self, tail):
        a = TruncatedSeries([1] + tail, MOD2)
        assert series_mul(a, series_recip(a)) == TruncatedSeries.one(a.order, MOD2)


class TestEulerProduct:
    def test_step1_is_pentagonal_sequence(self):
        got = euler_product(1, 1, 13).coeffs
        assert got == (1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1)

    def test_reciprocal_power_counts_partitions(self):
        assert euler_product(1, -1, 6).coeffs == (1, 1, 2, 3, 5, 7)

    def test_step2_first_factor(self):
        assert euler_product(2, 1, 3).coeffs == (1, 0, -1)

    def test_zero_step_rejected(self):
        with pytest.raises(ValueError):
            euler_product(0, 1, 5)

    def test_power_zero_is_identity(self):
        assert euler_product(3, 0, 7) == TruncatedSeries.one(7)

    @pytest.mark.parametrize("power", [2, 3, -2])
    def test_powers_consistent_with_mul(self, power):
        base = euler_product(1, 1, 50)
        expected = base
        for _ in range(abs(power) - 1):
            expected = series_mul(expected, base)
        if power < 0:
            expected = series_recip(expected)
        assert euler_product(1, power, 50) == expected

    def test_mod2_domain_agrees_with_reduction(self):
        for step, power in [(1, 1), (1, 3), (2, 2), (3, 3), (1, -1), (5, -2)]:
            assert euler_product(step, power, 120, MOD2) == reduce_mod2(
                euler_product(step, power, 120)
            )


class TestNamedSeries:
    def test_pentagonal_small(self):
        assert euler_pentagonal(8).coeffs == (1, -1, -1, 0, 0, 1, 0, 1)

    def test_pentagonal_spot_values(self):
        s = euler_pentagonal(16)
        assert s.coeff(12) == -1
        assert s.coeff(3) == 0
        assert s.coeff(15) == -1

    @pytest.mark.parametrize("order", [1, 2, 5, 26, 77, 200])
    def test_pentagonal_equals_product(self, order):
        assert euler_pentagonal(order) == euler_product(1, 1, order)

    def test_jacobi_small(self):
        assert jacobi_cube(7).coeffs == (1, -3, 0, 5, 0, 0, -7)

    def test_jacobi_spot_values(self):
        s = jacobi_cube(11)
        assert s.coeff(10) == 9
        assert s.coeff(2) == 0

    @pytest.mark.parametrize("order", [1, 3, 10, 64, 200])
    def test_jacobi_equals_cubed_product(self, order):
        assert jacobi_cube(order) == euler_product(1, 3, order)

    def test_alternating_triangular_t1(self):
        assert alternating_triangular(1, 8).coeffs == (1, -1, 0, 1, 0, 0, -1, 0)

    def test_alternating_triangular_t3(self):
        s = alternating_triangular(3, 10)
        assert s.coeffs == (1, 0, 0, -1, 0, 0, 0, 0, 0, 1)

    def test_alternating_triangular_constant_term(self):
        assert alternating_triangular(1, 1).coeff(0) == 1

    def test_alternating_triangular_rejects_bad_t(self):
        with pytest.raises(ValueError):
            alternating_triangular(0, 5)

    def test_theta_psi_small(self):
        s = theta_psi(11)
        assert [n for n in range(11) if s.coeff(n)] == [0, 1, 3, 6, 10]
        assert set(s.coeffs) == {0, 1}

    def test_theta_psi_spot_values(self):
        s = theta_psi(16)
        assert s.coeff(15) == 1
        assert s.coeff(2) == 0

    @pytest.mark.parametrize("order", [1, 4, 30, 150])
    def test_theta_psi_product_form(self, order):
        product = series_mul(
            euler_product(2, 2, order), series_recip(euler_product(1, 1, order))
        )
        assert theta_psi(order) == product

    def test_jacobi_and_psi_agree_mod2(self):
        assert reduce_mod2(jacobi_cube(300)) == reduce_mod2(theta_psi(300))


class TestDissect:
    def test_even_odd_split(self):
        s = TruncatedSeries([1, 1, 2, 3, 5, 7, 11])
        assert dissect(s, 2, 0).coeffs == (1, 2, 5, 11)
        assert dissect(s, 2, 1).coeffs == (1, 3, 7)

    def test_identity_dissection(self):
        s = TruncatedSeries([4, -2, 0, 9])
        assert dissect(s, 1, 0) == s

    def test_bad_residue(self):
        with pytest.raises(ValueError):
            dissect(TruncatedSeries([1, 2, 3]), 2, 2)

    def test_empty_window_rejected(self):
        with pytest.raises(ValueError):
            dissect(TruncatedSeries([1]), 3, 2)

    def test_mod2_dissection(self):
        s = TruncatedSeries([1, 0, 1, 1, 0, 1, 1], MOD2)
        assert dissect(s, 2, 0).coeffs == (1, 1, 0, 1)
        assert dissect(s, 3, 1).coeffs == (0, 0)

    @given(int_series, st.integers(1, 5))
    def test_interleaving_reconstructs(self, s, modulus):
        pieces = [dissect(s, modulus, r) for r in range(min(modulus, s.order))]
        rebuilt = [None] * s.order
        for r, piece in enumerate(pieces):
            for i, c in enumerate(piece.coeffs):
                rebuilt[modulus * i + r] = c
        assert tuple(rebuilt) == s.coeffs


class TestReduceMod2:
    def test_examples(self):
        assert reduce_mod2(TruncatedSeries([1, -3, 0, 5])).coeffs == (1, 1, 0, 1)
        assert reduce_mod2(TruncatedSeries([1, 1, 2, 3, 5, 7])).coeffs == (1, 1, 0, 1, 1, 1)
        assert reduce_mod2(TruncatedSeries([0, 0, 0])) == TruncatedSeries.zero(3, MOD2)

    def test_partition_parity_matches_oracle(self):
        parity = reduce_mod2(series_recip(euler_product(1, 1, 200)))
        assert list(parity.coeffs) == [p & 1 for p in partition_counts(200)]

    def test_requires_integer_domain(self):
        with pytest.raises(ValueError):
            reduce_mod2(TruncatedSeries([1, 0], MOD2))

    @given(int_series, int_series)
    def test_commutes_with_mul(self, a, b):
        assert reduce_mod2(series_mul(a, b)) == series_mul(reduce_mod2(a), reduce_mod2(b))


class TestFreshmansDream:
    @given(mod2_series)
    def test_square_is_dilation(self, s):
        sq = series_mul(s, s)
        for n in range(s.order):
            if n % 2 == 0:
                assert sq.coeff(n) == s.coeff(n // 2)
            else:
                assert sq.coeff(n) == 0

    def test_euler_square_is_dilated_euler(self):
        assert reduce_mod2(euler_product(1, 2, 240)) == reduce_mod2(euler_product(2, 1, 240))


def test_nonzero_indices_both_domains():
    s = TruncatedSeries([0, 5, 0, -2, 0])
    assert list(nonzero_indices(s)) == [1, 3]
    m = TruncatedSeries([0, 1, 0, 1, 1], MOD2)
    assert list(nonzero_indices(m)) == [1, 3, 4]
