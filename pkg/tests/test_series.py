import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from radu_cert.oracle import count_colored_regular
from radu_cert.series import (
    ExponentVector,
    NonUnitConstantTerm,
    PrecisionExceeded,
    TruncatedSeries,
    coefficient,
    eta_quotient,
    euler_factor,
    invert,
    mul,
    power,
)

F33 = ExponentVector(3, {1: -3, 3: 3})


def S(*cs):
    return TruncatedSeries(cs)


def naive_product(delta, precision):
    """prod_{j>=1} (1 - q^(j*delta)) by repeated multiplication of binomials."""
    out = [0] * precision
    if precision:
        out[0] = 1
    j = delta
    while j < precision:
        for n in range(precision - 1, j - 1, -1):
            out[n] -= out[n - j]
        j += delta
    return out


def naive_inverse_product(delta, precision):
    """prod_{j>=1} 1/(1 - q^(j*delta)), one geometric factor at a time."""
    out = [0] * precision
    if precision:
        out[0] = 1
    j = delta
    while j < precision:
        for n in range(j, precision):
            out[n] += out[n - j]
        j += delta
    return out


def naive_convolve(*seqs):
    n = min(len(s) for s in seqs)
    acc = [1] + [0] * (n - 1)
    for s in seqs:
        acc = [sum(acc[i] * s[k - i] for i in range(k + 1)) for k in range(n)]
    return acc


class TestEulerFactor:
    def test_examples(self):
        assert euler_factor(1, 8).tolist() == [1, -1, -1, 0, 0, 1, 0, 1]
        assert euler_factor(3, 4).tolist() == [1, 0, 0, -1]
        assert euler_factor(1, 1).tolist() == [1]
        assert euler_factor(2, 0).tolist() == []

    @pytest.mark.parametrize("delta", [1, 2, 3, 5, 7])
    def test_matches_naive_product(self, delta):
        assert euler_factor(delta, 300).tolist() == naive_product(delta, 300)

    @given(st.integers(1, 12), st.integers(0, 400))
    def test_pentagonal_support(self, delta, precision):
        coeffs = euler_factor(delta, precision).tolist()
        assert set(coeffs) <= {-1, 0, 1}
        support = {delta * (k * (3 * k - 1) // 2) for k in range(-30, 31)}
        assert {i for i, c in enumerate(coeffs) if c} == {s for s in support if s < precision}

    def test_rejects_bad_delta(self):
        with pytest.raises(ValueError):
            euler_factor(0, 5)


class TestMulInvertPower:
    def test_mul_examples(self):
        assert mul(S(1, 1), S(1, 1)).tolist() == [1, 2]
        assert mul(S(1, -1, -1), S(1, 0, 0)).tolist() == [1, -1, -1]
        f = euler_factor(1, 6)
        assert mul(f, invert(f)).tolist() == [1, 0, 0, 0, 0, 0]

    def test_mul_truncates_to_shorter(self):
        assert mul(S(1, 2, 3, 4), S(1, 1)).precision == 2
        assert (S(1, 2, 3) * S(1, 1, 1, 1, 1)).tolist() == [1, 3, 6]

    def test_invert_examples(self):
        assert invert(S(1, -1, 0, 0)).tolist() == [1, 1, 1, 1]
        assert invert(S(1)).tolist() == [1]
        assert invert(S(-1, 1)).tolist() == [-1, -1]

    def test_invert_euler_gives_partition_numbers(self):
        assert invert(euler_factor(1, 5)).tolist() == [1, 1, 2, 3, 5]
        dp = count_colored_regular(100, 100, 1).counts
        assert invert(euler_factor(1, 100)).tolist() == list(dp)

    def test_invert_non_unit(self):
        with pytest.raises(NonUnitConstantTerm):
            invert(S(2, 1))
        with pytest.raises(NonUnitConstantTerm):
            power(S(0, 1), -1)

    def test_power_examples(self):
        assert power(S(1, 1), 0).tolist() == [1, 0]
        f = euler_factor(1, 4)
        assert power(f, 3).tolist() == naive_convolve(f.tolist(), f.tolist(), f.tolist())
        assert power(f, 3).tolist() == [1, -3, 0, 5]
        assert power(S(1, -1), -1).tolist() == [1, 1]
        assert (S(1, 1, 0) ** 2).tolist() == [1, 2, 1]

    @settings(max_examples=60)
    @given(
        st.sampled_from([1, -1]),
        st.lists(st.integers(-50, 50), min_size=0, max_size=40),
    )
    def test_invert_two_sided(self, a0, tail):
        a = TruncatedSeries([a0] + tail)
        one = TruncatedSeries.one(a.precision).tolist()
        b = invert(a)
        assert mul(a, b).tolist() == one
        assert mul(b, a).tolist() == one

    @settings(max_examples=40)
    @given(
        st.lists(st.integers(-5, 5), min_size=1, max_size=15),
        st.integers(-4, 4),
        st.integers(-4, 4),
    )
    def test_power_adds_exponents(self, tail, e1, e2):
        a = TruncatedSeries([1] + tail)
        assert power(a, e1 + e2) == mul(power(a, e1), power(a, e2))


class TestEtaQuotient:
    def test_examples(self):
        assert eta_quotient(F33, 3).tolist() == [1, 3, 9]
        assert eta_quotient(ExponentVector(1, {1: 1}), 8) == euler_factor(1, 8)
        assert coefficient(eta_quotient(F33, 7), 6) % 5 == 0

    def test_matches_colour_dp(self):
        series = eta_quotient(F33, 200).tolist()
        assert series == list(count_colored_regular(200, 3, 3).counts)
        assert all(c >= 0 for c in series)

    def test_general_quotient_against_naive(self):
        # f2^5 / (f1^2 f4^2), built by hand from naive products
        r = ExponentVector(4, {1: -2, 2: 5, 4: -2})
        n = 60
        f2 = naive_product(2, n)
        g1, g4 = naive_inverse_product(1, n), naive_inverse_product(4, n)
        expected = naive_convolve(*[f2] * 5, g1, g1, g4, g4)
        assert eta_quotient(r, n).tolist() == expected


class TestCoefficient:
    def test_examples(self):
        assert coefficient(euler_factor(1, 8), 5) == 1
        assert coefficient(eta_quotient(F33, 1), 0) == 1
        a = euler_factor(1, 8)
        with pytest.raises(PrecisionExceeded):
            coefficient(a, a.precision)
        with pytest.raises(PrecisionExceeded):
            a[8]

    def test_rejects_non_int(self):
        with pytest.raises(TypeError):
            TruncatedSeries([1, 0.5])


class TestExponentVector:
    def test_keys_are_divisors(self):
        r = ExponentVector.from_list(15, [30, 0, 0, 0])
        assert r.divisors == [1, 3, 5, 15]
        assert r[1] == 30 and r[15] == 0
        assert r.weight_sum() == 30 and r.order_sum() == 30

    def test_rejections(self):
        with pytest.raises(ValueError):
            ExponentVector(3, {1: -3})
        with pytest.raises(ValueError):
            ExponentVector(3, {1: 0, 3: 0})
        with pytest.raises(ValueError):
            ExponentVector.from_list(3, [1, 2, 3])
        with pytest.raises(ValueError):
            ExponentVector(0, {})

    def test_hashable_value_semantics(self):
        assert ExponentVector(3, {3: 3, 1: -3}) == F33
        assert hash(ExponentVector.from_list(3, [-3, 3])) == hash(F33)
