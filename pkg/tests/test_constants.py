import cmath
import math

import pytest

from constants.plan_cache import cached_plan_keys, clear_plan_cache, get_plan
from constants.scale import UnitAxis, fused_dct4_constant, omega, scale_factor, scale_table, twiddle_t, variant_scale
from utils.errors import IndexRangeError, NotPowerOfTwoError

SIZES = [2**m for m in range(15)]


def unrolled_scale(n, k):
    """s(n,k) as a product of cos/sin factors, without index folding."""
    value = 1.0
    while n > 4:
        k4 = k % (n // 4)
        angle = 2.0 * math.pi * k4 / n
        value *= math.cos(angle) if 8 * k4 <= n else math.sin(angle)
        n //= 4
        k = k4
    return value


class TestScaleFactor:
    def test_small_sizes_are_one(self):
        assert scale_factor(4, 1) == 1.0
        assert all(scale_factor(n, k) == 1.0 for n in (1, 2, 4) for k in range(n))

    def test_eight(self):
        assert scale_factor(8, 1) == pytest.approx(0.7071067811865476, abs=1e-16)

    def test_sixteen_uses_sine_branch(self):
        assert scale_factor(16, 3) == pytest.approx(0.9238795325112867, abs=1e-16)
        assert scale_factor(16, 3) == scale_factor(16, 1)

    @pytest.mark.parametrize("n", SIZES)
    def test_exact_properties(self, n):
        quarter = max(n // 4, 1)
        assert scale_factor(n, 0) == 1.0
        for k in range(n):
            assert scale_factor(n, k) > 0
        if n >= 4:
            for k in range(n - quarter):
                assert scale_factor(n, k + quarter) == scale_factor(n, k)
            for k in range(quarter + 1):
                assert scale_factor(n, quarter - k) == scale_factor(n, k)

    @pytest.mark.parametrize("n", [2**m for m in range(3, 15, 2)] + [2**m for m in range(4, 15, 2)])
    def test_matches_unrolled_product(self, n):
        step = max(1, n // 1024)
        for k in range(0, n, step):
            assert scale_factor(n, k) == pytest.approx(unrolled_scale(n, k), rel=1e-14)

    def test_rejects_bad_sizes_and_indices(self):
        with pytest.raises(NotPowerOfTwoError):
            scale_factor(12, 1)
        with pytest.raises(IndexRangeError):
            scale_factor(16, 16)
        with pytest.raises(IndexRangeError):
            scale_factor(16, -1)

    def test_variant_zero_is_unscaled(self):
        assert variant_scale(0, 64, 5) == 1.0
        assert variant_scale(2, 32, 5) == scale_factor(64, 5)

    def test_table_is_periodic(self):
        table = scale_table(64)
        assert len(table.values) == 16
        assert table[21] == scale_factor(64, 21)


class TestTwiddleT:
    def test_zero_index_is_one(self):
        t = twiddle_t(32, 0)
        assert (t.re, t.im, t.unit_axis) == (1.0, 0.0, UnitAxis.REAL)
        assert t.is_one

    def test_unit_real_part(self):
        t = twiddle_t(16, 1)
        assert t.re == 1.0
        assert t.im == pytest.approx(-math.tan(math.pi / 8), abs=1e-16)
        assert t.unit_axis is UnitAxis.REAL

    def test_unit_imaginary_part(self):
        t = twiddle_t(16, 3)
        assert t.im == -1.0
        assert t.re == pytest.approx(1.0 / math.tan(3 * math.pi / 8), abs=1e-15)
        assert t.unit_axis is UnitAxis.IMAGINARY

    def test_diagonal(self):
        t = twiddle_t(64, 8)
        assert (t.re, t.im, t.diagonal) == (1.0, -1.0, True)

    @pytest.mark.parametrize("n", [2**m for m in range(2, 15)])
    def test_unit_component_is_exact(self, n):
        for k in range(n // 4):
            t = twiddle_t(n, k)
            assert max(abs(t.re), abs(t.im)) == 1.0
            if t.unit_axis is UnitAxis.REAL:
                assert t.re == 1.0
            else:
                assert t.im == -1.0

    @pytest.mark.parametrize("n", [8, 32, 256])
    def test_matches_definition(self, n):
        for k in range(n // 4):
            expected = cmath.exp(-2j * math.pi * k / n) * scale_factor(n // 4, k % max(n // 4, 1)) / scale_factor(n, k)
            assert abs(twiddle_t(n, k).as_complex() - expected) <= 1e-14 * abs(expected)

    def test_conjugate(self):
        t = twiddle_t(32, 3)
        assert t.conjugate().as_complex() == t.as_complex().conjugate()

    def test_range_errors(self):
        with pytest.raises(IndexRangeError):
            twiddle_t(2, 0)
        with pytest.raises(IndexRangeError):
            twiddle_t(16, 4)


class TestFusedConstant:
    def test_size_one(self):
        f = fused_dct4_constant(1, 0)
        assert f.re == pytest.approx(math.cos(math.pi / 4), abs=1e-16)
        assert f.im == pytest.approx(-math.sin(math.pi / 4), abs=1e-16)

    @pytest.mark.parametrize("n", [2, 8, 64])
    def test_magnitude_is_scale_factor(self, n):
        for k in range(n):
            assert abs(fused_dct4_constant(n, k).as_complex()) == pytest.approx(scale_factor(2 * n, 2 * k + 1), rel=1e-15)

    def test_against_direct_trig(self):
        n, k = 16, 5
        angle = 2 * math.pi * (2 * k + 1) / (8 * n)
        expected = complex(math.cos(angle), -math.sin(angle)) * scale_factor(2 * n, 2 * k + 1)
        assert abs(fused_dct4_constant(n, k).as_complex() - expected) < 1e-15

    def test_omega_reduces_index(self):
        assert omega(8, 9) == omega(8, 1)


class TestPlanCache:
    def test_builds_once(self):
        clear_plan_cache()
        calls = []

        def builder():
            calls.append(1)
            return object()

        first = get_plan("cache-check", 8, 1, builder)
        second = get_plan("cache-check", 8, 1, builder)
        assert first is second
        assert len(calls) == 1
        assert ("cache-check", 8, 1) in cached_plan_keys()
        clear_plan_cache()
