import numpy as np
import pytest

import config.config as config
from arithmetic.kernel import ExecutionContext
from counts.audit import audit, measure
from counts.formulas import dct4_count_formula, previous_mdct_count_formula
from lapped.mdct import OverlapState, imdct, lapped_round_trip, mdct, tdac_overlap_add
from oracles.naive import naive_imdct, naive_mdct
from utils.errors import NotPowerOfTwoError, SizeMismatchError
from utils.rng import random_real_vector


class TestMdct:
    @pytest.mark.parametrize("n", [1, 2, 4, 8, 64, 512])
    def test_matches_oracle(self, n, relative_error):
        x = random_real_vector(2 * n, seed=n)
        assert relative_error(mdct(x), naive_mdct(x)) <= config.DEFAULT_TOLERANCE

    def test_size_one(self):
        ctx = ExecutionContext.audited()
        assert mdct([3.0, 2.0], ctx).tolist() == [-2.0]
        assert ctx.snapshot().flops() == 0

    def test_count_at_eight(self):
        assert measure("mdct", 8).flops() == 62

    @pytest.mark.parametrize("n", [2**m for m in range(13)])
    def test_count_matches_closed_form(self, n):
        assert audit("mdct", n).match

    def test_beats_previous_count(self):
        assert measure("mdct", 256).flops() == 4420 < previous_mdct_count_formula(256)

    def test_errors(self):
        with pytest.raises(SizeMismatchError):
            mdct(np.zeros(7))
        with pytest.raises(NotPowerOfTwoError):
            mdct(np.zeros(12))


class TestImdct:
    @pytest.mark.parametrize("n", [1, 2, 4, 16, 256])
    def test_matches_oracle(self, n, relative_error):
        c = random_real_vector(n, seed=n + 100)
        assert relative_error(imdct(c), naive_imdct(c)) <= config.DEFAULT_TOLERANCE

    def test_size_one(self):
        assert imdct([1.5]).tolist() == [0.0, -1.5]

    @pytest.mark.parametrize("n", [2**m for m in range(1, 13)])
    def test_costs_one_dct4(self, n):
        assert measure("imdct", n).flops() == dct4_count_formula(n)

    @pytest.mark.parametrize("n", [2**m for m in range(13)])
    def test_count_matches_closed_form(self, n):
        assert audit("imdct", n).match

    def test_output_length(self):
        assert imdct(np.zeros(8)).shape == (16,)


class TestTimeDomainAliasingCancellation:
    @pytest.mark.parametrize("n", [1, 2, 4, 16, 128])
    def test_round_trip_gives_n_times_interior(self, n):
        signal = random_real_vector(8 * n, seed=n)
        got = lapped_round_trip(signal, n)
        assert got.shape == (6 * n,)
        np.testing.assert_allclose(got, n * signal[n:-n], atol=config.DEFAULT_TOLERANCE * n)

    def test_audited_round_trip(self):
        signal = random_real_vector(64, seed=3)
        ctx = ExecutionContext.audited()
        lapped_round_trip(signal, 8, ctx)
        assert ctx.snapshot().flops() == 7 * (62 + 54)

    def test_overlap_state_streams(self):
        state = OverlapState(2)
        np.testing.assert_array_equal(state.push([1.0, 2.0, 3.0, 4.0]), [1.0, 2.0])
        np.testing.assert_array_equal(state.push([10.0, 20.0, 30.0, 40.0]), [13.0, 24.0])
        assert state.blocks_seen == 2
        np.testing.assert_array_equal(state.carry, [30.0, 40.0])

    def test_overlap_state_rejects_wrong_length(self):
        with pytest.raises(SizeMismatchError):
            OverlapState(4).push(np.zeros(6))

    def test_overlap_add_drops_unpaired_halves(self):
        assert tdac_overlap_add([np.ones(4)]).shape == (0,)
        np.testing.assert_array_equal(tdac_overlap_add([np.ones(4), np.ones(4), np.ones(4)]), np.full(4, 2.0))

    def test_round_trip_rejects_short_signal(self):
        with pytest.raises(SizeMismatchError):
            lapped_round_trip(np.zeros(8), 8)
        with pytest.raises(SizeMismatchError):
            lapped_round_trip(np.zeros(20), 8)
