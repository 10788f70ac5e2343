from .newfft import CHILD_VARIANT, VARIANTS, FftPlan, build_fft_plan, fft, fft_flop_measurement, fft_scaled

__all__ = ["CHILD_VARIANT", "VARIANTS", "FftPlan", "build_fft_plan", "fft", "fft_scaled", "fft_flop_measurement"]
