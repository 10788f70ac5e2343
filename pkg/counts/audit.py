"""
Audit harness: run fast transforms on the counting scalar and compare the
tallies with the closed-form predictions.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence

import config.config as config
from arithmetic.kernel import ExecutionContext, OpCounter
from counts.formulas import (
    FFT_LEADING_COEFFICIENT,
    dct3_unscaled_count_formula,
    dct4_count_formula,
    mdct_count_formula,
    previous_dct4_count_formula,
    scaled_dct3_count_formula,
    split_radix_count_formula,
)
from event_logging.event_logger import LogType, log_json_entry
from lapped.mdct import imdct, mdct
from newfft.newfft import build_fft_plan, fft_flop_measurement, fft_scaled
from trig.dct3 import build_dct3_classic_plan, build_dct3_plan, dct3_scaled, dst3_scaled
from trig.dct4 import dct4, dct4_classic, dct4_scaled_output, dst4
from utils.errors import UnknownKindError, require_power_of_two
from utils.rng import random_complex_vector, random_real_vector

EXACT = "=="
AT_MOST = "<="


@dataclass(frozen=True)
class AuditKind:
    name: str
    run: Callable[[Sequence[float], ExecutionContext], object]
    predict: Callable[[int], int]
    relation: str = EXACT
    input_factor: int = 1  # input length is input_factor * N
    complex_input: bool = False


@dataclass(frozen=True)
class CountReport:
    kind: str
    n: int
    adds: int
    mults: int
    predicted: int
    relation: str = EXACT

    @property
    def flops(self) -> int:
        return self.adds + self.mults

    @property
    def match(self) -> bool:
        if self.relation == AT_MOST:
            return self.flops <= self.predicted
        return self.flops == self.predicted

    def as_row(self) -> Dict[str, object]:
        row = asdict(self)
        del row["relation"]
        row["flops"] = self.flops
        row["match"] = self.match
        return row


def _dct3_kind(name: str, variant: Optional[int], sine: bool) -> AuditKind:
    runner = dst3_scaled if sine else dct3_scaled

    def run(x: Sequence[float], ctx: ExecutionContext) -> object:
        plan = build_dct3_classic_plan(len(x)) if variant is None else build_dct3_plan(len(x), variant)
        return runner(plan, x, ctx)

    def predict(n: int) -> int:
        return dct3_unscaled_count_formula(n) if variant is None else scaled_dct3_count_formula(n, variant)

    return AuditKind(name, run, predict)


def _lapped_prediction(formula: Callable[[int], int]) -> Callable[[int], int]:
    # The N = 1 transforms are single sign flips
    return lambda n: 0 if n == 1 else formula(n)


def _fft_run(x: Sequence[complex], ctx: ExecutionContext) -> object:
    return fft_scaled(build_fft_plan(len(x), 0), x, ctx)


def _build_registry() -> Dict[str, AuditKind]:
    kinds = [
        _dct3_kind("dct3", None, sine=False),
        _dct3_kind("dst3", None, sine=True),
    ]
    for variant in (0, 1, 2, 4):
        kinds.append(_dct3_kind(f"dct3-l{variant}", variant, sine=False))
        kinds.append(_dct3_kind(f"dst3-l{variant}", variant, sine=True))
    kinds += [
        AuditKind("dct4", lambda x, ctx: dct4(x, ctx), dct4_count_formula),
        AuditKind("dct4-scaled", lambda x, ctx: dct4_scaled_output(x, ctx), lambda n: dct4_count_formula(n) - n),
        AuditKind("dct4-classic", lambda x, ctx: dct4_classic(x, ctx), previous_dct4_count_formula),
        AuditKind("dst4", lambda x, ctx: dst4(x, ctx), dct4_count_formula),
        AuditKind("mdct", lambda x, ctx: mdct(x, ctx), _lapped_prediction(mdct_count_formula), input_factor=2),
        AuditKind("imdct", lambda x, ctx: imdct(x, ctx), _lapped_prediction(dct4_count_formula)),
        AuditKind("fft", _fft_run, split_radix_count_formula, relation=AT_MOST, complex_input=True),
    ]
    return {kind.name: kind for kind in kinds}


AUDIT_KINDS: Dict[str, AuditKind] = _build_registry()


def get_audit_kind(name: str) -> AuditKind:
    try:
        return AUDIT_KINDS[name]
    except KeyError:
        raise UnknownKindError(f"unknown transform kind {name!r}; expected one of {', '.join(sorted(AUDIT_KINDS))}") from None


def measure(kind: str, n: int, seed: Optional[int] = None) -> OpCounter:
    """Audited run of one transform on pseudo-random input."""
    spec = get_audit_kind(kind)
    require_power_of_two(n)
    length = spec.input_factor * n
    x = random_complex_vector(length, seed) if spec.complex_input else random_real_vector(length, seed).tolist()
    ctx = ExecutionContext.audited()
    spec.run(x, ctx)
    return ctx.snapshot()


def audit(kind: str, n: int, seed: Optional[int] = None) -> CountReport:
    spec = get_audit_kind(kind)
    counter = measure(kind, n, seed)
    return CountReport(kind, n, counter.adds, counter.mults, spec.predict(n), spec.relation)


def is_data_independent(kind: str, n: int, seeds: Sequence[int] = ()) -> bool:
    """Same tally for every seed."""
    seeds = tuple(seeds) or (config.DEFAULT_SEED, config.SECOND_SEED)
    first = measure(kind, n, seeds[0])
    return all(measure(kind, n, seed) == first for seed in seeds[1:])


def doubling_sizes(n_min: int, n_max: int) -> List[int]:
    require_power_of_two(n_min, "min")
    require_power_of_two(n_max, "max")
    sizes = []
    n = n_min
    while n <= n_max:
        sizes.append(n)
        n *= 2
    return sizes


def audit_range(kinds: Iterable[str], n_min: int, n_max: int, seed: Optional[int] = None, log_dir: Optional[str] = None) -> List[CountReport]:
    """One report per (kind, N), sorted by kind then N."""
    names = sorted(set(kinds))
    for name in names:
        get_audit_kind(name)
    reports = [audit(name, n, seed) for name in names for n in doubling_sizes(n_min, n_max)]
    target = config.OUTPUT_FOLDER if log_dir is None else log_dir
    for report in reports:
        log_json_entry(LogType.COUNT_AUDIT, report.as_row(), target)
    return reports


@dataclass(frozen=True)
class TableOneRow:
    n: int
    previous: int
    new: int


def table_one(sizes: Iterable[int] = (8, 16, 32, 64, 128, 256, 512, 1024, 2048, 4096)) -> List[TableOneRow]:
    """Measured DCT-IV flops of the classic and the rescaled algorithm."""
    return [TableOneRow(n, measure("dct4-classic", n).flops(), measure("dct4", n).flops()) for n in sizes]


def fft_leading_coefficient(n: int) -> Fraction:
    """(F(N) - 2F(N/2)) / N, which tends to the N log2 N coefficient of F."""
    require_power_of_two(n)
    return Fraction(fft_flop_measurement(n).flops() - 2 * fft_flop_measurement(n // 2).flops(), n)


@dataclass(frozen=True)
class AsymptoticCheck:
    n: int
    estimate: Fraction
    slack: float

    @property
    def relative_gap(self) -> float:
        return abs(float(self.estimate / FFT_LEADING_COEFFICIENT) - 1.0)

    @property
    def passed(self) -> bool:
        return self.relative_gap <= self.slack


def fft_asymptotic_check(n: Optional[int] = None, slack: Optional[float] = None) -> AsymptoticCheck:
    """Leading-coefficient estimate at n against 34/9, within the configured slack."""
    n = config.FFT_ASYMPTOTIC_N if n is None else n
    slack = config.FFT_ASYMPTOTIC_SLACK if slack is None else slack
    return AsymptoticCheck(n, fft_leading_coefficient(n), slack)
