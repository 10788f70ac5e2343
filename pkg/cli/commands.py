"""
Sub-commands of the trigflop entry script.

Each cmd_* takes the parsed argparse namespace and returns the exit status:
0 success, 1 a count or verification check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

import numpy as np

import config.config as config
from cli.count_table import format_reports, save_table, table_one_to_csv
from cli.vector_file import read_vector, write_vector
from counts.audit import AUDIT_KINDS, audit_range, fft_asymptotic_check, table_one
from counts.formulas import FFT_LEADING_COEFFICIENT
from event_logging.event_logger import LogType, event_print, log_json_entry
from lapped.mdct import imdct, mdct
from newfft.newfft import VARIANTS, build_fft_plan, fft_scaled
from oracles.naive import TransformKind, naive_dct3, naive_dct4, naive_dft, naive_dst3, naive_dst4, naive_imdct, naive_mdct, output_scaling
from trig.dct3 import build_dct3_plan, dct3_scaled, dst3_scaled
from trig.dct4 import dct4, dct4_scaled_output, dst4
from utils.errors import UsageError, require_power_of_two
from utils.rng import random_complex_vector, random_real_batch, random_real_vector

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


@dataclass(frozen=True)
class TransformSpec:
    kind: TransformKind
    input_factor: int = 1
    complex_input: bool = False
    takes_variant: bool = False
    takes_scaled_output: bool = False


TRANSFORMS: Dict[str, TransformSpec] = {
    "dct3": TransformSpec(TransformKind.DCT3, takes_variant=True),
    "dst3": TransformSpec(TransformKind.DST3, takes_variant=True),
    "dct4": TransformSpec(TransformKind.DCT4, takes_scaled_output=True),
    "dst4": TransformSpec(TransformKind.DST4),
    "mdct": TransformSpec(TransformKind.MDCT, input_factor=2),
    "imdct": TransformSpec(TransformKind.IMDCT),
    "fft": TransformSpec(TransformKind.DFT, complex_input=True, takes_variant=True),
}

_NAIVE: Dict[str, Callable[[np.ndarray], np.ndarray]] = {
    "dct3": naive_dct3,
    "dst3": naive_dst3,
    "dct4": naive_dct4,
    "dst4": naive_dst4,
    "mdct": naive_mdct,
    "imdct": naive_imdct,
    "fft": naive_dft,
}


def _check_options(name: str, variant: int, scaled_output: bool) -> TransformSpec:
    spec = TRANSFORMS[name]
    if variant and not spec.takes_variant:
        raise UsageError(f"--scale applies to dct3, dst3 and fft, not {name}")
    if scaled_output and not spec.takes_scaled_output:
        raise UsageError(f"--scaled-output applies to dct4 only, not {name}")
    return spec


def run_transform(name: str, x: np.ndarray, n: int, variant: int = 0, scaled_output: bool = False, ctx=None) -> np.ndarray:
    """Fast transform of size n (x has 2n samples for mdct)."""
    if name in ("dct3", "dst3"):
        plan = build_dct3_plan(n, variant)
        return dct3_scaled(plan, x, ctx) if name == "dct3" else dst3_scaled(plan, x, ctx)
    if name == "dct4":
        return dct4_scaled_output(x, ctx) if scaled_output else dct4(x, ctx)
    if name == "dst4":
        return dst4(x, ctx)
    if name == "mdct":
        return mdct(x, ctx)
    if name == "imdct":
        return imdct(x, ctx)
    return fft_scaled(build_fft_plan(n, variant), x, ctx)


def reference_transform(name: str, x: np.ndarray, n: int, variant: int = 0, scaled_output: bool = False) -> np.ndarray:
    """Naive transform with the same output scaling as run_transform, batched along the last axis."""
    reference = _NAIVE[name](x)
    spec = TRANSFORMS[name]
    if scaled_output:
        reference = reference / output_scaling(TransformKind.DCT4, n, 8)
    elif variant:
        reference = reference / output_scaling(spec.kind, n, variant)
    return reference


def _random_input(spec: TransformSpec, n: int, seed: Optional[int]) -> np.ndarray:
    length = spec.input_factor * n
    return random_complex_vector(length, seed) if spec.complex_input else random_real_vector(length, seed)


def cmd_transform(args: argparse.Namespace) -> int:
    require_power_of_two(args.n)
    spec = _check_options(args.kind, args.scale, args.scaled_output)
    length = spec.input_factor * args.n
    if args.random:
        x = _random_input(spec, args.n, args.seed)
    elif args.input:
        x = read_vector(args.input, length, spec.complex_input)
    else:
        raise UsageError("transform needs --input PATH or --random")

    y = run_transform(args.kind, x, args.n, args.scale, args.scaled_output)
    write_vector(y, args.output)
    log_json_entry(
        LogType.TRANSFORM,
        {"kind": args.kind, "n": args.n, "variant": args.scale, "scaled_output": args.scaled_output, "source": "random" if args.random else args.input},
        config.OUTPUT_FOLDER,
    )
    return EXIT_OK


def cmd_count(args: argparse.Namespace) -> int:
    kinds = args.kind or ["dct4"]
    reports = audit_range(kinds, args.min, args.max, args.seed)
    text = format_reports(reports, args.format)
    print(text, end="")
    saved = save_table(text, f"counts.{args.format}")
    if saved:
        event_print(f"Saved count table to {saved}")

    if args.check:
        failures = [report for report in reports if not report.match]
        for report in failures:
            event_print(f"count mismatch: {report.kind} N={report.n} measured {report.flops}, predicted {report.predicted}", LogType.ERROR)
        return EXIT_CHECK_FAILED if failures else EXIT_OK
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    sizes = [n for n in (2**m for m in range(13)) if args.min <= n <= args.max]
    print(table_one_to_csv(table_one(sizes)), end="")
    return EXIT_OK


def cmd_asymptotic(args: argparse.Namespace) -> int:
    if args.n is not None:
        require_power_of_two(args.n)
        if args.n < 2:
            raise UsageError("--n must be at least 2")
    check = fft_asymptotic_check(args.n, args.slack)
    print(f"kind=fft n={check.n} leading_coefficient={float(check.estimate):.6f} target={float(FFT_LEADING_COEFFICIENT):.6f} gap={check.relative_gap:.3e} slack={check.slack:.1e} {'PASS' if check.passed else 'FAIL'}")
    log_json_entry(
        LogType.COUNT_AUDIT,
        {"kind": "fft-asymptotic", "n": check.n, "estimate": float(check.estimate), "gap": check.relative_gap, "slack": check.slack, "passed": check.passed},
        config.OUTPUT_FOLDER,
    )
    return EXIT_OK if check.passed else EXIT_CHECK_FAILED


def default_tolerance(kind: str) -> float:
    return config.FFT_TOLERANCE if kind == "fft" else config.DEFAULT_TOLERANCE


def verify_errors(name: str, n: int, trials: int, seed: Optional[int], variant: int = 0, scaled_output: bool = False) -> Tuple[float, float]:
    """Largest absolute and relative L2 error of the fast transform against the naive one."""
    spec = TRANSFORMS[name]
    length = spec.input_factor * n
    if spec.complex_input:
        rng_batch = random_real_batch(2 * trials, length, seed)
        batch = rng_batch[:trials] + 1j * rng_batch[trials:]
    else:
        batch = random_real_batch(trials, length, seed)

    reference = reference_transform(name, batch, n, variant, scaled_output)
    max_abs, max_rel = 0.0, 0.0
    for x, expected in zip(batch, reference):
        got = run_transform(name, x, n, variant, scaled_output)
        err = float(np.linalg.norm(got - expected))
        scale = float(np.linalg.norm(expected))
        max_abs = max(max_abs, float(np.max(np.abs(got - expected))))
        max_rel = max(max_rel, err / scale if scale else err)
    return max_abs, max_rel


def cmd_verify(args: argparse.Namespace) -> int:
    require_power_of_two(args.n)
    _check_options(args.kind, args.scale, args.scaled_output)
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    tol = default_tolerance(args.kind) if args.tol is None else args.tol
    if not tol > 0:
        raise UsageError("--tol must be positive")

    max_abs, max_rel = verify_errors(args.kind, args.n, args.trials, args.seed, args.scale, args.scaled_output)
    passed = max_rel <= tol
    print(f"kind={args.kind} n={args.n} trials={args.trials} max_abs_error={max_abs:.3e} max_rel_error={max_rel:.3e} tol={tol:.1e} {'PASS' if passed else 'FAIL'}")
    log_json_entry(
        LogType.VERIFY,
        {"kind": args.kind, "n": args.n, "trials": args.trials, "max_abs_error": max_abs, "max_rel_error": max_rel, "tolerance": tol, "passed": passed},
        config.OUTPUT_FOLDER,
    )
    return EXIT_OK if passed else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trigflop", description="Reduced-flop DCT-IV, MDCT and split-radix FFT with exact flop audits")
    parser.add_argument("--config_override", type=str, help="Path to JSON config override file")
    sub = parser.add_subparsers(dest="command", required=True)

    transform = sub.add_parser("transform", help="Run a fast transform on a vector file or random input")
    transform.add_argument("--kind", required=True, choices=sorted(TRANSFORMS))
    transform.add_argument("--n", type=int, required=True, help="Transform size (power of two)")
    source = transform.add_mutually_exclusive_group()
    source.add_argument("--input", type=str, help="Vector file, '-' for stdin (2N values for mdct, 're im' lines for fft)")
    source.add_argument("--random", action="store_true", help="Use a seeded pseudo-random input")
    transform.add_argument("--seed", type=int, default=None, help="PCG64 seed (default from config)")
    transform.add_argument("--output", type=str, default="-", help="Output path, '-' for stdout; .json writes a JSON array")
    transform.add_argument("--scale", type=int, default=0, choices=VARIANTS, help="Output scaling variant for dct3/dst3/fft")
    transform.add_argument("--scaled-output", dest="scaled_output", action="store_true", help="dct4 only: divide outputs by s(8N,2k+1)")
    transform.set_defaults(func=cmd_transform)

    count = sub.add_parser("count", help="Audited flop counts against the closed forms")
    count.add_argument("--kind", action="append", choices=sorted(AUDIT_KINDS), help="Repeatable; default dct4")
    count.add_argument("--min", type=int, default=config.AUDIT_MIN_N)
    count.add_argument("--max", type=int, default=config.AUDIT_MAX_N)
    count.add_argument("--format", choices=("csv", "json"), default="csv")
    count.add_argument("--check", action="store_true", help="Exit 1 unless every row matches its prediction")
    count.add_argument("--seed", type=int, default=None)
    count.set_defaults(func=cmd_count)

    table = sub.add_parser("table", help="Measured DCT-IV flops, classic vs rescaled")
    table.add_argument("--min", type=int, default=8)
    table.add_argument("--max", type=int, default=config.AUDIT_MAX_N)
    table.set_defaults(func=cmd_table)

    verify = sub.add_parser("verify", help="Compare a fast transform with its naive definition")
    verify.add_argument("--kind", required=True, choices=sorted(TRANSFORMS))
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--trials", type=int, default=config.DEFAULT_TRIALS)
    verify.add_argument("--tol", type=float, default=None, help="Max relative L2 error (default: FFT_TOLERANCE for fft, DEFAULT_TOLERANCE otherwise)")
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--scale", type=int, default=0, choices=VARIANTS)
    verify.add_argument("--scaled-output", dest="scaled_output", action="store_true")
    verify.set_defaults(func=cmd_verify)

    asymptotic = sub.add_parser("asymptotic", help="FFT leading flop coefficient against 34/9")
    asymptotic.add_argument("--n", type=int, default=None, help="FFT size N (default FFT_ASYMPTOTIC_N)")
    asymptotic.add_argument("--slack", type=float, default=None, help="Allowed relative gap (default FFT_ASYMPTOTIC_SLACK)")
    asymptotic.set_defaults(func=cmd_asymptotic)

    return parser
