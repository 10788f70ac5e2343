import os

# === RANDOM INPUTS ===
DEFAULT_SEED = 20070101  # PCG64 seed used when --seed is not given
SECOND_SEED = 424242  # re-run seed for data-independence checks

# === VERIFICATION ===
DEFAULT_TRIALS = 20
DEFAULT_TOLERANCE = 1e-10  # max relative L2 error, fast transform vs naive oracle
FFT_TOLERANCE = 1e-11

# === FLOP AUDIT RANGE ===
AUDIT_MIN_N = 1
AUDIT_MAX_N = 4096
FFT_ASYMPTOTIC_N = 65536  # size for the 34/9 leading coefficient check
FFT_ASYMPTOTIC_SLACK = 0.02

# === OUTPUT FORMAT ===
FLOAT_DIGITS = 17  # round-trips IEEE double precision
CSV_SEPARATOR = ","
CSV_LINE_END = "\n"
JSON_INDENT = 2

# === OUTPUT FOLDER ===
# The only environment override. Empty disables event logs and saved tables.
OUTPUT_FOLDER = os.getenv("TRIGFLOP_OUTPUT_DIR", "")
