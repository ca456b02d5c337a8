"""Defaults."""

# Relative tolerance for consistency and reciprocity in float mode; absolute
# slack (scaled above magnitude 1) for inequality checks.
TOLERANCE = 1e-12

# Sampling options.
SEED = 1995
SAMPLES = 100_000
LO = 1e-3
HI = 1e3
SAMPLING = "uniform-log"
PROBES = True
# Draws are generated in fixed-size chunks so the stream only depends on the
# seed.
CHUNK_SIZE = 65_536
# Rational draws are snapped to fractions with at most this denominator.
DENOMINATOR = 10**6
MAX_WITNESSES = 16
# A triad counts as inconsistent for the reverse direction of the zero
# condition in float mode only if |ac - b| >= SEPARATION * b.
SEPARATION = 1e-6
ROUND_TRIP_TOLERANCE = 1e-15

# Boundedness probing on (1, 10^k, 1).
GROWTH_EXPONENTS = range(0, 13)
UNBOUNDED_THRESHOLD = 10**6

INDICATOR = "Kii"
KII_FORM = "one-minus-min"

# Reporting.
OUT = "text"
TEXT_ROW_LIMIT = 10_000
