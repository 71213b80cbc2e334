"""
Constants for coxeter-cubes.
"""


# ----- Numeric engine -----

# Tolerance for sign tests and numeric equality of roots and elements.
EPSILON = 1e-8

# Roots are deduplicated on coefficients rounded to this many decimals.
KEY_DECIMALS = 6

# Coxeter matrix entry standing for m(s, t) = infinity.
INFINITY = 0


# ----- Text input -----

IDENTITY_TOKENS = frozenset({"e", "id"})


# ----- Command line -----

DEFAULT_SAMPLES = 200
DEFAULT_WORD_LENGTH = 6
