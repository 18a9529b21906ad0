"""Frozen conventions and engine-wide settings.

The sign choices below were selected by the checks that accompany them:
the transvection convention by the existence of a unimodular intertwiner
with reduced Burau at t = -1, the boundary convention by d o d = 0 at ranks
2 and 3.  Changing any of them changes cache keys.
"""

ENGINE_VERSION = "0.1.0"

# J[i][i+1] for the chain of curves, and the sign in v -> v + s<v, c>c
INTERSECTION_SIGN = 1
TRANSVECTION_SIGN = 1

# (length parity, position parity) used in the Salvetti boundary sign
SIGN_CONVENTION = (1, 1)

# refuse to build chain groups with more integer columns than this
MAX_CHAIN_RANK = 10**5

CACHE_ENV_VAR = "BRAIDHOM_CACHE_DIR"
