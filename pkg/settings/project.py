"""
Settings introduced by frobsyz
Note: The values given here are intended for development. The base and
env-specific settings files must not overwrite these, except for tests.
"""
import os

# Version string echoed into every result document and mixed into cache keys.
FROBSYZ_ENGINE_VERSION = '1.0'

# Largest number of steps of a minimal free resolution.
FROBSYZ_STEP_CAP = 12

# Default largest Frobenius level e, by characteristic.
FROBSYZ_EMAX_DEFAULTS = {2: 4, 3: 3}
FROBSYZ_EMAX_FALLBACK = 2

# Ideal quotients tried before a saturation gives up.
FROBSYZ_SATURATION_CAP = 50

# Degrees swept by the degreewise homology oracle.
FROBSYZ_ORACLE_DEGREE_BOUND = 30

# Processes used by the finite-syzygy search; 1 runs inline.
FROBSYZ_SEARCH_WORKERS = int(os.getenv('FROBSYZ_SEARCH_WORKERS', '1'))

# Candidate elements tried per parameter.
FROBSYZ_PARAMETER_TRIES = 64

# On-disk cache of resolutions and Groebner bases; unset disables it.
FROBSYZ_CACHE_DIR = os.getenv('FROBSYZ_CACHE_DIR') or None
