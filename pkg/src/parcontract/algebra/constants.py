"""
Numeric defaults shared by the algebra modules.
"""

# coordinates of random points are drawn uniformly from [-BOUND, BOUND]
BOUND = 10**4

# coordinates of Richardson candidates are drawn from [-RICHARDSON_BOUND, RICHARDSON_BOUND]
RICHARDSON_BOUND = 100

# independent points used before a component is declared zero
CERTIFY_TRIALS = 8

TRIALS = 20
PROBES = 3
SEED = 0

SCHEMA_VERSION = '1.0'

# largest matrix size accepted by the full coadjoint suites
MAX_SUITE_MATRIX_SIZE = 17
