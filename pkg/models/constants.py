"""
Constants for the cubix toolkit.
Contains default bounds, exit codes, notation and logging settings.
"""

# Truncation and search bounds
DEFAULT_TRUNCATION = 2
DEFAULT_HTPY_BOUND = 4  # max zig-zag length before answering Unknown
DEFAULT_MAX_CELLS = 200000  # enumeration budget per operation
DEFAULT_NERVE_LEVEL = 1
DEFAULT_STABILIZATION_STEPS = 2  # extra N^G levels tried by the nerve Kan check
MAX_COHERENT_NERVE_DIM = 3

# Environment variable names
ENV_MAX_CELLS = "CUBIX_MAX_CELLS"
ENV_TRUNCATION = "CUBIX_TRUNCATION"
ENV_HTPY_BOUND = "CUBIX_HTPY_BOUND"
ENV_LOG_LEVEL = "CUBIX_LOG_LEVEL"

# CLI exit codes
EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3

# Generator notation
FACE_TAG = "d"
DEGENERACY_TAG = "s"
CONNECTION_TAG = "g"
WORD_SEPARATOR = ";"

# Logging Configuration
DEFAULT_LOG_LEVEL = "WARNING"
CHECKER_LOG_LEVEL = "INFO"
DEBUG_LOG_LEVEL = "DEBUG"
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
