"""Constants for the shifted Yangian workbench.

This module defines default values and constants used throughout the package.
"""

# Algebra parameters
DEFAULT_N = 2
"""int: Default rank parameter n, so that the folded algebra is so_{2n+1}."""

MINIMUM_N = 2
"""int: Smallest admissible rank parameter."""

DEFAULT_MODE = "full"
"""str: Default algebra mode (one of ``full``, ``gl``, ``so``)."""

DEFAULT_SERIES_ORDER = 24
"""int: Number of D-generator superscripts per family carried by the commutative D-ring."""

MAX_SERIES_ORDER = 512
"""int: Largest D-ring capacity a workbench grows to when an input needs higher superscripts."""

# Rewriting
DEFAULT_STEP_BUDGET = 10**6
"""int: Maximum number of rewrite steps a single normal form computation may take."""

# Verification suites
DEFAULT_DEGREE_BOUND = 12
"""int: Default canonical degree bound for verification suites."""

DEFAULT_SEED = 42
"""int: Default seed for every randomized suite."""

DEFAULT_CONFLUENCE_SAMPLES = 200
"""int: Default number of random triples drawn by the confluence check."""

DEFAULT_CENTRAL_R_MAX = 4
"""int: Default largest central coefficient printed by the ``central`` command."""


DEFAULT_MOLIEN_DEGREE_BOUND = 32
"""int: Highest power of t scanned when matching a Molien series to a product form."""

DEFAULT_KLEINIAN_M = 2
"""int: Default cyclic group order for the Kleinian singularity."""

DEFAULT_JACOBI_DEGREE_BOUND = 8
"""int: Default x,y-degree bound for the Kleinian Jacobi check."""

# Output
DEFAULT_OUTPUT = "text"
"""str: Default report output format (``text`` or ``json``)."""

REPORT_SCHEMA_VERSION = 1
"""int: Version of the JSON report schema."""

RULE_FILE_FORMAT_VERSION = 1
"""int: Version of the rule file format understood by the rule loader."""

MAX_NESTING_DEPTH = 256
"""int: Deepest bracket nesting the expression parser accepts."""

MAX_EXPONENT = 1000
"""int: Largest exponent the expression parser accepts after ``^``."""

# Environment
ENV_PREFIX = "WBENCH_"
"""str: Prefix of the environment variables read by :func:`wbench.utils.kwargs_from_env`."""
