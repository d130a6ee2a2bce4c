"""Utility functions for the workbench.

This module provides environment-based configuration, exit codes and access
to the data files shipped with the package.
"""

from .exit_codes import ExitCode
from .utils import (
    get_data_file,
    get_default_degree_table,
    get_default_rule_file,
    kwargs_from_env,
    load_degree_table,
)

__all__ = [
    "ExitCode",
    "get_data_file",
    "get_default_degree_table",
    "get_default_rule_file",
    "kwargs_from_env",
    "load_degree_table",
]
