"""Shifted Yangian workbench - exact verification of central elements,
PBW normal forms and the invariant theory behind subregular W-algebras.

The package reduces elements of the shifted Yangian Y_2(sigma) and its
truncations to PBW normal form, checks the central series against an
independent power-series expansion, and cross-checks fundamental degrees,
Dynkin folding and Kleinian Poisson brackets.

Example:
    >>> import wbench
    >>> bench = wbench.Workbench.from_env()
    >>> print(bench.nf("D2^1 * D1^1").to_text())
"""

__version__ = "0.1.0"  # This version will be read by PDM
from .client import Workbench
from .config import WorkbenchConfig

__all__ = ["Workbench", "WorkbenchConfig"]
