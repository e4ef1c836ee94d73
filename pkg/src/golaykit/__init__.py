"""Exact construction, planning and verification of polyphase Golay
complementary arrays and sequence pairs over the Gaussian integers."""
from __future__ import annotations

from .errors import GolayKitError, MissingSeed
from .planner import (
    FeasibilityReport,
    Recipe,
    coverage_scan,
    enumerate_golay_numbers,
    execute,
    plan_pair,
    plan_quad,
)
from .seeds import SeedRegistry, load_bundled
from .tensor import Alphabet, GaussInt, Tensor
from .verify import GcaVerdict, is_gca_set

__version__ = "0.1.0"

__all__ = [
    "GolayKitError",
    "MissingSeed",
    "Alphabet",
    "GaussInt",
    "Tensor",
    "GcaVerdict",
    "is_gca_set",
    "FeasibilityReport",
    "Recipe",
    "coverage_scan",
    "enumerate_golay_numbers",
    "execute",
    "plan_pair",
    "plan_quad",
    "SeedRegistry",
    "load_bundled",
    "__version__",
]
