"""Linear codes from Boolean functions and the t-designs they support."""

from .code import BudgetExceeded, LinearCode, WeightDistribution
from .designs import Design
from .gf import FieldElement, FieldTable, field_new

__all__ = [
    "BudgetExceeded",
    "Design",
    "FieldElement",
    "FieldTable",
    "LinearCode",
    "WeightDistribution",
    "field_new",
]

__version__ = "0.1.0"
