# Bounds Module
from .bounds import (
    BoundsError,
    BoundReport,
    LazebnikBound,
    liu_murty_bound,
    klazar_factor,
    klazar_bound,
    lazebnik_exponent,
    lazebnik_bound,
    compare_bounds,
    bound_ratio,
)

__all__ = [
    'BoundsError', 'BoundReport', 'LazebnikBound',
    'liu_murty_bound', 'klazar_factor', 'klazar_bound',
    'lazebnik_exponent', 'lazebnik_bound', 'compare_bounds', 'bound_ratio',
]
