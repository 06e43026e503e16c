# Coloring Module
from .coloring import (
    Coloring,
    ColorSet,
    ColoringError,
    BudgetExceededError,
    DEFAULT_ENUMERATION_BUDGET,
    check_coloring,
    is_proper,
    bad_colors,
    monochromatic_edges,
    enumerate_colorings,
    count_proper_block,
    count_proper_brute,
)
from .polynomial import (
    ChromaticPolynomial,
    CountResult,
    ProperColoringCounter,
    COUNT_METHODS,
    DEFAULT_MAX_POLYNOMIAL_VERTICES,
    chromatic_polynomial,
    evaluate_polynomial,
)

__all__ = [
    'Coloring', 'ColorSet', 'ColoringError', 'BudgetExceededError',
    'DEFAULT_ENUMERATION_BUDGET', 'DEFAULT_MAX_POLYNOMIAL_VERTICES', 'COUNT_METHODS',
    'check_coloring', 'is_proper', 'bad_colors', 'monochromatic_edges',
    'enumerate_colorings', 'count_proper_block', 'count_proper_brute',
    'ChromaticPolynomial', 'CountResult', 'ProperColoringCounter',
    'chromatic_polynomial', 'evaluate_polynomial',
]
