# Coloring Bound Verifier
from .graph import Graph, make_graph, family, load_edge_list
from .coloring import ProperColoringCounter, count_proper_brute, chromatic_polynomial
from .injection import InjectionVerifier, apply_injection, invert_injection, verify_theorem
from .bounds import compare_bounds, klazar_bound
from .report import ReportTable

__version__ = "1.0.0"
__all__ = [
    'Graph', 'make_graph', 'family', 'load_edge_list',
    'ProperColoringCounter', 'count_proper_brute', 'chromatic_polynomial',
    'InjectionVerifier', 'apply_injection', 'invert_injection', 'verify_theorem',
    'compare_bounds', 'klazar_bound', 'ReportTable',
]
