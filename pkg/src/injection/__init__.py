# Injection Module
from .injection import (
    DomainElem,
    ImageElem,
    InjectionDomainError,
    apply_injection,
    recolor_component,
    invert_injection,
    image_multiplicity,
    monochromatic_path_endpoints,
)
from .verifier import (
    Counterexample,
    VerificationReport,
    InjectionVerifier,
    degenerate_note,
    verify_theorem,
)

__all__ = [
    'DomainElem', 'ImageElem', 'InjectionDomainError',
    'apply_injection', 'recolor_component', 'invert_injection',
    'image_multiplicity', 'monochromatic_path_endpoints',
    'Counterexample', 'VerificationReport', 'InjectionVerifier',
    'degenerate_note', 'verify_theorem',
]
