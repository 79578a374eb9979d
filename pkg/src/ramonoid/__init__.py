"""Radical-annihilator monoids of finite commutative rings."""

from .errors import (
    BudgetExceeded,
    DescriptionSyntaxError,
    NonConfluentError,
    PresentationError,
    RingDescriptionError,
    WellDefinednessError,
)
from .ideals import (
    Ideal,
    IdealLattice,
    all_ideals,
    annihilator,
    birkenmeier_condition,
    dualradical,
    hull,
    hull_complement,
    ideal_generated,
    intersect_ideals,
    is_dual_ring,
    is_semiprime_ideal,
    is_semiprime_ring,
    multiply_ideals,
    prime_spectrum,
    radical,
    sum_ideals,
)
from .kernels import BACKEND
from .monoid import MapMonoid, classify_properties, export_abstract, generate_monoid, k_numbers, orbit
from .pomonoid import (
    OrderedMonoid,
    RewritingPresentation,
    from_presentation,
    is_isomorphic,
    is_quotient,
    isomorphism,
    odot,
)
from .rings import FiniteRing, TableRing, build_ring, description_from_dict, parse_ring_description, validate_ring_axioms

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BudgetExceeded",
    "DescriptionSyntaxError",
    "FiniteRing",
    "Ideal",
    "IdealLattice",
    "MapMonoid",
    "NonConfluentError",
    "OrderedMonoid",
    "PresentationError",
    "RewritingPresentation",
    "RingDescriptionError",
    "TableRing",
    "WellDefinednessError",
    "all_ideals",
    "annihilator",
    "birkenmeier_condition",
    "build_ring",
    "classify_properties",
    "description_from_dict",
    "dualradical",
    "export_abstract",
    "from_presentation",
    "generate_monoid",
    "hull",
    "hull_complement",
    "ideal_generated",
    "intersect_ideals",
    "is_dual_ring",
    "is_isomorphic",
    "is_quotient",
    "is_semiprime_ideal",
    "is_semiprime_ring",
    "isomorphism",
    "k_numbers",
    "multiply_ideals",
    "odot",
    "orbit",
    "parse_ring_description",
    "prime_spectrum",
    "radical",
    "sum_ideals",
    "validate_ring_axioms",
]
