"""Finite multiplicative lattices and phi-delta-primary classification.

The package models complete lattices with a join-distributive commutative
multiplication at finite scale, derives residuals and radicals, classifies
elements against the phi-delta-primary family of conditions, and verifies a
registry of theorems exhaustively over a corpus of small lattices.
"""

from .classify import (
    ClassificationRecord,
    ClassificationReport,
    characterization_A_witness,
    characterization_B_witness,
    classification_report,
    compact_pair_violation,
    delta_primary_violation,
    is_delta_primary,
    is_n_potent_delta_primary,
    is_phi_delta_primary,
    is_phi_primary,
    is_phi_prime,
    is_primary,
    is_prime,
    n_potent_violation,
    phi_delta_primary_violation,
    phi_primary_violation,
    phi_prime_violation,
    prime_violation,
    primary_violation,
    residual_characterization_A,
    residual_characterization_B,
)
from .constructions import (
    Corpus,
    CorpusEntry,
    LatticeFormatError,
    LatticeValidationError,
    boolean_frame,
    chain_frame,
    default_corpus,
    parse_lattice,
    serialize,
    to_dot,
    zn_ideal_lattice,
)
from .derived import (
    ElementProfile,
    StructureProfile,
    compact_elements,
    element_profile,
    has_restricted_cancellation,
    is_idempotent,
    is_join_principal,
    is_maximal,
    is_meet_principal,
    is_modular,
    is_nilpotent,
    is_principal,
    is_principally_generated,
    is_zero_divisor,
    maximal_elements,
    omega_power,
    power_stabilization,
    radical,
    residual,
    structure_profile,
)
from .harness import (
    HarnessConfig,
    HarnessReport,
    HuntHit,
    PropertyResult,
    TheoremProperty,
    Witness,
    hunt,
    parse_predicate,
    registry,
    run_all,
    run_property,
)
from .lattice import (
    FiniteMultiplicativeLattice,
    LatticeStructureError,
    ValidationReport,
    validate,
)
from .maps import (
    Expansion,
    Isomorphism,
    MapValidationError,
    PhiMap,
    UnaryMap,
    check_global_property,
    enumerate_isomorphisms,
    global_property_witness,
    is_automorphism_table,
    is_monotone,
    make_delta,
    make_phi,
    map_leq,
    parse_map_table,
)

__version__ = "0.1.0"

__all__ = [
    "ClassificationRecord",
    "ClassificationReport",
    "Corpus",
    "CorpusEntry",
    "ElementProfile",
    "Expansion",
    "FiniteMultiplicativeLattice",
    "HarnessConfig",
    "HarnessReport",
    "HuntHit",
    "Isomorphism",
    "LatticeFormatError",
    "LatticeStructureError",
    "LatticeValidationError",
    "MapValidationError",
    "PhiMap",
    "PropertyResult",
    "StructureProfile",
    "TheoremProperty",
    "UnaryMap",
    "ValidationReport",
    "Witness",
    "boolean_frame",
    "chain_frame",
    "characterization_A_witness",
    "characterization_B_witness",
    "check_global_property",
    "classification_report",
    "compact_elements",
    "compact_pair_violation",
    "default_corpus",
    "delta_primary_violation",
    "element_profile",
    "enumerate_isomorphisms",
    "global_property_witness",
    "has_restricted_cancellation",
    "hunt",
    "is_automorphism_table",
    "is_delta_primary",
    "is_idempotent",
    "is_join_principal",
    "is_maximal",
    "is_meet_principal",
    "is_modular",
    "is_monotone",
    "is_n_potent_delta_primary",
    "is_nilpotent",
    "is_phi_delta_primary",
    "is_phi_primary",
    "is_phi_prime",
    "is_primary",
    "is_prime",
    "is_principal",
    "is_principally_generated",
    "is_zero_divisor",
    "make_delta",
    "make_phi",
    "map_leq",
    "maximal_elements",
    "n_potent_violation",
    "omega_power",
    "parse_lattice",
    "parse_map_table",
    "parse_predicate",
    "phi_delta_primary_violation",
    "phi_primary_violation",
    "phi_prime_violation",
    "power_stabilization",
    "prime_violation",
    "primary_violation",
    "radical",
    "registry",
    "residual",
    "residual_characterization_A",
    "residual_characterization_B",
    "run_all",
    "run_property",
    "serialize",
    "structure_profile",
    "to_dot",
    "validate",
    "zn_ideal_lattice",
]
