"""Garside-group computations: left normal forms, summit sets, and rigidity."""

from .conjugacy import (
    ConjugationStep,
    UssArrow,
    UssGraph,
    cycling,
    cycling_orbit,
    decycling,
    in_own_uss,
    is_super_summit,
    minimal_simple_elements,
    solve_conjugacy,
    sss_invariants,
    to_sss,
    to_uss,
    transport,
    uss,
)
from .core import (
    EnumerationCapError,
    GarsideError,
    GarsideStructure,
    NormalForm,
    SimpleElement,
    StructureMismatchError,
    WordParseError,
    delta_power,
    identity_element,
    is_left_weighted,
    normalize_factors,
    normalize_letters,
)
from .rigidity import (
    CyclingRecord,
    IotaPowerChain,
    PowerDecomposition,
    RigidPowerReport,
    absolute_final_factor,
    absolute_initial_factor,
    chain_stabilization_index,
    cycling_record,
    iota_power_chain,
    is_rigid,
    power_decomposition,
    product_C,
    product_R,
    rigid_power,
    rigid_power_search,
    rigidity,
    stabilize_powers,
    unexpected_deltas,
    verify_cm_theorem,
)
from .structures import (
    BraidStructure,
    FreeAbelianStructure,
    braid,
    enumerate_simples,
    free_abelian,
    from_descriptor,
)
from .words import parse_word, serialize

__all__ = [
    "BraidStructure",
    "ConjugationStep",
    "CyclingRecord",
    "EnumerationCapError",
    "FreeAbelianStructure",
    "GarsideError",
    "GarsideStructure",
    "IotaPowerChain",
    "NormalForm",
    "PowerDecomposition",
    "RigidPowerReport",
    "SimpleElement",
    "StructureMismatchError",
    "UssArrow",
    "UssGraph",
    "WordParseError",
    "absolute_final_factor",
    "absolute_initial_factor",
    "braid",
    "chain_stabilization_index",
    "cycling",
    "cycling_orbit",
    "cycling_record",
    "decycling",
    "delta_power",
    "enumerate_simples",
    "free_abelian",
    "from_descriptor",
    "identity_element",
    "in_own_uss",
    "iota_power_chain",
    "is_left_weighted",
    "is_rigid",
    "is_super_summit",
    "minimal_simple_elements",
    "normalize_factors",
    "normalize_letters",
    "parse_word",
    "power_decomposition",
    "product_C",
    "product_R",
    "rigid_power",
    "rigid_power_search",
    "rigidity",
    "serialize",
    "solve_conjugacy",
    "sss_invariants",
    "stabilize_powers",
    "to_sss",
    "to_uss",
    "transport",
    "unexpected_deltas",
    "uss",
    "verify_cm_theorem",
]
