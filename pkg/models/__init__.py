""" Imports. """

from models.exceptions import (
    BadLength,
    BoundsViolated,
    DuplicateEdge,
    EdgeListFormatError,
    EmptyEdgeSet,
    FamilySpecError,
    GenerationExhausted,
    GraphEnergyError,
    InapplicableMap,
    InfeasibleSpec,
    InvalidGraph,
    KindMismatch,
    MissingInput,
    NegativeDiscriminant,
    NegativeEigenvalue,
    NoConvergence,
    NotApplicable,
    NumericalAnomaly,
    RefinementInapplicable,
    SelfLoop,
    StandingAssumptionViolated,
    VertexOutOfRange
)

__all__ = [
    'BadLength',
    'BoundsViolated',
    'DuplicateEdge',
    'EdgeListFormatError',
    'EmptyEdgeSet',
    'FamilySpecError',
    'GenerationExhausted',
    'GraphEnergyError',
    'InapplicableMap',
    'InfeasibleSpec',
    'InvalidGraph',
    'KindMismatch',
    'MissingInput',
    'NegativeDiscriminant',
    'NegativeEigenvalue',
    'NoConvergence',
    'NotApplicable',
    'NumericalAnomaly',
    'RefinementInapplicable',
    'SelfLoop',
    'StandingAssumptionViolated',
    'VertexOutOfRange'
]


from models.graphmodel import (
    Graph,
    Regularity,
    RegularityClass,
    classify,
    components,
    format_edge_list,
    from_edge_list,
    is_connected,
    is_star,
    line_assumptions,
    parse_edge_list,
    read_edge_list,
    regular_assumptions,
    write_edge_list
)

__all__ += [
    'Graph',
    'Regularity',
    'RegularityClass',
    'classify',
    'components',
    'format_edge_list',
    'from_edge_list',
    'is_connected',
    'is_star',
    'line_assumptions',
    'parse_edge_list',
    'read_edge_list',
    'regular_assumptions',
    'write_edge_list'
]


from models.derivedgraphs import (
    derive,
    line_graph,
    q_graph,
    r_graph
)

__all__ += [
    'derive',
    'line_graph',
    'q_graph',
    'r_graph'
]


from models.families import (
    generate,
    parse_families,
    parse_family,
    standard_suite
)

__all__ += [
    'generate',
    'parse_families',
    'parse_family',
    'standard_suite'
]


from models.spectral import (
    Spectrum,
    SpectrumKind,
    eigenvalues,
    incidence,
    laplacian,
    signless_laplacian,
    singular_values,
    spectrum
)

__all__ += [
    'Spectrum',
    'SpectrumKind',
    'eigenvalues',
    'incidence',
    'laplacian',
    'signless_laplacian',
    'singular_values',
    'spectrum'
]


from models.closedforms import (
    SPECTRAL_MAPS,
    BaseParams,
    char_poly_eval,
    collapsed_invariant
)

__all__ += [
    'SPECTRAL_MAPS',
    'BaseParams',
    'char_poly_eval',
    'collapsed_invariant'
]


from models.invariants import (
    INVARIANTS,
    InvariantValue,
    Source,
    ie,
    lel
)

__all__ += [
    'INVARIANTS',
    'InvariantValue',
    'Source',
    'ie',
    'lel'
]


from models.bounds import (
    BoundId,
    BoundParams,
    applicable_bounds,
    evaluate_bound,
    proof_instance
)
from models.ozeki import (
    OzekiInstance,
    ozeki_check
)

__all__ += [
    'BoundId',
    'BoundParams',
    'OzekiInstance',
    'applicable_bounds',
    'evaluate_bound',
    'ozeki_check',
    'proof_instance'
]


from models.verifier import (
    FindingKind,
    SweepSummary,
    VerifyConfig,
    bound_report,
    consistency_check,
    improvement_grid,
    strictness_check,
    sweep
)

__all__ += [
    'FindingKind',
    'SweepSummary',
    'VerifyConfig',
    'bound_report',
    'consistency_check',
    'improvement_grid',
    'strictness_check',
    'sweep'
]


from models.settingsmodel import (
    SettingsModel,
    flatten_text
)

__all__ += [
    'SettingsModel',
    'flatten_text'
]
