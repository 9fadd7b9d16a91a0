"""Finite-field regular maps, multiply-transitive link symmetries, and
the train-track dilatation of the associated monodromy."""

from .finite_field import (
    DEFAULT_MAX_ORDER,
    FieldElement,
    FieldSpec,
    field_of_order,
    is_prime,
    make_field,
    prime_power,
)
from .link_families import (
    EXAMPLE_BRAID,
    BraidWord,
    HelicalSpec,
    Hyperbolicity,
    LinkBlueprint,
    braid_permutation,
    chain_link,
    cube_edge_link,
    cube_link,
    cyclic_braid_closure,
    helical_link,
    icosahedral_link,
    polygon_geometry,
    polygon_radii,
)
from .perm_action import (
    PermGroup,
    Permutation,
    affine_group,
    affine_permutation,
    group_closure,
    is_k_transitive,
    is_k_transitive_literal,
    transitivity_degree,
)
from .regular_map import (
    BiggsMap,
    MapSummary,
    RotationMap,
    affine_map_automorphism,
    biggs_map,
    face_adjacency_complete,
    genus_formula,
    induced_face_permutation,
    map_summary,
)
from .train_track import (
    ArcCrossing,
    MeasureSystem,
    SubstitutionRules,
    TransitionMatrix,
    anosov_check,
    biggs_substitution,
    crossing_measure,
    dilatation,
    eigen_report,
    growth_ratios,
    perron_eigen,
    reference_arcs,
    tangential_weights,
    transition_matrix,
    transverse_weights,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_MAX_ORDER",
    "FieldElement",
    "FieldSpec",
    "field_of_order",
    "is_prime",
    "make_field",
    "prime_power",
    "EXAMPLE_BRAID",
    "BraidWord",
    "HelicalSpec",
    "Hyperbolicity",
    "LinkBlueprint",
    "braid_permutation",
    "chain_link",
    "cube_edge_link",
    "cube_link",
    "cyclic_braid_closure",
    "helical_link",
    "icosahedral_link",
    "polygon_geometry",
    "polygon_radii",
    "PermGroup",
    "Permutation",
    "affine_group",
    "affine_permutation",
    "group_closure",
    "is_k_transitive",
    "is_k_transitive_literal",
    "transitivity_degree",
    "BiggsMap",
    "MapSummary",
    "RotationMap",
    "affine_map_automorphism",
    "biggs_map",
    "face_adjacency_complete",
    "genus_formula",
    "induced_face_permutation",
    "map_summary",
    "ArcCrossing",
    "MeasureSystem",
    "SubstitutionRules",
    "TransitionMatrix",
    "anosov_check",
    "biggs_substitution",
    "crossing_measure",
    "dilatation",
    "eigen_report",
    "growth_ratios",
    "perron_eigen",
    "reference_arcs",
    "tangential_weights",
    "transition_matrix",
    "transverse_weights",
    "__version__",
]
