"""Finite-matroid library: rank-free connectivity, the 2-separation calculus,
localizations and 2-sums, and the canonical tree-decomposition of a connected
matroid into 3-connected, circuit, and cocircuit torsos."""

from .connectivity import (
    Separation,
    connectivity_value,
    enumerate_2separations,
    enumerate_separations,
    excess,
    is_n_connected,
    separation_of,
)
from .decomposition import (
    DecompositionTree,
    TorsoKind,
    TreeDecomposition,
    build_tree,
    classify_torso,
    decomposition_isomorphism,
    equivalence_classes,
    is_primitive,
    reassemble,
    search_decompositions,
    torso_of,
    verify_primitive_structure,
    verify_tree_decomposition,
)
from .duality import (
    verify_dual_decomposition,
    verify_dual_extension_counts,
    verify_localization_duality,
    verify_separation_duality,
)
from .kernel import (
    DEFAULT_ENUM_CAP,
    Matroid,
    ValidationLevel,
    from_circuits,
    graphic,
    linear_gf2,
    uniform,
)
from .localization import (
    Localization,
    goodness_corresponds,
    independent_image,
    lift_2sep_subset,
    local_bases,
    localize,
    project_2separation,
    split_along,
    two_sum,
)
from .separations import (
    Quadrants,
    are_nested,
    circuit_crosses,
    corner_separation,
    good_2separations,
    is_good,
    quadrants,
    switch_across_family,
    switch_circuits,
    symmetric_difference_separation,
)

__version__ = "0.1.0"
