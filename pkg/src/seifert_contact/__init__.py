"""Exact-arithmetic decision procedures for transverse and geodesible
contact structures on Seifert fibered 3-manifolds."""

from .criteria import (
    ClassCount,
    ExistenceReport,
    MultiIndex,
    SpectrumReport,
    TangentReport,
    TorusBundleReport,
    canonical_multi_index,
    count_isotopy_classes,
    exists_transverse,
    feasible_multi_index,
    foliation_necessary,
    local_twisting_admissible,
    local_twisting_arithmetic,
    realizable,
    slot_maximum,
    tangent_levels,
    torus_bundle_geodesible,
    twisting_spectrum,
)
from .errors import DomainError
from .lattice import (
    LatticeVector,
    intersection,
    is_primitive,
    triangle_condition,
    triangle_lattice_points,
)
from .rationals import (
    ContinuedFraction,
    best_lower_approximations,
    cf_expand,
    even_order_approximants,
    format_rational,
    parse_rational,
)
from .sails import (
    Cone,
    CoverThresholds,
    Sail,
    SailEdge,
    SolidTorusCounts,
    cone_contains,
    cover_thresholds,
    cover_witnesses,
    sail,
    sail_bruteforce,
    solid_torus_counts,
)
from .seifert import (
    EulerData,
    SeifertInvariants,
    euler_data,
    format_manifold,
    from_slopes,
    normalize,
    parse_manifold,
    reverse_orientation,
    st_contact_elements,
)

__all__ = [name for name in dir() if not name.startswith("_")]
