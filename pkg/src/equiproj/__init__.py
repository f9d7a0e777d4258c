"""Exact construction and certification of equiprojective 3-polytopes."""

__version__ = "0.1.0"

from .checks import (
    CompensationPairing,
    EdgeFacetIncidence,
    EquiprojectivityReport,
    check_aggregated,
    check_hasan_lubiw,
    compensates,
    oracle_equiprojective,
    shadow_vertex_count,
)
from .cones import (
    AggregatedCone,
    EdgeDirection,
    aggregated_cone,
    cone_is_partition_with_opposite,
    edge_directions,
    kappa,
    multiplicity,
)
from .geometry import orientation
from .lattice import face_lattice_isomorphic
from .minkowski import (
    GeneratorSet,
    MinkowskiSum,
    SumCertificate,
    face_summand_maps,
    generic_triangle,
    kappa_of_sum,
    minkowski_sum,
    odd_equiprojective,
    sum_equiprojective,
    zonotope,
)
from .omatroid import CovectorSet, covectors, om_equivalent, type_census, zonotope_type_equal
from .polytope import Polytope3, hull3

__all__ = [
    "AggregatedCone",
    "CompensationPairing",
    "CovectorSet",
    "EdgeDirection",
    "EdgeFacetIncidence",
    "EquiprojectivityReport",
    "GeneratorSet",
    "MinkowskiSum",
    "Polytope3",
    "SumCertificate",
    "aggregated_cone",
    "check_aggregated",
    "check_hasan_lubiw",
    "compensates",
    "cone_is_partition_with_opposite",
    "covectors",
    "edge_directions",
    "face_lattice_isomorphic",
    "face_summand_maps",
    "generic_triangle",
    "hull3",
    "kappa",
    "kappa_of_sum",
    "minkowski_sum",
    "multiplicity",
    "odd_equiprojective",
    "om_equivalent",
    "oracle_equiprojective",
    "orientation",
    "shadow_vertex_count",
    "sum_equiprojective",
    "type_census",
    "zonotope",
    "zonotope_type_equal",
]
