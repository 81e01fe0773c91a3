"""Explicit construction and exhaustive verification of the generalized
quadrangle Q(5,4), together with an exact counting engine that replays the
arithmetic nonexistence arguments for the alternative GQ(4,16) profiles."""

from gq416.gf4 import ff_add, ff_mul, ff_inv, ff_trace, ZeroInversionError
from gq416.geometry import (
    GQParams,
    GQStructure,
    QuadraticForm,
    build_quadric_quadrangle,
    check_gq_axioms,
    elliptic_form,
    enumerate_projective_points,
    parse_geometry,
    serialize_geometry,
)
from gq416.graph import (
    PointGraph,
    SrgParams,
    local_partition,
    refine_partition,
    adjacency_profile,
    triad_trace,
    check_3_regularity,
    verify_srg,
)
from gq416.designs import (
    Design,
    design_from_partition,
    derived_design,
    lambda_vector,
    multiplicity_spectrum,
    verify_t_design,
)
from gq416.counting import (
    AffineSolutionFamily,
    CountingSystem,
    LinearConstraint,
    ProofTrace,
    enumerate_feasible_profiles,
    replay_lemma,
    solve_counting_system,
)

__version__ = "0.1.0"
