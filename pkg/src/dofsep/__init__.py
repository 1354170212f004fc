"""Exact rational toolkit for DoF regions of parallel MISO broadcast
channels under partial CSIT: region construction and comparison, total-order
analysis, separability verdicts with certificates, PN decomposition, and the
rate-splitting representations."""

from .rationals import BACKEND, Rat, rat, rat_str, rat_vector
from .errors import (
    CommonBudgetExceeded,
    DegeneratePolytope,
    DimensionMismatch,
    DofsepError,
    EmptyPolytope,
    EmptySubset,
    IndexOutOfRange,
    InfeasibleProjection,
    InternalInvariantError,
    NonpositiveScale,
    NotTotallyOrdered,
    ParameterOutOfRange,
    SameUser,
    TupleOutsideOuterBound,
    Unbounded,
    UnknownVariable,
    UnsortedAlpha,
    UserCapExceeded,
)
from .polytopes import (
    HPolytope,
    LinearInequality,
    VPolytope,
    contains_point,
    enumerate_vertices,
    hpolytope,
    is_subset,
    polytopes_equal,
    remove_redundant,
    scale_polytope,
)
from .minkowski import convex_hull, edge_directions, minkowski_sum
from .fourier_motzkin import LinearSystem, fm_eliminate, fm_project, system
from .csit import (
    CsitPattern,
    OrderViolationWitness,
    PnDecomposition,
    average_state,
    csit_pattern,
    is_totally_ordered,
    normalize_user_order,
    order_violation_witness,
    pn_decompose,
)
from .regions import (
    canonical_region,
    is_polymatroid,
    outer_bound_region,
    pair_sep_sum_cap,
    region_set_function,
    separate_coding_region,
    subchannel_region,
    submodularity_sides,
    subset_sum_dof_bound,
    user_subsets,
)
from .ratesplit import (
    RsParameters,
    RsStarParameters,
    rs_region_via_fm,
    rs_star_tuple,
    rs_system,
    rs_tuple,
)
from .decompose import separate_tuple
from .separability import SeparabilityVerdict, separability_verdict
from .patternio import PatternFormatError, load_pattern, parse_pattern_text, pattern_digest

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
