"""Exact variation-of-GIT stability data for pairs (hypersurface, hyperplane)."""
from .chambers import WallChamberDecomposition, classification, wall_chamber_decomposition
from .errors import DomainError, InputError, ParseError
from .exact import LinearSystem, in_convex_hull, in_relative_interior, parse_rational, solve_unique
from .families import (
    AnnihilatorData,
    ClosedOrbitCandidate,
    DestabilizingFamily,
    Kind,
    annihilator,
    closed_orbit_candidates,
    family,
    maximal_families,
)
from .fundamental import FundamentalSet, equation_pool, fundamental_set, get_fundamental_set
from .monomials import (
    Monomial,
    OneParamSubgroup,
    enumerate_monomials,
    mukai_leq,
    mukai_min_variable,
    pairing,
)
from .stability import (
    PairSupport,
    StabilityVerdict,
    Status,
    candidate_walls,
    centroid,
    conv_generators,
    is_semistable_torus,
    is_stable_torus,
    moduli_dimension,
    mu,
    mu_t,
    restriction_at_tmax,
    stability_interval,
    t_max,
    verdict,
)

__version__ = "0.1.0"
