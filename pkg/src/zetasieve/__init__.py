"""Partial sums of the Riemann zeta function over non-perfect-power bases.

The Dirichlet series regroups into a finite sum of geometric-series tails
indexed by the integers r that are not perfect powers ("admissible" bases).
This package evaluates those representations (direct, coth, alternating,
alternating-coth, and a Bernoulli/Laurent series), bounds their truncation
error, and locates complex zeros of the truncated sums.
"""

from .admissible import (
    AdmissibleSet,
    PowerDecomposition,
    admissible_up_to,
    decompose_power,
)
from .bernoulli import BernoulliTable, bernoulli_table
from .errors import (
    ContourError,
    ConvergenceDomainError,
    DomainError,
    InputError,
    PoleError,
    PoleProximityError,
    ResolutionError,
    SingularPrefactorError,
    ZetaSieveError,
)
from .reference import reference_zeta
from .representations import (
    EvalResult,
    RepresentationKind,
    derivative_partial,
    euler_even_zeta,
    nearest_pole,
    pole_distance,
    remainder_bound,
    special_value,
    zeta_alt_coth_partial,
    zeta_alt_partial,
    zeta_bernoulli_partial,
    zeta_coth_partial,
    zeta_direct_partial,
)
from .rootfind import (
    PRESETS,
    NewtonFailure,
    RootRecord,
    SearchRegion,
    Target,
    find_zeros,
    make_target,
    newton_refine,
    winding_count,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibleSet",
    "PowerDecomposition",
    "admissible_up_to",
    "decompose_power",
    "BernoulliTable",
    "bernoulli_table",
    "ZetaSieveError",
    "InputError",
    "DomainError",
    "PoleError",
    "PoleProximityError",
    "SingularPrefactorError",
    "ConvergenceDomainError",
    "ContourError",
    "ResolutionError",
    "reference_zeta",
    "EvalResult",
    "RepresentationKind",
    "zeta_direct_partial",
    "zeta_coth_partial",
    "zeta_alt_partial",
    "zeta_alt_coth_partial",
    "zeta_bernoulli_partial",
    "remainder_bound",
    "euler_even_zeta",
    "special_value",
    "derivative_partial",
    "pole_distance",
    "nearest_pole",
    "Target",
    "make_target",
    "PRESETS",
    "SearchRegion",
    "RootRecord",
    "NewtonFailure",
    "newton_refine",
    "winding_count",
    "find_zeros",
    "__version__",
]
