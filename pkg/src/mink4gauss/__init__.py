"""Linearized operators L_k on the Gauss map of rotational hypersurfaces in E^4_1."""

from .classification import Decomposition, Kind, Verdict, classify, decompose, ode_residual
from .closed_forms import (
    ClosedFormBreakdown,
    corollary_closed,
    grad_ak_closed,
    lk_gauss_closed,
    special_case_closed,
)
from .errors import (
    BadFamilyParams,
    CaseMismatch,
    ConsistencyError,
    ConventionMismatch,
    DegenerateMetric,
    DomainError,
    IndeterminateDecomposition,
    InsufficientSamples,
    Mink4Error,
    QuadNonConvergence,
    SingularFrame,
    UnsupportedK,
)
from .hypersurface import (
    AxisKind,
    CurvatureData,
    RotSurface,
    SurfPoint,
    embed,
    gauss_map,
    metric,
    principal_curvatures,
)
from .jet import Jet
from .lk_operator import (
    MeanCurvatureSet,
    TangentField,
    calibrate_convention,
    ck,
    gradient,
    hessian_scalar,
    lk_gauss_generic,
    lk_trace,
    mean_curvatures,
    newton_transform,
)
from .minkowski import MinkVec4, mink_dot
from .profiles import Profile, family_profile, jet_eval, parse_profile
from .quadrature import quad

__all__ = [name for name in dir() if not name.startswith("_")]
