"""Numerical models of the four 16-dimensional plane geometries built on
the two eight-dimensional doubled quaternion algebras, with verification
suites for their metric, isometry, curvature and spectral structure."""

from .algebra import (
    AlgebraKind,
    OCTONION,
    PARA_OCTONION,
    HyperNumber,
    KindMismatchError,
    NonInvertibleError,
)
from .plane import (
    PlaneKind,
    OP2,
    PARA_OP2,
    OP11,
    OH2,
    ALL_PLANES,
    ChartPoint,
    normalize,
    transition,
    to_chart,
    points_equal,
    origin,
    NotRepresentableError,
    OverlapError,
)
from .metric import metric_matrix, origin_metric, signature, pullback_deviation
from .isometry import (
    EuclideanReflection,
    IndefiniteReflection,
    Rotation,
    IsometryComposition,
    apply_step,
    apply_composition,
    isometry_to,
    verify_isometry,
    ExtensionError,
)
from .curvature import (
    TangentVector,
    riemann_origin_numeric,
    riemann_closed_form,
    closed_form_tensor,
    riemann_at_point,
    jacobi_spectrum_at_point,
)
from .osserman import (
    jacobi_operator,
    jacobi_constants,
    eigenspace_bases,
    check_special_osserman,
    non_isotropy_witness,
)
from .suites import run_suite, SUITE_NAMES

__version__ = "0.1.0"
