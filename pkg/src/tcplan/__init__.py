"""Explicit motion planners with a minimal number of continuous local rules.

Single-rule planners for contractible and star-shaped spaces, the two-rule
planner on odd-dimensional spheres, transfer of planners along homotopy
equivalences, and the induced two-rule planner for a disk robot moving
around a disk obstacle in the plane.
"""

from .core import (
    DEFAULT_TOLERANCES,
    Path,
    ToleranceConfig,
    concat2,
    concat3,
    normalize,
    polyline_length,
    sample_path,
    tangent_field_nu,
)
from .errors import (
    DimensionMismatch,
    HomotopyContractViolation,
    JunctionGap,
    NearZeroVector,
    NoApplicableRule,
    NotSingleRule,
    OddDimension,
    OutsideFreeSpace,
    WitnessNotFound,
)
from .planners import (
    LocalRule,
    MotionPlanner,
    SphereSpec,
    StarDomain,
    alpha_detour,
    contractible_planner,
    contraction_from_planner,
    disk_domain,
    plan,
    rectangle_domain,
    rule_count,
    sphere_planner,
    sphere_rule1,
    sphere_rule2,
    star_planner,
)
from .transfer import (
    AnnulusSpec,
    TransferData,
    annulus_planner,
    annulus_retraction,
    transfer_planner,
    transfer_rule,
)

__version__ = "0.1.0"
