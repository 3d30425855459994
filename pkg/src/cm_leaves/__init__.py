"""Leaf stratification of cyclic Calogero-Moser spaces (a != 0) via partitions and quiver data."""
from .affine_weyl import (
    act_dim,
    act_param,
    bar,
    decompose_dim,
    pairing,
    reflect_dim,
    reflect_param,
    sigma,
    standardize,
    translate_dim,
    translate_param,
    verify_parabolic_stabilizer,
)
from .errors import DomainError
from .leaves import (
    CMParams,
    canonical_decomposition,
    closure_leq,
    cm_from_theta,
    e_theta_membership,
    enumerate_leaves,
    fixed_point_labels,
    leaves_of,
    sigma_sigma_membership,
    theta_from_cm,
)
from .partitions import (
    Box,
    Partition,
    boundary_boxes,
    core_reflect,
    ell_core,
    enumerate_partitions,
    j_core,
    residue_vector,
    staircase,
)
from .quiver_rep import (
    build_fixed_point_rep,
    direct_sum,
    fold,
    is_simple_framed,
    moment_defect,
    semisimple_label,
    simple_bar_rep,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "act_dim",
    "act_param",
    "bar",
    "boundary_boxes",
    "Box",
    "build_fixed_point_rep",
    "canonical_decomposition",
    "closure_leq",
    "cm_from_theta",
    "CMParams",
    "core_reflect",
    "decompose_dim",
    "direct_sum",
    "e_theta_membership",
    "ell_core",
    "enumerate_leaves",
    "enumerate_partitions",
    "fixed_point_labels",
    "fold",
    "is_simple_framed",
    "j_core",
    "leaves_of",
    "moment_defect",
    "pairing",
    "Partition",
    "reflect_dim",
    "reflect_param",
    "residue_vector",
    "semisimple_label",
    "sigma",
    "sigma_sigma_membership",
    "simple_bar_rep",
    "staircase",
    "standardize",
    "theta_from_cm",
    "translate_dim",
    "translate_param",
    "verify_parabolic_stabilizer",
]
