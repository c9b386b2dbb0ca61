"""Exact perverse-Hodge diamonds for Lagrangian fibrations and Hilbert schemes of points."""

from .hilbert import (
    Partition,
    check_matsushita,
    hilb,
    hilb_partition_sum,
    hilb_product_formula,
    partitions,
)
from .smooth import ComplexBlueprint, build_G, check_smooth_phs, vb_rank
from .surfaces import SurfaceSpec, ValidationError, builtin_elliptic_k3, load_surface
from .sympower import GenSeries, sym_power, sym_series
from .tables import (
    CheckReport,
    TableError,
    TriTable,
    check_phs,
    check_self_dual,
    dual,
    hodge_marginal,
    perverse_marginal,
    tate_twist,
    tensor,
)
from .weyl import centered, check_octahedron, check_weyl_invariance, uncentered, weyl_group

__version__ = "0.1.0"
