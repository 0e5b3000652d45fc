"""Collatz 3x+1 predecessor-tree toolkit built on the G-cell generator."""

from .collatz import (
    DEFAULT_STEP_CAP,
    U64_MAX,
    RangeReport,
    ReverseGraph,
    Trajectory,
    collatz_step,
    oracle_reverse_graph,
    trajectory,
    trajectory_peak,
    verify_range,
)
from .errors import (
    GCellTreeError,
    IterationCapError,
    LayoutError,
    ValueOverflowError,
    WidthUnderflowError,
)
from .gcell import (
    Abutment,
    AbutmentKind,
    GCell,
    GCellNetwork,
    OracleCheck,
    build_gcell,
    check_against_oracle,
    covering_bound,
    generate_network,
    left_abutment_seed,
    odd_predecessor,
    right_abutment,
    verify_tiling,
)
from .interchange import (
    RegionDocument,
    emit_interchange,
    parse_interchange,
)
from .layout import (
    DEFAULT_BASE_WIDTH,
    GridPos,
    PlacedNetwork,
    layout_network,
)
from .scene import SceneOptions, emit_vrml, tokenize_vrml, vrml_stats

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_BASE_WIDTH",
    "DEFAULT_STEP_CAP",
    "U64_MAX",
    "Abutment",
    "AbutmentKind",
    "GCell",
    "GCellNetwork",
    "GCellTreeError",
    "GridPos",
    "IterationCapError",
    "LayoutError",
    "OracleCheck",
    "PlacedNetwork",
    "RangeReport",
    "RegionDocument",
    "ReverseGraph",
    "SceneOptions",
    "Trajectory",
    "ValueOverflowError",
    "WidthUnderflowError",
    "build_gcell",
    "check_against_oracle",
    "collatz_step",
    "covering_bound",
    "emit_interchange",
    "emit_vrml",
    "generate_network",
    "layout_network",
    "left_abutment_seed",
    "odd_predecessor",
    "oracle_reverse_graph",
    "parse_interchange",
    "right_abutment",
    "tokenize_vrml",
    "trajectory",
    "trajectory_peak",
    "verify_range",
    "verify_tiling",
    "vrml_stats",
    "__version__",
]
