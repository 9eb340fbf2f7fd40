"""Triangular labyrinth pattern systems and their fractals.

Validation of the labyrinth properties, level-n substitution, path
matrices, blockedness classification, Hausdorff dimensions, exact arc
approximation with certified length lower bounds, and SVG rendering.
"""

from .arcs import (
    ArcApprox,
    ArcStep,
    FractalExits,
    chord_lower_bound,
    exit_point,
    find_w_star,
    fractal_exits,
    refine_arc,
)
from .classify import (
    BlockClass,
    BlockReport,
    DegenerateSizeError,
    EmptyDownSetError,
    FractalDimension,
    QuadraticSurd,
    ReducibleMatrixError,
    Spectrum,
    arc_dimensions,
    classify_blocked,
    dominant_eigenvalue,
    fractal_dimension,
    global_radius,
)
from .core import (
    BaryPoint,
    CapExceededError,
    CartPoint,
    Color,
    DuplicateTriangleError,
    LevelSets,
    Orient,
    Pattern,
    PatternError,
    PatternSyntaxError,
    PatternSystem,
    TriIndex,
    TriIndexError,
    compose_child,
    contains_point,
    counts,
    dist2,
    format_system,
    level_system,
    neighbour,
    parse_system,
    project_point,
    substitute,
    tri_down,
    tri_up,
    vertices,
)
from .graph import (
    NotATreeError,
    TreePath,
    TriGraph,
    VertexMissingError,
    build_graph,
    is_tree,
    to_dot,
    tree_path,
)
from .pathmatrix import (
    ARC_KEYS,
    PAIRS,
    PathMatrices,
    TypedPath,
    exit_path_typed,
    path_lengths,
    path_matrices,
    typed_paths,
)
from .render import RenderStyle, render_svg
from .validate import (
    ExitTriple,
    InvalidSystemError,
    MultipleExitsError,
    NoExitError,
    ValidationReport,
    corner_triangles,
    exit_triangles,
    find_exits,
    validate_level,
    validate_system,
)

__version__ = "0.1.0"
