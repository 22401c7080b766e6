"""Winding numbers of 3-colorings, cylindrical grid extension and
distance-layer geometry on plane graphs, checked against an exact
precoloring-extension solver."""

__version__ = "0.1.0"

from .coloring import (
    COLORS,
    ColoringError,
    ImproperColoring,
    PartialColoring,
    is_proper,
    recolor_permuted,
    validate_coloring,
)
from .cylinder import (
    CylGrid,
    Segment,
    Segmentation,
    extend_one_cuff,
    extend_two_cuffs,
    fill_band,
    lemma_height,
    make_grid,
    push_hoop,
    segmentation_of,
)
from .embedding import (
    FaceWalk,
    PlanarEmbedding,
    build_embedding,
    find_triangles,
    identify_vertices,
    is_induced_cycle,
    is_separating_cycle,
    min_triangle_pair_distance,
    parse_embedding,
    format_embedding,
    set_distance,
    trace_faces,
)
from .generate import InfeasibleConstraint, gen_planar
from .oracle import PrecoloringInstance, is_critical, mainlemma_statistic, solve_3coloring
from .scans import ScanReport, scan_aksionov, scan_grotzsch, scan_havel
from .tightness import (
    BfsLayers,
    TightnessReport,
    bfs_layers,
    check_distcrit,
    classify_face,
    contaminated_angles,
    equidistant_length_audit,
    find_equidistant_cycle,
    find_quiet_window,
    grow_cylindrical_grid,
)
from .winding import OrientedFacialCycle, face_winding_sum, winding_number
