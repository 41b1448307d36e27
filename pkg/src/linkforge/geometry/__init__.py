from .curves import Link, Point3, PolyCurve, Segment
from .distance import (
    arc_distance,
    min_distance_between,
    segment_distances,
    segment_min_distance,
)
from .io import link_from_dict, link_to_dict, load_link, save_link
from .linking import (
    gauss_linking_sum,
    linked_pairs,
    linking_matrix,
    linking_number,
    raw_linking_matrix,
    valences,
)
from .shapes import (
    ORIGIN,
    X_AXIS,
    Y_AXIS,
    Z_AXIS,
    make_circle,
    make_ellipse,
    make_rectangle,
    make_rounded_rectangle,
    make_squircle,
    make_stadium,
    make_stretched_ngon,
    make_symmetric_decagon,
    make_torus_knot,
    make_torus_link,
    plane_frame,
)
from .transforms import (
    rotation_matrix,
    subdivide,
    subdivide_link,
    transform,
    transform_link,
)
