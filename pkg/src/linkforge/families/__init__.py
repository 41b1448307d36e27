from .args import CENTER_AREA, ChainLayout, ChainmailParams
from .borromean import family_borromean
from .chainmail import expected_linkages, family_chainmail
from .chains import family_chain_congruent, family_chain_layered, layer_positions
from .hopf import family_hopf_circles, family_hopf_polygons
from .link633 import family_link633
from .tambourine import central_vertex_count, family_tambourine
from .torus import family_torus_knot
from .utils import FAMILY_REGISTRY, FamilySpec, check_topology, register
