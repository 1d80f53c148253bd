"""Rainbow edge and vertex connection colourings bounded in terms of sigma_2."""

from .graph import Graph, sigma2
from .rc import color_rc, rc_bound
from .rvc import color_rvc, rvc_bound
from .verify import is_rainbow_connected, is_rainbow_vertex_connected

__all__ = [
    "Graph",
    "sigma2",
    "color_rc",
    "rc_bound",
    "color_rvc",
    "rvc_bound",
    "is_rainbow_connected",
    "is_rainbow_vertex_connected",
]
__version__ = "0.1.0"
