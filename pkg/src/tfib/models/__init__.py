from .chains import THETA_COEFFS, theta_chain, theta_fibration, tripod_chain
from .polytopes import POLYTOPES, polytope
from .vertices import VERTEX_KINDS, vertex_model

__all__ = [
    "POLYTOPES",
    "THETA_COEFFS",
    "VERTEX_KINDS",
    "polytope",
    "theta_chain",
    "theta_fibration",
    "tripod_chain",
    "vertex_model",
]
