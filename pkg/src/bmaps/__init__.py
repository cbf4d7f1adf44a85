"""Exact Jack-series coefficients h_{mu,nu}^tau(beta) and rooted bipartite maps on all surfaces."""

from .exactalg import ALPHA, BETA, NonPolynomial, NotInSpan, Poly, RatFunc, as_polynomial, b_basis_decompose
from .hseries import HTable, extract_h, genus_bound
from .jack import build_jack, jack, jack_norm
from .mapcore import RootedMap, map_type, genus2x, is_orientable, single_edge_map
from .mapstats import (
    CANONICAL,
    EdgeType,
    EtaTable,
    Kind,
    OrientationRule,
    enumerate_maps,
    enumerate_by_type,
    eta,
    h_eta_table,
    sigma_eta,
    sigma_two_handles,
    trace,
)
from .partitions import Partition, all_partitions

__version__ = "0.1.0"
