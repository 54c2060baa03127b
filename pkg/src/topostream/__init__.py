"""Parameter-free streaming topological clustering."""

from .kernels import cim, estimate_bandwidth, gaussian_kernel
from .learner import (
    ActiveNodeSet,
    DeletedEdgeStats,
    StreamClusterer,
    diversity,
    estimate_edge_threshold,
    vigilance_case,
)
from .metrics import ari, nmi
from .network import Node, TopoNetwork

__all__ = [
    "ActiveNodeSet",
    "DeletedEdgeStats",
    "Node",
    "StreamClusterer",
    "TopoNetwork",
    "ari",
    "cim",
    "diversity",
    "estimate_bandwidth",
    "estimate_edge_threshold",
    "gaussian_kernel",
    "nmi",
    "vigilance_case",
]

__version__ = "0.1.0"
