"""Metric dimension of generalized theta graphs: exact search, constructions, sweeps."""

from ._kernels import BACKEND
from .constructions import BetaPrediction, predict_beta
from .model import C1, C2, GraphSpec, SpecError, Vertex, build_spec, distance, parse_spec, parse_vertex, v
from .resolving import (
    BetaResult,
    SearchLimitExceeded,
    is_resolving,
    metric_dimension,
    vector_representation,
    verify_resolving,
)

__all__ = [
    "BACKEND",
    "BetaPrediction",
    "BetaResult",
    "C1",
    "C2",
    "GraphSpec",
    "SearchLimitExceeded",
    "SpecError",
    "Vertex",
    "build_spec",
    "distance",
    "is_resolving",
    "metric_dimension",
    "parse_spec",
    "parse_vertex",
    "predict_beta",
    "v",
    "vector_representation",
    "verify_resolving",
]
__version__ = "0.1.0"
