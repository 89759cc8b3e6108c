"""Graph neural network engine for financial-network anomaly detection.

Builds node embeddings with graph convolution and multi-head neighbor
attention, trains them against risk labels, and flags nodes whose embedding
drifts far from the centroid of known-normal behaviour.
"""

import os

# Single-threaded BLAS by default: runs stay bit-reproducible and the skinny
# matmuls this package issues are faster without thread oversubscription.
# Respected only if set before numpy loads its BLAS; users can override.
os.environ.setdefault("OPENBLAS_NUM_THREADS", "1")
os.environ.setdefault("OMP_NUM_THREADS", "1")

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    RiskGraphError,
    GraphIngestError,
    ShapeError,
    ConfigError,
    NumericError,
    CalibrationError,
    MetricError,
    CheckpointError,
)
from .graph import Graph, NodeTable, load_edge_list, neighbors, split_nodes  # noqa: E402
from .model import ModelParams, default_architecture, init_params, model_forward, model_backward  # noqa: E402
from .training import TrainConfig, AdamState, LossLog, cross_entropy, adam_step, fit  # noqa: E402
from .checkpoint import save_checkpoint, load_checkpoint  # noqa: E402
from .scoring import AnomalyReport, normal_centroid, anomaly_score, calibrate_tau, flag_nodes  # noqa: E402
from .evaluation import EvalReport, roc_curve, auc, pairwise_auc, classification_metrics  # noqa: E402
from .synth import SynthConfig, generate, signal_sweep  # noqa: E402

__all__ = [
    "RiskGraphError",
    "GraphIngestError",
    "ShapeError",
    "ConfigError",
    "NumericError",
    "CalibrationError",
    "MetricError",
    "CheckpointError",
    "Graph",
    "NodeTable",
    "load_edge_list",
    "neighbors",
    "split_nodes",
    "ModelParams",
    "default_architecture",
    "init_params",
    "model_forward",
    "model_backward",
    "TrainConfig",
    "AdamState",
    "LossLog",
    "cross_entropy",
    "adam_step",
    "fit",
    "save_checkpoint",
    "load_checkpoint",
    "AnomalyReport",
    "normal_centroid",
    "anomaly_score",
    "calibrate_tau",
    "flag_nodes",
    "EvalReport",
    "roc_curve",
    "auc",
    "pairwise_auc",
    "classification_metrics",
    "SynthConfig",
    "generate",
    "signal_sweep",
    "__version__",
]
