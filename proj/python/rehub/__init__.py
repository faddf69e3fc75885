"""Hub labels with reverse k-nearest-neighbor queries on unweighted graphs."""

from ._rehub import (
    ConfigError,
    DataError,
    Error,
    FormatError,
    Graph,
    Index,
    LabelSet,
    ParseError,
    RangeError,
    bfs_distances,
    build_labels,
    knn_query,
    oracle_rknn,
    preprocess,
    rknn_query,
)

__all__ = [
    "ConfigError",
    "DataError",
    "Error",
    "FormatError",
    "Graph",
    "Index",
    "LabelSet",
    "ParseError",
    "RangeError",
    "bfs_distances",
    "build_labels",
    "knn_query",
    "oracle_rknn",
    "preprocess",
    "rknn_query",
]
