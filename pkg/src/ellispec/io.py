"""File formats: Matrix Market adjacency, label files, embedding dumps."""

from __future__ import annotations

import numpy as np
import scipy.io
import scipy.sparse as sp

from ._errors import InvalidPartitionError
from .graph import Partition, WeightedGraph

__all__ = [
    "read_graph",
    "write_graph",
    "read_labels",
    "write_labels",
    "write_embedding",
]


def read_graph(path) -> WeightedGraph:
    """Read a symmetric coordinate real Matrix Market file as a graph.

    Duplicate entries are summed (COO semantics).
    """
    with open(path, "rb") as fh:
        mat = scipy.io.mmread(fh)
    return WeightedGraph(sp.csr_matrix(mat))


def write_graph(graph: WeightedGraph, path):
    """Write the adjacency as Matrix Market coordinate real symmetric."""
    lower = sp.tril(graph.adjacency).tocoo()
    scipy.io.mmwrite(path, lower, symmetry="symmetric")


def read_labels(path) -> Partition:
    """Read a partition: one 1-based integer label per line, line i = node i-1."""
    with open(path) as fh:
        lines = [line for line in fh if line.strip()]
    if not lines:
        raise InvalidPartitionError(f"{path}: empty label file")
    raw = np.loadtxt(lines, dtype=np.int64, ndmin=1)
    if raw.min() < 1:
        raise InvalidPartitionError(f"{path}: labels in files are 1-based")
    return Partition(raw - 1)


def write_labels(partition: Partition, path):
    """Write 1-based labels, one per line."""
    np.savetxt(path, partition.labels + 1, fmt="%d")


def write_embedding(embedding, path):
    """Dump eigenvalues (first line) and the k x n coordinate matrix as text."""
    with open(path, "w") as fh:
        vals = list(embedding.eigenvalues) + [embedding.lambda_next]
        fh.write(" ".join(format(v, ".17g") for v in vals) + "\n")
        for row in embedding.P:
            fh.write(" ".join(format(v, ".17g") for v in row) + "\n")
