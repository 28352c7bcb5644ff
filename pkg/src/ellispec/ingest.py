"""Cosine-similarity p-nearest-neighbor graphs from nonnegative vectors."""

from __future__ import annotations

import struct
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from ._errors import InvalidGraphError
from .graph import WeightedGraph

__all__ = ["VectorDataset", "load_csv", "load_vds", "cosine_knn_graph"]

_VDS_MAGIC = b"VDS1"


@dataclass
class VectorDataset:
    """Row-major matrix of nonnegative feature vectors, optional labels."""

    X: np.ndarray
    labels: np.ndarray | None = None

    def __post_init__(self):
        self.X = np.asarray(self.X, dtype=np.float64)
        if self.X.ndim != 2:
            raise ValueError("expected a 2-d data matrix")
        if (self.X < 0).any():
            row = int(np.argwhere((self.X < 0).any(axis=1))[0][0])
            raise ValueError(f"row {row} contains a negative feature")
        norms = np.linalg.norm(self.X, axis=1)
        if self.X.shape[0] and norms.min() == 0.0:
            row = int(np.argmin(norms))
            raise ValueError(f"row {row} is a zero vector")

    @property
    def n(self):
        return self.X.shape[0]

    @property
    def d(self):
        return self.X.shape[1]


def load_csv(path, labels_path=None) -> VectorDataset:
    """One vector per row, comma-separated."""
    X = np.loadtxt(path, delimiter=",", ndmin=2)
    labels = None
    if labels_path is not None:
        labels = np.loadtxt(labels_path, dtype=np.int64, ndmin=1)
    return VectorDataset(X, labels)


def load_vds(path, labels_path=None) -> VectorDataset:
    """Packed little-endian binary: 16-byte header {magic 'VDS1', u32 n,
    u32 d, 4 pad bytes}, then n*d float64 values row-major."""
    with open(path, "rb") as fh:
        header = fh.read(16)
        if len(header) < 16 or header[:4] != _VDS_MAGIC:
            raise ValueError(f"{path}: not a VDS1 file")
        n, d = struct.unpack_from("<II", header, 4)
        data = np.fromfile(fh, dtype="<f8", count=n * d)
    if data.size != n * d:
        raise ValueError(f"{path}: truncated payload ({data.size} of {n * d})")
    labels = None
    if labels_path is not None:
        labels = np.loadtxt(labels_path, dtype=np.int64, ndmin=1)
    return VectorDataset(data.reshape(n, d), labels)


def save_vds(dataset: VectorDataset, path):
    with open(path, "wb") as fh:
        fh.write(_VDS_MAGIC)
        fh.write(struct.pack("<II", dataset.n, dataset.d))
        fh.write(b"\x00" * 4)
        dataset.X.astype("<f8").tofile(fh)


def cosine_knn_graph(dataset: VectorDataset, p: int) -> WeightedGraph:
    """Sparsified cosine-similarity graph under the OR neighbor rule.

    w_ij = cos(a_i, a_j) whenever i is among the p most similar vectors
    to j or vice versa; a vector is never its own neighbor.  Ties at the
    p-th rank are all included, so neighbor sets may exceed p.  Zero
    similarities carry no edge; a node left with no edges is rejected.
    """
    n = dataset.n
    if not 1 <= p < n:
        raise ValueError(f"need 1 <= p < n, got p={p}, n={n}")
    unit = dataset.X / np.linalg.norm(dataset.X, axis=1)[:, None]
    sims = unit @ unit.T
    np.fill_diagonal(sims, -np.inf)

    # p-th largest similarity per row; everything >= it is a neighbor
    kth = np.partition(sims, n - p, axis=1)[:, n - p]
    keep = sims >= kth[:, None]
    keep |= keep.T
    np.fill_diagonal(sims, 0.0)
    w = np.where(keep, sims, 0.0)
    w[w < 0] = 0.0  # numerical dust from the dot products

    degrees = w.sum(axis=1)
    if degrees.min() == 0.0:
        node = int(np.argmin(degrees))
        raise InvalidGraphError(
            f"node {node} has no positively-weighted neighbors"
        )
    return WeightedGraph(sp.csr_matrix(w))
