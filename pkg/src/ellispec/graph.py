"""Weighted graphs, the normalized Laplacian, and conductance.

Nodes are 0-based everywhere in the API; file formats (Matrix Market,
label files) are 1-based.
"""

from __future__ import annotations

import numpy as np
import scipy.sparse as sp

from ._errors import InvalidGraphError, InvalidPartitionError

__all__ = [
    "WeightedGraph",
    "Partition",
    "NormalizedLaplacian",
    "normalized_laplacian",
    "conductance",
    "partition_profile",
]


class WeightedGraph:
    """Undirected graph with strictly positive edge weights.

    Stores a symmetric sparse adjacency matrix (both triangles) and the
    degree vector d_i = sum_j w(i, j).  Self-loops are allowed and count
    toward the degree but never toward any cut.  Every node must have
    positive degree.  Instances are immutable after construction.
    """

    def __init__(self, adjacency):
        a = sp.csr_matrix(adjacency, dtype=np.float64)
        a.sum_duplicates()
        a.eliminate_zeros()  # an explicitly stored zero is simply no edge
        if a.shape[0] != a.shape[1]:
            raise InvalidGraphError(f"adjacency must be square, got {a.shape}")
        if a.nnz and a.data.min() < 0.0:
            bad = int(np.argmin(a.data))
            raise InvalidGraphError(
                f"all stored weights must be positive; found {a.data[bad]}"
            )
        if (a != a.T).nnz != 0:
            raise InvalidGraphError("adjacency matrix must be symmetric")
        degrees = np.asarray(a.sum(axis=1)).ravel()
        if a.shape[0] and degrees.min() <= 0.0:
            node = int(np.argmin(degrees))
            raise InvalidGraphError(f"node {node} has zero degree")
        self._adj = a
        self._degrees = degrees

    @classmethod
    def from_entries(cls, n, entries):
        """Build from (i, j, w) triples, one per unordered pair.

        Duplicate pairs are summed.  Each off-diagonal triple is mirrored.
        """
        rows, cols, vals = [], [], []
        for i, j, w in entries:
            if not (0 <= i < n and 0 <= j < n):
                raise InvalidGraphError(f"entry ({i}, {j}) out of range for n={n}")
            if w <= 0:
                raise InvalidGraphError(f"weight for pair ({i}, {j}) must be positive, got {w}")
            rows.append(i)
            cols.append(j)
            vals.append(w)
            if i != j:
                rows.append(j)
                cols.append(i)
                vals.append(w)
        a = sp.coo_matrix((vals, (rows, cols)), shape=(n, n))
        return cls(a)

    @property
    def n(self):
        return self._adj.shape[0]

    @property
    def adjacency(self):
        return self._adj

    @property
    def degrees(self):
        return self._degrees

    def entries(self):
        """Yield (i, j, w) once per unordered stored pair, i <= j."""
        coo = sp.triu(self._adj).tocoo()
        for i, j, w in zip(coo.row, coo.col, coo.data):
            yield int(i), int(j), float(w)


class Partition:
    """A k-way partition of {0, ..., n-1} as a label vector.

    Labels are cluster ids 0..k-1; every id must occur at least once.
    """

    def __init__(self, labels, k=None):
        labels = np.asarray(labels, dtype=np.int64)
        if labels.ndim != 1 or labels.size == 0:
            raise InvalidPartitionError("labels must be a nonempty 1-d vector")
        if k is None:
            k = int(labels.max()) + 1
        present = np.bincount(labels[(labels >= 0) & (labels < k)], minlength=k)
        if labels.min() < 0 or labels.max() >= k:
            raise InvalidPartitionError(
                f"labels must lie in [0, {k}), got range "
                f"[{labels.min()}, {labels.max()}]"
            )
        if (present == 0).any():
            empty = int(np.argmin(present))
            raise InvalidPartitionError(f"cluster {empty} is empty")
        self.labels = labels
        self.k = k

    @property
    def n(self):
        return self.labels.size

    def clusters(self):
        """List of node-index arrays, one per cluster id in order."""
        order = np.argsort(self.labels, kind="stable")
        bounds = np.searchsorted(self.labels[order], np.arange(self.k + 1))
        return [order[bounds[i]:bounds[i + 1]] for i in range(self.k)]

    @classmethod
    def from_clusters(cls, n, clusters):
        labels = np.full(n, -1, dtype=np.int64)
        for cid, members in enumerate(clusters):
            labels[np.asarray(list(members), dtype=np.int64)] = cid
        if (labels < 0).any():
            missing = int(np.argmin(labels))
            raise InvalidPartitionError(f"node {missing} not covered by any cluster")
        return cls(labels, k=len(clusters))

    def __eq__(self, other):
        return (
            isinstance(other, Partition)
            and self.k == other.k
            and np.array_equal(self.labels, other.labels)
        )


class NormalizedLaplacian:
    """Sparse symmetric operator I - D^{-1/2} W D^{-1/2}."""

    def __init__(self, graph: WeightedGraph):
        d = graph.degrees
        if d.min() <= 0.0:
            node = int(np.argmin(d))
            raise InvalidGraphError(f"node {node} has zero degree")
        dinv = 1.0 / np.sqrt(d)
        scaled = graph.adjacency.multiply(dinv[:, None]).multiply(dinv[None, :])
        lap = sp.identity(graph.n, format="csr") - scaled.tocsr()
        self.matrix = lap
        self.n = graph.n
        self.sqrt_degrees = np.sqrt(d)

    def dot(self, x):
        return self.matrix @ x

    def toarray(self):
        return self.matrix.toarray()


def normalized_laplacian(graph: WeightedGraph) -> NormalizedLaplacian:
    """Normalized Laplacian of a graph with positive degrees."""
    return NormalizedLaplacian(graph)


def _as_index_array(graph, cluster):
    idx = np.asarray(sorted(cluster), dtype=np.int64)
    if idx.size == 0:
        raise InvalidPartitionError("conductance of an empty cluster is undefined")
    if idx.size and (idx[0] < 0 or idx[-1] >= graph.n):
        raise InvalidPartitionError(f"cluster indices out of range for n={graph.n}")
    if np.unique(idx).size != idx.size:
        raise InvalidPartitionError("cluster contains duplicate nodes")
    if idx.size == graph.n:
        raise InvalidPartitionError(
            "conductance of the whole node set is undefined"
        )
    return idx


def conductance(graph: WeightedGraph, cluster) -> float:
    """Cut weight between the cluster and its complement over its volume.

    The cluster must be a nonempty proper subset of the nodes.  Self-loops
    count toward the volume but not the cut, so the value lies in [0, 1].
    """
    idx = _as_index_array(graph, cluster)
    volume = float(graph.degrees[idx].sum())
    inside = np.zeros(graph.n, dtype=bool)
    inside[idx] = True
    sub = graph.adjacency[idx]
    # cut = total incident weight minus the weight staying inside the cluster
    internal = float(sub[:, idx].sum())
    cut = float(sub.sum()) - internal
    return cut / volume


def partition_profile(graph: WeightedGraph, partition: Partition):
    """Per-cluster conductance together with its max (MCC) and sum.

    The sum is the normalized-cut objective value of the given partition.
    """
    if partition.n != graph.n:
        raise InvalidPartitionError(
            f"partition covers {partition.n} nodes but the graph has {graph.n}"
        )
    phis = [conductance(graph, members) for members in partition.clusters()]
    return {
        "per_cluster": phis,
        "mcc": max(phis),
        "sum": float(sum(phis)),
    }
