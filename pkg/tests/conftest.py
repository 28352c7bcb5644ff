"""Shared builders and brute-force oracles for the test suite."""

import numpy as np
import pytest
import scipy.sparse as sp

from ellispec import Partition, WeightedGraph

THETA_CONST = 17.0 - 12.0 * np.sqrt(2.0)


def random_graph(rng, n, density=0.3):
    """Connected random weighted graph: a random cycle plus extra edges."""
    w = np.zeros((n, n))
    perm = rng.permutation(n)
    for a, b in zip(perm, np.roll(perm, 1)):
        w[a, b] = w[b, a] = rng.uniform(0.1, 1.0)
    mask = np.triu(rng.uniform(size=(n, n)) < density, 1)
    vals = rng.uniform(0.1, 1.0, size=(n, n))
    w = np.maximum(w, np.where(mask | mask.T, np.triu(vals, 1) + np.triu(vals, 1).T, 0.0))
    return WeightedGraph(sp.csr_matrix(w))


def random_partition(rng, n, k):
    """Random k-way labels with every cluster guaranteed nonempty."""
    if n < k:
        raise ValueError(f"need n >= k, got n={n}, k={k}")
    labels = np.concatenate([np.arange(k), rng.integers(k, size=n - k)])
    rng.shuffle(labels)
    return Partition(labels, k=k)


def brute_conductance(w_dense, degrees, cluster):
    """Double-loop cut/volume straight from the definition."""
    inside = set(int(i) for i in cluster)
    n = w_dense.shape[0]
    cut = 0.0
    for i in inside:
        for j in range(n):
            if j not in inside:
                cut += w_dense[i, j]
    vol = sum(degrees[i] for i in inside)
    return cut / vol


def random_orthogonal(rng, k):
    q, r = np.linalg.qr(rng.standard_normal((k, k)))
    return q * np.sign(np.diag(r))[None, :]


def planted_columns(rng, sizes, distinct_top=True):
    """Noise-free embedded columns for a planted partition.

    Draws per-node degree surrogates, builds the column matrix whose node
    columns are alpha_{i,j} * u_i for a random orthogonal U, and returns
    (P0, labels, stats).  ``stats`` carries the degree-ratio extremes and
    the representative (max-degree) node per cluster, computed directly
    from the drawn degrees with explicit loops.
    """
    k = len(sizes)
    n = sum(sizes)
    U = random_orthogonal(rng, k)
    labels = np.repeat(np.arange(k), sizes)
    degrees = rng.uniform(0.5, 2.0, size=n)
    if distinct_top:
        # make the per-cluster max degree clearly unique
        for i in range(k):
            members = np.flatnonzero(labels == i)
            top = members[int(np.argmax(degrees[members]))]
            degrees[top] *= 1.5
    P0 = np.zeros((k, n))
    alpha = np.zeros(n)
    reps = []
    alpha_min = np.inf
    alpha_star_min = np.inf
    theta_min, theta_max = np.inf, -np.inf
    for i in range(k):
        members = np.flatnonzero(labels == i)
        mu = degrees[members].sum()
        a = np.sqrt(degrees[members] / mu)
        alpha[members] = a
        star = a.max()
        reps.append(int(members[int(np.argmax(a))]))
        alpha_min = min(alpha_min, a.min())
        alpha_star_min = min(alpha_star_min, star)
        for v in a:
            if v < star:
                theta_min = min(theta_min, v / star)
                theta_max = max(theta_max, v / star)
        P0[:, members] = np.outer(U[:, i], a)
    stats = {
        "alpha_min": alpha_min,
        "alpha_star_min": alpha_star_min,
        "theta_min": theta_min,
        "theta_max": theta_max,
        "representatives": reps,
    }
    return P0, labels, stats


def scaled_noise(rng, shape, spectral_norm=None, column_norm=None):
    r = rng.standard_normal(shape)
    if column_norm is not None:
        r *= column_norm / np.linalg.norm(r, axis=0)[None, :]
    if spectral_norm is not None:
        s = np.linalg.norm(r, 2)
        if s > spectral_norm:
            r *= spectral_norm / s
    return r


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
