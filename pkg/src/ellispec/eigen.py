"""Bottom-k eigenpairs of the normalized Laplacian (the embedding stage).

Dense symmetric solver below a size threshold; Lanczos with full
reorthogonalization on the sparse operator above it.  Always retrieves
k+1 eigenpairs so the next eigenvalue is available for diagnostics.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from ._errors import ConvergenceError
from .graph import NormalizedLaplacian

__all__ = ["Embedding", "bottom_k_eigs", "gap_diagnostics"]

DENSE_THRESHOLD = 2048
RESIDUAL_TOL = 1e-10


@dataclass
class Embedding:
    """k x n matrix whose rows are the bottom-k eigenvectors.

    Column ell holds the coordinates of node ell in R^k.  Rows are
    orthonormal; ``lambda_next`` is the (k+1)th smallest eigenvalue.
    """

    k: int
    n: int
    P: np.ndarray
    eigenvalues: np.ndarray
    lambda_next: float

    def column(self, ell):
        return self.P[:, ell]


def _validate(P, vals, lap, tol=1e-8):
    k = P.shape[0]
    gram = P @ P.T
    if np.abs(gram - np.eye(k)).max() > tol:
        raise ConvergenceError(
            "eigenvector rows are not orthonormal",
            achieved=float(np.abs(gram - np.eye(k)).max()),
        )
    resid = lap.dot(P.T) - P.T * vals[None, :]
    worst = float(np.linalg.norm(resid, axis=0).max())
    if worst > tol:
        raise ConvergenceError(
            f"eigen-residual {worst:.3e} exceeds {tol:.1e}", achieved=worst
        )


def _dense_eigs(lap, k):
    dense = lap.toarray()
    vals, vecs = scipy.linalg.eigh(dense, subset_by_index=[0, k])
    return vals, vecs


def _lanczos_eigs(lap, k, tol=RESIDUAL_TOL):
    """Lanczos with full reorthogonalization for the k+1 smallest pairs."""
    n = lap.n
    rng = np.random.default_rng(0x5EED)
    max_matvecs = 50 * n
    m_cap = min(n, max_matvecs)

    V = np.zeros((n, 0))
    alphas, betas = [], []
    v = rng.standard_normal(n)
    v /= np.linalg.norm(v)
    V = np.column_stack([V, v])
    matvecs = 0
    last = None

    while matvecs < max_matvecs and V.shape[1] <= m_cap:
        w = lap.dot(V[:, -1])
        matvecs += 1
        alpha = float(V[:, -1] @ w)
        alphas.append(alpha)
        w -= V @ (V.T @ w)
        w -= V @ (V.T @ w)  # second pass keeps the basis orthogonal
        beta = float(np.linalg.norm(w))

        m = len(alphas)
        if m >= k + 1 and (m % 5 == 0 or beta <= tol or m == m_cap):
            T = np.diag(alphas)
            off = np.array(betas)
            if off.size:
                T += np.diag(off, 1) + np.diag(off, -1)
            tvals, tvecs = scipy.linalg.eigh(T)
            ritz_resid = beta * np.abs(tvecs[-1, : k + 1])
            last = (tvals, tvecs, ritz_resid)
            if ritz_resid.max() <= tol or beta <= tol:
                vals = tvals[: k + 1]
                vecs = V @ tvecs[:, : k + 1]
                return vals, vecs

        if beta <= tol:
            # invariant subspace hit before convergence of all pairs:
            # restart direction orthogonal to current basis
            w = rng.standard_normal(n)
            w -= V @ (V.T @ w)
            beta = float(np.linalg.norm(w))
            if beta <= tol:
                break
            betas.append(0.0)
        else:
            betas.append(beta)
        V = np.column_stack([V, w / beta])

    achieved = float(last[2].max()) if last is not None else np.inf
    raise ConvergenceError(
        f"Lanczos did not converge within {max_matvecs} matrix-vector "
        f"products (residual {achieved:.3e})",
        achieved=achieved,
    )


def bottom_k_eigs(lap: NormalizedLaplacian, k: int,
                  dense_threshold: int = DENSE_THRESHOLD) -> Embedding:
    """Compute the k smallest eigenpairs plus the (k+1)th eigenvalue."""
    n = lap.n
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    if n <= dense_threshold:
        vals, vecs = _dense_eigs(lap, k)
    else:
        vals, vecs = _lanczos_eigs(lap, k)
    order = np.argsort(vals)
    vals = vals[order]
    vecs = vecs[:, order]
    P = vecs[:, :k].T.copy()
    _validate(P, vals[:k], lap)
    return Embedding(k=k, n=n, P=P, eigenvalues=vals[:k],
                     lambda_next=float(vals[k]))


def gap_diagnostics(embedding: Embedding, profile):
    """Ratio lambda_{k+1} / MCC, a computable proxy for the spectral gap.

    The MCC of any concrete partition upper-bounds the graph conductance,
    so the ratio lower-bounds the true gap.  Zero MCC reports infinity.
    """
    mcc = profile["mcc"]
    ratio = np.inf if mcc == 0 else embedding.lambda_next / mcc
    return {
        "lambda_next": embedding.lambda_next,
        "mcc": mcc,
        "ratio": ratio,
    }
