"""Successive projection: greedy max-norm column selection.

Repeatedly picks the candidate column of largest Euclidean norm, then
projects every remaining candidate onto the orthogonal complement of the
picked column.  Ties go to the lowest index.  Used to thin an active set
down to exactly k indices.
"""

from __future__ import annotations

import math

import numpy as np

from ._errors import RankError

__all__ = ["spa_select"]

_COLLAPSE_TOL = 1e-12


def spa_select(P: np.ndarray, candidates, k: int) -> list[int]:
    """Select k distinct indices from ``candidates`` by successive projection.

    Returns the indices in selection order.  Raises RankError if the
    candidate columns collapse (all residual norms below tolerance)
    before k picks are made.
    """
    P = np.asarray(P, dtype=np.float64)
    cand = np.asarray(sorted(candidates), dtype=np.int64)
    if cand.size < k:
        raise ValueError(f"need at least {k} candidates, got {cand.size}")

    residual = P[:, cand].copy()
    basis = np.zeros((P.shape[0], 0))
    selected = []
    for _ in range(k):
        norms = np.einsum("ij,ij->j", residual, residual)
        j = int(np.argmax(norms))
        if norms[j] <= _COLLAPSE_TOL**2:
            raise RankError(
                f"candidate columns collapsed after {len(selected)} of {k} "
                "selections",
                numerical_rank=len(selected),
            )
        selected.append(int(cand[j]))
        q = residual[:, j].copy()
        # Gram-Schmidt against the previously picked directions, with one
        # reorthogonalization pass for stability
        q -= basis @ (basis.T @ q)
        q -= basis @ (basis.T @ q)
        q /= math.sqrt(float(q @ q))
        basis = np.column_stack([basis, q])
        residual -= np.outer(q, q @ residual)
    return selected
