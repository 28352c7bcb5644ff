"""Reading cluster structure off the Laplacian spectrum.

The number of near-zero eigenvalues of the normalized Laplacian counts
the well-separated pieces of a graph, and the ratio between the next
eigenvalue and a partition's worst conductance measures how decisively
that partition explains the graph.
"""

import numpy as np

from ellispec import (
    bottom_k_eigs,
    gap_diagnostics,
    normalized_laplacian,
    partition_profile,
    synth_adjacency,
)

k = 4
print(f"{'delta':>6} {'lambda_1..k':<34} {'lambda_k+1':>10} {'gap ratio':>10}")
for delta in (0.0, 0.2, 0.8, 1.6):
    inst = synth_adjacency([50] * k, delta, rng=2)
    lap = normalized_laplacian(inst.graph)
    emb = bottom_k_eigs(lap, k)
    profile = partition_profile(inst.graph, inst.truth)
    diag = gap_diagnostics(emb, profile)
    spectrum = " ".join(f"{v:.4f}" for v in emb.eigenvalues)
    ratio = "inf" if np.isinf(diag["ratio"]) else f"{diag['ratio']:10.2f}"
    print(f"{delta:>6.1f} {spectrum:<34} {diag['lambda_next']:>10.4f} "
          f"{ratio:>10}")

print()
print("At delta = 0 the k blocks are disconnected: k exact zeros and an")
print("infinite gap ratio.  As delta grows the bottom eigenvalues lift")
print("and the ratio shrinks -- the partition explains less of the graph.")
