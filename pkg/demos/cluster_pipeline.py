"""End-to-end clustering on a synthetic graph.

Embeds the graph with the bottom eigenvectors of its normalized
Laplacian, groups the embedded columns with the ellipsoid + successive
projection pipeline, and compares the result against the k-means
baseline on the same embedding.
"""

import numpy as np

from ellispec import (
    accuracy,
    elli_cluster,
    ksc_cluster,
    nmi,
    partition_profile,
    synth_adjacency,
)

inst = synth_adjacency([80, 120, 100, 90], delta=0.6, rng=3)
k = inst.truth.k
print(f"graph: {inst.graph.n} nodes, {k} planted clusters, delta = 0.6")
print()

result = elli_cluster(inst.graph, k)
profile = partition_profile(inst.graph, result.partition)
print("ellipsoid grouping")
print(f"  accuracy          {accuracy(result.partition, inst.truth):.4f}")
print(f"  NMI               {nmi(result.partition, inst.truth):.4f}")
print(f"  max conductance   {profile['mcc']:.4f}")
print(f"  representatives   {result.representatives}")
print(f"  boundary columns  {result.active_count}")
for stage, seconds in sorted(result.timings.items()):
    print(f"  {stage:<17} {seconds * 1e3:8.2f} ms")

print()
print("k-means baseline (10 restarts)")
runs = ksc_cluster(inst.graph, k, trials=10, seed=0)
acs = [accuracy(r.partition, inst.truth) for r in runs]
mccs = [partition_profile(inst.graph, r.partition)["mcc"] for r in runs]
best = min(runs, key=lambda r: r.cost)
print(f"  accuracy mean/min {np.mean(acs):.4f} / {np.min(acs):.4f}")
print(f"  MCC mean/max      {np.mean(mccs):.4f} / {np.max(mccs):.4f}")
print(f"  best-cost trial   accuracy {accuracy(best.partition, inst.truth):.4f}")
print()
print("The grouping stage is deterministic; the baseline's spread across")
print("restarts is what the ellipsoid pipeline avoids.")
