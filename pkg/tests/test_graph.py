import numpy as np
import pytest
import scipy.sparse as sp

from ellispec import (
    InvalidGraphError,
    InvalidPartitionError,
    Partition,
    WeightedGraph,
    conductance,
    normalized_laplacian,
    partition_profile,
    synth_adjacency,
)

from conftest import brute_conductance, random_graph, random_partition


def path2():
    return WeightedGraph.from_entries(2, [(0, 1, 1.0)])


def four_cycle():
    return WeightedGraph.from_entries(4, [(0, 1, 1.0), (1, 2, 1.0),
                                          (2, 3, 1.0), (3, 0, 1.0)])


class TestWeightedGraph:
    def test_symmetry_enforced(self):
        m = sp.csr_matrix(np.array([[0.0, 1.0], [2.0, 0.0]]))
        with pytest.raises(InvalidGraphError):
            WeightedGraph(m)

    def test_nonpositive_weight_rejected(self):
        with pytest.raises(InvalidGraphError):
            WeightedGraph.from_entries(2, [(0, 1, -1.0)])

    def test_zero_degree_rejected_and_named(self):
        m = np.zeros((3, 3))
        m[0, 1] = m[1, 0] = 1.0
        with pytest.raises(InvalidGraphError, match="node 2"):
            WeightedGraph(sp.csr_matrix(m))

    def test_duplicate_entries_summed(self):
        g = WeightedGraph.from_entries(2, [(0, 1, 1.0), (0, 1, 2.0)])
        assert g.adjacency[0, 1] == 3.0

    def test_degrees_include_self_loops(self):
        g = WeightedGraph.from_entries(2, [(0, 1, 1.0), (0, 0, 2.0)])
        assert g.degrees[0] == 3.0
        assert g.degrees[1] == 1.0


class TestNormalizedLaplacian:
    def test_two_node_path(self):
        lap = normalized_laplacian(path2())
        assert np.allclose(lap.toarray(), [[1.0, -1.0], [-1.0, 1.0]])

    def test_kernel_vector(self, rng):
        for n in (5, 20, 60):
            g = random_graph(rng, n)
            lap = normalized_laplacian(g)
            v = np.sqrt(g.degrees)
            assert np.linalg.norm(lap.dot(v)) <= 1e-10 * np.linalg.norm(v)

    def test_disjoint_cliques_null_space(self, rng):
        k, size = 4, 6
        blocks = [np.ones((size, size)) - np.eye(size)] * k
        w = sp.block_diag(blocks)
        lap = normalized_laplacian(WeightedGraph(w))
        vals = np.linalg.eigvalsh(lap.toarray())
        assert np.sum(np.abs(vals) < 1e-10) == k

    def test_spectrum_in_range(self, rng):
        g = random_graph(rng, 30)
        vals = np.linalg.eigvalsh(normalized_laplacian(g).toarray())
        assert vals.min() >= -1e-10
        assert vals.max() <= 2 + 1e-10


class TestConductance:
    def test_four_cycle_adjacent_pair(self):
        assert conductance(four_cycle(), {0, 1}) == pytest.approx(0.5)

    def test_block_diagonal_zero(self):
        w = sp.block_diag([np.ones((3, 3)) - np.eye(3)] * 2)
        g = WeightedGraph(w)
        assert conductance(g, {0, 1, 2}) == 0.0

    def test_singleton_no_self_loop(self, rng):
        g = random_graph(rng, 10)
        assert conductance(g, {3}) == pytest.approx(1.0)

    def test_singleton_with_self_loop(self):
        g = WeightedGraph.from_entries(2, [(0, 1, 1.0), (0, 0, 1.0)])
        # degree 2, cut 1: the self-loop stays inside
        assert conductance(g, {0}) == pytest.approx(0.5)

    def test_empty_and_full_rejected(self, rng):
        g = random_graph(rng, 5)
        with pytest.raises(InvalidPartitionError):
            conductance(g, set())
        with pytest.raises(InvalidPartitionError):
            conductance(g, set(range(5)))

    def test_matches_brute_force(self, rng):
        for _ in range(10):
            n = int(rng.integers(5, 50))
            g = random_graph(rng, n)
            dense = g.adjacency.toarray()
            size = int(rng.integers(1, n))
            cluster = rng.choice(n, size=size, replace=False)
            assert conductance(g, cluster) == pytest.approx(
                brute_conductance(dense, g.degrees, cluster), abs=1e-12
            )

    def test_weight_scaling_invariance(self, rng):
        g = random_graph(rng, 15)
        scaled = WeightedGraph(g.adjacency * 7.5)
        cluster = {0, 3, 7}
        assert conductance(g, cluster) == pytest.approx(
            conductance(scaled, cluster), abs=1e-12
        )

    def test_rayleigh_quotient_identity(self, rng):
        for _ in range(10):
            n = int(rng.integers(6, 40))
            g = random_graph(rng, n)
            lap = normalized_laplacian(g)
            size = int(rng.integers(1, n))
            cluster = rng.choice(n, size=size, replace=False)
            ind = np.zeros(n)
            ind[cluster] = 1.0
            gbar = np.sqrt(g.degrees) * ind
            gbar /= np.linalg.norm(gbar)
            assert conductance(g, cluster) == pytest.approx(
                float(gbar @ lap.dot(gbar)), abs=1e-8
            )


class TestPartition:
    def test_empty_cluster_rejected(self):
        with pytest.raises(InvalidPartitionError):
            Partition([0, 0, 2], k=3)

    def test_clusters_roundtrip(self, rng):
        p = random_partition(rng, 30, 4)
        rebuilt = Partition.from_clusters(30, p.clusters())
        assert rebuilt == p


class TestPartitionProfile:
    def test_four_cycle_split(self):
        profile = partition_profile(four_cycle(), Partition([0, 0, 1, 1]))
        assert profile["mcc"] == pytest.approx(0.5)
        assert profile["sum"] == pytest.approx(1.0)

    def test_zero_delta_truth_profile(self):
        inst = synth_adjacency([10, 15, 12], 0.0, 5)
        profile = partition_profile(inst.graph, inst.truth)
        assert profile["mcc"] == 0.0
        assert profile["sum"] == 0.0

    def test_max_sum_inequality(self, rng):
        for _ in range(5):
            g = random_graph(rng, 25)
            p = random_partition(rng, 25, 4)
            profile = partition_profile(g, p)
            assert profile["mcc"] <= profile["sum"] + 1e-12
            assert profile["sum"] <= p.k * profile["mcc"] + 1e-12

    def test_size_mismatch_rejected(self, rng):
        g = random_graph(rng, 10)
        with pytest.raises(InvalidPartitionError):
            partition_profile(g, Partition([0, 1, 0]))
