"""Smoke tests for the Python module against the worked small cases."""

import numpy as np
import pytest

dynsamp = pytest.importorskip("dynsamp")


def test_fourier_matrix_is_unitary():
    x = dynsamp.fourier_matrix([3, 4])
    assert x.shape == (12, 12)
    np.testing.assert_allclose(x.conj().T @ x, np.eye(12), atol=1e-12)


def test_z4_worked_examples():
    a1 = np.array([1, 2, 3, 4], dtype=complex)
    a2 = np.array([1, 2, 1, 2], dtype=complex)

    for i in range(4):
        report = dynsamp.frame_test_direct([4], a1, [i], [3])
        assert report["is_frame"]

    assert dynsamp.frame_test_direct([4], a2, [1, 2], [1, 1])["is_frame"]
    assert not dynsamp.frame_test_direct([4], a2, [1, 3], [10, 10])["is_frame"]
    assert dynsamp.never_frame([4], a2, [1, 3])
    assert not dynsamp.never_frame([4], a2, [1, 2])
    assert dynsamp.min_sensor_bound([4], a2) == 2


def test_level_partition():
    part = dynsamp.level_partition([4], np.array([1, 2, 1, 2], dtype=complex))
    assert part["classes"] == [[0, 2], [1, 3]]
    assert not part["ambiguity"]


def test_spark_and_uniform_distribution():
    x5 = dynsamp.fourier_matrix([5])
    spark, full, witness = dynsamp.spark(x5[[0, 2], :])
    assert full and spark == 3 and witness == []

    assert dynsamp.is_full_spark_rows([5], [0, 2])
    assert not dynsamp.is_full_spark_rows([4], [0, 2])
    assert dynsamp.is_uniformly_distributed(8, [0, 1, 2])
    assert not dynsamp.is_uniformly_distributed(4, [0, 2])


def test_constructions():
    assert dynsamp.consecutive_set(6, 3) == [0, 1, 2]
    assert dynsamp.gcd_pair_set(9, 0, 2) == [0, 2]
    with pytest.raises(Exception):
        dynsamp.gcd_pair_set(9, 0, 3)

    oct5 = dynsamp.sym2d_set(5, "octagonal")
    assert len(oct5["omega"]) == 8
    assert oct5["depth"] == 5

    plan = dynsamp.periodic_W_set(6, 3, [0, 1])
    assert plan["depths"] == [2, 2, 2, 2]


def test_round_trip_reconstruction():
    rng = np.random.default_rng(7)
    symbol = np.array([1, 2, 1, 2], dtype=complex)
    f = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    result = dynsamp.simulate_reconstruct([4], symbol, [1, 2], [1, 1], f)
    assert result["exact"]
    assert np.linalg.norm(result["estimate"] - f) < 1e-8 * np.linalg.norm(f)


def test_symmetric_kernels_and_search():
    sym = dynsamp.random_symmetric_kernel(5, "quadrantal", seed=3)
    assert dynsamp.min_sensor_bound([5, 5], sym) == 4

    a2 = np.array([1, 2, 1, 2], dtype=complex)
    sets = dynsamp.search_minimal([4], a2, 2)
    assert sets == [[0, 1], [0, 3], [1, 2], [2, 3]]
