"""Spatiotemporal sampling plans for circular convolution evolution systems.

Thin Python surface over the C++ core: frame tests, spark analysis,
universal sampling-set constructions and the evolve-sample-reconstruct
pipeline.
"""

from ._dynsamp import (
    DEFAULT_GROUP_TOL,
    DEFAULT_RANK_TOL,
    annihilator_degree,
    apply_operator,
    consecutive_set,
    find_singular_witness,
    fourier_matrix,
    frame_test_direct,
    frame_test_projection,
    gcd_pair_set,
    is_full_spark_rows,
    is_uniformly_distributed,
    level_partition,
    min_period_bound,
    min_sensor_bound,
    monotone_symmetric_kernel,
    never_frame,
    numerical_rank,
    orbits,
    periodic_W_set,
    periodic_frame_test,
    random_symmetric_kernel,
    search_minimal,
    simulate_reconstruct,
    spark,
    sym2d_periodic_set,
    sym2d_set,
)

__all__ = [
    "DEFAULT_GROUP_TOL",
    "DEFAULT_RANK_TOL",
    "annihilator_degree",
    "apply_operator",
    "consecutive_set",
    "find_singular_witness",
    "fourier_matrix",
    "frame_test_direct",
    "frame_test_projection",
    "gcd_pair_set",
    "is_full_spark_rows",
    "is_uniformly_distributed",
    "level_partition",
    "min_period_bound",
    "min_sensor_bound",
    "monotone_symmetric_kernel",
    "never_frame",
    "numerical_rank",
    "orbits",
    "periodic_W_set",
    "periodic_frame_test",
    "random_symmetric_kernel",
    "search_minimal",
    "simulate_reconstruct",
    "spark",
    "sym2d_periodic_set",
    "sym2d_set",
]
