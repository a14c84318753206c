#pragma once

#include <cstdint>
#include <vector>

#include "dynsamp/frame.hpp"

namespace dynsamp {

/// One spatiotemporal sample: the value of A^time f at a sensor.
struct SampleRecord {
  int sensor = 0;  // flat index, must belong to the plan's omega
  int time = 0;    // 0..depth of that sensor
  Complex value;
};

struct ReconstructionResult {
  CVector estimate;
  double residual_norm = 0;
  /// sigma_max / sigma_min over the nonzero singular values of the sampling
  /// matrix; equals sqrt(B/A) of the adjoint-kernel frame bounds.
  double condition_number = 0;
  bool exact = false;  // sampling map injective and residual below tolerance
  int rank = 0;
  int required_rank = 0;
};

/// Evolves f under the kernel and reads it at the plan's sensors and times,
/// optionally adding circular complex Gaussian noise of standard deviation
/// noise_std (total variance across both components).
std::vector<SampleRecord> simulate_samples(const Kernel& k, const CVector& f,
                                           const SamplingPlan& plan, double noise_std = 0.0,
                                           std::uint64_t seed = 0);

/// Least-squares recovery of the initial state from the stacked system
/// sample = (A^t f)(i), via a rank-revealing SVD factorization.
ReconstructionResult reconstruct(const Kernel& k, const SamplingPlan& plan,
                                 const std::vector<SampleRecord>& samples,
                                 double exact_tol = 1e-8,
                                 double rank_tol = kDefaultRankTol);

/// Zeroes the entries outside omega, preserving length.
CVector subsample(const CVector& v, const std::vector<int>& omega);

}  // namespace dynsamp
