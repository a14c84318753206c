#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dynsamp/spectral.hpp"

namespace dynsamp {

/// Sensor set with a per-sensor time depth: sensor i contributes the
/// vectors e_i, A e_i, ..., A^{l_i} e_i to the sample family.
struct SamplingPlan {
  FiniteGroup group;
  std::vector<int> omega;   // ascending flat indices, nonempty
  std::vector<int> depths;  // aligned with omega, each >= 0

  static SamplingPlan uniform(const FiniteGroup& group, std::vector<int> omega, int depth);
  static SamplingPlan make(const FiniteGroup& group, std::vector<int> omega,
                           std::vector<int> depths);

  int total_samples() const;
  int depth_of(int flat_index) const;
};

enum class Verdict { Frame, NotFrame, NeverFrame };

const char* to_string(Verdict v);

/// Outcome of a frame decision. Frame bounds are the extreme squared
/// singular values of the synthesis matrix and are filled only when the
/// verdict is Frame and the test built that matrix.
struct FrameReport {
  Verdict verdict = Verdict::NotFrame;
  int rank = 0;
  int required_rank = 0;
  std::optional<double> lower_frame_bound;
  std::optional<double> upper_frame_bound;
  std::optional<int> failing_class;
  int min_cardinality_bound = 0;  // largest geometric multiplicity M_A
  bool ambiguity = false;         // level-set grouping was ambiguous
  bool depth_insufficient = false;
  std::string note;

  bool is_frame() const { return verdict == Verdict::Frame; }
};

/// Rank test on the full synthesis matrix whose rows are the (conjugated)
/// frequency-domain sample vectors diag(symbol)^s F e_i, s = 0..l_i. Frame
/// iff the numerical rank equals the group order.
FrameReport frame_test_direct(const Kernel& k, const SamplingPlan& plan,
                              double rank_tol = kDefaultRankTol,
                              double group_tol = kDefaultGroupTol);

/// Spectral-projection criterion: each level class Lambda_k must satisfy
/// rank(X[Lambda_k, Omega]) = |Lambda_k|, and every depth must reach the
/// annihilator degree minus one. A failing class is depth-independent, so
/// the verdict is NeverFrame; if all classes pass but some depth falls
/// short, the verdict falls back to frame_test_direct with a note.
FrameReport frame_test_projection(const Kernel& k, const SamplingPlan& plan,
                                  double rank_tol = kDefaultRankTol,
                                  double group_tol = kDefaultGroupTol);

/// True iff no choice of depths makes the sample family a frame: some level
/// class fails the projected-rank test (depths beyond the annihilator degree
/// add nothing to the span).
bool never_frame_test(const Kernel& k, const std::vector<int>& omega,
                      double rank_tol = kDefaultRankTol, double group_tol = kDefaultGroupTol);

/// Lower bound for the cardinality of any admissible sensor set: the
/// largest geometric multiplicity M_A.
int min_sensor_bound(const Kernel& k, double group_tol = kDefaultGroupTol);

/// A union of cosets m*Z_d + r for r in W, sampled with a uniform depth
/// (default m-1).
struct PeriodicPlan {
  int d = 0;
  int m = 0;           // divisor of d, > 1
  std::vector<int> W;  // ascending subset of Z_m, nonempty
  int depth = 0;

  int J() const { return d / m; }
  /// The induced irregular plan: Omega = {r + m*t : r in W, t in Z_J}.
  SamplingPlan induced() const;
};

PeriodicPlan make_periodic_plan(int d, int m, std::vector<int> W,
                                std::optional<int> depth = std::nullopt);

/// Periodic-coset criterion: for each frequency offset k the slice
/// a_k = [symbol(k), symbol(k+J), ..., symbol(k+(m-1)J)] is partitioned into
/// level sets Lambda_{j,k}, and {P_{Lambda_{j,k}} F_m e_r : r in W} must be
/// complete on each class. The verdict is Frame iff all (j, k) pass;
/// otherwise NeverFrame with failing_class = k*m + j (slice-major).
/// Equivalent to frame_test_direct on the induced plan with depth m-1.
FrameReport periodic_frame_test(const Kernel& k, const PeriodicPlan& plan,
                                double rank_tol = kDefaultRankTol,
                                double group_tol = kDefaultGroupTol);

/// Lower bound for |W|: the largest multiplicity within any slice a_k.
int min_period_bound(const Kernel& k, int m, double group_tol = kDefaultGroupTol);

}  // namespace dynsamp
