#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynsamp/frame.hpp"
#include "dynsamp/symmetry2d.hpp"

namespace dynsamp {

/// Structured rejection of a recipe whose arithmetic preconditions fail:
/// carries the offending parameter name and, for gcd conditions, the
/// common divisor that breaks coprimality.
class RecipeError : public std::runtime_error {
 public:
  RecipeError(std::string param, long long divisor, const std::string& message);
  const std::string& param() const { return param_; }
  long long divisor() const { return divisor_; }

 private:
  std::string param_;
  long long divisor_;
};

/// A constructed sensor set whose depth may depend on the kernel it is
/// eventually used with. Recipes with a theorem-given depth formula carry it
/// in claimed_depth; class-universal recipes (consecutive, gcd-pair) leave
/// it empty, meaning "number of distinct eigenvalues minus one" at bind
/// time.
struct PlanBlueprint {
  FiniteGroup group;
  std::vector<int> omega;  // ascending flat indices
  std::optional<int> claimed_depth;
  std::string kind;

  /// Resolves depths against a kernel: r_i - 1 per sensor, tightened below
  /// the claimed depth when the annihilator degree allows it.
  SamplingPlan bind(const Kernel& k, double group_tol = kDefaultGroupTol) const;
  SamplingPlan with_uniform_depth(int depth) const;
};

/// Omega = {0..L-1}; universal for operators with largest multiplicity L.
PlanBlueprint consecutive_set(int d, int L);

/// Omega = {i1, i2}; universal for multiplicity-2 operators iff
/// gcd(|i1-i2|, d) = 1. Rejects with the failing divisor otherwise.
PlanBlueprint gcd_pair_set(int d, int i1, int i2);

/// Union of cosets m*Z_d + r, r in W, with depth m-1; accepted iff the W
/// rows of F_m form a full spark matrix (the rejection carries a dependent
/// column witness in the message).
PeriodicPlan periodic_W_set(int d, int m, std::vector<int> W,
                            double rank_tol = kDefaultRankTol);

/// Parameters for the 2D symmetry constructions. For the diagonal class the
/// progression uses (i1, i2) along the first axis, or (j1, j2) along the
/// second when column_variant is set; octagonal swaps which axis carries
/// the pair vs the 4-term progression.
struct Sym2DParams {
  int i1 = 0, i2 = 0, j1 = 0, j2 = 0;
  bool column_variant = false;
};

/// The four irregular 2D constructions (d odd):
///   linf:       Omega = {0,1} x Z_d  u  Z_d x {0,1},  depth (d-1)/2
///   quadrantal: Omega = {i1,i2} x {j1,j2},            depth (d+1)^2/4 - 1
///   diagonal:   Omega = {(i1 + t*i2, 0) : t=0..3},    depth (d+1)^2/4 - 1
///   octagonal:  Omega = {i1,i2} x {j1 + t*j2 : t=0..3},
///               depth (d+1)(d+3)/8 - 1
/// Rejects even d, gcd violations (naming the parameter), and parameter
/// sets whose points collapse modulo d (the 4-term progressions need d >= 5).
PlanBlueprint sym2d_set(int d, Symmetry2D sym, const Sym2DParams& params = {});

/// 2D union of periodic cosets: Omega = (m*Z_d x m*Z_d) + W with W built by
/// the same four formulas over Z_m and uniform depth m^2 - 1.
struct PeriodicPlan2D {
  int d = 0;
  int m = 0;
  std::vector<std::array<int, 2>> W;  // ascending, over Z_m x Z_m
  int depth = 0;

  int J() const { return d / m; }
  SamplingPlan induced() const;
};

PeriodicPlan2D sym2d_periodic_set(int d, int m, Symmetry2D sym, const Sym2DParams& params = {});

/// Exhaustive search for admissible sets: every omega with
/// min_sensor_bound <= |omega| <= max_size that passes the projection test
/// at depths r_i - 1, in ascending lexicographic order. A tenth of the hits
/// are re-verified with the direct test.
std::vector<std::vector<int>> search_minimal(const Kernel& k, int max_size,
                                             double rank_tol = kDefaultRankTol,
                                             double group_tol = kDefaultGroupTol,
                                             int order_cap_1d = 64, int order_cap_nd = 36);

}  // namespace dynsamp
