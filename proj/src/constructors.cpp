#include "dynsamp/constructors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dynsamp/combinatorics.hpp"
#include "dynsamp/parallel.hpp"
#include "dynsamp/spark.hpp"

namespace dynsamp {

RecipeError::RecipeError(std::string param, long long divisor, const std::string& message)
    : std::runtime_error(message), param_(std::move(param)), divisor_(divisor) {}

SamplingPlan PlanBlueprint::bind(const Kernel& k, double group_tol) const {
  if (!(k.group == group))
    throw std::invalid_argument("blueprint: kernel group does not match plan group");
  std::vector<int> depths;
  depths.reserve(omega.size());
  for (int i : omega) {
    int depth = annihilator_degree(k, i, group_tol) - 1;
    if (claimed_depth) depth = std::min(depth, *claimed_depth);
    depths.push_back(std::max(depth, 0));
  }
  return SamplingPlan::make(group, omega, std::move(depths));
}

SamplingPlan PlanBlueprint::with_uniform_depth(int depth) const {
  return SamplingPlan::uniform(group, omega, depth);
}

PlanBlueprint consecutive_set(int d, int L) {
  if (d < 1) throw RecipeError("d", 0, "consecutive: d must be >= 1");
  if (L < 1 || L > d) throw RecipeError("L", 0, "consecutive: need 1 <= L <= d");
  PlanBlueprint bp;
  bp.group = make_group({d});
  bp.omega.resize(L);
  std::iota(bp.omega.begin(), bp.omega.end(), 0);
  bp.kind = "consecutive";
  return bp;
}

PlanBlueprint gcd_pair_set(int d, int i1, int i2) {
  if (d < 1) throw RecipeError("d", 0, "gcd-pair: d must be >= 1");
  const int diff = std::abs(i1 - i2);
  const long long g = std::gcd(diff, d);
  if (g != 1)
    throw RecipeError("|i1-i2|", g,
                      "gcd-pair: gcd(|i1-i2|, d) = " + std::to_string(g) + ", not 1");
  PlanBlueprint bp;
  bp.group = make_group({d});
  bp.omega = {((i1 % d) + d) % d, ((i2 % d) + d) % d};
  std::sort(bp.omega.begin(), bp.omega.end());
  bp.kind = "gcd-pair";
  return bp;
}

PeriodicPlan periodic_W_set(int d, int m, std::vector<int> W, double rank_tol) {
  PeriodicPlan plan = make_periodic_plan(d, m, std::move(W));
  const FiniteGroup gm = make_group({m});
  std::vector<int> all_cols(m);
  std::iota(all_cols.begin(), all_cols.end(), 0);
  const CMatrix rows = submatrix(fourier_matrix(gm), plan.W, all_cols);
  const SparkResult sp = spark_with_witness(rows, rank_tol);
  if (!sp.full_spark) {
    std::string cols;
    for (int c : sp.witness) cols += (cols.empty() ? "" : ",") + std::to_string(c);
    throw RecipeError("W", 0,
                      "periodic-W: (F_m)_W is not full spark; dependent columns {" + cols + "}");
  }
  return plan;
}

namespace {

void require_odd(int d) {
  if (d < 1 || d % 2 == 0) throw RecipeError("d", 2, "symmetry construction: d must be odd");
}

long long gcd_check(const std::string& param, int value, int modulus) {
  const long long g = std::gcd(std::abs(value), modulus);
  if (g != 1)
    throw RecipeError(param, g,
                      "symmetry construction: gcd(" + param + ", " + std::to_string(modulus) +
                          ") = " + std::to_string(g) + ", not 1");
  return g;
}

/// The 4-term progression {base + t*step : t = 0..3} must stay injective
/// mod n; with gcd(step, n) = 1 that holds exactly when n >= 4.
std::vector<int> progression4(const std::string& param, int base, int step, int n) {
  std::set<int> seen;
  std::vector<int> out;
  for (int t = 0; t < 4; ++t) {
    const int v = (((base + t * step) % n) + n) % n;
    if (!seen.insert(v).second)
      throw RecipeError(param, n,
                        "symmetry construction: the 4-term progression collapses mod " +
                            std::to_string(n) + " (need n >= 5)");
    out.push_back(v);
  }
  return out;
}

/// Shared point-set builder for the irregular and periodic variants; n is d
/// or m respectively.
std::vector<std::array<int, 2>> sym2d_points(int n, Symmetry2D sym, const Sym2DParams& p) {
  std::set<std::array<int, 2>> points;
  auto norm = [n](int v) { return ((v % n) + n) % n; };
  switch (sym) {
    case Symmetry2D::LInf: {
      for (int i : {0, 1})
        for (int j = 0; j < n; ++j) {
          points.insert({i, j});
          points.insert({j, i});
        }
      break;
    }
    case Symmetry2D::Quadrantal: {
      gcd_check("|i1-i2|", p.i1 - p.i2, n);
      gcd_check("|j1-j2|", p.j1 - p.j2, n);
      for (int i : {norm(p.i1), norm(p.i2)})
        for (int j : {norm(p.j1), norm(p.j2)}) points.insert({i, j});
      break;
    }
    case Symmetry2D::Diagonal: {
      if (!p.column_variant) {
        gcd_check("i2", p.i2, n);
        for (int v : progression4("i2", p.i1, p.i2, n)) points.insert({v, 0});
      } else {
        gcd_check("j2", p.j2, n);
        for (int v : progression4("j2", p.j1, p.j2, n)) points.insert({0, v});
      }
      break;
    }
    case Symmetry2D::Octagonal: {
      if (!p.column_variant) {
        gcd_check("|i1-i2|", p.i1 - p.i2, n);
        gcd_check("j2", p.j2, n);
        for (int i : {norm(p.i1), norm(p.i2)})
          for (int j : progression4("j2", p.j1, p.j2, n)) points.insert({i, j});
      } else {
        gcd_check("|j1-j2|", p.j1 - p.j2, n);
        gcd_check("i2", p.i2, n);
        for (int j : {norm(p.j1), norm(p.j2)})
          for (int i : progression4("i2", p.i1, p.i2, n)) points.insert({i, j});
      }
      break;
    }
  }
  return {points.begin(), points.end()};
}

int sym2d_depth(int n, Symmetry2D sym) {
  switch (sym) {
    case Symmetry2D::LInf: return (n - 1) / 2;
    case Symmetry2D::Quadrantal:
    case Symmetry2D::Diagonal: return (n + 1) * (n + 1) / 4 - 1;
    case Symmetry2D::Octagonal: return (n + 1) * (n + 3) / 8 - 1;
  }
  throw std::logic_error("sym2d_depth: unreachable");
}

}  // namespace

PlanBlueprint sym2d_set(int d, Symmetry2D sym, const Sym2DParams& params) {
  require_odd(d);
  const FiniteGroup g = make_group({d, d});
  PlanBlueprint bp;
  bp.group = g;
  for (const auto& q : sym2d_points(d, sym, params))
    bp.omega.push_back(g.flat(GroupIndex({q[0], q[1]})));
  std::sort(bp.omega.begin(), bp.omega.end());
  bp.claimed_depth = sym2d_depth(d, sym);
  bp.kind = std::string("sym-") + to_string(sym);
  return bp;
}

SamplingPlan PeriodicPlan2D::induced() const {
  const FiniteGroup g = make_group({d, d});
  std::vector<int> omega;
  for (const auto& r : W)
    for (int a = 0; a < J(); ++a)
      for (int b = 0; b < J(); ++b)
        omega.push_back(g.flat(GroupIndex({r[0] + m * a, r[1] + m * b})));
  return SamplingPlan::uniform(g, std::move(omega), depth);
}

PeriodicPlan2D sym2d_periodic_set(int d, int m, Symmetry2D sym, const Sym2DParams& params) {
  require_odd(d);
  if (m <= 1) throw RecipeError("m", 0, "symmetry construction: m must be > 1");
  if (d % m != 0) throw RecipeError("m", 0, "symmetry construction: m must divide d");
  PeriodicPlan2D plan;
  plan.d = d;
  plan.m = m;
  plan.W = sym2d_points(m, sym, params);
  plan.depth = m * m - 1;
  return plan;
}

std::vector<std::vector<int>> search_minimal(const Kernel& k, int max_size, double rank_tol,
                                             double group_tol, int order_cap_1d,
                                             int order_cap_nd) {
  const int order = k.group.order();
  const int cap = k.group.num_factors() == 1 ? order_cap_1d : order_cap_nd;
  if (order > cap)
    throw std::invalid_argument("search_minimal: group order exceeds the configured cap");
  const int lower = min_sensor_bound(k, group_tol);
  if (max_size < lower) return {};
  max_size = std::min(max_size, order);

  // Depths r_i - 1 saturate every sensor's span, so the projection test is
  // decisive for admissibility.
  std::vector<int> degree(order);
  for (int i = 0; i < order; ++i) degree[i] = annihilator_degree(k, i, group_tol);

  std::vector<std::vector<int>> candidates;
  for (int size = lower; size <= max_size; ++size) {
    std::vector<int> subset(size);
    std::iota(subset.begin(), subset.end(), 0);
    do {
      candidates.push_back(subset);
    } while (next_combination_lex(subset, order));
  }

  std::vector<char> admissible(candidates.size(), 0);
  parallel_for(static_cast<int>(candidates.size()), [&](int c) {
    const auto& omega = candidates[c];
    std::vector<int> depths;
    depths.reserve(omega.size());
    for (int i : omega) depths.push_back(degree[i] - 1);
    const SamplingPlan plan = SamplingPlan::make(k.group, omega, depths);
    admissible[c] = frame_test_projection(k, plan, rank_tol, group_tol).is_frame() ? 1 : 0;
  });

  std::vector<std::vector<int>> hits;
  for (size_t c = 0; c < candidates.size(); ++c)
    if (admissible[c]) hits.push_back(candidates[c]);
  std::sort(hits.begin(), hits.end());

  // Spot-verify every tenth hit against the direct rank test.
  for (size_t h = 0; h < hits.size(); h += 10) {
    std::vector<int> depths;
    for (int i : hits[h]) depths.push_back(degree[i] - 1);
    const SamplingPlan plan = SamplingPlan::make(k.group, hits[h], depths);
    if (!frame_test_direct(k, plan, rank_tol, group_tol).is_frame())
      throw std::runtime_error("search_minimal: projection and direct tests disagree");
  }
  return hits;
}

}  // namespace dynsamp
