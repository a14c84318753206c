#include "dynsamp/recon.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

namespace dynsamp {

std::vector<SampleRecord> simulate_samples(const Kernel& k, const CVector& f,
                                           const SamplingPlan& plan, double noise_std,
                                           std::uint64_t seed) {
  if (!(plan.group == k.group))
    throw std::invalid_argument("simulate: plan group does not match kernel group");
  if (f.size() != k.group.order())
    throw std::invalid_argument("simulate: state length must equal group order");
  if (noise_std < 0) throw std::invalid_argument("simulate: negative noise level");

  const CMatrix& x = fourier_matrix(k.group).entries();
  const int max_depth = *std::max_element(plan.depths.begin(), plan.depths.end());

  // Evolve once in the frequency domain and keep every time slice.
  std::vector<CVector> evolved(max_depth + 1);
  CVector hat = x * f;
  for (int t = 0; t <= max_depth; ++t) {
    evolved[t] = x.adjoint() * hat;
    hat = hat.cwiseProduct(k.symbol);
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> component(0.0, noise_std / std::sqrt(2.0));
  std::vector<SampleRecord> samples;
  for (size_t idx = 0; idx < plan.omega.size(); ++idx) {
    for (int t = 0; t <= plan.depths[idx]; ++t) {
      Complex value = evolved[t](plan.omega[idx]);
      if (noise_std > 0) value += Complex(component(rng), component(rng));
      samples.push_back(SampleRecord{plan.omega[idx], t, value});
    }
  }
  return samples;
}

ReconstructionResult reconstruct(const Kernel& k, const SamplingPlan& plan,
                                 const std::vector<SampleRecord>& samples, double exact_tol,
                                 double rank_tol) {
  if (!(plan.group == k.group))
    throw std::invalid_argument("reconstruct: plan group does not match kernel group");
  if (samples.empty()) throw std::invalid_argument("reconstruct: no samples");
  const int order = k.group.order();
  const CMatrix& x = fourier_matrix(k.group).entries();

  // Operator powers needed by the records, built once each.
  std::map<int, CMatrix> powers;
  for (const auto& rec : samples) {
    if (rec.time < 0 || rec.time > plan.depth_of(rec.sensor))
      throw std::invalid_argument("reconstruct: sample time exceeds the sensor's depth");
    if (!powers.count(rec.time))
      powers.emplace(rec.time,
                     CMatrix(x.adjoint() * (symbol_power(k.symbol, rec.time).asDiagonal() * x)));
  }

  CMatrix m(samples.size(), order);
  CVector y(samples.size());
  for (size_t r = 0; r < samples.size(); ++r) {
    m.row(r) = powers.at(samples[r].time).row(samples[r].sensor);
    y(r) = samples[r].value;
  }

  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd sv = svd.singularValues();
  const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
  const double threshold = std::max(rank_tol * sigma_max, kRankAbsoluteFloor);
  int rank = 0;
  double sigma_min = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > threshold) {
      ++rank;
      sigma_min = sv(i);
    }
  svd.setThreshold(rank_tol);

  ReconstructionResult result;
  result.estimate = svd.solve(y);
  result.residual_norm = (m * result.estimate - y).norm();
  result.rank = rank;
  result.required_rank = order;
  result.condition_number = rank > 0 ? sigma_max / sigma_min : 0.0;
  result.exact = rank == order && result.residual_norm < exact_tol;
  return result;
}

CVector subsample(const CVector& v, const std::vector<int>& omega) {
  if (omega.empty()) throw std::invalid_argument("subsample: omega must be nonempty");
  CVector out = CVector::Zero(v.size());
  for (int i : omega) {
    if (i < 0 || i >= v.size()) throw std::invalid_argument("subsample: index out of range");
    out(i) = v(i);
  }
  return out;
}

}  // namespace dynsamp
