#include "dynsamp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dynsamp {

Kernel kernel_from_frequency(const FiniteGroup& group, CVector symbol) {
  if (symbol.size() != group.order())
    throw std::invalid_argument("kernel: symbol length must equal group order");
  return Kernel{group, std::move(symbol), KernelOrigin::Frequency};
}

Kernel kernel_from_space(const FiniteGroup& group, const CVector& a) {
  if (a.size() != group.order())
    throw std::invalid_argument("kernel: spatial kernel length must equal group order");
  // Unnormalized transform: sqrt(order) times the normalized character matrix.
  const CMatrix& x = fourier_matrix(group).entries();
  CVector symbol = std::sqrt(static_cast<double>(group.order())) * (x * a);
  return Kernel{group, std::move(symbol), KernelOrigin::Space};
}

Kernel adjoint(const Kernel& k) {
  return Kernel{k.group, k.symbol.conjugate(), k.origin};
}

int LevelPartition::max_class_size() const {
  size_t m = 0;
  for (const auto& c : classes) m = std::max(m, c.size());
  return static_cast<int>(m);
}

int LevelPartition::class_of(int index) const {
  for (size_t k = 0; k < classes.size(); ++k)
    if (std::binary_search(classes[k].begin(), classes[k].end(), index))
      return static_cast<int>(k);
  throw std::invalid_argument("level partition: index not covered");
}

LevelPartition partition_values(const CVector& values, double tol) {
  if (!values.allFinite()) throw std::invalid_argument("level partition: non-finite symbol");
  if (tol < 0) throw std::invalid_argument("level partition: negative tolerance");
  const int n = static_cast<int>(values.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (values(a).real() != values(b).real()) return values(a).real() < values(b).real();
    return values(a).imag() < values(b).imag();
  });

  // Single-linkage chain over the sorted values: adjacent values within tol
  // fall into the same class.
  std::vector<std::vector<int>> chains;
  for (int pos = 0; pos < n; ++pos) {
    const int idx = order[pos];
    if (pos == 0 || std::abs(values(idx) - values(order[pos - 1])) > tol)
      chains.emplace_back();
    chains.back().push_back(idx);
  }

  LevelPartition part;
  part.tol = tol;
  for (auto& chain : chains) {
    double diameter = 0;
    for (size_t a = 0; a < chain.size(); ++a)
      for (size_t b = a + 1; b < chain.size(); ++b)
        diameter = std::max(diameter, std::abs(values(chain[a]) - values(chain[b])));
    if (diameter > 10.0 * tol) part.ambiguity = true;
    std::sort(chain.begin(), chain.end());
  }
  std::sort(chains.begin(), chains.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (auto& chain : chains) {
    Complex mean = 0;
    for (int idx : chain) mean += values(idx);
    mean /= static_cast<double>(chain.size());
    part.values.push_back(mean);
    part.classes.push_back(std::move(chain));
  }
  return part;
}

LevelPartition level_partition(const Kernel& k, double tol) {
  return partition_values(k.symbol, tol);
}

EigenProjection projection(const LevelPartition& partition, int class_index) {
  if (class_index < 0 || class_index >= partition.count())
    throw std::invalid_argument("projection: class index out of range");
  return EigenProjection{class_index, partition.classes[class_index]};
}

CVector project(const EigenProjection& p, const CVector& freq_vector) {
  CVector out = CVector::Zero(freq_vector.size());
  for (int idx : p.indices) {
    if (idx < 0 || idx >= freq_vector.size())
      throw std::invalid_argument("projection: index out of range for vector");
    out(idx) = freq_vector(idx);
  }
  return out;
}

CVector symbol_power(const CVector& symbol, long power) {
  if (power < 0) throw std::invalid_argument("symbol_power: power must be >= 0");
  CVector out = CVector::Ones(symbol.size());
  for (long s = 0; s < power; ++s) out = out.cwiseProduct(symbol);
  return out;
}

CVector apply_operator(const Kernel& k, const CVector& f, long power) {
  if (f.size() != k.group.order())
    throw std::invalid_argument("apply_operator: vector length must equal group order");
  const CMatrix& x = fourier_matrix(k.group).entries();
  CVector hat = x * f;
  hat = hat.cwiseProduct(symbol_power(k.symbol, power));
  return x.adjoint() * hat;
}

int annihilator_degree(const Kernel& k, int flat_index, double tol) {
  if (flat_index < 0 || flat_index >= k.group.order())
    throw std::invalid_argument("annihilator_degree: index out of range");
  const CMatrix& x = fourier_matrix(k.group).entries();
  const LevelPartition part = level_partition(k, tol);
  // Entries of F e_i have modulus 1/sqrt(order); anything clearly below that
  // scale is treated as outside the support.
  const double support_tol = 0.5 / std::sqrt(static_cast<double>(k.group.order()));
  std::vector<bool> class_hit(part.count(), false);
  for (int j = 0; j < k.group.order(); ++j)
    if (std::abs(x(j, flat_index)) > support_tol) class_hit[part.class_of(j)] = true;
  int degree = 0;
  for (bool hit : class_hit)
    if (hit) ++degree;
  return degree;
}

int annihilator_degree(const Kernel& k, const GroupIndex& index, double tol) {
  return annihilator_degree(k, k.group.flat(index), tol);
}

}  // namespace dynsamp
