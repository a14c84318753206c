#include "dynsamp/group.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace dynsamp {

FiniteGroup::FiniteGroup(std::vector<int> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("group: factor list must be nonempty");
  long long order = 1;
  for (int d : factors_) {
    if (d < 1) throw std::invalid_argument("group: every factor must be >= 1");
    order *= d;
    if (order > (1 << 22)) throw std::invalid_argument("group: order too large");
  }
  order_ = static_cast<int>(order);
}

int FiniteGroup::flat(const GroupIndex& idx) const {
  const GroupIndex r = reduce(idx);
  int f = 0;
  for (size_t j = 0; j < factors_.size(); ++j) f = f * factors_[j] + r.residues[j];
  return f;
}

GroupIndex FiniteGroup::unflat(int flat_index) const {
  if (flat_index < 0 || flat_index >= order_)
    throw std::invalid_argument("group: flat index out of range");
  std::vector<int> residues(factors_.size());
  for (size_t j = factors_.size(); j-- > 0;) {
    residues[j] = flat_index % factors_[j];
    flat_index /= factors_[j];
  }
  return GroupIndex(std::move(residues));
}

GroupIndex FiniteGroup::reduce(const GroupIndex& idx) const {
  if (idx.residues.size() != factors_.size())
    throw std::invalid_argument("group: index arity does not match factor count");
  std::vector<int> residues(factors_.size());
  for (size_t j = 0; j < factors_.size(); ++j) {
    int r = idx.residues[j] % factors_[j];
    if (r < 0) r += factors_[j];
    residues[j] = r;
  }
  return GroupIndex(std::move(residues));
}

GroupIndex FiniteGroup::add(const GroupIndex& a, const GroupIndex& b) const {
  const GroupIndex ra = reduce(a), rb = reduce(b);
  std::vector<int> residues(factors_.size());
  for (size_t j = 0; j < factors_.size(); ++j)
    residues[j] = (ra.residues[j] + rb.residues[j]) % factors_[j];
  return GroupIndex(std::move(residues));
}

int FiniteGroup::add_flat(int a, int b) const { return flat(add(unflat(a), unflat(b))); }

FiniteGroup make_group(const std::vector<int>& factors) { return FiniteGroup(factors); }

namespace {

CMatrix single_factor_fourier(int d) {
  CMatrix f(d, d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      // Reduce the exponent mod d before evaluating so large j*k stays exact.
      const int e = static_cast<int>((static_cast<long long>(j) * k) % d);
      const double angle = -2.0 * std::numbers::pi * e / d;
      f(j, k) = scale * Complex(std::cos(angle), std::sin(angle));
    }
  }
  return f;
}

CMatrix kronecker(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

CharacterMatrix fourier_matrix(const FiniteGroup& group) {
  static std::mutex cache_mutex;
  static std::map<std::vector<int>, std::shared_ptr<const CMatrix>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(group.factors());
    if (it != cache.end()) return CharacterMatrix(group, it->second);
  }
  CMatrix m = single_factor_fourier(group.factors()[0]);
  for (size_t j = 1; j < group.factors().size(); ++j)
    m = kronecker(m, single_factor_fourier(group.factors()[j]));
  auto shared = std::make_shared<const CMatrix>(std::move(m));
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto [it, inserted] = cache.emplace(group.factors(), shared);
  return CharacterMatrix(group, it->second);
}

CMatrix submatrix(const CMatrix& mat, std::vector<int> rows, std::vector<int> cols) {
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  for (int r : rows)
    if (r < 0 || r >= mat.rows()) throw std::invalid_argument("submatrix: row index out of range");
  for (int c : cols)
    if (c < 0 || c >= mat.cols()) throw std::invalid_argument("submatrix: column index out of range");
  CMatrix out(rows.size(), cols.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) out(i, j) = mat(rows[i], cols[j]);
  return out;
}

CMatrix submatrix(const CharacterMatrix& mat, std::vector<int> rows, std::vector<int> cols) {
  return submatrix(mat.entries(), std::move(rows), std::move(cols));
}

Eigen::VectorXd singular_values(const CMatrix& mat) {
  if (mat.rows() == 0 || mat.cols() == 0) return Eigen::VectorXd();
  Eigen::JacobiSVD<CMatrix> svd(mat);
  return svd.singularValues();
}

int numerical_rank(const CMatrix& mat, double tol) {
  if (mat.rows() == 0 || mat.cols() == 0) return 0;
  if (!mat.allFinite()) throw std::invalid_argument("numerical_rank: non-finite entries");
  const Eigen::VectorXd sv = singular_values(mat);
  const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
  const double threshold = std::max(tol * sigma_max, kRankAbsoluteFloor);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > threshold) ++rank;
  return rank;
}

}  // namespace dynsamp
