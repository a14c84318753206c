#pragma once

#include <complex>
#include <memory>
#include <vector>

#include <Eigen/Dense>

namespace dynsamp {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Relative threshold on singular values used by numerical_rank.
inline constexpr double kDefaultRankTol = 1e-9;
/// Absolute floor below which a singular value never counts toward rank.
inline constexpr double kRankAbsoluteFloor = 1e-12;
/// Default tolerance for grouping nearly-equal symbol values into level sets.
inline constexpr double kDefaultGroupTol = 1e-8;

/// A multi-index into a product of cyclic groups, one residue per factor.
struct GroupIndex {
  std::vector<int> residues;

  GroupIndex() = default;
  explicit GroupIndex(std::vector<int> r) : residues(std::move(r)) {}
  GroupIndex(std::initializer_list<int> r) : residues(r) {}

  bool operator==(const GroupIndex& other) const = default;
};

/// A finite abelian group presented as a product of cyclic groups
/// Z_{d1} x ... x Z_{dn}. Elements are addressed either by multi-index
/// (one residue per factor) or by the row-major flat index; for n = 2 the
/// flat index of (i1, i2) is d2*i1 + i2, matching the Kronecker-product
/// labeling of row/column blocks.
class FiniteGroup {
 public:
  /// Defaults to the trivial group Z_1.
  FiniteGroup() : factors_{1}, order_(1) {}
  explicit FiniteGroup(std::vector<int> factors);

  const std::vector<int>& factors() const { return factors_; }
  int order() const { return order_; }
  int num_factors() const { return static_cast<int>(factors_.size()); }

  /// Row-major flat index of a multi-index (residues reduced first).
  int flat(const GroupIndex& idx) const;
  int flat(std::initializer_list<int> idx) const { return flat(GroupIndex(idx)); }

  /// Multi-index of a flat index in [0, order).
  GroupIndex unflat(int flat_index) const;

  /// Component-wise reduction modulo the factors (handles negatives).
  GroupIndex reduce(const GroupIndex& idx) const;

  /// Component-wise modular addition.
  GroupIndex add(const GroupIndex& a, const GroupIndex& b) const;
  int add_flat(int a, int b) const;

  bool operator==(const FiniteGroup& other) const { return factors_ == other.factors_; }

 private:
  std::vector<int> factors_;
  int order_;
};

/// Constructs a FiniteGroup, validating that the factor list is nonempty
/// and every factor is >= 1.
FiniteGroup make_group(const std::vector<int>& factors);

/// The normalized character matrix of a group: rows are characters, columns
/// are group elements. For a single cyclic factor d the entry at (j, k) is
/// omega_d^{jk} / sqrt(d) with omega_d = exp(-2*pi*i/d); for products it is
/// the Kronecker product of the factor matrices. The matrix is symmetric and
/// unitary.
class CharacterMatrix {
 public:
  CharacterMatrix(FiniteGroup group, std::shared_ptr<const CMatrix> entries)
      : group_(std::move(group)), entries_(std::move(entries)) {}

  const FiniteGroup& group() const { return group_; }
  const CMatrix& entries() const { return *entries_; }

 private:
  FiniteGroup group_;
  std::shared_ptr<const CMatrix> entries_;
};

/// Normalized character (Fourier) matrix of the group. Results are memoized
/// per factor list, so repeated calls are cheap.
CharacterMatrix fourier_matrix(const FiniteGroup& group);

/// Dense submatrix from row/column flat-index sets, iterated in ascending
/// flat order regardless of input order. Throws on out-of-range indices.
CMatrix submatrix(const CharacterMatrix& mat, std::vector<int> rows, std::vector<int> cols);
CMatrix submatrix(const CMatrix& mat, std::vector<int> rows, std::vector<int> cols);

/// Number of singular values exceeding max(tol * sigma_max, absolute floor).
/// Throws std::invalid_argument on non-finite entries.
int numerical_rank(const CMatrix& mat, double tol = kDefaultRankTol);

/// Singular values in descending order (helper shared by rank and frame
/// bound computations).
Eigen::VectorXd singular_values(const CMatrix& mat);

}  // namespace dynsamp
