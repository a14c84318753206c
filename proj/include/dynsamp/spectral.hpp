#pragma once

#include <vector>

#include "dynsamp/group.hpp"

namespace dynsamp {

enum class KernelOrigin { Frequency, Space };

/// A circular convolution operator represented by its frequency symbol: the
/// vector of eigenvalues of the operator at each frequency index. The
/// operator itself is X* diag(symbol) X with X the normalized character
/// matrix of the group.
struct Kernel {
  FiniteGroup group;
  CVector symbol;
  KernelOrigin origin = KernelOrigin::Frequency;
};

/// Kernel given directly by its frequency symbol (length must equal order).
Kernel kernel_from_frequency(const FiniteGroup& group, CVector symbol);

/// Kernel of the operator f -> a * f; the symbol is the unnormalized
/// Fourier transform of the spatial kernel a.
Kernel kernel_from_space(const FiniteGroup& group, const CVector& a);

/// Adjoint operator's kernel (conjugated symbol).
Kernel adjoint(const Kernel& k);

/// Partition of the frequency index set into level sets: maximal index sets
/// on which the symbol is constant up to the grouping tolerance. Classes are
/// sorted by smallest member index; members are ascending flat indices.
struct LevelPartition {
  std::vector<std::vector<int>> classes;
  std::vector<Complex> values;  // arithmetic mean of each class
  double tol = kDefaultGroupTol;
  /// Set when single-linkage chaining merged values whose extremes differ by
  /// more than 10*tol; the grouping is then reported, not trusted.
  bool ambiguity = false;

  int count() const { return static_cast<int>(classes.size()); }
  int max_class_size() const;
  /// Class index containing the given frequency index.
  int class_of(int index) const;
};

/// Groups symbol values into level sets by single-linkage within
/// sorted-by-value order, linking values at absolute distance <= tol.
LevelPartition level_partition(const Kernel& k, double tol = kDefaultGroupTol);
LevelPartition partition_values(const CVector& values, double tol = kDefaultGroupTol);

/// Spectral projection onto the eigenspace of one level class: acts by
/// zeroing frequency-domain coordinates outside the class.
struct EigenProjection {
  int class_index = 0;
  std::vector<int> indices;
};

EigenProjection projection(const LevelPartition& partition, int class_index);

/// Applies the projection to a frequency-domain vector.
CVector project(const EigenProjection& p, const CVector& freq_vector);

/// A^power f, computed in the frequency domain: conjugate by the character
/// matrix and raise the symbol entrywise. power must be >= 0.
CVector apply_operator(const Kernel& k, const CVector& f, long power);

/// Entrywise power of the symbol (exact repeated multiplication).
CVector symbol_power(const CVector& symbol, long power);

/// Degree r_i of the minimal monic polynomial p with p(A) e_i = 0: the
/// number of distinct symbol values taken on the support of F e_i. For
/// character matrices every entry of F e_i is nonzero, so r_i equals the
/// number of distinct eigenvalues; the support is still computed, not
/// assumed.
int annihilator_degree(const Kernel& k, int flat_index, double tol = kDefaultGroupTol);
int annihilator_degree(const Kernel& k, const GroupIndex& index, double tol = kDefaultGroupTol);

}  // namespace dynsamp
