#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dynsamp/group.hpp"

namespace dynsamp {

/// Default cap on the number of column subsets spark() may examine.
inline constexpr long long kDefaultSparkCap = 2'000'000;

/// Raised when the subset enumeration would exceed the configured cap; the
/// result is reported as an error rather than silently truncated.
class SparkCapExceeded : public std::runtime_error {
 public:
  SparkCapExceeded(long long cap, long long examined);
  long long cap() const { return cap_; }
  long long examined() const { return examined_; }

 private:
  long long cap_;
  long long examined_;
};

struct SparkResult {
  int spark = 0;          // M+1 when full spark
  bool full_spark = false;
  std::vector<int> witness;  // a smallest dependent column set; empty when full spark
};

/// Smallest size of a linearly dependent column subset, enumerating subsets
/// in colexicographic order by size. Returns rows+1 when every subset of
/// size <= min(rows, cols) is independent.
SparkResult spark_with_witness(const CMatrix& mat, double tol = kDefaultRankTol,
                               long long subset_cap = kDefaultSparkCap);
int spark(const CMatrix& mat, double tol = kDefaultRankTol,
          long long subset_cap = kDefaultSparkCap);

/// A row subset of a group's character matrix.
struct RowSelection {
  FiniteGroup group;
  std::vector<int> rows;  // ascending flat indices, nonempty
};

RowSelection make_row_selection(const FiniteGroup& group, std::vector<int> rows);

/// True iff every |rows| x |rows| submatrix of the selected rows is
/// invertible, i.e. spark = |rows| + 1.
bool is_full_spark_rows(const RowSelection& sel, double tol = kDefaultRankTol,
                        long long subset_cap = kDefaultSparkCap);

/// True iff for every divisor m of d the residue classes mod m split omega
/// into parts of size floor(|omega|/m) or ceil(|omega|/m). Characterizes
/// full-spark row sets of F_d when d is a prime power.
bool is_uniformly_distributed(int d, const std::vector<int>& omega);

/// Spark-preserving transforms of a row selection.
RowSelection translate_rows(const RowSelection& sel, const GroupIndex& t);
/// Component-wise dilation; each multiplier must be coprime to its factor.
RowSelection dilate_rows(const RowSelection& sel, const std::vector<int>& multipliers);
RowSelection complement_rows(const RowSelection& sel);

/// For L rows of F_d (x) F_d (2 <= L <= d), finds L columns making the
/// L x L submatrix singular. The constructive route builds the annihilator
/// of the difference of the first two rows, which forces two identical
/// rows; an exhaustive fallback covers L <= 4 should verification fail.
std::optional<std::vector<std::array<int, 2>>> find_singular_witness(
    int d, const std::vector<std::array<int, 2>>& rows, double tol = kDefaultRankTol);

}  // namespace dynsamp
