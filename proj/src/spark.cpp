#include "dynsamp/spark.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dynsamp/combinatorics.hpp"

namespace dynsamp {

SparkCapExceeded::SparkCapExceeded(long long cap, long long examined)
    : std::runtime_error("spark: subset enumeration cap exceeded (cap " + std::to_string(cap) +
                         ", examined " + std::to_string(examined) + ")"),
      cap_(cap),
      examined_(examined) {}

namespace {

/// Next s-subset of [0, n) in colexicographic order; c starts at {0..s-1}.
bool next_colex(std::vector<int>& c, int n) {
  const int s = static_cast<int>(c.size());
  for (int j = 0; j < s; ++j) {
    const int limit = (j + 1 < s) ? c[j + 1] : n;
    if (c[j] + 1 < limit) {
      ++c[j];
      for (int t = 0; t < j; ++t) c[t] = t;
      return true;
    }
  }
  return false;
}

}  // namespace

SparkResult spark_with_witness(const CMatrix& mat, double tol, long long subset_cap) {
  const int rows = static_cast<int>(mat.rows());
  const int cols = static_cast<int>(mat.cols());
  if (rows == 0 || cols == 0) throw std::invalid_argument("spark: empty matrix");
  if (!mat.allFinite()) throw std::invalid_argument("spark: non-finite entries");

  long long examined = 0;
  const int max_size = std::min(rows, cols);
  for (int s = 1; s <= max_size; ++s) {
    std::vector<int> subset(s);
    std::iota(subset.begin(), subset.end(), 0);
    do {
      if (++examined > subset_cap) throw SparkCapExceeded(subset_cap, examined);
      CMatrix sub(rows, s);
      for (int j = 0; j < s; ++j) sub.col(j) = mat.col(subset[j]);
      if (numerical_rank(sub, tol) < s) return SparkResult{s, false, subset};
    } while (next_colex(subset, cols));
  }
  return SparkResult{rows + 1, true, {}};
}

int spark(const CMatrix& mat, double tol, long long subset_cap) {
  return spark_with_witness(mat, tol, subset_cap).spark;
}

RowSelection make_row_selection(const FiniteGroup& group, std::vector<int> rows) {
  if (rows.empty()) throw std::invalid_argument("row selection: must be nonempty");
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  for (int r : rows)
    if (r < 0 || r >= group.order())
      throw std::invalid_argument("row selection: index out of range");
  return RowSelection{group, std::move(rows)};
}

bool is_full_spark_rows(const RowSelection& sel, double tol, long long subset_cap) {
  if (static_cast<int>(sel.rows.size()) > sel.group.order())
    throw std::invalid_argument("full spark: more rows than columns");
  std::vector<int> all_cols(sel.group.order());
  std::iota(all_cols.begin(), all_cols.end(), 0);
  const CMatrix sub = submatrix(fourier_matrix(sel.group), sel.rows, all_cols);
  return spark_with_witness(sub, tol, subset_cap).full_spark;
}

bool is_uniformly_distributed(int d, const std::vector<int>& omega) {
  if (d < 1) throw std::invalid_argument("uniform distribution: d must be >= 1");
  for (int i : omega)
    if (i < 0 || i >= d) throw std::invalid_argument("uniform distribution: index out of range");
  const int n = static_cast<int>(omega.size());
  for (int m = 1; m <= d; ++m) {
    if (d % m != 0) continue;
    std::vector<int> counts(m, 0);
    for (int i : omega) ++counts[i % m];
    const int lo = n / m;
    const int hi = (n + m - 1) / m;
    for (int c : counts)
      if (c != lo && c != hi) return false;
  }
  return true;
}

RowSelection translate_rows(const RowSelection& sel, const GroupIndex& t) {
  std::vector<int> rows;
  rows.reserve(sel.rows.size());
  for (int r : sel.rows) rows.push_back(sel.group.flat(sel.group.add(sel.group.unflat(r), t)));
  return make_row_selection(sel.group, std::move(rows));
}

RowSelection dilate_rows(const RowSelection& sel, const std::vector<int>& multipliers) {
  const auto& factors = sel.group.factors();
  if (multipliers.size() != factors.size())
    throw std::invalid_argument("dilate: one multiplier per factor required");
  for (size_t j = 0; j < factors.size(); ++j)
    if (std::gcd(((multipliers[j] % factors[j]) + factors[j]) % factors[j], factors[j]) != 1)
      throw std::invalid_argument("dilate: multiplier " + std::to_string(multipliers[j]) +
                                  " not coprime to factor " + std::to_string(factors[j]));
  std::vector<int> rows;
  rows.reserve(sel.rows.size());
  for (int r : sel.rows) {
    GroupIndex idx = sel.group.unflat(r);
    for (size_t j = 0; j < factors.size(); ++j)
      idx.residues[j] = static_cast<int>((static_cast<long long>(idx.residues[j]) *
                                          multipliers[j]) % factors[j]);
    rows.push_back(sel.group.flat(sel.group.reduce(idx)));
  }
  return make_row_selection(sel.group, std::move(rows));
}

RowSelection complement_rows(const RowSelection& sel) {
  std::vector<int> rows;
  for (int i = 0; i < sel.group.order(); ++i)
    if (!std::binary_search(sel.rows.begin(), sel.rows.end(), i)) rows.push_back(i);
  return make_row_selection(sel.group, std::move(rows));
}

namespace {

CMatrix kron_rows_cols(int d, const std::vector<std::array<int, 2>>& rows,
                       const std::vector<std::array<int, 2>>& cols) {
  const FiniteGroup g = make_group({d, d});
  std::vector<int> row_flat, col_flat;
  for (const auto& r : rows) row_flat.push_back(g.flat(GroupIndex({r[0], r[1]})));
  for (const auto& c : cols) col_flat.push_back(g.flat(GroupIndex({c[0], c[1]})));
  return submatrix(fourier_matrix(g), row_flat, col_flat);
}

}  // namespace

std::optional<std::vector<std::array<int, 2>>> find_singular_witness(
    int d, const std::vector<std::array<int, 2>>& rows, double tol) {
  const int L = static_cast<int>(rows.size());
  if (L < 2 || L > d) throw std::invalid_argument("singular witness: need 2 <= L <= d rows");
  std::vector<std::array<int, 2>> sorted = rows;
  for (auto& r : sorted) {
    r[0] = ((r[0] % d) + d) % d;
    r[1] = ((r[1] % d) + d) % d;
  }
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("singular witness: duplicate rows");

  // Annihilator of the subgroup generated by the first two rows' difference:
  // H = {(s,p) : (dk*s + dl*p) mod d == 0}. Any L of its elements make those
  // two rows of the column-selected submatrix identical. |H| = d^2/|G| >= d.
  const int dk = ((sorted[0][0] - sorted[1][0]) % d + d) % d;
  const int dl = ((sorted[0][1] - sorted[1][1]) % d + d) % d;
  std::vector<std::array<int, 2>> witness;
  for (int s = 0; s < d && static_cast<int>(witness.size()) < L; ++s)
    for (int p = 0; p < d && static_cast<int>(witness.size()) < L; ++p)
      if ((dk * s + dl * p) % d == 0) witness.push_back({s, p});

  if (static_cast<int>(witness.size()) == L &&
      numerical_rank(kron_rows_cols(d, sorted, witness), tol) < L)
    return witness;

  // Exhaustive fallback, only worthwhile at small L.
  if (L <= 4) {
    const int n = d * d;
    std::vector<int> subset(L);
    std::iota(subset.begin(), subset.end(), 0);
    const FiniteGroup g = make_group({d, d});
    do {
      std::vector<std::array<int, 2>> cols;
      for (int f : subset) {
        const GroupIndex idx = g.unflat(f);
        cols.push_back({idx.residues[0], idx.residues[1]});
      }
      if (numerical_rank(kron_rows_cols(d, sorted, cols), tol) < L) return cols;
    } while (next_combination_lex(subset, n));
  }
  return std::nullopt;
}

}  // namespace dynsamp
