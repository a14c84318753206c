#pragma once

#include <vector>

namespace dynsamp {

/// Advances an ascending k-subset of [0, n) to its lexicographic successor;
/// returns false after the last subset. Start from {0, 1, ..., k-1}.
inline bool next_combination_lex(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == n - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

}  // namespace dynsamp
