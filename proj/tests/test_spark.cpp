#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <numeric>
#include <random>

#include "dynsamp/combinatorics.hpp"
#include "dynsamp/spark.hpp"
#include "support.hpp"

using namespace dynsamp;
namespace dt = dynsamp::testing;

namespace {
CMatrix rows_of(const FiniteGroup& g, std::vector<int> rows) {
  std::vector<int> cols(g.order());
  std::iota(cols.begin(), cols.end(), 0);
  return submatrix(fourier_matrix(g), std::move(rows), cols);
}
}  // namespace

TEST_CASE("spark basics") {
  CHECK(spark(CMatrix::Identity(3, 3)) == 4);

  CMatrix with_zero = CMatrix::Identity(3, 4);
  with_zero.col(3).setZero();
  const SparkResult z = spark_with_witness(with_zero);
  CHECK(z.spark == 1);
  CHECK(z.witness == std::vector<int>{3});

  // Columns 0 and 2 of the two even rows of F_4 coincide: the explicit
  // 2x2 determinant is (1*1 - 1*1)/4 = 0.
  const SparkResult f4 = spark_with_witness(rows_of(make_group({4}), {0, 2}));
  CHECK(f4.spark == 2);
  CHECK(f4.witness == std::vector<int>{0, 2});
}

TEST_CASE("spark cap errors out explicitly") {
  const CMatrix m = rows_of(make_group({12}), {0, 1, 2, 3, 4});
  CHECK_THROWS_AS(spark(m, kDefaultRankTol, 10), SparkCapExceeded);
  try {
    spark(m, kDefaultRankTol, 10);
  } catch (const SparkCapExceeded& e) {
    CHECK(e.cap() == 10);
  }
}

TEST_CASE("full spark row selections") {
  const FiniteGroup g5 = make_group({5});
  CHECK(is_full_spark_rows(make_row_selection(g5, {0, 2})));
  CHECK(is_full_spark_rows(make_row_selection(g5, {1, 3, 4})));
  CHECK(is_full_spark_rows(make_row_selection(g5, {0, 1, 2, 3, 4})));

  const FiniteGroup g4 = make_group({4});
  CHECK_FALSE(is_full_spark_rows(make_row_selection(g4, {0, 2})));

  // Two rows are full spark exactly when the index difference is coprime.
  for (int d : {4, 6, 8, 9, 10}) {
    const FiniteGroup g = make_group({d});
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        CHECK(is_full_spark_rows(make_row_selection(g, {i, j})) ==
              (std::gcd(j - i, d) == 1));
  }
}

TEST_CASE("uniform distribution over divisors") {
  CHECK(is_uniformly_distributed(8, {0, 1, 2}));
  CHECK_FALSE(is_uniformly_distributed(4, {0, 2}));
  std::mt19937_64 rng(41);
  for (int d : {5, 7, 11}) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<int> omega;
      for (int i = 0; i < d; ++i)
        if (rng() % 2) omega.push_back(i);
      if (omega.empty()) omega.push_back(0);
      CHECK(is_uniformly_distributed(d, omega));  // d prime: every subset
    }
  }
}

TEST_CASE("row transforms") {
  const FiniteGroup g5 = make_group({5});
  CHECK(translate_rows(make_row_selection(g5, {0, 1}), GroupIndex({3})).rows ==
        std::vector<int>{3, 4});

  const FiniteGroup g6 = make_group({6});
  CHECK(dilate_rows(make_row_selection(g6, {0, 1}), {5}).rows == std::vector<int>{0, 5});
  CHECK_THROWS_AS(dilate_rows(make_row_selection(g6, {0, 1}), {2}), std::invalid_argument);

  const FiniteGroup g4 = make_group({4});
  CHECK(complement_rows(make_row_selection(g4, {0, 1})).rows == std::vector<int>{2, 3});
}

TEST_CASE("full spark survives translation, coprime dilation and complement") {
  std::mt19937_64 rng(43);
  int found = 0;
  while (found < 30) {
    const int d = std::uniform_int_distribution<int>(3, 10)(rng);
    const int size = std::uniform_int_distribution<int>(1, std::min(4, d))(rng);
    std::vector<int> rows;
    while (static_cast<int>(rows.size()) < size) {
      const int r = std::uniform_int_distribution<int>(0, d - 1)(rng);
      if (std::find(rows.begin(), rows.end(), r) == rows.end()) rows.push_back(r);
    }
    const FiniteGroup g = make_group({d});
    const RowSelection sel = make_row_selection(g, rows);
    if (!is_full_spark_rows(sel)) continue;
    ++found;

    const int t = std::uniform_int_distribution<int>(0, d - 1)(rng);
    CHECK(is_full_spark_rows(translate_rows(sel, GroupIndex({t}))));

    int c = std::uniform_int_distribution<int>(1, d - 1)(rng);
    while (std::gcd(c, d) != 1) c = std::uniform_int_distribution<int>(1, d - 1)(rng);
    CHECK(is_full_spark_rows(dilate_rows(sel, {c})));

    if (static_cast<int>(sel.rows.size()) < d)
      CHECK(is_full_spark_rows(complement_rows(sel)));
  }
}

TEST_CASE("Kronecker singular witness, constructive route") {
  // d=3, rows {(0,0),(1,0)}: the annihilator forces s = 0, so the witness
  // columns live in {0} x Z_3 and the two rows coincide there.
  auto w3 = find_singular_witness(3, {{0, 0}, {1, 0}});
  REQUIRE(w3.has_value());
  CHECK(w3->size() == 2);
  for (const auto& col : *w3) CHECK(col[0] == 0);

  auto w2 = find_singular_witness(2, {{0, 0}, {1, 1}});
  REQUIRE(w2.has_value());
  CHECK(w2->size() == 2);

  CHECK_THROWS_AS(find_singular_witness(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(find_singular_witness(2, {{0, 0}, {1, 1}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("Kronecker witness produces a genuinely singular submatrix") {
  const int d = 4;
  const FiniteGroup g = make_group({d, d});
  std::mt19937_64 rng(47);
  for (int L = 2; L <= d; ++L) {
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<int> flat;
      while (static_cast<int>(flat.size()) < L) {
        const int r = std::uniform_int_distribution<int>(0, d * d - 1)(rng);
        if (std::find(flat.begin(), flat.end(), r) == flat.end()) flat.push_back(r);
      }
      std::vector<std::array<int, 2>> rows;
      for (int f : flat) {
        const GroupIndex idx = g.unflat(f);
        rows.push_back({idx.residues[0], idx.residues[1]});
      }
      const auto witness = find_singular_witness(d, rows);
      REQUIRE(witness.has_value());
      std::vector<int> row_flat = flat, col_flat;
      for (const auto& c : *witness) col_flat.push_back(g.flat(GroupIndex({c[0], c[1]})));
      const CMatrix sub = submatrix(fourier_matrix(g), row_flat, col_flat);
      CHECK(numerical_rank(sub) < L);
    }
  }
}

TEST_CASE("lex combination enumeration is complete and duplicate free") {
  std::vector<int> c{0, 1, 2};
  std::vector<std::vector<int>> seen;
  do {
    seen.push_back(c);
  } while (next_combination_lex(c, 6));
  CHECK(seen.size() == 20);  // C(6,3)
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
}
