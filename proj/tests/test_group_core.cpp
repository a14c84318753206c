#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "dynsamp/group.hpp"
#include "support.hpp"

using namespace dynsamp;
namespace dt = dynsamp::testing;

namespace {
Complex root_of_unity(int d, int e) {
  const double angle = -2.0 * std::numbers::pi * e / d;
  return Complex(std::cos(angle), std::sin(angle));
}
}  // namespace

TEST_CASE("make_group basics") {
  CHECK(make_group({4}).order() == 4);

  const FiniteGroup g55 = make_group({5, 5});
  CHECK(g55.order() == 25);
  CHECK(g55.flat(GroupIndex({1, 2})) == 7);

  const FiniteGroup g23 = make_group({2, 3});
  CHECK(g23.order() == 6);
  CHECK(g23.add(GroupIndex({1, 2}), GroupIndex({1, 2})) == GroupIndex({0, 1}));

  CHECK_THROWS_AS(make_group({}), std::invalid_argument);
  CHECK_THROWS_AS(make_group({4, 0}), std::invalid_argument);
}

TEST_CASE("flat index round trip and reduction") {
  const FiniteGroup g = make_group({3, 4, 2});
  for (int i = 0; i < g.order(); ++i) CHECK(g.flat(g.unflat(i)) == i);
  CHECK(g.reduce(GroupIndex({-1, 5, 3})) == GroupIndex({2, 1, 1}));
  CHECK_THROWS_AS(g.unflat(24), std::invalid_argument);
  CHECK_THROWS_AS(g.flat(GroupIndex({0, 0})), std::invalid_argument);
}

TEST_CASE("fourier matrix single factors") {
  const CMatrix f2 = fourier_matrix(make_group({2})).entries();
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(f2(0, 0) - s) < 1e-15);
  CHECK(std::abs(f2(1, 1) + s) < 1e-15);

  const CMatrix f4 = fourier_matrix(make_group({4})).entries();
  CHECK(std::abs(f4(1, 1) - Complex(0, -0.5)) < 1e-15);  // omega_4 = -i, normalized
}

TEST_CASE("fourier matrix of a product is the Kronecker product") {
  const CMatrix f3 = fourier_matrix(make_group({3})).entries();
  const CMatrix expected = dt::naive_kron(f3, f3);
  const CMatrix actual = fourier_matrix(make_group({3, 3})).entries();
  CHECK((actual - expected).cwiseAbs().maxCoeff() < 1e-14);

  const FiniteGroup g = make_group({3, 3});
  const int row = g.flat(GroupIndex({1, 1}));
  CHECK(std::abs(actual(row, row) - root_of_unity(3, 2) / 3.0) < 1e-15);
}

TEST_CASE("Kronecker entry labeling") {
  for (int d : {3, 4}) {
    const FiniteGroup g = make_group({d, d});
    const CMatrix fd = fourier_matrix(make_group({d})).entries();
    const CMatrix fdd = fourier_matrix(g).entries();
    for (int i1 = 0; i1 < d; ++i1)
      for (int i2 = 0; i2 < d; ++i2)
        for (int j1 = 0; j1 < d; ++j1)
          for (int j2 = 0; j2 < d; ++j2)
            CHECK(std::abs(fdd(g.flat(GroupIndex({i1, i2})), g.flat(GroupIndex({j1, j2}))) -
                           fd(i1, j1) * fd(i2, j2)) < 1e-14);
  }
}

TEST_CASE("unitarity at desk scale") {
  for (const std::vector<int>& factors :
       {std::vector<int>{256}, {16, 16}, {2, 3, 5, 7}, {81}, {4, 4, 4}}) {
    const CMatrix x = fourier_matrix(make_group(factors)).entries();
    const CMatrix gram = x.adjoint() * x;
    const CMatrix identity = CMatrix::Identity(x.rows(), x.cols());
    CHECK((gram - identity).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("submatrix selection") {
  const CharacterMatrix f4 = fourier_matrix(make_group({4}));
  const CMatrix top = submatrix(f4, {0}, {0, 1, 2, 3});
  for (int j = 0; j < 4; ++j) CHECK(std::abs(top(0, j) - 0.5) < 1e-15);

  const CMatrix m = submatrix(fourier_matrix(make_group({5})), {1, 2}, {0, 3});
  const double s5 = 1.0 / std::sqrt(5.0);
  CHECK(std::abs(m(0, 0) - s5) < 1e-15);
  CHECK(std::abs(m(0, 1) - s5 * root_of_unity(5, 3)) < 1e-15);
  CHECK(std::abs(m(1, 1) - s5 * root_of_unity(5, 6)) < 1e-15);

  const FiniteGroup g22 = make_group({2, 2});
  const CMatrix corner =
      submatrix(fourier_matrix(g22), {g22.flat(GroupIndex({0, 0}))}, {g22.flat(GroupIndex({1, 1}))});
  CHECK(std::abs(corner(0, 0) - 0.5) < 1e-15);

  CHECK_THROWS_AS(submatrix(f4, {4}, {0}), std::invalid_argument);
}

TEST_CASE("numerical rank") {
  CHECK(numerical_rank(CMatrix::Identity(3, 3)) == 3);
  CHECK(numerical_rank(CMatrix::Zero(2, 5)) == 0);
  CHECK(numerical_rank(submatrix(fourier_matrix(make_group({4})), {0, 2}, {0, 2})) == 1);

  CMatrix bad = CMatrix::Identity(2, 2);
  bad(0, 0) = Complex(std::nan(""), 0);
  CHECK_THROWS_AS(numerical_rank(bad), std::invalid_argument);
}

TEST_CASE("rank is monotone in rows and permutation invariant") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int cols = 4 + trial % 3;
    CMatrix m(6, cols);
    for (int i = 0; i < m.rows(); ++i) m.row(i) = dt::random_vector(cols, rng).transpose();
    // Force some dependent rows.
    m.row(3) = m.row(0) + m.row(1);
    m.row(5) = 2.0 * m.row(2);

    int prev = 0;
    for (int r = 1; r <= m.rows(); ++r) {
      const int rank = numerical_rank(m.topRows(r));
      CHECK(rank >= prev);
      prev = rank;
    }

    CMatrix shuffled = m;
    std::vector<int> perm(m.rows());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 0; i < m.rows(); ++i) shuffled.row(i) = m.row(perm[i]);
    CHECK(numerical_rank(shuffled) == numerical_rank(m));
  }
}
