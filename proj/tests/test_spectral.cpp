#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dynsamp/spectral.hpp"
#include "support.hpp"

using namespace dynsamp;
namespace dt = dynsamp::testing;

namespace {
CVector cv(std::initializer_list<Complex> vals) {
  CVector v(static_cast<Eigen::Index>(vals.size()));
  Eigen::Index i = 0;
  for (const Complex& z : vals) v(i++) = z;
  return v;
}
}  // namespace

TEST_CASE("kernel from spatial data") {
  const FiniteGroup g4 = make_group({4});

  const Kernel delta = kernel_from_space(g4, cv({1, 0, 0, 0}));
  CHECK((delta.symbol - CVector::Ones(4)).cwiseAbs().maxCoeff() < 1e-12);

  const Kernel averaging = kernel_from_space(g4, CVector::Constant(4, 0.25));
  CHECK(std::abs(averaging.symbol(0) - 1.0) < 1e-12);
  CHECK(averaging.symbol.tail(3).cwiseAbs().maxCoeff() < 1e-12);

  const Kernel shift = kernel_from_space(g4, cv({0, 1, 0, 0}));
  const CVector expected = cv({1, Complex(0, -1), -1, Complex(0, 1)});
  CHECK((shift.symbol - expected).cwiseAbs().maxCoeff() < 1e-12);
  // Against the definition-level transform.
  const CVector oracle = dt::naive_unnormalized_dft(g4, cv({0, 1, 0, 0}));
  CHECK((shift.symbol - oracle).cwiseAbs().maxCoeff() < 1e-12);

  CHECK_THROWS_AS(kernel_from_space(g4, CVector::Zero(3)), std::invalid_argument);
}

TEST_CASE("level partition on the worked symbols") {
  const FiniteGroup g4 = make_group({4});

  const LevelPartition p1 = level_partition(kernel_from_frequency(g4, cv({1, 2, 3, 4})));
  CHECK(p1.count() == 4);
  CHECK(p1.max_class_size() == 1);

  const LevelPartition p2 = level_partition(kernel_from_frequency(g4, cv({1, 2, 1, 2})));
  REQUIRE(p2.count() == 2);
  CHECK(p2.classes[0] == std::vector<int>{0, 2});
  CHECK(p2.classes[1] == std::vector<int>{1, 3});
  CHECK(p2.max_class_size() == 2);
  CHECK(std::abs(p2.values[0] - Complex(1, 0)) < 1e-12);

  const LevelPartition pc = level_partition(kernel_from_frequency(g4, CVector::Constant(4, 2.5)));
  CHECK(pc.count() == 1);
  CHECK(pc.classes[0].size() == 4);
}

TEST_CASE("level partition class sizes cover the group") {
  std::mt19937_64 rng(11);
  for (int d : {4, 6, 9, 12}) {
    const FiniteGroup g = make_group({d});
    for (int trial = 0; trial < 10; ++trial) {
      const LevelPartition p = level_partition(dt::random_kernel_with_repeats(g, rng));
      int total = 0;
      for (const auto& c : p.classes) total += static_cast<int>(c.size());
      CHECK(total == d);
      CHECK(p.max_class_size() * p.count() >= d);
    }
  }
}

TEST_CASE("tolerance chaining sets the ambiguity flag") {
  const FiniteGroup g = make_group({16});
  CVector symbol(16);
  // A chain of values each 0.9*tol apart: pairwise linked, but the extremes
  // sit far beyond 10*tol.
  const double tol = 1e-8;
  for (int i = 0; i < 16; ++i) symbol(i) = Complex(0.9 * tol * i, 0);
  const LevelPartition p = level_partition(kernel_from_frequency(g, symbol), tol);
  CHECK(p.count() == 1);
  CHECK(p.ambiguity);

  // Well separated values do not.
  CVector clean(16);
  for (int i = 0; i < 16; ++i) clean(i) = Complex(i, 0);
  CHECK_FALSE(level_partition(kernel_from_frequency(g, clean), tol).ambiguity);
}

TEST_CASE("apply_operator matches spatial convolution") {
  const FiniteGroup g4 = make_group({4});
  const Kernel shift = kernel_from_space(g4, cv({0, 1, 0, 0}));
  CVector e0 = CVector::Zero(4);
  e0(0) = 1;
  const CVector moved = apply_operator(shift, e0, 1);
  CHECK(std::abs(moved(1) - 1.0) < 1e-12);
  CHECK(std::abs(moved(0)) < 1e-12);

  // power 0 and the identity kernel leave f unchanged
  std::mt19937_64 rng(3);
  const CVector f = dt::random_vector(4, rng);
  CHECK((apply_operator(shift, f, 0) - f).cwiseAbs().maxCoeff() < 1e-12);
  const Kernel id = kernel_from_frequency(g4, CVector::Ones(4));
  CHECK((apply_operator(id, f, 5) - f).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("frequency-domain powers agree with iterated naive convolution") {
  std::mt19937_64 rng(17);
  for (int d = 2; d <= 32; ++d) {
    const FiniteGroup g = make_group({d});
    // Scale so the operator norm stays below 1 and powers do not blow up.
    const CVector a = dt::random_vector(d, rng) / (2.0 * d);
    const Kernel k = kernel_from_space(g, a);
    const CVector f = dt::random_vector(d, rng);
    CVector expected = f;
    for (long power = 0; power <= 8; ++power) {
      const CVector actual = apply_operator(k, f, power);
      CHECK((actual - expected).cwiseAbs().maxCoeff() < 1e-10);
      expected = dt::naive_convolution(g, a, expected);
    }
  }
}

TEST_CASE("operator application on product groups") {
  std::mt19937_64 rng(29);
  for (const std::vector<int>& factors : {std::vector<int>{3, 3}, {4, 5}, {2, 3, 2}}) {
    const FiniteGroup g = make_group(factors);
    const CVector a = dt::random_vector(g.order(), rng) / (2.0 * g.order());
    const Kernel k = kernel_from_space(g, a);
    const CVector f = dt::random_vector(g.order(), rng);
    CVector expected = f;
    for (long power = 0; power <= 4; ++power) {
      CHECK((apply_operator(k, f, power) - expected).cwiseAbs().maxCoeff() < 1e-10);
      expected = dt::naive_convolution(g, a, expected);
    }
  }
}

TEST_CASE("projections zero the complement and resolve the identity") {
  const FiniteGroup g4 = make_group({4});
  const Kernel k = kernel_from_frequency(g4, cv({1, 2, 1, 2}));
  const LevelPartition part = level_partition(k);
  std::mt19937_64 rng(5);
  const CVector v = dt::random_vector(4, rng);

  const EigenProjection p0 = projection(part, 0);
  const CVector inside = project(p0, project(p0, v));
  CHECK((inside - project(p0, v)).cwiseAbs().maxCoeff() < 1e-15);  // idempotent

  CVector outside = v;
  for (int idx : part.classes[0]) outside(idx) = 0;
  CHECK(project(p0, outside).cwiseAbs().maxCoeff() < 1e-15);

  CVector total = CVector::Zero(4);
  for (int c = 0; c < part.count(); ++c) total += project(projection(part, c), v);
  CHECK((total - v).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("annihilator degree equals the distinct-eigenvalue count on full support") {
  const FiniteGroup g4 = make_group({4});
  for (int i = 0; i < 4; ++i) {
    CHECK(annihilator_degree(kernel_from_frequency(g4, cv({1, 2, 3, 4})), i) == 4);
    CHECK(annihilator_degree(kernel_from_frequency(g4, cv({1, 2, 1, 2})), i) == 2);
    CHECK(annihilator_degree(kernel_from_frequency(g4, CVector::Constant(4, 3.0)), i) == 1);
  }
}

TEST_CASE("annihilator degree is minimal") {
  // {f_i, D f_i, ..., D^r f_i} is dependent while the first r are not.
  std::mt19937_64 rng(23);
  for (int d : {3, 4, 6, 8}) {
    const FiniteGroup g = make_group({d});
    const CMatrix& x = fourier_matrix(g).entries();
    for (int trial = 0; trial < 5; ++trial) {
      const Kernel k = dt::random_kernel_with_repeats(g, rng);
      const int i = std::uniform_int_distribution<int>(0, d - 1)(rng);
      const int r = annihilator_degree(k, i);
      CMatrix vectors(d, r + 1);
      CVector v = x.col(i);
      for (int s = 0; s <= r; ++s) {
        vectors.col(s) = v;
        v = v.cwiseProduct(k.symbol);
      }
      CHECK(numerical_rank(vectors.leftCols(r)) == r);
      CHECK(numerical_rank(vectors) == r);
    }
  }
}
