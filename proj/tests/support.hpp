// Test-only oracles and input generators. The oracles are written from the
// definitions (direct loops, no shared code with the library paths they
// check).
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "dynsamp/spectral.hpp"

namespace dynsamp::testing {

// Unnormalized transform straight from the character formula:
// out(j) = sum_k a(k) * prod_l omega_{d_l}^{j_l * k_l}.
inline CVector naive_unnormalized_dft(const FiniteGroup& g, const CVector& a) {
  CVector out = CVector::Zero(g.order());
  for (int j = 0; j < g.order(); ++j) {
    const GroupIndex jj = g.unflat(j);
    for (int k = 0; k < g.order(); ++k) {
      const GroupIndex kk = g.unflat(k);
      double angle = 0;
      for (int l = 0; l < g.num_factors(); ++l)
        angle += -2.0 * std::numbers::pi *
                 ((jj.residues[l] * kk.residues[l]) % g.factors()[l]) / g.factors()[l];
      out(j) += a(k) * Complex(std::cos(angle), std::sin(angle));
    }
  }
  return out;
}

// (a * f)(k) = sum_i a(i) f(k - i), all arithmetic in the group.
inline CVector naive_convolution(const FiniteGroup& g, const CVector& a, const CVector& f) {
  CVector out = CVector::Zero(g.order());
  for (int k = 0; k < g.order(); ++k) {
    const GroupIndex kk = g.unflat(k);
    for (int i = 0; i < g.order(); ++i) {
      GroupIndex diff = g.unflat(i);
      for (int l = 0; l < g.num_factors(); ++l)
        diff.residues[l] = kk.residues[l] - diff.residues[l];
      out(k) += a(i) * f(g.flat(g.reduce(diff)));
    }
  }
  return out;
}

inline CMatrix naive_kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < out.cols(); ++j)
      out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
  return out;
}

inline CVector random_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  CVector v(n);
  for (int i = 0; i < n; ++i) v(i) = Complex(dist(rng), dist(rng));
  return v;
}

// Frequency symbol drawn from a small alphabet so eigenvalue repeats occur.
// Alphabet values sit on a jittered unit-circle grid: distinct eigenvalues
// stay well separated and unimodular, which keeps the power-iterate
// matrices far from spurious rank drops at desk scale.
inline Kernel random_kernel_with_repeats(const FiniteGroup& g, std::mt19937_64& rng,
                                         int num_values = 0) {
  const int order = g.order();
  if (num_values <= 0)
    num_values = std::uniform_int_distribution<int>(1, order)(rng);
  num_values = std::min(num_values, order);
  std::uniform_real_distribution<double> jitter(0.0, 0.25);
  const double phase = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  std::vector<Complex> values;
  for (int v = 0; v < num_values; ++v) {
    const double angle =
        2.0 * std::numbers::pi * (phase + (v + jitter(rng)) / num_values);
    values.push_back(Complex(std::cos(angle), std::sin(angle)));
  }
  CVector symbol(order);
  // Round-robin guarantees every value is used, then shuffle positions.
  std::vector<int> slot(order);
  for (int i = 0; i < order; ++i) slot[i] = i % num_values;
  std::shuffle(slot.begin(), slot.end(), rng);
  for (int i = 0; i < order; ++i) symbol(i) = values[slot[i]];
  return kernel_from_frequency(g, std::move(symbol));
}

}  // namespace dynsamp::testing
