#pragma once

// Test-only oracles and random generators. Nothing here calls into the code
// paths it is used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "starhankel/caratheodory.hpp"
#include "starhankel/series.hpp"

namespace starhankel::testing {

inline bool near(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

inline bool near_rel(Complex a, Complex b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  Complex box(double half_width) { return {uniform(-half_width, half_width), uniform(-half_width, half_width)}; }

  Complex disk(double radius) {
    for (;;) {
      const Complex z = box(1.0);
      if (std::norm(z) <= 1.0) return radius * z;
    }
  }

  TruncatedSeries series(std::size_t order, double half_width) {
    std::vector<Complex> c(order + 1);
    for (auto& x : c) x = box(half_width);
    return TruncatedSeries(std::move(c));
  }

  LemmaPoint lemma_point() { return {uniform(0.0, 2.0), disk(1.0), disk(1.0)}; }

  HerglotzAtoms atoms(int max_atoms) {
    const int k = integer(1, max_atoms);
    HerglotzAtoms a;
    for (int i = 0; i < k; ++i) {
      a.weights.push_back(uniform(0.0, 1.0));
      a.angles.push_back(uniform(0.0, 2.0 * std::numbers::pi));
    }
    const double total = std::accumulate(a.weights.begin(), a.weights.end(), 0.0);
    for (auto& w : a.weights) w /= total;
    return a;
  }

 private:
  std::mt19937_64 gen_;
};

/// Determinant by the Leibniz permutation sum.
inline Complex leibniz_det(const std::vector<std::vector<Complex>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Complex total{};
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Complex term = inversions % 2 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Taylor coefficient n of an analytic g by the trapezoid rule on |z| = radius.
template <typename F>
Complex cauchy_coefficient(F&& g, std::size_t n, double radius = 0.5, std::size_t nodes = 512) {
  Complex acc{};
  for (std::size_t j = 0; j < nodes; ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(nodes);
    acc += g(std::polar(radius, angle)) * std::polar(1.0, -static_cast<double>(n) * angle);
  }
  return acc / (static_cast<double>(nodes) * std::pow(radius, static_cast<double>(n)));
}

/// Generalized binomial coefficient binom(beta, k).
inline double binomial(double beta, int k) {
  double c = 1.0;
  for (int j = 0; j < k; ++j) c *= (beta - j) / (j + 1);
  return c;
}

}  // namespace starhankel::testing
