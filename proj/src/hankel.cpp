#include "starhankel/hankel.hpp"

#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "starhankel/error.hpp"

namespace starhankel {

namespace {

constexpr double kPivotThreshold = 1e-14;

using Matrix = std::array<std::array<Complex, kMaxHankelOrder>, kMaxHankelOrder>;

Complex det_by_elimination(Matrix m, int size) {
  Complex det = 1.0;
  for (int col = 0; col < size; ++col) {
    int pivot = col;
    for (int row = col + 1; row < size; ++row) {
      if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
    }
    if (std::abs(m[pivot][col]) < kPivotThreshold) return 0.0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int row = col + 1; row < size; ++row) {
      const Complex factor = m[row][col] / m[col][col];
      for (int k = col; k < size; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det;
}

void check_box(double p, double t) {
  if (!(p >= 0.0 && p <= 2.0)) throw Error(ErrorKind::DomainError, "p must lie in [0, 2]");
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorKind::DomainError, "t must lie in [0, 1]");
}

// 3 - 8a + 4a^2 = (1 - 2a)(3 - 2a); its sign flips at a = 1/2.
double quadratic_factor(Alpha alpha) {
  const double a = alpha.value();
  return 3.0 - 8.0 * a + 4.0 * a * a;
}

}  // namespace

Complex hankel_det(const CoefficientVector& f, HankelSpec spec) {
  if (spec.q < 1 || spec.n < 1) {
    throw Error(ErrorKind::DomainError, "Hankel determinants need q >= 1 and n >= 1");
  }
  if (spec.q > kMaxHankelOrder) {
    throw Error(ErrorKind::UnsupportedOrder, "q = " + std::to_string(spec.q) + " exceeds 6");
  }
  const auto last = static_cast<std::size_t>(spec.n + 2 * spec.q - 2);
  if (f.size() < last) {
    throw Error(ErrorKind::InsufficientCoefficients,
                "H_" + std::to_string(spec.q) + "(" + std::to_string(spec.n) + ") needs a_" +
                    std::to_string(last) + " but only " + std::to_string(f.size()) + " are known");
  }
  const auto a = [&](int i, int j) { return f(static_cast<std::size_t>(spec.n + i + j)); };
  switch (spec.q) {
    case 1:
      return a(0, 0);
    case 2:
      return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    case 3:
      return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
             a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
             a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    default: {
      Matrix m{};
      for (int i = 0; i < spec.q; ++i) {
        for (int j = 0; j < spec.q; ++j) m[i][j] = a(i, j);
      }
      return det_by_elimination(m, spec.q);
    }
  }
}

Complex functional_moment_form(Alpha alpha, const MomentTriple& m) {
  const double s2 = alpha.complement() * alpha.complement();
  const Complex p1 = m.p1;
  const Complex p1_sq = p1 * p1;
  return s2 * (-(s2 / 12.0) * p1_sq * p1_sq - 0.25 * m.p2 * m.p2 + p1 * m.p3 / 3.0);
}

Complex functional_param_form(Alpha alpha, const LemmaPoint& pt) {
  validate(pt);
  const double s2 = alpha.complement() * alpha.complement();
  const double p = pt.p;
  const double p2 = p * p;
  const double c = 4.0 - p2;
  const Complex y = pt.y;
  return -(1.0 / 48.0) * s2 * quadratic_factor(alpha) * p2 * p2 +
         (1.0 / 24.0) * s2 * p2 * c * y -
         (1.0 / 12.0) * s2 * p2 * c * y * y -
         (1.0 / 16.0) * s2 * c * c * y * y +
         (1.0 / 6.0) * s2 * p * c * (1.0 - std::norm(y)) * pt.zeta;
}

double phi(Alpha alpha, double p, double t) {
  check_box(p, t);
  const double s2 = alpha.complement() * alpha.complement();
  const double p2 = p * p;
  const double c = 4.0 - p2;
  return s2 * (std::abs(quadratic_factor(alpha)) * p2 * p2 / 48.0 + p2 * c * t / 24.0 +
               p2 * c * t * t / 12.0 + c * c * t * t / 16.0 + p * c * (1.0 - t * t) / 6.0);
}

double bound_profile(Alpha alpha, double p) {
  check_box(p, 0.0);
  const double s2 = alpha.complement() * alpha.complement();
  const double p4 = p * p * p * p;
  return s2 * (1.0 - p4 / 16.0 + p4 * std::abs(quadratic_factor(alpha)) / 48.0);
}

double sharp_bound(Alpha alpha) { return alpha.complement() * alpha.complement(); }

}  // namespace starhankel
