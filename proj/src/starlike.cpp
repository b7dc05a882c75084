#include "starhankel/starlike.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "starhankel/error.hpp"

namespace starhankel {

Alpha::Alpha(double value) : value_(value) {
  if (!(value >= 0.0 && value < 1.0)) {
    throw Error(ErrorKind::DomainError, "alpha must lie in [0, 1), got " + std::to_string(value));
  }
}

CoefficientVector::CoefficientVector(std::vector<Complex> values) : values_(std::move(values)) {
  if (values_.empty() || values_.front() != Complex(1.0, 0.0)) {
    throw Error(ErrorKind::DomainError, "coefficient vectors start with a_1 = 1");
  }
}

TruncatedSeries CoefficientVector::to_series() const {
  TruncatedSeries f(values_.size());
  for (std::size_t n = 1; n <= values_.size(); ++n) f[n] = values_[n - 1];
  return f;
}

CoefficientVector coeffs_from_moments(Alpha alpha, std::span<const Complex> moments) {
  const std::size_t order = moments.size() + 1;
  if (order < 2) throw Error(ErrorKind::DomainError, "need at least p_1");
  std::vector<Complex> a(order, Complex{});
  a[0] = 1.0;
  for (std::size_t n = 2; n <= order; ++n) {
    Complex acc{};
    for (std::size_t k = 1; k <= n - 1; ++k) acc += a[n - k - 1] * moments[k - 1];
    a[n - 1] = alpha.complement() / static_cast<double>(n - 1) * acc;
  }
  return CoefficientVector(std::move(a));
}

A234 closed_form_a234(Alpha alpha, const MomentTriple& m) {
  const double s = alpha.complement();
  const double al = alpha.value();
  const Complex p1 = m.p1;
  const Complex p2 = m.p2;
  const Complex p3 = m.p3;
  A234 out;
  out.a2 = s * p1;
  out.a3 = (2.0 * s * s * p1 * p1 + 2.0 * p2 - 2.0 * al * p2) / 4.0;
  out.a4 = s * (s * s * p1 * p1 * p1 + 3.0 * s * p1 * p2 + 2.0 * p3) / 6.0;
  return out;
}

CoefficientVector extremal_coeffs(Alpha alpha, std::size_t order) {
  if (order < 4) throw Error(ErrorKind::DomainError, "extremal coefficients need N >= 4");
  std::vector<Complex> a(order, Complex{});
  a[0] = 1.0;
  // a_{2k+1} = a_{2k-1} (1 - alpha + k - 1) / k
  double odd = 1.0;
  for (std::size_t k = 1; 2 * k + 1 <= order; ++k) {
    odd *= (alpha.complement() + static_cast<double>(k - 1)) / static_cast<double>(k);
    a[2 * k] = odd;
  }
  return CoefficientVector(std::move(a));
}

CoefficientVector rotate_function(const CoefficientVector& f, double theta) {
  std::vector<Complex> a(f.values().begin(), f.values().end());
  for (std::size_t n = 2; n <= a.size(); ++n) {
    a[n - 1] *= std::polar(1.0, static_cast<double>(n - 1) * theta);
  }
  return CoefficientVector(std::move(a));
}

MembershipCheck verify_membership(const HerglotzAtoms& atoms, Alpha alpha, double radius,
                                  std::size_t samples) {
  if (!(radius > 0.0 && radius < 1.0)) {
    throw Error(ErrorKind::InvalidRadius, "radius must lie in (0, 1)");
  }
  if (samples == 0) throw Error(ErrorKind::DomainError, "need at least one sample");
  validate(atoms);
  double min_re = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < samples; ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(samples);
    min_re = std::min(min_re, evaluate(atoms, std::polar(radius, angle)).real());
  }
  MembershipCheck out;
  out.min_margin = alpha.complement() * min_re;
  out.ok = out.min_margin > 0.0;
  return out;
}

}  // namespace starhankel
