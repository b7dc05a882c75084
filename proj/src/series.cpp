#include "starhankel/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "starhankel/error.hpp"

namespace starhankel {

namespace {

constexpr double kUnitThreshold = 1e-14;

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1, Complex{}) {}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw Error(ErrorKind::DomainError, "a truncated series needs at least one coefficient");
  }
}

TruncatedSeries::TruncatedSeries(std::initializer_list<Complex> coeffs)
    : TruncatedSeries(std::vector<Complex>(coeffs)) {}

TruncatedSeries TruncatedSeries::constant(Complex c, std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::identity(std::size_t order) {
  if (order < 1) {
    throw Error(ErrorKind::DomainError, "the series z needs order >= 1");
  }
  TruncatedSeries s(order);
  s.coeffs_[1] = 1.0;
  return s;
}

TruncatedSeries TruncatedSeries::with_order(std::size_t order) const {
  TruncatedSeries s(order);
  const std::size_t n = std::min(order, this->order());
  std::copy_n(coeffs_.begin(), n + 1, s.coeffs_.begin());
  return s;
}

Complex TruncatedSeries::evaluate(Complex z) const {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (std::size_t n = 0; n <= r.order(); ++n) r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (std::size_t n = 0; n <= r.order(); ++n) r.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
  return r;
}

TruncatedSeries operator*(Complex s, const TruncatedSeries& a) {
  TruncatedSeries r = a;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  TruncatedSeries r(order);
  for (std::size_t n = 0; n <= order; ++n) {
    Complex acc{};
    for (std::size_t k = 0; k <= n; ++k) acc += a[k] * b[n - k];
    r[n] = acc;
  }
  return r;
}

TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (std::abs(b[0]) <= kUnitThreshold) {
    throw Error(ErrorKind::DivisionByNonUnit,
                "divisor constant term has magnitude " + std::to_string(std::abs(b[0])));
  }
  const std::size_t order = std::min(a.order(), b.order());
  TruncatedSeries q(order);
  for (std::size_t n = 0; n <= order; ++n) {
    Complex acc = a[n];
    for (std::size_t k = 1; k <= n; ++k) acc -= b[k] * q[n - k];
    q[n] = acc / b[0];
  }
  return q;
}

TruncatedSeries real_power(const TruncatedSeries& u, double beta) {
  if (u[0] != Complex(1.0, 0.0)) {
    throw Error(ErrorKind::NonUnitConstant, "real_power requires a constant term of exactly 1");
  }
  const std::size_t order = u.order();
  TruncatedSeries v(order);
  v[0] = 1.0;
  for (std::size_t n = 1; n <= order; ++n) {
    const double dn = static_cast<double>(n);
    Complex acc{};
    for (std::size_t k = 1; k <= n; ++k) {
      acc += (static_cast<double>(k) * (beta + 1.0) - dn) * u[k] * v[n - k];
    }
    v[n] = acc / dn;
  }
  return v;
}

TruncatedSeries z_derivative(const TruncatedSeries& f) {
  TruncatedSeries r = f;
  for (std::size_t n = 0; n <= r.order(); ++n) r[n] *= static_cast<double>(n);
  return r;
}

}  // namespace starhankel
