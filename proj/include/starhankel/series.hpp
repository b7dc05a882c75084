#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace starhankel {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultOrder = 16;

/// Taylor coefficients c_0..c_N of a power series truncated at z^N.
///
/// Binary arithmetic truncates to the smaller of the two orders, so mixing a
/// long and a short series never extrapolates data that was never there.
class TruncatedSeries {
 public:
  /// The zero series of the given order.
  explicit TruncatedSeries(std::size_t order = kDefaultOrder);
  /// Takes ownership of c_0..c_N; an empty vector is rejected.
  explicit TruncatedSeries(std::vector<Complex> coeffs);
  TruncatedSeries(std::initializer_list<Complex> coeffs);

  static TruncatedSeries constant(Complex c, std::size_t order = kDefaultOrder);
  /// The monomial z of the given order (order >= 1).
  static TruncatedSeries identity(std::size_t order = kDefaultOrder);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  const Complex& operator[](std::size_t n) const { return coeffs_.at(n); }
  Complex& operator[](std::size_t n) { return coeffs_.at(n); }

  /// Same series truncated (or zero-padded) to a new order.
  TruncatedSeries with_order(std::size_t order) const;

  /// Horner evaluation of the truncated polynomial.
  Complex evaluate(Complex z) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(Complex s, const TruncatedSeries& a);

 private:
  std::vector<Complex> coeffs_;
};

/// Cauchy product truncated at min(a.order(), b.order()).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Quotient a/b; throws DivisionByNonUnit when |b_0| <= 1e-14.
TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b);

/// u^beta for a series with u_0 == 1 exactly, through the recurrence
/// n v_n = sum_{k=1..n} (k(beta+1) - n) u_k v_{n-k} obtained from u v' = beta u' v.
TruncatedSeries real_power(const TruncatedSeries& u, double beta);

/// z f'(z): coefficient n becomes n f_n.
TruncatedSeries z_derivative(const TruncatedSeries& f);

}  // namespace starhankel
