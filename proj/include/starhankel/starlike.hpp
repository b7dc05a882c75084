#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "starhankel/caratheodory.hpp"
#include "starhankel/series.hpp"

namespace starhankel {

/// Order of starlikeness, 0 <= alpha < 1.
class Alpha {
 public:
  /// Throws DomainError outside [0, 1).
  explicit Alpha(double value);

  double value() const noexcept { return value_; }
  /// 1 - alpha, the factor that scales every coefficient functional.
  double complement() const noexcept { return 1.0 - value_; }

 private:
  double value_;
};

/// Taylor coefficients a_1..a_N of f(z) = z + a_2 z^2 + ..., with a_1 = 1.
class CoefficientVector {
 public:
  /// Throws DomainError unless values is nonempty and values[0] == 1 exactly.
  explicit CoefficientVector(std::vector<Complex> values);

  /// Largest stored index N.
  std::size_t size() const noexcept { return values_.size(); }

  /// a_n, 1-based.
  const Complex& operator()(std::size_t n) const { return values_.at(n - 1); }

  std::span<const Complex> values() const noexcept { return values_; }

  /// f as a series in z of order N (coefficient 0 is zero).
  TruncatedSeries to_series() const;

 private:
  std::vector<Complex> values_;
};

/// a_1..a_N from p_1..p_{N-1} by equating coefficients in z f' = [alpha + (1 - alpha) p] f:
///   (n - 1) a_n = (1 - alpha) sum_{k=1..n-1} a_{n-k} p_k.
CoefficientVector coeffs_from_moments(Alpha alpha, std::span<const Complex> moments);

struct A234 {
  Complex a2;
  Complex a3;
  Complex a4;
};

/// The displayed closed forms for a_2, a_3, a_4 in terms of p_1, p_2, p_3.
A234 closed_form_a234(Alpha alpha, const MomentTriple& m);

/// Coefficients of z (1 - z^2)^{-(1 - alpha)} up to a_N (N >= 4); odd terms are
/// (1 - alpha)_k / k! and even terms vanish.
CoefficientVector extremal_coeffs(Alpha alpha, std::size_t order = kDefaultOrder);

/// e^{-i theta} f(e^{i theta} z): a_n picks up e^{i (n-1) theta}.
CoefficientVector rotate_function(const CoefficientVector& f, double theta);

inline constexpr double kDefaultMembershipRadius = 0.99;
inline constexpr std::size_t kDefaultMembershipSamples = 720;

struct MembershipCheck {
  double min_margin = 0.0;
  bool ok = false;
};

/// Diagnostic for Re z f'/f > alpha on the circle |z| = radius, using p from the
/// atoms exactly. min_margin = (1 - alpha) min Re p over the equispaced samples.
MembershipCheck verify_membership(const HerglotzAtoms& atoms, Alpha alpha,
                                  double radius = kDefaultMembershipRadius,
                                  std::size_t samples = kDefaultMembershipSamples);

}  // namespace starhankel
