#include "starhankel/caratheodory.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "starhankel/error.hpp"

namespace starhankel {

namespace {

constexpr double kWeightSumTolerance = 1e-12;
constexpr double kLemmaBoxTolerance = 1e-12;
constexpr double kUndeterminedZeta = 1e-9;
constexpr double kAdmissibleSlack = 1e-9;
constexpr double kDegenerateP1 = 1e-12;
constexpr double kPsdTolerance = -1e-9;

double parse_double(std::string_view token, std::string_view what) {
  double value = 0.0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw Error(ErrorKind::InvalidAtoms,
                "cannot parse " + std::string(what) + " '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

void validate(const HerglotzAtoms& atoms) {
  if (atoms.weights.empty()) {
    throw Error(ErrorKind::InvalidAtoms, "at least one atom is required");
  }
  if (atoms.weights.size() != atoms.angles.size()) {
    throw Error(ErrorKind::InvalidAtoms, "weights and angles differ in length");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    const double w = atoms.weights[k];
    const double a = atoms.angles[k];
    if (!std::isfinite(w) || w < 0.0) {
      throw Error(ErrorKind::InvalidAtoms, "weight " + std::to_string(k) + " is negative");
    }
    if (!std::isfinite(a) || a < 0.0 || a >= 2.0 * std::numbers::pi) {
      throw Error(ErrorKind::InvalidAtoms, "angle " + std::to_string(k) + " is outside [0, 2pi)");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    throw Error(ErrorKind::InvalidAtoms, "weights sum to " + std::to_string(sum));
  }
}

HerglotzAtoms parse_atoms(std::string_view text) {
  HerglotzAtoms atoms;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorKind::InvalidAtoms, "expected weight:angle, got '" + std::string(item) + "'");
    }
    atoms.weights.push_back(parse_double(item.substr(0, colon), "weight"));
    atoms.angles.push_back(parse_double(item.substr(colon + 1), "angle"));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw Error(ErrorKind::InvalidAtoms, "trailing comma in atom list");
  }
  validate(atoms);
  return atoms;
}

Complex evaluate(const HerglotzAtoms& atoms, Complex z) {
  Complex acc{};
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    const Complex eta = std::polar(1.0, atoms.angles[k]);
    acc += atoms.weights[k] * (1.0 + eta * z) / (1.0 - eta * z);
  }
  return acc;
}

void validate(const LemmaPoint& pt) {
  if (!(pt.p >= 0.0 && pt.p <= 2.0)) {
    throw Error(ErrorKind::InvalidLemmaPoint, "p must lie in [0, 2]");
  }
  if (!(std::abs(pt.y) <= 1.0 + kLemmaBoxTolerance)) {
    throw Error(ErrorKind::InvalidLemmaPoint, "|y| must not exceed 1");
  }
  if (!(std::abs(pt.zeta) <= 1.0 + kLemmaBoxTolerance)) {
    throw Error(ErrorKind::InvalidLemmaPoint, "|zeta| must not exceed 1");
  }
}

std::vector<Complex> moments_from_atoms(const HerglotzAtoms& atoms, std::size_t m) {
  validate(atoms);
  if (m < 1) throw Error(ErrorKind::DomainError, "need at least one moment");
  std::vector<Complex> p(m, Complex{});
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    for (std::size_t n = 1; n <= m; ++n) {
      // polar at n*angle rather than repeated products keeps |p_n| <= 2 to rounding.
      p[n - 1] += 2.0 * atoms.weights[k] * std::polar(1.0, static_cast<double>(n) * atoms.angles[k]);
    }
  }
  return p;
}

MomentTriple moment_triple(const HerglotzAtoms& atoms) {
  const auto p = moments_from_atoms(atoms, 3);
  return {p[0], p[1], p[2]};
}

TruncatedSeries series_from_atoms(const HerglotzAtoms& atoms, std::size_t order) {
  TruncatedSeries s = TruncatedSeries::constant(1.0, order);
  if (order == 0) {
    validate(atoms);
    return s;
  }
  const auto p = moments_from_atoms(atoms, order);
  for (std::size_t n = 1; n <= order; ++n) s[n] = p[n - 1];
  return s;
}

MomentTriple lemma_forward(const LemmaPoint& pt) {
  validate(pt);
  const double p = pt.p;
  const double c = 4.0 - p * p;
  const Complex y = pt.y;
  const double y_abs2 = std::norm(y);
  MomentTriple m;
  m.p1 = p;
  m.p2 = (p * p + y * c) / 2.0;
  m.p3 = (p * p * p + 2.0 * c * p * y - p * c * y * y + 2.0 * c * (1.0 - y_abs2) * pt.zeta) / 4.0;
  return m;
}

LemmaInverse lemma_inverse(const MomentTriple& m) {
  const double p = m.p1.real();
  if (m.p1.imag() != 0.0 || !(p >= 0.0)) {
    throw Error(ErrorKind::DomainError, "p1 must be real and nonnegative; normalize the rotation first");
  }
  if (p >= 2.0 - kDegenerateP1) {
    throw Error(ErrorKind::DegenerateP1, "p1 = 2 forces the moments (2, 2, 2)");
  }
  const double c = 4.0 - p * p;
  LemmaInverse out;
  out.y = (2.0 * m.p2 - p * p) / c;
  const double y_abs = std::abs(out.y);
  if (y_abs > 1.0 + kAdmissibleSlack) {
    throw Error(ErrorKind::InadmissibleMoments, "recovered |y| = " + std::to_string(y_abs));
  }
  if (y_abs > 1.0) out.y /= y_abs;
  if (y_abs >= 1.0 - kUndeterminedZeta) return out;

  const Complex y = out.y;
  const Complex numerator = 4.0 * m.p3 - p * p * p - 2.0 * c * p * y + p * c * y * y;
  const double denominator = 2.0 * c * (1.0 - std::norm(y));
  const Complex zeta = numerator / denominator;
  // The numerator cancels terms of size ~|4 p_3| + p^3 + ...; its rounding
  // error is amplified by 1/denominator near the boundary of the parameter box.
  const double terms = 4.0 * std::abs(m.p3) + p * p * p + 2.0 * c * p * y_abs + p * c * y_abs * y_abs;
  const double rounding = 64.0 * std::numeric_limits<double>::epsilon() * terms / denominator;
  if (std::abs(zeta) > 1.0 + kAdmissibleSlack + rounding) {
    throw Error(ErrorKind::InadmissibleMoments, "recovered |zeta| = " + std::to_string(std::abs(zeta)));
  }
  out.zeta = std::abs(zeta) > 1.0 ? zeta / std::abs(zeta) : zeta;
  return out;
}

ToeplitzCheck toeplitz_psd(std::span<const Complex> moments) {
  if (moments.empty()) throw Error(ErrorKind::DomainError, "need at least one moment");
  const auto size = static_cast<Eigen::Index>(moments.size() + 1);
  Eigen::MatrixXcd t(size, size);
  for (Eigen::Index j = 0; j < size; ++j) {
    for (Eigen::Index k = 0; k < size; ++k) {
      if (j == k) {
        t(j, k) = 2.0;
      } else if (j > k) {
        t(j, k) = moments[static_cast<std::size_t>(j - k - 1)];
      } else {
        t(j, k) = std::conj(moments[static_cast<std::size_t>(k - j - 1)]);
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(t, Eigen::EigenvaluesOnly);
  ToeplitzCheck out;
  out.min_eigenvalue = solver.eigenvalues().minCoeff();
  out.admissible = out.min_eigenvalue >= kPsdTolerance;
  return out;
}

RotatedMoments normalize_rotation(std::span<const Complex> moments) {
  if (moments.empty()) throw Error(ErrorKind::DomainError, "need at least one moment");
  RotatedMoments out;
  out.theta = moments[0] == Complex{} ? 0.0 : -std::arg(moments[0]);
  out.moments.reserve(moments.size());
  for (std::size_t n = 1; n <= moments.size(); ++n) {
    out.moments.push_back(std::polar(1.0, static_cast<double>(n) * out.theta) * moments[n - 1]);
  }
  // The rotated p_1 is real by construction; drop the rounding residue.
  out.moments[0] = std::abs(moments[0]);
  return out;
}

MomentTriple normalize_rotation(const MomentTriple& m) {
  const Complex raw[] = {m.p1, m.p2, m.p3};
  const auto r = normalize_rotation(std::span<const Complex>(raw));
  return {r.moments[0], r.moments[1], r.moments[2]};
}

}  // namespace starhankel
