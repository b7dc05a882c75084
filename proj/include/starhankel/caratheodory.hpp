#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "starhankel/series.hpp"

namespace starhankel {

/// A finite Herglotz measure: p(z) = sum_k w_k (1 + e^{i a_k} z) / (1 - e^{i a_k} z).
///
/// Valid atoms have at least one entry, nonnegative weights summing to one
/// (within 1e-12) and angles in [0, 2pi). Such a p has positive real part on
/// the open disk and p(0) = 1.
struct HerglotzAtoms {
  std::vector<double> weights;
  std::vector<double> angles;

  std::size_t size() const noexcept { return weights.size(); }
};

/// Throws InvalidAtoms unless the invariants above hold.
void validate(const HerglotzAtoms& atoms);

/// Parses `w:theta,w:theta,...` (angles in radians) and validates the result.
HerglotzAtoms parse_atoms(std::string_view text);

/// Exact value of the represented p at a point of the open disk.
Complex evaluate(const HerglotzAtoms& atoms, Complex z);

/// The first three Taylor coefficients p_1, p_2, p_3 of some p in P.
struct MomentTriple {
  Complex p1;
  Complex p2;
  Complex p3;
};

/// Parameters of the classical representation of (p_1, p_2, p_3) with p_1 = p real:
///   2 p_2 = p^2 + y (4 - p^2)
///   4 p_3 = p^3 + 2(4 - p^2) p y - p (4 - p^2) y^2 + 2 (4 - p^2)(1 - |y|^2) zeta
struct LemmaPoint {
  double p = 0.0;
  Complex y;
  Complex zeta;
};

/// Throws InvalidLemmaPoint unless 0 <= p <= 2, |y| <= 1 + 1e-12, |zeta| <= 1 + 1e-12.
void validate(const LemmaPoint& pt);

/// p_n = 2 sum_k w_k e^{i n a_k} for n = 1..m.
std::vector<Complex> moments_from_atoms(const HerglotzAtoms& atoms, std::size_t m);

MomentTriple moment_triple(const HerglotzAtoms& atoms);

/// 1 + p_1 z + ... + p_N z^N.
TruncatedSeries series_from_atoms(const HerglotzAtoms& atoms, std::size_t order = kDefaultOrder);

MomentTriple lemma_forward(const LemmaPoint& pt);

/// Solution of the representation for (y, zeta). zeta is left empty when
/// |y| >= 1 - 1e-9, since its coefficient vanishes and every zeta fits.
struct LemmaInverse {
  Complex y;
  std::optional<Complex> zeta;
};

/// Requires p_1 real in [0, 2); rotate first with normalize_rotation.
///
/// Throws DegenerateP1 when p_1 >= 2 - 1e-12 and InadmissibleMoments when the
/// recovered |y| or |zeta| exceeds 1 + 1e-9. Values inside that slack but
/// beyond the unit circle are scaled back onto it.
LemmaInverse lemma_inverse(const MomentTriple& m);

struct ToeplitzCheck {
  double min_eigenvalue = 0.0;
  bool admissible = false;
};

/// Carathéodory-Toeplitz test on p_1..p_m: the (m+1)x(m+1) Hermitian Toeplitz
/// matrix with diagonal 2 and sub-diagonals p_k must be positive semidefinite.
/// Admissible means the minimum eigenvalue is >= -1e-9.
ToeplitzCheck toeplitz_psd(std::span<const Complex> moments);

struct RotatedMoments {
  std::vector<Complex> moments;
  double theta = 0.0;
};

/// Rotation q_n = e^{i n theta} p_n making q_1 real and nonnegative (theta = 0 if p_1 = 0).
RotatedMoments normalize_rotation(std::span<const Complex> moments);

MomentTriple normalize_rotation(const MomentTriple& m);

}  // namespace starhankel
