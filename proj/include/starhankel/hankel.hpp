#pragma once

#include "starhankel/caratheodory.hpp"
#include "starhankel/starlike.hpp"

namespace starhankel {

/// Selects H_q(n): the q x q matrix M[i][j] = a_{n+i+j}, 0 <= i, j < q.
struct HankelSpec {
  int q = 2;
  int n = 2;
};

inline constexpr int kMaxHankelOrder = 6;

/// Determinant of the Hankel matrix; H_2(2) = a_2 a_4 - a_3^2.
///
/// q <= 3 is expanded by cofactors, 4 <= q <= 6 uses elimination with partial
/// pivoting (pivots below 1e-14 in magnitude count as singular). Throws
/// InsufficientCoefficients when f stops before a_{n+2q-2} and UnsupportedOrder
/// for q > 6.
Complex hankel_det(const CoefficientVector& f, HankelSpec spec);

/// a_2 a_4 - a_3^2 written in the moments:
///   (1-a)^2 [ -(1/12)(1-a)^2 p_1^4 - (1/4) p_2^2 + (1/3) p_1 p_3 ].
Complex functional_moment_form(Alpha alpha, const MomentTriple& m);

/// The same functional after substituting the (p, y, zeta) representation.
Complex functional_param_form(Alpha alpha, const LemmaPoint& pt);

/// Triangle-inequality majorant of |functional_param_form| as a function of
/// p in [0, 2] and t = |y| in [0, 1]. Throws DomainError outside the box.
double phi(Alpha alpha, double p, double t);

/// phi(alpha, p, 1) in closed form: (1-a)^2 (1 - p^4/16 + p^4 |3 - 8a + 4a^2| / 48).
double bound_profile(Alpha alpha, double p);

/// (1 - alpha)^2.
double sharp_bound(Alpha alpha);

}  // namespace starhankel
