#include <doctest.h>

#include <numbers>

#include "starhankel/error.hpp"
#include "starhankel/starlike.hpp"
#include "support.hpp"

using namespace starhankel;
using starhankel::testing::near;
using starhankel::testing::near_rel;

namespace {

constexpr double kPi = std::numbers::pi;

// Integrating z f'/f = alpha + (1 - alpha) p for p built from atoms gives
// f(z) = z prod_k (1 - e^{i a_k} z)^{-2 (1 - alpha) w_k}.
Complex product_form(const HerglotzAtoms& atoms, double alpha, Complex z) {
  Complex f = z;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    f *= std::pow(1.0 - std::polar(1.0, atoms.angles[k]) * z, -2.0 * (1.0 - alpha) * atoms.weights[k]);
  }
  return f;
}

}  // namespace

TEST_CASE("Alpha accepts exactly [0, 1)") {
  CHECK(Alpha(0.0).value() == 0.0);
  CHECK(Alpha(0.999).complement() == doctest::Approx(0.001));
  CHECK_THROWS_AS(Alpha(1.0), Error);
  CHECK_THROWS_AS(Alpha(-1e-300), Error);
  CHECK_THROWS_AS(Alpha(std::nan("")), Error);
}

TEST_CASE("CoefficientVector requires a_1 = 1") {
  CHECK_THROWS_AS(CoefficientVector({}), Error);
  CHECK_THROWS_AS(CoefficientVector({2.0, 1.0}), Error);
  const CoefficientVector f({1.0, 2.0, 3.0});
  CHECK(f.size() == 3);
  CHECK(f(3) == Complex(3.0));
  CHECK(f.to_series()[1] == Complex(1.0));
  CHECK(f.to_series()[0] == Complex{});
}

TEST_CASE("coeffs_from_moments examples") {
  const auto koebe = coeffs_from_moments(Alpha(0.0), std::vector<Complex>(15, 2.0));
  for (std::size_t n = 1; n <= 16; ++n) CHECK(near(koebe(n), static_cast<double>(n), 1e-13));

  for (double a : {0.0, 0.2, 0.5, 0.9}) {
    const auto f = coeffs_from_moments(Alpha(a), std::vector<Complex>{0.0, 2.0, 0.0});
    CHECK(near(f(2), 0.0, 1e-15));
    CHECK(near(f(3), 1.0 - a, 1e-15));
    CHECK(near(f(4), 0.0, 1e-15));
  }

  const auto identity = coeffs_from_moments(Alpha(0.4), std::vector<Complex>(7, 0.0));
  for (std::size_t n = 2; n <= 8; ++n) CHECK(identity(n) == Complex{});

  CHECK_THROWS_AS((void)coeffs_from_moments(Alpha(0.1), std::vector<Complex>{}), Error);
}

TEST_CASE("coeffs_from_moments satisfies z f' = [alpha + (1 - alpha) p] f") {
  starhankel::testing::Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const double a = rng.uniform();
    const auto atoms = rng.atoms(4);
    const auto p = series_from_atoms(atoms, 12);
    const auto f = coeffs_from_moments(Alpha(a), moments_from_atoms(atoms, 11)).to_series();
    const auto lhs = z_derivative(f);
    const auto rhs = mul(TruncatedSeries::constant(a, 12) + (1.0 - a) * p, f);
    for (std::size_t n = 0; n <= 12; ++n) CHECK(near(lhs[n], rhs[n], 1e-11 * (1 + std::abs(lhs[n]))));

    // Independent route: Cauchy coefficients of the closed product form.
    const auto coeffs = coeffs_from_moments(Alpha(a), moments_from_atoms(atoms, 5));
    for (std::size_t n = 1; n <= 6; ++n) {
      const Complex oracle = starhankel::testing::cauchy_coefficient(
          [&](Complex z) { return product_form(atoms, a, z); }, n);
      CHECK(near(coeffs(n), oracle, 1e-10));
    }
  }
}

TEST_CASE("closed_form_a234 examples") {
  const auto koebe = closed_form_a234(Alpha(0.0), {2.0, 2.0, 2.0});
  CHECK(near(koebe.a2, 2.0, 1e-15));
  CHECK(near(koebe.a3, 3.0, 1e-15));
  CHECK(near(koebe.a4, 4.0, 1e-15));

  for (double a : {0.0, 0.3, 0.75}) {
    const auto s = closed_form_a234(Alpha(a), {0.0, 2.0, 0.0});
    CHECK(near(s.a2, 0.0, 0));
    CHECK(near(s.a3, 1.0 - a, 1e-15));
    CHECK(near(s.a4, 0.0, 0));
  }

  const auto zero = closed_form_a234(Alpha(0.6), {0.0, 0.0, 0.0});
  CHECK(zero.a2 == Complex{});
  CHECK(zero.a3 == Complex{});
  CHECK(zero.a4 == Complex{});
}

TEST_CASE("closed form agrees with the recurrence") {
  starhankel::testing::Rng rng(32);
  for (int trial = 0; trial < 1000; ++trial) {
    const Alpha alpha(rng.uniform());
    const MomentTriple m{rng.box(2.0), rng.box(2.0), rng.box(2.0)};
    const auto closed = closed_form_a234(alpha, m);
    const auto f = coeffs_from_moments(alpha, std::vector<Complex>{m.p1, m.p2, m.p3});
    CHECK(near_rel(closed.a2, f(2), 1e-12));
    CHECK(near_rel(closed.a3, f(3), 1e-12));
    CHECK(near_rel(closed.a4, f(4), 1e-12));
  }
}

TEST_CASE("a_2 is linear in 1 - alpha") {
  const Complex p1(0.7, -1.1);
  const auto base = coeffs_from_moments(Alpha(0.0), std::vector<Complex>{p1});
  for (double a : {0.1, 0.5, 0.8}) {
    const auto f = coeffs_from_moments(Alpha(a), std::vector<Complex>{p1});
    CHECK(near(f(2), (1.0 - a) * base(2), 1e-15));
  }
}

TEST_CASE("extremal coefficients") {
  const auto zero = extremal_coeffs(Alpha(0.0), 9);
  for (std::size_t n = 1; n <= 9; ++n) CHECK(near(zero(n), n % 2 ? 1.0 : 0.0, 1e-15));

  const auto half = extremal_coeffs(Alpha(0.5), 6);
  CHECK(half(2) == Complex{});
  CHECK(half(4) == Complex{});
  CHECK(near(half(3), 0.5, 1e-15));
  CHECK(near(half(5), 0.375, 1e-15));

  CHECK_THROWS_AS((void)extremal_coeffs(Alpha(0.1), 3), Error);

  // Series route z (1 - z^2)^{-(1 - alpha)} and moment route p_n = 1 + (-1)^n.
  for (int k = 0; k < 20; ++k) {
    const double a = 0.05 * k;
    const auto f = extremal_coeffs(Alpha(a), 16);
    TruncatedSeries u(15);
    u[0] = 1.0;
    u[2] = -1.0;
    const auto v = real_power(u, -(1.0 - a));
    std::vector<Complex> pattern;
    for (int n = 1; n <= 15; ++n) pattern.emplace_back(n % 2 ? 0.0 : 2.0);
    const auto g = coeffs_from_moments(Alpha(a), pattern);
    for (std::size_t n = 1; n <= 16; ++n) {
      CHECK(near(f(n), v[n - 1], 1e-12));
      CHECK(near(f(n), g(n), 1e-12));
    }
  }
}

TEST_CASE("rotate_function") {
  const CoefficientVector koebe({1.0, 2.0, 3.0, 4.0});
  const auto same = rotate_function(koebe, 0.0);
  for (std::size_t n = 1; n <= 4; ++n) CHECK(same(n) == koebe(n));

  const auto flipped = rotate_function(koebe, kPi);
  const std::vector<double> expected{1, -2, 3, -4};
  for (std::size_t n = 1; n <= 4; ++n) CHECK(near(flipped(n), expected[n - 1], 1e-14));

  const auto full = rotate_function(koebe, 2 * kPi);
  for (std::size_t n = 1; n <= 4; ++n) CHECK(near(full(n), koebe(n), 1e-14));
  CHECK(full(1) == Complex(1.0));
}

TEST_CASE("verify_membership") {
  for (double a : {0.0, 0.4}) {
    const auto koebe = verify_membership({{1.0}, {0.0}}, Alpha(a), 0.9);
    CHECK(koebe.ok);
    CHECK(koebe.min_margin == doctest::Approx((1 - a) * 0.1 / 1.9).epsilon(1e-12));
  }

  const auto sharp = verify_membership({{0.5, 0.5}, {0.0, kPi}}, Alpha(0.0), 0.5);
  CHECK(sharp.ok);
  CHECK(sharp.min_margin > 0.0);
  // Re (1 + z^2)/(1 - z^2) on |z| = r is smallest at z^2 = -r^2.
  CHECK(sharp.min_margin == doctest::Approx(0.75 / 1.25).epsilon(1e-12));

  try {
    (void)verify_membership({{1.0}, {0.0}}, Alpha(0.0), 1.5);
    FAIL("expected InvalidRadius");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidRadius);
  }
  CHECK_THROWS_AS((void)verify_membership({{1.0}, {0.0}}, Alpha(0.0), 0.0), Error);

  // Cross-check against z f'/f from truncated series at a small radius.
  starhankel::testing::Rng rng(33);
  const auto atoms = rng.atoms(3);
  const double a = 0.3;
  const auto f = coeffs_from_moments(Alpha(a), moments_from_atoms(atoms, 40)).to_series();
  const Complex z = std::polar(0.3, 1.1);
  const Complex ratio = z_derivative(f).evaluate(z) / f.evaluate(z);
  CHECK(near(ratio, a + (1 - a) * evaluate(atoms, z), 1e-12));
}
