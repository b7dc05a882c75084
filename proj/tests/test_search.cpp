#include <doctest.h>

#include <numbers>

#include "starhankel/error.hpp"
#include "starhankel/format.hpp"
#include "starhankel/hankel.hpp"
#include "starhankel/search.hpp"

using namespace starhankel;

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("maximize_phi reaches (1 - alpha)^2 at p = 0, t = 1") {
  const auto half = maximize_phi(Alpha(0.5), {201, 101});
  CHECK(half.value == doctest::Approx(0.25).epsilon(1e-12));
  const auto& arg = std::get<PhiPoint>(half.argmax);
  CHECK(arg.p == 0.0);
  CHECK(arg.t == 1.0);
  CHECK(half.method == SearchMethod::Phi);
  CHECK(half.grid.grid_p == 201);
  CHECK(half.evaluations > 201 * 101);

  // The profile is flat at alpha = 0; the tie-break still reports p = 0.
  const auto zero = maximize_phi(Alpha(0.0), {201, 101});
  CHECK(std::abs(zero.value - 1.0) <= 1e-12);
  CHECK(std::get<PhiPoint>(zero.argmax).p == 0.0);
  CHECK(std::get<PhiPoint>(zero.argmax).t == 1.0);

  for (int k = 0; k < 20; ++k) {
    const Alpha alpha(0.05 * k);
    const auto out = maximize_phi(alpha);
    CHECK(out.value >= sharp_bound(alpha) - 1e-9);
    CHECK(out.value <= sharp_bound(alpha) + 1e-12);
    CHECK(std::abs(reevaluate(alpha, out) - out.value) <= 1e-12);
  }

  CHECK_THROWS_AS((void)maximize_phi(Alpha(0.1), {1, 101}), Error);
  CHECK_THROWS_AS((void)maximize_phi(Alpha(0.1), {101, 1}), Error);
}

TEST_CASE("maximize_param on reduced and default grids") {
  const auto zero = maximize_param(Alpha(0.0));
  CHECK(zero.value == 1.0);
  const auto& pt = std::get<LemmaPoint>(zero.argmax);
  CHECK(pt.p == 0.0);
  CHECK(pt.y == Complex(1.0));

  for (double a : {0.2, 0.6}) {
    const Alpha alpha(a);
    const auto out = maximize_param(alpha);
    CHECK(out.value >= sharp_bound(alpha) - 5e-3);
    CHECK(out.value <= sharp_bound(alpha) + 1e-9);
    const auto& arg = std::get<LemmaPoint>(out.argmax);
    CHECK(arg.p <= 0.01);
    CHECK(std::abs(arg.y) >= 0.99);
    CHECK(std::abs(reevaluate(alpha, out) - out.value) <= 1e-12);
    CHECK(out.evaluations == 201ull * 101 * 64 * 64);
  }

  // Coarse |y| grid: any resolution stays below the bound.
  for (double a : {0.0, 0.45, 0.85}) {
    const Alpha alpha(a);
    CHECK(maximize_param(alpha, {201, 2, 64, 64}).value <= sharp_bound(alpha) + 1e-9);
    CHECK(maximize_param(alpha, {7, 5, 3, 2}).value <= sharp_bound(alpha) + 1e-9);
  }

  CHECK_THROWS_AS((void)maximize_param(Alpha(0.1), {201, 1, 64, 64}), Error);
}

TEST_CASE("maximize_param is independent of the worker count") {
  const ParamGrid grid{61, 31, 24, 24};
  const auto serial = to_json(maximize_param(Alpha(0.37), grid, 1)).dump();
  for (unsigned workers : {2u, 3u, 8u}) {
    CHECK(to_json(maximize_param(Alpha(0.37), grid, workers)).dump() == serial);
  }
}

TEST_CASE("maximize_herglotz") {
  HerglotzOptions seeded;
  seeded.atoms = 2;
  seeded.restarts = 0;
  seeded.local_steps = 0;
  seeded.start = HerglotzAtoms{{0.5, 0.5}, {0.0, kPi}};
  const auto exact = maximize_herglotz(Alpha(0.25), seeded);
  CHECK(std::abs(exact.value - 9.0 / 16.0) <= 1e-10);
  CHECK(exact.evaluations == 1);

  seeded.local_steps = 50;
  CHECK(std::abs(maximize_herglotz(Alpha(0.25), seeded).value - 9.0 / 16.0) <= 1e-10);

  // Single atoms: at alpha = 0 the Koebe atom already attains the bound.
  HerglotzOptions single;
  single.atoms = 1;
  single.restarts = 20;
  const auto koebe = maximize_herglotz(Alpha(0.0), single);
  CHECK(std::abs(koebe.value - 1.0) <= 1e-9);
  CHECK(std::abs(herglotz_objective(Alpha(0.0), {{1.0}, {0.0}}) - 1.0) <= 1e-12);

  for (double a : {0.0, 0.25, 0.5, 0.75, 0.95}) {
    const Alpha alpha(a);
    HerglotzOptions opts;
    opts.atoms = 2;
    opts.restarts = 100;
    opts.seed = 99;
    const auto out = maximize_herglotz(alpha, opts);
    CHECK(out.value >= sharp_bound(alpha) - 1e-2);
    CHECK(out.value <= sharp_bound(alpha) + 1e-9);
    CHECK(std::abs(reevaluate(alpha, out) - out.value) <= 1e-12);
    CHECK(out.grid.seed == 99);
  }

  HerglotzOptions four;
  four.atoms = 4;
  four.restarts = 30;
  CHECK(maximize_herglotz(Alpha(0.6), four).value <= sharp_bound(Alpha(0.6)) + 1e-9);

  HerglotzOptions none;
  none.restarts = 0;
  CHECK_THROWS_AS((void)maximize_herglotz(Alpha(0.1), none), Error);
  HerglotzOptions too_many;
  too_many.atoms = 5;
  CHECK_THROWS_AS((void)maximize_herglotz(Alpha(0.1), too_many), Error);
}

TEST_CASE("maximize_herglotz is reproducible across seeds and workers") {
  HerglotzOptions opts;
  opts.restarts = 25;
  opts.seed = 5;
  opts.workers = 1;
  const auto a = to_json(maximize_herglotz(Alpha(0.4), opts)).dump();
  const auto b = to_json(maximize_herglotz(Alpha(0.4), opts)).dump();
  opts.workers = 4;
  const auto c = to_json(maximize_herglotz(Alpha(0.4), opts)).dump();
  CHECK(a == b);
  CHECK(a == c);
  opts.seed = 6;
  const auto d = maximize_herglotz(Alpha(0.4), opts);
  CHECK(d.grid.seed == 6);
}

TEST_CASE("sweep_alpha") {
  const auto rows = sweep_alpha(0.0, 0.9, 10, SearchMethod::Phi);
  REQUIRE(rows.size() == 11);
  CHECK(rows.front().alpha == 0.0);
  CHECK(rows.back().alpha == 0.9);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) CHECK(rows[i].alpha > rows[i - 1].alpha);
    CHECK(rows[i].abs_gap <= 1e-9);
    CHECK(rows[i].sharp_bound == doctest::Approx((1 - rows[i].alpha) * (1 - rows[i].alpha)));
    CHECK(rows[i].argmax.find(',') == std::string::npos);
  }

  const auto lemma = sweep_alpha(0.5, 0.9, 2, SearchMethod::Lemma);
  for (const auto& row : lemma) CHECK(row.abs_gap <= 5e-3);

  CHECK_THROWS_AS((void)sweep_alpha(0.3, 0.3, 4, SearchMethod::Phi), Error);
  CHECK_THROWS_AS((void)sweep_alpha(0.5, 0.3, 4, SearchMethod::Phi), Error);
  CHECK_THROWS_AS((void)sweep_alpha(0.0, 1.0, 4, SearchMethod::Phi), Error);
  CHECK_THROWS_AS((void)sweep_alpha(0.0, 0.5, 0, SearchMethod::Phi), Error);
}

TEST_CASE("monotonicity_scan") {
  for (double a : {0.0, 0.3}) {
    const auto scan = monotonicity_scan(Alpha(a), 101, 101);
    CHECK(scan.violations == 0);
    CHECK(scan.worst_gap >= -1e-12);
  }
  CHECK(monotonicity_scan(Alpha(0.5), 101, 2).violations == 0);
  CHECK_THROWS_AS((void)monotonicity_scan(Alpha(0.5), 1, 10), Error);
}

TEST_CASE("method names") {
  CHECK(parse_method("lemma") == SearchMethod::Lemma);
  CHECK(to_string(SearchMethod::Herglotz) == "herglotz");
  CHECK_THROWS_AS((void)parse_method("brent"), Error);
}
