#include "starhankel/verify.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "starhankel/caratheodory.hpp"
#include "starhankel/error.hpp"
#include "starhankel/format.hpp"
#include "starhankel/hankel.hpp"
#include "starhankel/search.hpp"
#include "starhankel/starlike.hpp"

namespace starhankel {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// alpha = 0, 0.05, ..., 0.95
std::vector<double> alpha_grid() {
  std::vector<double> out;
  for (int k = 0; k < 20; ++k) out.push_back(0.05 * k);
  return out;
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return lo + (hi - lo) * static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  Complex disk(double radius) {
    for (;;) {
      const double x = uniform(-1.0, 1.0);
      const double y = uniform(-1.0, 1.0);
      if (x * x + y * y <= 1.0) return {radius * x, radius * y};
    }
  }

  LemmaPoint lemma_point() { return {uniform(0.0, 2.0), disk(1.0), disk(1.0)}; }

  HerglotzAtoms atoms(std::size_t max_atoms) {
    const auto k = 1 + static_cast<std::size_t>(uniform() * static_cast<double>(max_atoms));
    HerglotzAtoms a;
    double total = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      a.weights.push_back(-std::log1p(-uniform()));
      a.angles.push_back(uniform(0.0, 2.0 * std::numbers::pi));
      total += a.weights.back();
    }
    for (auto& w : a.weights) w /= total;
    return a;
  }

 private:
  std::mt19937_64 gen_;
};

bool close_scaled(Complex a, Complex b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

// Runs body and converts a thrown library error into a failed criterion.
CriterionResult timed(int id, std::string name, const std::function<bool(std::ostringstream&)>& body) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  std::ostringstream detail;
  const auto start = Clock::now();
  try {
    r.passed = body(detail);
  } catch (const std::exception& e) {
    r.passed = false;
    detail << "exception: " << e.what();
  }
  r.seconds = seconds_since(start);
  r.detail = detail.str();
  return r;
}

}  // namespace

std::string golden_sweep_csv(unsigned workers) {
  SweepOptions options;
  options.workers = workers;
  options.herglotz.seed = 7;
  return sweep_csv(sweep_alpha(0.0, 0.9, 9, SearchMethod::Phi, options));
}

CriterionResult check_sharp_bound_reproduction(const VerifyOptions&) {
  return timed(1, "sharp-bound reproduction", [](std::ostringstream& d) {
    double worst_gap = 0.0;
    double slowest = 0.0;
    for (double a : alpha_grid()) {
      const Alpha alpha(a);
      const auto start = Clock::now();
      const auto outcome = maximize_phi(alpha);
      slowest = std::max(slowest, seconds_since(start));
      worst_gap = std::max(worst_gap, std::abs(outcome.value - sharp_bound(alpha)));
    }
    d << "max |phi_max - (1-a)^2| = " << worst_gap << ", slowest alpha " << slowest << " s";
    return worst_gap <= 1e-9 && slowest < 1.0;
  });
}

CriterionResult check_sharpness_attainment(const VerifyOptions&) {
  return timed(2, "sharpness attainment", [](std::ostringstream& d) {
    double worst = 0.0;
    bool even_zero = true;
    for (double a : alpha_grid()) {
      const Alpha alpha(a);
      const auto f = extremal_coeffs(alpha);
      even_zero = even_zero && f(2) == Complex{} && f(4) == Complex{};
      worst = std::max(worst, std::abs(f(3) - alpha.complement()));
      worst = std::max(worst, std::abs(hankel_det(f, {2, 2}) + sharp_bound(alpha)));
      worst = std::max(worst, std::abs(std::abs(hankel_det(f, {2, 2})) - sharp_bound(alpha)));
    }
    d << "a2 = a4 = 0: " << (even_zero ? "yes" : "no") << ", worst deviation " << worst;
    return even_zero && worst <= 1e-12;
  });
}

CriterionResult check_full_parameter_search(const VerifyOptions& options) {
  return timed(3, "full-parameter search", [&](std::ostringstream& d) {
    const ParamGrid grid;
    const double p_step = 2.0 / static_cast<double>(grid.p - 1);
    const double t_step = 1.0 / static_cast<double>(grid.ymod - 1);
    bool ok = true;
    double slowest = 0.0;
    for (double a : {0.0, 0.25, 0.5, 0.75, 0.9}) {
      const Alpha alpha(a);
      const auto start = Clock::now();
      const auto outcome = maximize_param(alpha, grid, options.workers);
      slowest = std::max(slowest, seconds_since(start));
      const auto& pt = std::get<LemmaPoint>(outcome.argmax);
      const double bound = sharp_bound(alpha);
      const bool in_band = outcome.value >= bound - 5e-3 && outcome.value <= bound + 1e-9;
      const bool at_corner = pt.p <= p_step && std::abs(pt.y) >= 1.0 - t_step;
      ok = ok && in_band && at_corner;
      d << "a=" << a << " max=" << format_number(outcome.value) << " at (p,|y|)=(" << pt.p << ","
        << std::abs(pt.y) << "); ";
    }
    d << "slowest alpha " << slowest << " s";
    return ok && slowest < 60.0;
  });
}

CriterionResult check_genuine_function_search(const VerifyOptions& options) {
  return timed(4, "genuine-function search", [&](std::ostringstream& d) {
    bool ok = true;
    for (double a : {0.0, 0.25, 0.5, 0.75}) {
      const Alpha alpha(a);
      HerglotzOptions h;
      h.atoms = 2;
      h.restarts = 100;
      h.seed = options.seed;
      h.workers = options.workers;
      const auto outcome = maximize_herglotz(alpha, h);
      const double bound = sharp_bound(alpha);
      ok = ok && outcome.value >= bound - 1e-2 && outcome.value <= bound + 1e-9;
      d << "a=" << a << " max=" << format_number(outcome.value) << " bound=" << bound << "; ";
    }
    return ok;
  });
}

CriterionResult check_prior_result_anchors(const VerifyOptions&) {
  return timed(5, "prior-result anchors", [](std::ostringstream& d) {
    const Alpha zero(0.0);
    const Alpha half(0.5);
    const auto koebe = coeffs_from_moments(zero, std::vector<Complex>(3, 2.0));
    const double koebe_h = std::abs(hankel_det(koebe, {2, 2}));
    const double star_max = maximize_phi(zero).value;
    const double half_max = maximize_phi(half).value;
    const double half_extremal = std::abs(hankel_det(extremal_coeffs(half), {2, 2}));
    d << "S*: bound " << star_max << ", Koebe |a2a4-a3^2| = " << koebe_h << "; alpha=1/2: bound "
      << half_max << ", extremal " << half_extremal;
    return std::abs(star_max - 1.0) <= 1e-9 && std::abs(koebe_h - 1.0) <= 1e-12 &&
           std::abs(half_max - 0.25) <= 1e-9 && std::abs(half_extremal - 0.25) <= 1e-12 &&
           sharp_bound(zero) == 1.0 && sharp_bound(half) == 0.25;
  });
}

CriterionResult check_algebra_reconciliation(const VerifyOptions& options) {
  return timed(6, "algebra reconciliation", [&](std::ostringstream& d) {
    Sampler rng(options.seed);
    std::size_t moment_failures = 0;
    for (int i = 0; i < 1000; ++i) {
      const Alpha alpha(rng.uniform());
      const MomentTriple m{rng.disk(2.0), rng.disk(2.0), rng.disk(2.0)};
      const auto a = closed_form_a234(alpha, m);
      const Complex brute = a.a2 * a.a4 - a.a3 * a.a3;
      if (!close_scaled(functional_moment_form(alpha, m), brute, 1e-12)) ++moment_failures;
    }
    std::size_t param_failures = 0;
    for (int i = 0; i < 100000; ++i) {
      const Alpha alpha(rng.uniform());
      const auto pt = rng.lemma_point();
      const Complex psi = functional_param_form(alpha, pt);
      const Complex lambda = functional_moment_form(alpha, lemma_forward(pt));
      if (!close_scaled(psi, lambda, 1e-12)) ++param_failures;
    }
    d << moment_failures << "/1000 moment-form mismatches, " << param_failures
      << "/100000 parameterized-form mismatches";
    return moment_failures == 0 && param_failures == 0;
  });
}

CriterionResult check_proof_step_properties(const VerifyOptions& options) {
  return timed(7, "majorant properties", [&](std::ostringstream& d) {
    Sampler rng(options.seed + 1);
    std::size_t dominated_failures = 0;
    for (int i = 0; i < 100000; ++i) {
      const Alpha alpha(rng.uniform());
      const auto pt = rng.lemma_point();
      if (std::abs(functional_param_form(alpha, pt)) > phi(alpha, pt.p, std::abs(pt.y)) + 1e-12) {
        ++dominated_failures;
      }
    }
    std::size_t violations = 0;
    std::size_t profile_failures = 0;
    for (double a : alpha_grid()) {
      const Alpha alpha(a);
      violations += monotonicity_scan(alpha, 101, 101).violations;
      for (int i = 0; i <= 100; ++i) {
        const double p = i == 100 ? 2.0 : 0.02 * i;
        const double profile = bound_profile(alpha, p);
        if (std::abs(phi(alpha, p, 1.0) - profile) > 1e-12 || profile > sharp_bound(alpha) + 1e-12) {
          ++profile_failures;
        }
      }
    }
    d << dominated_failures << " domination failures, " << violations << " monotonicity violations, "
      << profile_failures << " profile failures";
    return dominated_failures == 0 && violations == 0 && profile_failures == 0;
  });
}

CriterionResult check_caratheodory_admissibility(const VerifyOptions& options) {
  return timed(8, "Caratheodory admissibility", [&](std::ostringstream& d) {
    Sampler rng(options.seed + 2);
    std::size_t rejected = 0;
    std::size_t round_trips = 0;
    std::size_t round_trip_failures = 0;
    for (int i = 0; i < 1000; ++i) {
      const auto atoms = rng.atoms(5);
      const auto moments = moments_from_atoms(atoms, 3);
      if (!toeplitz_psd(moments).admissible) ++rejected;

      const auto m = normalize_rotation(moment_triple(atoms));
      if (m.p1.real() >= 2.0 - 1e-3) continue;
      const auto inv = lemma_inverse(m);
      if (!inv.zeta || std::abs(inv.y) >= 1.0 - 1e-6) continue;
      ++round_trips;
      const auto back = lemma_forward({m.p1.real(), inv.y, *inv.zeta});
      if (std::abs(back.p1 - m.p1) > 1e-10 || std::abs(back.p2 - m.p2) > 1e-10 ||
          std::abs(back.p3 - m.p3) > 1e-10) {
        ++round_trip_failures;
      }
    }
    // Parameters drawn directly: the inverse must hand back the same (y, zeta).
    std::size_t recovered_failures = 0;
    std::size_t recovered = 0;
    for (int i = 0; i < 1000; ++i) {
      const auto pt = rng.lemma_point();
      if (pt.p >= 2.0 - 1e-3 || std::abs(pt.y) >= 1.0 - 1e-6) continue;
      ++recovered;
      const auto inv = lemma_inverse(lemma_forward(pt));
      if (!inv.zeta || std::abs(inv.y - pt.y) > 1e-10 || std::abs(*inv.zeta - pt.zeta) > 1e-10) {
        ++recovered_failures;
      }
    }
    d << rejected << "/1000 atom sets rejected by the Toeplitz test; " << round_trip_failures << "/"
      << round_trips << " moment round trips failed; " << recovered_failures << "/" << recovered
      << " (y, zeta) recoveries failed";
    return rejected == 0 && round_trip_failures == 0 && recovered_failures == 0 && round_trips > 0 &&
           recovered > 0;
  });
}

CriterionResult check_determinism(const VerifyOptions& options) {
  return timed(9, "determinism", [&](std::ostringstream& d) {
    const std::string first = golden_sweep_csv(1);
    const std::string again = golden_sweep_csv(1);
    const std::string parallel = golden_sweep_csv(4);
    bool ok = first == again && first == parallel;
    d << "phi sweep " << (ok ? "identical" : "differs") << " across runs and worker counts";

    SweepOptions coarse;
    coarse.param_grid = {41, 21, 16, 16};
    coarse.workers = 1;
    const auto lemma_serial = sweep_csv(sweep_alpha(0.0, 0.9, 3, SearchMethod::Lemma, coarse));
    coarse.workers = 4;
    const auto lemma_parallel = sweep_csv(sweep_alpha(0.0, 0.9, 3, SearchMethod::Lemma, coarse));
    ok = ok && lemma_serial == lemma_parallel;

    HerglotzOptions h;
    h.restarts = 20;
    h.seed = 7;
    h.workers = 1;
    const auto serial = to_json(maximize_herglotz(Alpha(0.3), h)).dump();
    h.workers = 3;
    const auto threaded = to_json(maximize_herglotz(Alpha(0.3), h)).dump();
    ok = ok && serial == threaded;
    d << "; lemma sweep and herglotz outcome "
      << (lemma_serial == lemma_parallel && serial == threaded ? "identical" : "differ")
      << " across worker counts";

    if (options.golden_sweep) {
      std::ifstream is(*options.golden_sweep, std::ios::binary);
      std::stringstream buf;
      if (is) buf << is.rdbuf();
      const bool golden = is && buf.str() == first;
      d << "; golden file " << (golden ? "matches" : "differs");
      ok = ok && golden;
    }
    return ok;
  });
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options) {
  return {check_sharp_bound_reproduction(options), check_sharpness_attainment(options),
          check_full_parameter_search(options),    check_genuine_function_search(options),
          check_prior_result_anchors(options),     check_algebra_reconciliation(options),
          check_proof_step_properties(options),    check_caratheodory_admissibility(options),
          check_determinism(options)};
}

std::string summary_line(const CriterionResult& result) {
  std::ostringstream os;
  os.precision(3);
  os << (result.passed ? "[PASS] " : "[FAIL] ") << result.id << " " << result.name << " ("
     << result.seconds << " s): " << result.detail;
  return os.str();
}

}  // namespace starhankel
