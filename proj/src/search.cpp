#include "starhankel/search.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "starhankel/detail/parallel.hpp"
#include "starhankel/error.hpp"
#include "starhankel/format.hpp"
#include "starhankel/hankel.hpp"

namespace starhankel {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMonotoneSlack = 1e-12;
constexpr std::size_t kMaxAtoms = 4;

bool improves(double candidate, double incumbent) {
  return candidate > incumbent + kTieTolerance * std::max(1.0, std::abs(incumbent));
}

double grid_point(std::size_t i, std::size_t count, double hi) {
  if (i + 1 == count) return hi;
  return hi * static_cast<double>(i) / static_cast<double>(count - 1);
}

double wrap_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

// Golden-section search for the maximum of a unimodal f on [lo, hi].
template <typename F>
std::pair<double, std::size_t> golden_max(F&& f, double lo, double hi, double tol = 1e-12) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  std::size_t evals = 2;
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
    ++evals;
  }
  return {fc >= fd ? c : d, evals};
}

// Uniform double in [0, 1) from the top 53 bits; portable across standard libraries.
double unit_uniform(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

HerglotzAtoms random_atoms(std::size_t k, std::mt19937_64& gen) {
  HerglotzAtoms atoms;
  atoms.weights.resize(k);
  atoms.angles.resize(k);
  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    atoms.weights[i] = -std::log1p(-unit_uniform(gen));
    atoms.angles[i] = kTwoPi * unit_uniform(gen);
    total += atoms.weights[i];
  }
  if (total <= 0.0) {
    atoms.weights.assign(k, 1.0 / static_cast<double>(k));
  } else {
    for (auto& w : atoms.weights) w /= total;
  }
  return atoms;
}

struct LocalResult {
  HerglotzAtoms atoms;
  double value = 0.0;
  std::uint64_t evaluations = 0;
};

bool renormalize(std::vector<double>& w) {
  double total = 0.0;
  for (double x : w) total += x;
  if (!(total > 0.0)) return false;
  for (double& x : w) x /= total;
  return true;
}

// Coordinate search over angles and weights with a step halved after every
// sweep that fails to improve.
LocalResult refine_atoms(Alpha alpha, HerglotzAtoms atoms, std::size_t steps) {
  LocalResult best{atoms, herglotz_objective(alpha, atoms), 1};
  double angle_step = 0.5;
  double weight_step = 0.25;
  const std::size_t k = atoms.size();
  for (std::size_t it = 0; it < steps && angle_step > 1e-13; ++it) {
    bool moved = false;
    for (std::size_t i = 0; i < k; ++i) {
      for (double dir : {1.0, -1.0}) {
        HerglotzAtoms trial = best.atoms;
        trial.angles[i] = wrap_angle(trial.angles[i] + dir * angle_step);
        const double v = herglotz_objective(alpha, trial);
        ++best.evaluations;
        if (v > best.value) {
          best.atoms = std::move(trial);
          best.value = v;
          moved = true;
          break;
        }
      }
    }
    if (k > 1) {
      for (std::size_t i = 0; i < k; ++i) {
        for (double dir : {1.0, -1.0}) {
          HerglotzAtoms trial = best.atoms;
          trial.weights[i] = std::max(0.0, trial.weights[i] + dir * weight_step);
          if (!renormalize(trial.weights)) continue;
          const double v = herglotz_objective(alpha, trial);
          ++best.evaluations;
          if (v > best.value) {
            best.atoms = std::move(trial);
            best.value = v;
            moved = true;
            break;
          }
        }
      }
    }
    if (!moved) {
      angle_step /= 2.0;
      weight_step /= 2.0;
    }
  }
  return best;
}

struct ParamCell {
  double value = -1.0;
  std::size_t j = 0, k = 0, l = 0;
};

}  // namespace

std::string_view to_string(SearchMethod method) {
  switch (method) {
    case SearchMethod::Phi:
      return "phi";
    case SearchMethod::Lemma:
      return "lemma";
    case SearchMethod::Herglotz:
      return "herglotz";
  }
  return "unknown";
}

SearchMethod parse_method(std::string_view name) {
  if (name == "phi") return SearchMethod::Phi;
  if (name == "lemma") return SearchMethod::Lemma;
  if (name == "herglotz") return SearchMethod::Herglotz;
  throw Error(ErrorKind::DomainError, "unknown search method '" + std::string(name) + "'");
}

SearchOutcome maximize_phi(Alpha alpha, PhiGrid grid) {
  if (grid.p < 2 || grid.t < 2) {
    throw Error(ErrorKind::DomainError, "phi grids need at least 2 points per axis");
  }
  SearchOutcome out;
  out.method = SearchMethod::Phi;
  out.grid.grid_p = grid.p;
  out.grid.grid_t = grid.t;

  double best = -1.0;
  std::size_t best_i = 0;
  PhiPoint arg;
  for (std::size_t i = 0; i < grid.p; ++i) {
    const double p = grid_point(i, grid.p, 2.0);
    for (std::size_t j = 0; j < grid.t; ++j) {
      const double t = grid_point(j, grid.t, 1.0);
      const double v = phi(alpha, p, t);
      if (improves(v, best)) {
        best = v;
        best_i = i;
        arg = {p, t};
      }
    }
  }
  out.evaluations = grid.p * grid.t;

  // phi is nondecreasing in t, so the continuum maximum sits on t = 1.
  const double lo = grid_point(best_i == 0 ? 0 : best_i - 1, grid.p, 2.0);
  const double hi = grid_point(std::min(best_i + 1, grid.p - 1), grid.p, 2.0);
  const auto [p_refined, evals] = golden_max([&](double p) { return phi(alpha, p, 1.0); }, lo, hi);
  out.evaluations += evals + 1;
  const double refined = phi(alpha, p_refined, 1.0);
  if (improves(refined, best)) {
    best = refined;
    arg = {p_refined, 1.0};
  }
  out.argmax = arg;
  out.value = best;
  return out;
}

SearchOutcome maximize_param(Alpha alpha, ParamGrid grid, unsigned workers) {
  if (grid.p < 2 || grid.ymod < 2 || grid.yarg < 2 || grid.zarg < 2) {
    throw Error(ErrorKind::DomainError, "parameter grids need at least 2 points per axis");
  }
  const double s2 = sharp_bound(alpha);
  const double a = alpha.value();
  const double quad = 3.0 - 8.0 * a + 4.0 * a * a;

  std::vector<Complex> y_dirs(grid.yarg);
  for (std::size_t k = 0; k < grid.yarg; ++k) {
    y_dirs[k] = std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(grid.yarg));
  }
  std::vector<Complex> zetas(grid.zarg);
  for (std::size_t l = 0; l < grid.zarg; ++l) {
    zetas[l] = std::polar(1.0, kTwoPi * static_cast<double>(l) / static_cast<double>(grid.zarg));
  }

  // Row i holds the lexicographically first maximizer among points with p = p_i.
  std::vector<ParamCell> rows(grid.p);
  detail::parallel_for(grid.p, workers, [&](std::size_t i) {
    const double p = grid_point(i, grid.p, 2.0);
    const double p2 = p * p;
    const double c = 4.0 - p2;
    const double constant = -(1.0 / 48.0) * s2 * quad * p2 * p2;
    ParamCell cell;
    for (std::size_t j = 0; j < grid.ymod; ++j) {
      const double t = grid_point(j, grid.ymod, 1.0);
      const double zeta_coeff = (1.0 / 6.0) * s2 * p * c * (1.0 - t * t);
      for (std::size_t k = 0; k < grid.yarg; ++k) {
        const Complex y = t * y_dirs[k];
        const Complex y2 = y * y;
        const Complex base = constant + (1.0 / 24.0) * s2 * p2 * c * y -
                             (1.0 / 12.0) * s2 * p2 * c * y2 - (1.0 / 16.0) * s2 * c * c * y2;
        for (std::size_t l = 0; l < grid.zarg; ++l) {
          const double re = base.real() + zeta_coeff * zetas[l].real();
          const double im = base.imag() + zeta_coeff * zetas[l].imag();
          const double v = std::sqrt(re * re + im * im);
          if (improves(v, cell.value)) cell = {v, j, k, l};
        }
      }
    }
    rows[i] = cell;
  });

  std::size_t best_row = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (improves(rows[i].value, rows[best_row].value)) best_row = i;
  }
  const ParamCell& cell = rows[best_row];
  LemmaPoint arg;
  arg.p = grid_point(best_row, grid.p, 2.0);
  arg.y = grid_point(cell.j, grid.ymod, 1.0) * y_dirs[cell.k];
  arg.zeta = zetas[cell.l];

  SearchOutcome out;
  out.method = SearchMethod::Lemma;
  out.argmax = arg;
  out.value = std::abs(functional_param_form(alpha, arg));
  out.grid.grid_p = grid.p;
  out.grid.grid_ymod = grid.ymod;
  out.grid.grid_yarg = grid.yarg;
  out.grid.grid_zarg = grid.zarg;
  out.evaluations = static_cast<std::uint64_t>(grid.p) * grid.ymod * grid.yarg * grid.zarg;
  return out;
}

double herglotz_objective(Alpha alpha, const HerglotzAtoms& atoms) {
  const auto moments = moments_from_atoms(atoms, 3);
  return std::abs(hankel_det(coeffs_from_moments(alpha, moments), {2, 2}));
}

SearchOutcome maximize_herglotz(Alpha alpha, const HerglotzOptions& options) {
  if (options.atoms < 1 || options.atoms > kMaxAtoms) {
    throw Error(ErrorKind::DomainError, "atom count must lie in [1, 4]");
  }
  if (options.start) validate(*options.start);
  const std::size_t offset = options.start ? 1 : 0;
  const std::size_t runs = options.restarts + offset;
  if (runs == 0) throw Error(ErrorKind::DomainError, "no restarts and no starting atoms");

  std::vector<LocalResult> results(runs);
  detail::parallel_for(runs, options.workers, [&](std::size_t r) {
    HerglotzAtoms init;
    if (r < offset) {
      init = *options.start;
    } else {
      const std::uint64_t restart = r - offset;
      std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                        static_cast<std::uint32_t>(options.seed >> 32),
                        static_cast<std::uint32_t>(restart),
                        static_cast<std::uint32_t>(restart >> 32)};
      std::mt19937_64 gen(seq);
      init = random_atoms(options.atoms, gen);
    }
    results[r] = refine_atoms(alpha, std::move(init), options.local_steps);
  });

  std::size_t best = 0;
  std::uint64_t evaluations = results[0].evaluations;
  for (std::size_t r = 1; r < runs; ++r) {
    evaluations += results[r].evaluations;
    if (improves(results[r].value, results[best].value)) best = r;
  }

  SearchOutcome out;
  out.method = SearchMethod::Herglotz;
  out.value = results[best].value;
  out.argmax = results[best].atoms;
  out.grid.atoms = options.atoms;
  out.grid.restarts = options.restarts;
  out.grid.local_steps = options.local_steps;
  out.grid.seed = options.seed;
  out.evaluations = evaluations;
  return out;
}

double reevaluate(Alpha alpha, const SearchOutcome& outcome) {
  struct Visitor {
    Alpha alpha;
    double operator()(const PhiPoint& pt) const { return phi(alpha, pt.p, pt.t); }
    double operator()(const LemmaPoint& pt) const {
      return std::abs(functional_param_form(alpha, pt));
    }
    double operator()(const HerglotzAtoms& atoms) const { return herglotz_objective(alpha, atoms); }
  };
  return std::visit(Visitor{alpha}, outcome.argmax);
}

std::vector<SweepRow> sweep_alpha(double alpha_start, double alpha_end, std::size_t steps,
                                  SearchMethod method, const SweepOptions& options) {
  if (!(alpha_start >= 0.0 && alpha_start < alpha_end && alpha_end < 1.0)) {
    throw Error(ErrorKind::DomainError, "sweep needs 0 <= alpha_start < alpha_end < 1");
  }
  if (steps < 1) throw Error(ErrorKind::DomainError, "sweep needs at least one step");

  std::vector<SweepRow> rows;
  rows.reserve(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) {
    const double a = i == steps ? alpha_end
                                : alpha_start + (alpha_end - alpha_start) * static_cast<double>(i) /
                                                    static_cast<double>(steps);
    const Alpha alpha(a);
    SearchOutcome outcome;
    switch (method) {
      case SearchMethod::Phi:
        outcome = maximize_phi(alpha, options.phi_grid);
        break;
      case SearchMethod::Lemma:
        outcome = maximize_param(alpha, options.param_grid, options.workers);
        break;
      case SearchMethod::Herglotz: {
        HerglotzOptions h = options.herglotz;
        h.workers = options.workers;
        outcome = maximize_herglotz(alpha, h);
        break;
      }
    }
    SweepRow row;
    row.alpha = a;
    row.searched_max = outcome.value;
    row.sharp_bound = sharp_bound(alpha);
    row.abs_gap = std::abs(row.searched_max - row.sharp_bound);
    row.argmax = describe(outcome.argmax);
    rows.push_back(std::move(row));
  }
  return rows;
}

MonotonicityScan monotonicity_scan(Alpha alpha, std::size_t grid_p, std::size_t grid_t) {
  if (grid_p < 2 || grid_t < 2) {
    throw Error(ErrorKind::DomainError, "monotonicity scan needs at least 2 points per axis");
  }
  MonotonicityScan out;
  out.worst_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid_p; ++i) {
    const double p = grid_point(i, grid_p, 2.0);
    double prev = phi(alpha, p, 0.0);
    for (std::size_t j = 1; j < grid_t; ++j) {
      const double cur = phi(alpha, p, grid_point(j, grid_t, 1.0));
      const double gap = cur - prev;
      out.worst_gap = std::min(out.worst_gap, gap);
      if (gap < -kMonotoneSlack) ++out.violations;
      prev = cur;
    }
  }
  return out;
}

}  // namespace starhankel
