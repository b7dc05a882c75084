#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "starhankel/caratheodory.hpp"
#include "starhankel/starlike.hpp"

namespace starhankel {

enum class SearchMethod { Phi, Lemma, Herglotz };

std::string_view to_string(SearchMethod method);
/// Accepts "phi", "lemma" and "herglotz"; throws DomainError otherwise.
SearchMethod parse_method(std::string_view name);

/// A point (p, t = |y|) of the majorant's domain.
struct PhiPoint {
  double p = 0.0;
  double t = 0.0;
};

using Argmax = std::variant<PhiPoint, LemmaPoint, HerglotzAtoms>;

/// Resolution actually used by a search. Fields a method does not use stay zero.
struct GridSpec {
  std::size_t grid_p = 0;
  std::size_t grid_t = 0;
  std::size_t grid_ymod = 0;
  std::size_t grid_yarg = 0;
  std::size_t grid_zarg = 0;
  std::size_t atoms = 0;
  std::size_t restarts = 0;
  std::size_t local_steps = 0;
  std::uint64_t seed = 0;
};

struct SearchOutcome {
  double value = 0.0;
  Argmax argmax;
  SearchMethod method = SearchMethod::Phi;
  GridSpec grid;
  std::uint64_t evaluations = 0;
};

/// Candidates must beat the incumbent by more than this to replace it, which
/// keeps the lexicographically smallest maximizer when values tie to rounding.
inline constexpr double kTieTolerance = 1e-13;

struct PhiGrid {
  std::size_t p = 201;
  std::size_t t = 101;
};

/// Grid maximum of phi over [0,2] x [0,1] (endpoints included), then a
/// golden-section pass in p along t = 1 around the best grid point.
SearchOutcome maximize_phi(Alpha alpha, PhiGrid grid = {});

struct ParamGrid {
  std::size_t p = 201;
  std::size_t ymod = 101;
  std::size_t yarg = 64;
  std::size_t zarg = 64;
};

/// Grid maximum of |functional_param_form| with y = t e^{i mu} and zeta on the
/// unit circle (the functional is affine in zeta, so the disk adds nothing).
/// Rows of constant p are evaluated in parallel and reduced in order.
SearchOutcome maximize_param(Alpha alpha, ParamGrid grid = {}, unsigned workers = 0);

struct HerglotzOptions {
  std::size_t atoms = 2;
  std::size_t restarts = 100;
  std::size_t local_steps = 200;
  std::uint64_t seed = 1;
  /// Evaluated (and refined) before the random restarts.
  std::optional<HerglotzAtoms> start;
  unsigned workers = 0;
};

/// |a_2 a_4 - a_3^2| for the starlike function generated by the atoms.
double herglotz_objective(Alpha alpha, const HerglotzAtoms& atoms);

/// Random-restart search over genuine members of P: Dirichlet(1) weights,
/// uniform angles, then coordinate-wise refinement with a halving step.
SearchOutcome maximize_herglotz(Alpha alpha, const HerglotzOptions& options = {});

/// The searched functional evaluated at outcome.argmax.
double reevaluate(Alpha alpha, const SearchOutcome& outcome);

struct SweepOptions {
  PhiGrid phi_grid;
  ParamGrid param_grid;
  HerglotzOptions herglotz;
  unsigned workers = 0;
};

struct SweepRow {
  double alpha = 0.0;
  double searched_max = 0.0;
  double sharp_bound = 0.0;
  double abs_gap = 0.0;
  std::string argmax;
};

/// Runs `method` at steps + 1 equispaced alphas from alpha_start to alpha_end inclusive.
std::vector<SweepRow> sweep_alpha(double alpha_start, double alpha_end, std::size_t steps,
                                  SearchMethod method, const SweepOptions& options = {});

struct MonotonicityScan {
  std::size_t violations = 0;
  /// Smallest forward difference phi(t_{j+1}) - phi(t_j) seen; negative means a decrease.
  double worst_gap = 0.0;
};

/// Counts adjacent t-grid pairs where phi drops by more than 1e-12.
MonotonicityScan monotonicity_scan(Alpha alpha, std::size_t grid_p = 101, std::size_t grid_t = 101);

}  // namespace starhankel
