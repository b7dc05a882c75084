#include "starhankel/cli.hpp"

#include <charconv>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "starhankel/caratheodory.hpp"
#include "starhankel/error.hpp"
#include "starhankel/format.hpp"
#include "starhankel/hankel.hpp"
#include "starhankel/search.hpp"
#include "starhankel/starlike.hpp"
#include "starhankel/verify.hpp"

namespace starhankel::cli {

namespace {

using Json = nlohmann::ordered_json;

double parse_real(std::string_view token) {
  double value = 0.0;
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), last, value);
  if (ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("cannot parse number '" + std::string(token) + "'");
  }
  return value;
}

std::string complex_text(Complex z) {
  if (z.imag() == 0.0) return format_number(z.real());
  const std::string im = format_number(std::abs(z.imag()));
  return format_number(z.real()) + (z.imag() < 0.0 ? " - " : " + ") + im + "i";
}

// One result document, rendered as `key: value` lines or as a JSON object.
class Report {
 public:
  void add(const std::string& key, double v) {
    json_[key] = v;
    text_.emplace_back(key, format_number(v));
  }
  void add(const std::string& key, Complex z) {
    json_[key] = Json::array({z.real(), z.imag()});
    text_.emplace_back(key, complex_text(z));
  }
  void add(const std::string& key, const std::string& s) {
    json_[key] = s;
    text_.emplace_back(key, s);
  }
  void add_coefficients(const CoefficientVector& f) {
    Json list = Json::array();
    for (std::size_t n = 1; n <= f.size(); ++n) {
      list.push_back(Json::array({f(n).real(), f(n).imag()}));
      text_.emplace_back("a" + std::to_string(n), complex_text(f(n)));
    }
    json_["coefficients"] = std::move(list);
  }
  void add_outcome(const SearchOutcome& outcome) {
    const Json j = Json::parse(to_json(outcome).dump());
    for (const auto& [key, value] : j.items()) json_[key] = value;
    text_.emplace_back("value", format_number(outcome.value));
    text_.emplace_back("method", std::string(to_string(outcome.method)));
    text_.emplace_back("argmax", describe(outcome.argmax));
    text_.emplace_back("grid_spec", j["grid_spec"].dump());
    text_.emplace_back("evaluations", std::to_string(outcome.evaluations));
  }

  void emit(std::ostream& out, bool as_json) const {
    if (as_json) {
      out << json_.dump(2) << '\n';
      return;
    }
    for (const auto& [key, value] : text_) out << key << ": " << value << '\n';
  }

 private:
  Json json_ = Json::object();
  std::vector<std::pair<std::string, std::string>> text_;
};

struct SearchFlags {
  std::string method = "phi";
  std::uint64_t seed = 1;
  unsigned workers = 0;
  PhiGrid phi_grid;
  ParamGrid param_grid;
  std::size_t atoms = 2;
  std::size_t restarts = 100;
  std::size_t local_steps = 200;
  std::string start;

  void attach(CLI::App* app) {
    app->add_option("--method", method, "phi, lemma or herglotz")
        ->required()
        ->check(CLI::IsMember({"phi", "lemma", "herglotz"}));
    app->add_option("--seed", seed, "random seed for herglotz restarts");
    app->add_option("--workers", workers, "worker threads (0 = all cores)");
    app->add_option("--grid-p", phi_grid.p, "p grid points")->check(CLI::Range(2, 1 << 20));
    app->add_option("--grid-t", phi_grid.t, "t grid points for phi")->check(CLI::Range(2, 1 << 20));
    app->add_option("--grid-ymod", param_grid.ymod, "|y| grid points")->check(CLI::Range(2, 1 << 20));
    app->add_option("--grid-yarg", param_grid.yarg, "arg y grid points")->check(CLI::Range(2, 1 << 20));
    app->add_option("--grid-zarg", param_grid.zarg, "arg zeta grid points")->check(CLI::Range(2, 1 << 20));
    app->add_option("--k", atoms, "atom count for herglotz (1..4)");
    app->add_option("--restarts", restarts, "random restarts for herglotz");
    app->add_option("--local-steps", local_steps, "refinement sweeps per restart");
    app->add_option("--start", start, "starting atoms weight:angle,... for herglotz");
  }

  HerglotzOptions herglotz() const {
    HerglotzOptions h;
    h.atoms = atoms;
    h.restarts = restarts;
    h.local_steps = local_steps;
    h.seed = seed;
    h.workers = workers;
    if (!start.empty()) h.start = parse_atoms(start);
    return h;
  }

  ParamGrid lemma_grid() const {
    ParamGrid g = param_grid;
    g.p = phi_grid.p;
    return g;
  }
};

}  // namespace

Complex parse_complex(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return {parse_real(text), 0.0};
  return {parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1))};
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  for (;;) {
    const auto comma = text.find(',');
    out.push_back(parse_real(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Second Hankel determinant toolkit for starlike functions of order alpha", "starhankel"};
  app.require_subcommand(1);

  bool as_json = false;
  double alpha = 0.0;
  std::string atoms_text;
  std::size_t order = kDefaultOrder;

  auto* coeffs = app.add_subcommand("coeffs", "coefficients a_1..a_N generated by Herglotz atoms");
  coeffs->add_option("--alpha", alpha, "order of starlikeness")->required();
  coeffs->add_option("--atoms", atoms_text, "weight:angle,... (radians)")->required();
  coeffs->add_option("--order", order, "largest coefficient index N")->check(CLI::Range(2, 4096));

  auto* extremal = app.add_subcommand("extremal", "coefficients of z(1-z^2)^(alpha-1) and H_2(2)");
  extremal->add_option("--alpha", alpha)->required();
  extremal->add_option("--order", order)->check(CLI::Range(4, 4096));

  std::string coeff_list;
  int q = 2;
  int n = 2;
  auto* hankel = app.add_subcommand("hankel", "Hankel determinant H_q(n) of a coefficient list");
  hankel->add_option("--coeffs", coeff_list, "a_1,a_2,... with a_1 = 1")->required();
  hankel->add_option("--q", q)->required();
  hankel->add_option("--n", n)->required();

  std::string p1_text, p2_text, p3_text;
  auto* functional = app.add_subcommand("functional", "a_2 a_4 - a_3^2 from moments p_1, p_2, p_3");
  functional->add_option("--alpha", alpha)->required();
  functional->add_option("--p1", p1_text, "re[,im]")->required();
  functional->add_option("--p2", p2_text, "re[,im]")->required();
  functional->add_option("--p3", p3_text, "re[,im]")->required();

  double p_value = 0.0;
  std::string y_text, zeta_text;
  auto* param = app.add_subcommand("param", "the functional in (p, y, zeta) form and its majorant");
  param->add_option("--alpha", alpha)->required();
  param->add_option("--p", p_value)->required();
  param->add_option("--y", y_text, "re[,im]")->required();
  param->add_option("--zeta", zeta_text, "re[,im]")->required();

  double t_value = 0.0;
  auto* phi_cmd = app.add_subcommand("phi", "majorant phi(alpha, p, t)");
  phi_cmd->add_option("--alpha", alpha)->required();
  phi_cmd->add_option("--p", p_value)->required();
  phi_cmd->add_option("--t", t_value)->required();

  auto* bound = app.add_subcommand("bound", "sharp bound (1-alpha)^2 and the searched profile maximum");
  bound->add_option("--alpha", alpha)->required();

  SearchFlags search_flags;
  auto* search = app.add_subcommand("search", "maximize the functional by one method");
  search->add_option("--alpha", alpha)->required();
  search_flags.attach(search);

  double alpha_start = 0.0;
  double alpha_end = 0.0;
  std::size_t steps = 0;
  std::string out_path;
  SearchFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "searched maximum against (1-alpha)^2 over an alpha range");
  sweep->add_option("--alpha-start", alpha_start)->required();
  sweep->add_option("--alpha-end", alpha_end)->required();
  sweep->add_option("--steps", steps, "number of intervals; steps + 1 rows")->required();
  sweep->add_option("--out", out_path, "CSV destination (stdout when omitted)");
  sweep_flags.attach(sweep);

  VerifyOptions verify_options;
  std::string golden_path;
  auto* check = app.add_subcommand("check", "run every acceptance criterion; exit 0 iff all pass");
  check->add_option("--workers", verify_options.workers);
  check->add_option("--seed", verify_options.seed);
  check->add_option("--golden", golden_path, "frozen sweep CSV to compare against");

  for (auto* sub : app.get_subcommands({})) {
    if (sub != sweep && sub != check) sub->add_flag("--json", as_json, "emit JSON");
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    Report report;
    if (coeffs->parsed()) {
      const Alpha a(alpha);
      const auto moments = moments_from_atoms(parse_atoms(atoms_text), order - 1);
      report.add("alpha", a.value());
      report.add_coefficients(coeffs_from_moments(a, moments));
    } else if (extremal->parsed()) {
      const Alpha a(alpha);
      const auto f = extremal_coeffs(a, order);
      report.add("alpha", a.value());
      report.add_coefficients(f);
      report.add("h22", hankel_det(f, {2, 2}));
      report.add("abs_h22", std::abs(hankel_det(f, {2, 2})));
    } else if (hankel->parsed()) {
      std::vector<Complex> values;
      for (double v : parse_real_list(coeff_list)) values.emplace_back(v);
      const CoefficientVector f(std::move(values));
      report.add("determinant", hankel_det(f, {q, n}));
    } else if (functional->parsed()) {
      const Alpha a(alpha);
      const MomentTriple m{parse_complex(p1_text), parse_complex(p2_text), parse_complex(p3_text)};
      const Complex lambda = functional_moment_form(a, m);
      report.add("lambda", lambda);
      report.add("abs_lambda", std::abs(lambda));
    } else if (param->parsed()) {
      const Alpha a(alpha);
      const LemmaPoint pt{p_value, parse_complex(y_text), parse_complex(zeta_text)};
      const Complex psi = functional_param_form(a, pt);
      report.add("psi", psi);
      report.add("abs_psi", std::abs(psi));
      report.add("phi", phi(a, pt.p, std::min(1.0, std::abs(pt.y))));
    } else if (phi_cmd->parsed()) {
      report.add("phi", phi(Alpha(alpha), p_value, t_value));
    } else if (bound->parsed()) {
      const Alpha a(alpha);
      report.add("sharp_bound", sharp_bound(a));
      report.add("profile_max", maximize_phi(a).value);
    } else if (search->parsed()) {
      const Alpha a(alpha);
      SearchOutcome outcome;
      switch (parse_method(search_flags.method)) {
        case SearchMethod::Phi:
          outcome = maximize_phi(a, search_flags.phi_grid);
          break;
        case SearchMethod::Lemma:
          outcome = maximize_param(a, search_flags.lemma_grid(), search_flags.workers);
          break;
        case SearchMethod::Herglotz:
          outcome = maximize_herglotz(a, search_flags.herglotz());
          break;
      }
      report.add_outcome(outcome);
    } else if (sweep->parsed()) {
      SweepOptions options;
      options.phi_grid = sweep_flags.phi_grid;
      options.param_grid = sweep_flags.lemma_grid();
      options.herglotz = sweep_flags.herglotz();
      options.workers = sweep_flags.workers;
      const auto csv =
          sweep_csv(sweep_alpha(alpha_start, alpha_end, steps, parse_method(sweep_flags.method), options));
      if (out_path.empty()) {
        out << csv;
      } else {
        write_file(out_path, csv);
      }
      return kSuccess;
    } else if (check->parsed()) {
      if (!golden_path.empty()) verify_options.golden_sweep = golden_path;
      bool all = true;
      for (const auto& r : run_acceptance(verify_options)) {
        out << summary_line(r) << '\n';
        all = all && r.passed;
      }
      return all ? kSuccess : kDomainFailure;
    }
    report.emit(out, as_json);
    return kSuccess;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainFailure;
  }
}

}  // namespace starhankel::cli
