#include "starhankel/format.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "starhankel/error.hpp"

namespace starhankel {

std::string format_number(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
  if (ec != std::errc{}) throw Error(ErrorKind::DomainError, "number formatting failed");
  return std::string(buf.data(), ptr);
}

namespace {

std::string join_numbers(const std::vector<double>& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += '/';
    out += format_number(values[k]);
  }
  return out;
}

std::string complex_text(Complex z) {
  return "(" + format_number(z.real()) + " " + format_number(z.imag()) + ")";
}

struct Describe {
  std::string operator()(const PhiPoint& pt) const {
    return "p=" + format_number(pt.p) + " t=" + format_number(pt.t);
  }
  std::string operator()(const LemmaPoint& pt) const {
    return "p=" + format_number(pt.p) + " y=" + complex_text(pt.y) + " zeta=" + complex_text(pt.zeta);
  }
  std::string operator()(const HerglotzAtoms& atoms) const {
    return "weights=" + join_numbers(atoms.weights) + " angles=" + join_numbers(atoms.angles);
  }
};

struct ArgmaxJson {
  nlohmann::json operator()(const PhiPoint& pt) const { return {{"p", pt.p}, {"t", pt.t}}; }
  nlohmann::json operator()(const LemmaPoint& pt) const {
    return {{"p", pt.p}, {"y", to_json(pt.y)}, {"zeta", to_json(pt.zeta)}};
  }
  nlohmann::json operator()(const HerglotzAtoms& atoms) const {
    return {{"weights", atoms.weights}, {"angles", atoms.angles}};
  }
};

}  // namespace

std::string describe(const Argmax& argmax) { return std::visit(Describe{}, argmax); }

nlohmann::json to_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

nlohmann::json to_json(const Argmax& argmax) { return std::visit(ArgmaxJson{}, argmax); }

nlohmann::json to_json(const GridSpec& grid, SearchMethod method) {
  nlohmann::json j = nlohmann::json::object();
  switch (method) {
    case SearchMethod::Phi:
      j["grid_p"] = grid.grid_p;
      j["grid_t"] = grid.grid_t;
      break;
    case SearchMethod::Lemma:
      j["grid_p"] = grid.grid_p;
      j["grid_ymod"] = grid.grid_ymod;
      j["grid_yarg"] = grid.grid_yarg;
      j["grid_zarg"] = grid.grid_zarg;
      break;
    case SearchMethod::Herglotz:
      j["atoms"] = grid.atoms;
      j["restarts"] = grid.restarts;
      j["local_steps"] = grid.local_steps;
      j["seed"] = grid.seed;
      break;
  }
  return j;
}

nlohmann::json to_json(const SearchOutcome& outcome) {
  return {{"value", outcome.value},
          {"argmax", to_json(outcome.argmax)},
          {"method", std::string(to_string(outcome.method))},
          {"grid_spec", to_json(outcome.grid, outcome.method)},
          {"evaluations", outcome.evaluations}};
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = kSweepHeader;
  out += '\n';
  for (const auto& row : rows) {
    out += format_number(row.alpha) + ',' + format_number(row.searched_max) + ',' +
           format_number(row.sharp_bound) + ',' + format_number(row.abs_gap) + ',' + row.argmax + '\n';
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw Error(ErrorKind::DomainError, "cannot open " + path.string() + " for writing");
  os << contents;
  if (!os) throw Error(ErrorKind::DomainError, "failed writing " + path.string());
}

}  // namespace starhankel
