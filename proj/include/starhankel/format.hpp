#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "starhankel/search.hpp"

namespace starhankel {

/// 17 significant digits, '.' separator, independent of locale.
std::string format_number(double value);

/// One-line summary of a maximizer, free of commas so it fits a CSV cell.
std::string describe(const Argmax& argmax);

/// Complex numbers travel as [re, im].
nlohmann::json to_json(Complex z);
nlohmann::json to_json(const Argmax& argmax);
nlohmann::json to_json(const GridSpec& grid, SearchMethod method);
nlohmann::json to_json(const SearchOutcome& outcome);

inline constexpr const char* kSweepHeader = "alpha,searched_max,sharp_bound,abs_gap,argmax";

/// Header plus one LF-terminated line per row.
std::string sweep_csv(const std::vector<SweepRow>& rows);

void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace starhankel
