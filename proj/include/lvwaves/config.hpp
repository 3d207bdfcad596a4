#pragma once

// Parameter files. A file is a JSON object; parameters may be given either
// as arrays ("d": [..], "sigma": [..], "c": [[..], ..]) or as flat keys
// (d1, sigma2, c12, ...). Numbers may be JSON numbers or strings holding an
// exact fraction ("41/5").

#include "lvwaves/exactwaves.hpp"
#include "lvwaves/model.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace lvwaves {

/// Throws ParseError when the file is missing or is not a JSON object.
nlohmann::json load_config(const std::filesystem::path& path);

/// Applies `key=value`. The key is a dotted path; a segment addressing an
/// array is a 1-based index, so `c.1.2=0.5` sets c12. The value is read as
/// JSON when possible and kept as a string otherwise (fractions).
/// Flat keys such as `c12` are rewritten onto an existing matrix.
void apply_override(nlohmann::json& config, const std::string& assignment);
void apply_overrides(nlohmann::json& config, const std::vector<std::string>& assignments);

/// Exact value of a number or fraction string.
Rational json_rational(const nlohmann::json& value);

/// Looks up a scalar parameter by flat name (d1, sigma3, c21, k1, theta, ...),
/// falling back to the array forms for d, sigma and c.
std::optional<Rational> find_rational(const nlohmann::json& config, const std::string& name);
Rational require_rational(const nlohmann::json& config, const std::string& name);
double require_double(const nlohmann::json& config, const std::string& name);
double double_or(const nlohmann::json& config, const std::string& name, double fallback);

ExactTwoSpeciesParams read_two_species(const nlohmann::json& config);
ExactThreeSpeciesParams read_three_species(const nlohmann::json& config);
/// k1, k2, d1..d3, theta, sigma1..sigma3.
ExactFreeParams read_free_params(const nlohmann::json& config);

}  // namespace lvwaves
