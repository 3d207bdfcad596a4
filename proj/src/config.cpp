#include "lvwaves/config.hpp"

#include <fstream>
#include <regex>

namespace lvwaves {

using nlohmann::json;

json load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open parameter file " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    if (!j.is_object()) throw ParseError(path.string() + ": top level must be an object");
    return j;
}

namespace {

std::vector<std::string> split_path(const std::string& key) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto dot = key.find('.', start);
        parts.push_back(key.substr(start, dot - start));
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    for (const auto& p : parts) {
        if (p.empty()) throw ParseError("empty segment in override key '" + key + "'");
    }
    return parts;
}

std::size_t parse_index(const std::string& seg, const std::string& key) {
    if (seg.empty() || seg.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("override '" + key + "' indexes an array with '" + seg + "'");
    }
    const auto i = std::stoul(seg);
    if (i == 0) throw ParseError("override '" + key + "': indices are 1-based");
    return i - 1;
}

// c12 -> c.1.2, d3 -> d.3, sigma1 -> sigma.1, when the array form is in use.
std::string expand_flat_key(const json& config, const std::string& key) {
    static const std::regex matrix(R"(c([1-3])([1-3]))");
    static const std::regex vec(R"((d|sigma)([1-3]))");
    std::smatch m;
    if (std::regex_match(key, m, matrix) && config.contains("c") && config["c"].is_array()) {
        return "c." + m[1].str() + "." + m[2].str();
    }
    if (std::regex_match(key, m, vec) && config.contains(m[1].str()) && config[m[1].str()].is_array()) {
        return m[1].str() + "." + m[2].str();
    }
    return key;
}

}  // namespace

void apply_override(json& config, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("override '" + assignment + "' is not key=value");
    const std::string key = expand_flat_key(config, assignment.substr(0, eq));
    const std::string text = assignment.substr(eq + 1);
    json value;
    try {
        value = json::parse(text);
    } catch (const json::parse_error&) {
        value = text;
    }

    json* node = &config;
    const auto parts = split_path(key);
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const bool last = k + 1 == parts.size();
        if (node->is_array()) {
            const auto i = parse_index(parts[k], key);
            if (i >= node->size()) throw ParseError("override '" + key + "' index out of range");
            node = &(*node)[i];
        } else {
            if (node->is_null()) *node = json::object();
            if (!node->is_object()) throw ParseError("override '" + key + "' descends into a scalar");
            node = &(*node)[parts[k]];
        }
        if (last) *node = value;
    }
}

void apply_overrides(json& config, const std::vector<std::string>& assignments) {
    for (const auto& a : assignments) apply_override(config, a);
}

Rational json_rational(const json& value) {
    if (value.is_number_integer()) {
        return value.is_number_unsigned() ? Rational(value.get<std::uint64_t>()) : Rational(value.get<std::int64_t>());
    }
    if (value.is_number_float()) return rational_from_decimal_double(value.get<double>());
    if (value.is_string()) return parse_rational(value.get<std::string>());
    throw ParseError("expected a number or fraction string, got " + value.dump());
}

std::optional<Rational> find_rational(const json& config, const std::string& name) {
    if (config.contains(name)) return json_rational(config.at(name));
    static const std::regex matrix(R"(c([1-3])([1-3]))");
    static const std::regex vec(R"((d|sigma)([1-3]))");
    std::smatch m;
    try {
        if (std::regex_match(name, m, matrix) && config.contains("c")) {
            const auto& c = config.at("c");
            const auto i = std::stoul(m[1].str()) - 1;
            const auto j = std::stoul(m[2].str()) - 1;
            if (c.is_array() && i < c.size() && c[i].is_array() && j < c[i].size()) return json_rational(c[i][j]);
        }
        if (std::regex_match(name, m, vec) && config.contains(m[1].str())) {
            const auto& a = config.at(m[1].str());
            const auto i = std::stoul(m[2].str()) - 1;
            if (a.is_array() && i < a.size()) return json_rational(a[i]);
        }
    } catch (const ParseError& e) {
        throw ParseError("parameter " + name + ": " + e.what());
    }
    return std::nullopt;
}

Rational require_rational(const json& config, const std::string& name) {
    auto r = find_rational(config, name);
    if (!r) throw ParseError("missing parameter " + name);
    return *r;
}

double require_double(const json& config, const std::string& name) {
    return to_double(require_rational(config, name));
}

double double_or(const json& config, const std::string& name, double fallback) {
    const auto r = find_rational(config, name);
    return r ? to_double(*r) : fallback;
}

ExactTwoSpeciesParams read_two_species(const json& config) {
    ExactTwoSpeciesParams p;
    p.d1 = require_rational(config, "d1");
    p.d2 = require_rational(config, "d2");
    p.sigma1 = require_rational(config, "sigma1");
    p.sigma2 = require_rational(config, "sigma2");
    p.c11 = require_rational(config, "c11");
    p.c12 = require_rational(config, "c12");
    p.c21 = require_rational(config, "c21");
    p.c22 = require_rational(config, "c22");
    return p;
}

ExactThreeSpeciesParams read_three_species(const json& config) {
    ExactThreeSpeciesParams p;
    for (int i = 0; i < 3; ++i) {
        const std::string k = std::to_string(i + 1);
        p.d[i] = require_rational(config, "d" + k);
        p.sigma[i] = require_rational(config, "sigma" + k);
        for (int j = 0; j < 3; ++j) p.c[i][j] = require_rational(config, "c" + k + std::to_string(j + 1));
    }
    return p;
}

ExactFreeParams read_free_params(const json& config) {
    ExactFreeParams f;
    f.k1 = require_rational(config, "k1");
    f.k2 = require_rational(config, "k2");
    f.d1 = require_rational(config, "d1");
    f.d2 = require_rational(config, "d2");
    f.d3 = require_rational(config, "d3");
    f.theta = require_rational(config, "theta");
    f.sigma1 = require_rational(config, "sigma1");
    f.sigma2 = require_rational(config, "sigma2");
    f.sigma3 = require_rational(config, "sigma3");
    return f;
}

}  // namespace lvwaves
