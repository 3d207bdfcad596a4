#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace lvwaves {

/// One audited condition. A negative margin means the condition is violated.
struct CheckItem {
    std::string name;
    bool pass{false};
    double margin{0.0};
    /// Extra fields serialised next to pass/margin (side, extremum, argmin_x, ...).
    nlohmann::json details = nlohmann::json::object();
};

/// Structured pass/fail record produced by every audit in the library.
struct CheckReport {
    std::string subject;
    std::vector<CheckItem> items;
    std::string verdict;

    /// True when every item passes.
    bool pass() const;
    const CheckItem& item(const std::string& name) const;
    CheckItem& add(std::string name, bool pass, double margin, nlohmann::json details = nlohmann::json::object());

    /// {"<item>": {"pass": .., "margin": .., ...details}, "pass": .., "subject": .., "verdict": ..}
    nlohmann::json to_json() const;
    static CheckReport from_json(const nlohmann::json& j);
};

/// Pretty-printed JSON with sorted keys and a trailing newline.
std::string dump_json(const nlohmann::json& j);

}  // namespace lvwaves
