#include "lvwaves/report.hpp"

#include "lvwaves/errors.hpp"

#include <algorithm>

namespace lvwaves {

bool CheckReport::pass() const {
    return std::all_of(items.begin(), items.end(), [](const CheckItem& it) { return it.pass; });
}

const CheckItem& CheckReport::item(const std::string& name) const {
    const auto it = std::find_if(items.begin(), items.end(), [&](const CheckItem& c) { return c.name == name; });
    if (it == items.end()) throw Error("report '" + subject + "' has no item '" + name + "'");
    return *it;
}

CheckItem& CheckReport::add(std::string name, bool pass, double margin, nlohmann::json details) {
    items.push_back({std::move(name), pass, margin, std::move(details)});
    return items.back();
}

nlohmann::json CheckReport::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& it : items) {
        nlohmann::json entry = it.details.is_object() ? it.details : nlohmann::json::object();
        entry["pass"] = it.pass;
        entry["margin"] = it.margin;
        j[it.name] = std::move(entry);
    }
    j["pass"] = pass();
    j["subject"] = subject;
    j["verdict"] = verdict;
    return j;
}

CheckReport CheckReport::from_json(const nlohmann::json& j) {
    CheckReport r;
    r.subject = j.value("subject", "");
    r.verdict = j.value("verdict", "");
    for (const auto& [key, value] : j.items()) {
        if (!value.is_object()) continue;
        CheckItem it;
        it.name = key;
        it.pass = value.at("pass").get<bool>();
        it.margin = value.at("margin").get<double>();
        it.details = value;
        it.details.erase("pass");
        it.details.erase("margin");
        r.items.push_back(std::move(it));
    }
    return r;
}

std::string dump_json(const nlohmann::json& j) {
    return j.dump(2) + "\n";
}

}  // namespace lvwaves
