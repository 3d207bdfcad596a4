#include "lvwaves/profile.hpp"

#include "lvwaves/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace lvwaves {

double WaveProfile::spacing() const {
    if (x.size() < 2) return 0.0;
    return (x.back() - x.front()) / static_cast<double>(x.size() - 1);
}

void WaveProfile::validate() const {
    if (x.empty()) throw DomainError("profile is empty");
    if (u.size() != x.size() || v.size() != x.size() || (w && w->size() != x.size())) {
        throw DomainError("profile columns have different lengths");
    }
    check_uniform_grid(x);
    auto nonnegative = [](const std::vector<double>& s) {
        return std::all_of(s.begin(), s.end(), [](double d) { return d >= 0.0; });
    };
    if (!nonnegative(u) || !nonnegative(v) || (w && !nonnegative(*w))) {
        throw DomainError("profile has a negative density sample");
    }
}

std::vector<double> uniform_grid(double x_min, double x_max, std::size_t n) {
    if (n < 2 || !(x_min < x_max)) throw DomainError("uniform grid needs n >= 2 and x_min < x_max");
    std::vector<double> x(n);
    const double h = (x_max - x_min) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) x[i] = x_min + h * static_cast<double>(i);
    x.back() = x_max;
    return x;
}

void check_uniform_grid(std::span<const double> x) {
    if (x.size() < 2) return;
    const double h = (x.back() - x.front()) / static_cast<double>(x.size() - 1);
    if (!(h > 0)) throw DomainError("grid is not increasing");
    const double scale = std::max({std::abs(x.front()), std::abs(x.back()), h});
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double step = x[i] - x[i - 1];
        if (!(step > 0) || std::abs(step - h) > 1e-12 * scale) {
            throw DomainError("grid spacing is not uniform at index " + std::to_string(i));
        }
    }
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

const std::vector<double>& CsvTable::column(const std::string& name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw ParseError("CSV has no column '" + name + "'");
    return columns[static_cast<std::size_t>(it - header.begin())];
}

void write_csv(std::ostream& out, const CsvTable& table) {
    for (std::size_t c = 0; c < table.header.size(); ++c) out << (c ? "," : "") << table.header[c];
    out << '\n';
    const std::size_t rows = table.columns.empty() ? 0 : table.columns.front().size();
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            out << (c ? "," : "") << format_double(table.columns[c][r]);
        }
        out << '\n';
    }
}

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    write_csv(out, table);
}

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    if (!std::getline(in, line)) throw ParseError("CSV is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) table.header.push_back(cell);
    }
    table.columns.resize(table.header.size());
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::size_t c = 0;
        while (std::getline(ss, cell, ',')) {
            if (c >= table.columns.size()) throw ParseError("too many fields on CSV line " + std::to_string(row));
            char* end = nullptr;
            const double value = std::strtod(cell.c_str(), &end);
            if (end == cell.c_str() || *end != '\0') {
                throw ParseError("bad number '" + cell + "' on CSV line " + std::to_string(row));
            }
            table.columns[c++].push_back(value);
        }
        if (c != table.columns.size()) throw ParseError("too few fields on CSV line " + std::to_string(row));
    }
    return table;
}

CsvTable read_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    return read_csv(in);
}

void write_profile_csv(std::ostream& out, const WaveProfile& profile) {
    CsvTable t;
    t.header = {"x", "u", "v"};
    t.columns = {profile.x, profile.u, profile.v};
    if (profile.w) {
        t.header.push_back("w");
        t.columns.push_back(*profile.w);
    }
    write_csv(out, t);
}

void write_profile_csv(const std::filesystem::path& path, const WaveProfile& profile) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    write_profile_csv(out, profile);
}

WaveProfile read_profile_csv(std::istream& in) {
    const CsvTable t = read_csv(in);
    const bool with_w = t.header.size() == 4;
    if (t.header.size() < 3 || t.header.size() > 4 || t.header[0] != "x" || t.header[1] != "u" ||
        t.header[2] != "v" || (with_w && t.header[3] != "w")) {
        throw ParseError("profile CSV header must be x,u,v[,w]");
    }
    WaveProfile p;
    p.x = t.columns[0];
    p.u = t.columns[1];
    p.v = t.columns[2];
    if (with_w) p.w = t.columns[3];
    return p;
}

WaveProfile read_profile_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    return read_profile_csv(in);
}

}  // namespace lvwaves
