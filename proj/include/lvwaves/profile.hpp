#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lvwaves {

/// Densities sampled on a uniform 1-D grid. In the moving frame x = y - theta t
/// a traveling wave is a fixed profile; `theta` records that speed.
struct WaveProfile {
    std::vector<double> x;
    std::vector<double> u;
    std::vector<double> v;
    std::optional<std::vector<double>> w;
    double theta{0.0};

    std::size_t size() const noexcept { return x.size(); }
    bool has_w() const noexcept { return w.has_value(); }
    double spacing() const;

    /// Throws DomainError on mismatched lengths, a non-uniform or
    /// non-increasing grid (relative 1e-12), or a negative density sample.
    void validate() const;
};

/// Uniform grid of n nodes on [x_min, x_max].
std::vector<double> uniform_grid(double x_min, double x_max, std::size_t n);

/// Throws DomainError unless the grid is strictly increasing with constant
/// spacing to 1e-12 relative.
void check_uniform_grid(std::span<const double> x);

/// CSV with header `x,u,v` or `x,u,v,w`; 17 significant digits, LF endings.
void write_profile_csv(std::ostream& out, const WaveProfile& profile);
void write_profile_csv(const std::filesystem::path& path, const WaveProfile& profile);
WaveProfile read_profile_csv(std::istream& in);
WaveProfile read_profile_csv(const std::filesystem::path& path);

/// Generic column CSV used for scalar profiles and figure data.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> columns;

    const std::vector<double>& column(const std::string& name) const;
};

void write_csv(std::ostream& out, const CsvTable& table);
void write_csv(const std::filesystem::path& path, const CsvTable& table);
CsvTable read_csv(std::istream& in);
CsvTable read_csv(const std::filesystem::path& path);

/// "%.17g" formatting shared by every text emitter.
std::string format_double(double value);

}  // namespace lvwaves
