#pragma once

#include "lvwaves/model.hpp"
#include "lvwaves/profile.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace lvwaves {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// Runs the `lvwaves` command line. `args` excludes the program name.
/// Reports go to `out` and to files in the output directory; diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

enum class Figure { Fig1, Fig2, Fig3 };

struct FigureRequest {
    Figure which{Figure::Fig1};
    TwoSpeciesParams params;
    double alpha{1.0};
    double beta{1.0};
    /// Half-open plotting box [0, u_max] x [0, v_max]; 0 picks a box around the intercepts.
    double u_max{0.0};
    double v_max{0.0};
    std::size_t resolution{400};
};

/// Preset instance of a figure panel: fig1 "a".."f", fig2 / fig3 "a".."d".
/// Throws DomainError for an unknown panel.
FigureRequest figure_preset(Figure which, const std::string& panel);

/// Named CSV point sets: "lines" (the two nullclines), "conic" (points on
/// F = 0 found by sign changes along grid rows and columns, refined by
/// bisection) and, for fig2 / fig3, "barrier" (levels) and "barrier_lines".
/// Throws DomainError when alpha or beta is not positive.
std::vector<std::pair<std::string, CsvTable>> emit_figure_data(const FigureRequest& request);

}  // namespace lvwaves
