#include "lvwaves/model.hpp"

#include <cmath>
#include <numbers>

namespace lvwaves {

const char* to_string(Regime r) {
    switch (r) {
    case Regime::ExclusionUWins: return "exclusion_u_wins";
    case Regime::ExclusionVWins: return "exclusion_v_wins";
    case Regime::Strong: return "strong";
    case Regime::Weak: return "weak";
    case Regime::Degenerate: return "degenerate";
    }
    return "unknown";
}

double evenness_index(double u, double v) {
    if (!(u >= 0) || !(v >= 0)) throw DomainError("evenness index needs nonnegative densities");
    const double total = u + v;
    if (!(total > 0)) throw DomainError("evenness index undefined for u + v = 0");
    auto plogp = [total](double x) { return x > 0 ? x * std::log(x / total) : 0.0; };
    const double j = -(plogp(u) + plogp(v)) / (std::numbers::ln2 * total);
    // Rounding can push the maximum a hair above 1.
    return std::clamp(j, 0.0, 1.0);
}

}  // namespace lvwaves
