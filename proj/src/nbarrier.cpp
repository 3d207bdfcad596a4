#include "lvwaves/nbarrier.hpp"

#include <cmath>

namespace lvwaves {

const char* to_string(ConicKind k) {
    switch (k) {
    case ConicKind::Hyperbola: return "hyperbola";
    case ConicKind::Parabola: return "parabola";
    case ConicKind::Ellipse: return "ellipse";
    }
    return "unknown";
}

const char* to_string(BarrierSide s) {
    return s == BarrierSide::LowerBound ? "lower" : "upper";
}

ConicClass conic_classify(const TwoSpeciesParams& p, double alpha, double beta, double tol) {
    const double cross = alpha * p.c12 + beta * p.c21;
    const double dominant = cross * cross;
    ConicClass out;
    out.discriminant = dominant - 4.0 * alpha * beta * p.c11 * p.c22;
    if (std::abs(out.discriminant) <= tol * dominant) {
        out.kind = ConicKind::Parabola;
    } else {
        out.kind = out.discriminant > 0 ? ConicKind::Hyperbola : ConicKind::Ellipse;
    }
    return out;
}

CheckReport verify_bounds_on_profile(const WaveProfile& profile, double alpha, double beta, const BoundPair& bounds) {
    if (profile.size() == 0) throw DomainError("profile is empty");
    if (profile.u.size() != profile.size() || profile.v.size() != profile.size()) {
        throw DomainError("profile columns have different lengths");
    }
    std::size_t imin = 0;
    std::size_t imax = 0;
    double qmin = alpha * profile.u[0] + beta * profile.v[0];
    double qmax = qmin;
    for (std::size_t i = 1; i < profile.size(); ++i) {
        const double q = alpha * profile.u[i] + beta * profile.v[i];
        if (q < qmin) {
            qmin = q;
            imin = i;
        }
        if (q > qmax) {
            qmax = q;
            imax = i;
        }
    }
    CheckReport r;
    r.subject = "n-barrier bounds";
    const double lower_margin = qmin - bounds.q_lower;
    const double upper_margin = bounds.q_upper - qmax;
    r.add("lower", lower_margin >= 0, lower_margin,
          {{"side", "lower"}, {"extremum", qmin}, {"argmin_x", profile.x[imin]}, {"bound", bounds.q_lower}});
    r.add("upper", upper_margin >= 0, upper_margin,
          {{"side", "upper"}, {"extremum", qmax}, {"argmax_x", profile.x[imax]}, {"bound", bounds.q_upper}});
    r.verdict = r.pass() ? "bounds hold on every grid point" : "bounds violated";
    return r;
}

}  // namespace lvwaves
