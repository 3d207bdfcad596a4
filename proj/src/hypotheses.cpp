#include "lvwaves/hypotheses.hpp"

#include "lvwaves/nbarrier.hpp"

#include <algorithm>
#include <string>

namespace lvwaves {

ExistenceInputs ExistenceInputs::from_params(const ThreeSpeciesParams& p, double theta, double K_sub,
                                             double K_super) {
    ExistenceInputs in;
    in.block = p.two_species_block();
    in.d3 = p.d[2];
    in.sigma3 = p.sigma[2];
    in.c31 = p.c[2][0];
    in.c32 = p.c[2][1];
    in.c33 = p.c[2][2];
    in.theta = theta;
    in.K_sub = K_sub;
    in.K_super = K_super;
    return in;
}

CheckReport existence_report(const ExistenceInputs& in) {
    if (!(in.d3 > 0.0) || !(in.c31 > 0.0) || !(in.c32 > 0.0) || !(in.c33 > 0.0) || !(in.sigma3 > 0.0)) {
        throw DomainError("third-row parameters must be positive");
    }
    const auto q = bounds(in.block, in.c31, in.c32);
    const auto e4 = coexistence_equilibrium(in.block);

    CheckReport r;
    r.subject = "existence";

    const double h1a = in.c31 - in.sigma3;
    const double h1b = in.c31 * e4.u + in.c32 * e4.v - in.sigma3;
    const double h1 = std::min(h1a, h1b);
    r.add("H1", h1 > 0.0, h1, {{"c31_minus_sigma3", h1a}, {"endpoint_minus_sigma3", h1b}});

    const double h2 = in.c33 * in.K_super + q.q_lower - in.sigma3;
    r.add("H2", h2 >= 0.0, h2, {{"q_lower", q.q_lower}});

    const double lead = in.c33 * in.K_sub + 6.0 * in.d3;
    const double h3 = 4.0 * lead * (-in.c33 * in.K_sub - 2.0 * in.d3 - q.q_upper + in.sigma3) -
                      4.0 * in.theta * in.theta;
    r.add("H3", h3 >= 0.0, h3, {{"q_upper", q.q_upper}, {"theta", in.theta}});

    const double h4 = std::min(in.K_super - in.K_sub, in.K_sub);
    r.add("H4", h4 >= 0.0 && in.K_sub > 0.0, h4, {{"K_sub", in.K_sub}, {"K_super", in.K_super}});

    if (r.pass()) {
        r.verdict = "existence predicted (H1-H4 hold)";
    } else {
        std::string failed;
        for (const auto& it : r.items) {
            if (it.pass) continue;
            if (!failed.empty()) failed += ", ";
            failed += it.name;
        }
        r.verdict = "hypotheses violated: " + failed;
    }
    return r;
}

FisherContext fisher_context(const ExistenceInputs& in, WaveProfile background) {
    FisherContext ctx;
    ctx.d3 = in.d3;
    ctx.theta = in.theta;
    ctx.sigma3 = in.sigma3;
    ctx.c31 = in.c31;
    ctx.c32 = in.c32;
    ctx.c33 = in.c33;
    ctx.background = std::move(background);
    return ctx;
}

SigmaPair sigma_pair(const ThreeSpeciesParams& p) {
    return {p.sigma[0] * p.c[2][2] - p.sigma[2] * p.c[0][2], p.sigma[1] * p.c[2][2] - p.sigma[2] * p.c[1][2]};
}

CheckReport nonexistence_report(const ThreeSpeciesParams& p) {
    p.validate();
    const auto [S1, S2] = sigma_pair(p);
    const auto& c = p.c;
    const double d1 = p.d[0];
    const double d2 = p.d[1];

    CheckReport r;
    r.subject = "nonexistence";

    const double a1 = std::min(S1, S2);
    r.add("A1", a1 > 0.0, a1, {{"Sigma1", S1}, {"Sigma2", S2}});

    const double forward = std::min(c[1][0] * S1 - c[0][0] * S2, c[0][1] * S2 - c[1][1] * S1);
    const double reverse = std::min(c[0][0] * S2 - c[1][0] * S1, c[1][1] * S1 - c[0][1] * S2);
    const double a2 = std::max(forward, reverse);
    // Same relative tolerance as the regime classification.
    const int s1 = detail::compare_with_tolerance(c[1][0] * S1, c[0][0] * S2, kRegimeTolerance);
    const int s2 = detail::compare_with_tolerance(c[0][1] * S2, c[1][1] * S1, kRegimeTolerance);
    const bool a2_pass = s1 != 0 && s1 == s2;
    r.add("A2", a2_pass, a2, {{"orientation", forward >= reverse ? "forward" : "reverse"}});

    const double target = p.sigma[2] * c[2][2];
    const double dmin = std::min(d1 / d2, d2 / d1);
    const double lit = std::min(c[2][0] * d1 * std::min(S1 / c[0][0], S2 / c[1][0]),
                                c[2][1] * d2 * std::min(S2 / c[1][1], S1 / c[0][1])) * dmin;
    const double var = std::min(c[2][0] * std::min(S1 / c[0][0], S2 / c[1][0]),
                                c[2][1] * std::min(S2 / c[1][1], S1 / c[0][1])) * dmin;
    r.add("A3_literal", lit >= target, lit - target, {{"value", lit}, {"sigma3_c33", target}});
    r.add("A3_variant", var >= target, var - target, {{"value", var}, {"sigma3_c33", target}});

    const bool base = r.item("A1").pass && r.item("A2").pass;
    const bool l = r.item("A3_literal").pass;
    const bool v = r.item("A3_variant").pass;
    if (base && l && v) {
        r.verdict = "nonexistence predicted (literal A3 and variant both pass)";
    } else if (base && l) {
        r.verdict = "nonexistence predicted (literal A3 passes, variant fails)";
    } else if (base && v) {
        r.verdict = "nonexistence predicted (variant A3 passes, literal fails)";
    } else {
        r.verdict = "inconclusive (A1-A3 not satisfied)";
    }
    return r;
}

bool nonexistence_predicted(const CheckReport& report) {
    return report.item("A1").pass && report.item("A2").pass &&
           (report.item("A3_literal").pass || report.item("A3_variant").pass);
}

const char* to_string(SWClass c) {
    switch (c) {
    case SWClass::S: return "S";
    case SWClass::W: return "W";
    case SWClass::Neither: return "neither";
    }
    return "?";
}

SWClass check_SW(const TwoSpeciesParams& p) {
    switch (classify_regime(p)) {
    case Regime::Strong: return SWClass::S;
    case Regime::Weak: return SWClass::W;
    default: return SWClass::Neither;
    }
}

}  // namespace lvwaves
