#include "lvwaves/cli.hpp"

#include "lvwaves/nbarrier.hpp"

#include <algorithm>
#include <cmath>

namespace lvwaves {

FigureRequest figure_preset(Figure which, const std::string& panel) {
    FigureRequest r;
    r.which = which;
    if (which == Figure::Fig1) {
        r.params = {1.0, 1.0, 1.0, 1.0, 1.0, 0.5, 2.0 / 3.0, 1.0};
        const double root6 = std::sqrt(6.0);
        if (panel == "a") {
            r.alpha = 0.5, r.beta = 4.0;
        } else if (panel == "b") {
            r.alpha = 2.0, r.beta = 3.0 / 20.0;
        } else if (panel == "c") {
            r.alpha = 2.0, r.beta = 7.5 + 3.0 * root6;
        } else if (panel == "d") {
            r.alpha = 2.0, r.beta = 7.5 - 3.0 * root6;
        } else if (panel == "e") {
            r.alpha = 2.0, r.beta = 3.0;
        } else if (panel == "f") {
            r.alpha = 0.5, r.beta = 4.0;
            r.u_max = 10.0;
            r.v_max = 10.0;
        } else {
            throw DomainError("fig1 has panels a-f, got '" + panel + "'");
        }
        return r;
    }

    // Figs. 2 and 3 share d1 = sigma_i = c11 = c22 = 1, c12 = 2, c21 = 3, alpha = 17.
    r.params = {1.0, 1.0, 1.0, 1.0, 1.0, 2.0, 3.0, 1.0};
    r.alpha = 17.0;
    const bool upper = which == Figure::Fig3;
    if (panel == "a") {
        r.beta = 18.0, r.params.d2 = 2.0;
    } else if (panel == "b") {
        r.beta = 5.0, r.params.d2 = 2.0;
    } else if (panel == "c") {
        r.beta = upper ? 33.0 : 18.0, r.params.d2 = 2.0 / 3.0;
    } else if (panel == "d") {
        r.beta = 18.0, r.params.d2 = 0.5;
    } else {
        throw DomainError(std::string(upper ? "fig3" : "fig2") + " has panels a-d, got '" + panel + "'");
    }
    return r;
}

namespace {

double bisect(auto&& f, double a, double b) {
    double fa = f(a);
    for (int k = 0; k < 200 && b - a > 0.0; ++k) {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b) break;
        const double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm < 0.0) == (fa < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

std::vector<std::pair<std::string, CsvTable>> emit_figure_data(const FigureRequest& req) {
    if (!(req.alpha > 0.0) || !(req.beta > 0.0)) throw DomainError("alpha and beta must be positive");
    if (req.resolution < 2) throw DomainError("resolution must be at least 2");
    const auto& p = req.params;
    p.validate();

    const double u_max = req.u_max > 0.0 ? req.u_max : 1.25 * std::max(p.sigma1 / p.c11, p.sigma2 / p.c21);
    const double v_max = req.v_max > 0.0 ? req.v_max : 1.25 * std::max(p.sigma2 / p.c22, p.sigma1 / p.c12);
    const std::size_t n = req.resolution;
    const auto us = uniform_grid(0.0, u_max, n + 1);
    const auto vs = uniform_grid(0.0, v_max, n + 1);

    std::vector<std::pair<std::string, CsvTable>> out;

    CsvTable lines{{"u", "v_red", "v_blue"}, {us, {}, {}}};
    for (double u : us) {
        lines.columns[1].push_back((p.sigma1 - p.c11 * u) / p.c12);
        lines.columns[2].push_back((p.sigma2 - p.c21 * u) / p.c22);
    }
    out.emplace_back("lines", std::move(lines));

    CsvTable conic{{"u", "v", "F"}, {{}, {}, {}}};
    auto push = [&](double u, double v) {
        conic.columns[0].push_back(u);
        conic.columns[1].push_back(v);
        conic.columns[2].push_back(F_value(p, req.alpha, req.beta, u, v));
    };
    for (double v : vs) {
        auto f = [&](double u) { return F_value(p, req.alpha, req.beta, u, v); };
        for (std::size_t i = 0; i + 1 < us.size(); ++i) {
            const double a = f(us[i]);
            const double b = f(us[i + 1]);
            if (a == 0.0) push(us[i], v);
            else if ((a < 0.0) != (b < 0.0) && b != 0.0) push(bisect(f, us[i], us[i + 1]), v);
        }
    }
    for (double u : us) {
        auto f = [&](double v) { return F_value(p, req.alpha, req.beta, u, v); };
        for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
            const double a = f(vs[i]);
            const double b = f(vs[i + 1]);
            if (a != 0.0 && b != 0.0 && (a < 0.0) != (b < 0.0)) push(u, bisect(f, vs[i], vs[i + 1]));
        }
    }
    out.emplace_back("conic", std::move(conic));

    if (req.which != Figure::Fig1) {
        const auto side = req.which == Figure::Fig2 ? BarrierSide::LowerBound : BarrierSide::UpperBound;
        const auto b = construct_barrier(p, req.alpha, req.beta, side);
        out.emplace_back("barrier", CsvTable{{"lambda1", "lambda2", "eta", "case"},
                                             {{b.lambda1}, {b.lambda2}, {b.eta}, {double(b.case_id)}}});
        CsvTable bl{{"u", "v_lambda1", "v_lambda2", "v_eta"}, {us, {}, {}, {}}};
        for (double u : us) {
            bl.columns[1].push_back((b.lambda1 - req.alpha * p.d1 * u) / (req.beta * p.d2));
            bl.columns[2].push_back((b.lambda2 - req.alpha * p.d1 * u) / (req.beta * p.d2));
            bl.columns[3].push_back((b.eta - req.alpha * u) / req.beta);
        }
        out.emplace_back("barrier_lines", std::move(bl));
    }
    return out;
}

}  // namespace lvwaves
