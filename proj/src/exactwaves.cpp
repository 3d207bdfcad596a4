#include "lvwaves/exactwaves.hpp"

#include <algorithm>
#include <cmath>

namespace lvwaves {

namespace {

// tanh and its derivative sech^2 without the 1 - T^2 cancellation.
struct TanhPair {
    double t;
    double s;
};

TanhPair tanh_pair(double x) {
    const double c = std::cosh(x);
    return {std::tanh(x), std::isfinite(c) ? 1.0 / (c * c) : 0.0};
}

double row_residual(const std::array<double, 3>& c, double d, double sigma, double f, double f1, double f2,
                    double theta, const WaveValues& val) {
    return d * f2 + theta * f1 + f * (sigma - c[0] * val.u - c[1] * val.v - c[2] * val.w);
}

}  // namespace

WaveValues evaluate_wave(const ExactWaveSpec& spec, double x) {
    return evaluate_wave_derivatives(spec, x).value;
}

WaveDerivatives evaluate_wave_derivatives(const ExactWaveSpec& spec, double x) {
    const auto [t, s] = tanh_pair(x);
    const double a = 0.5 * (spec.u_star + 1.0);
    const double b = 0.5 * (spec.u_star - 1.0);
    const double k1 = spec.free.k1;
    const double k2 = spec.free.k2;
    WaveDerivatives d;
    d.value = {a + b * t, k1 * (1.0 + t) * (1.0 + t), k2 * s};
    d.first = {b * s, 2.0 * k1 * (1.0 + t) * s, -2.0 * k2 * t * s};
    d.second = {-2.0 * b * t * s, 2.0 * k1 * s * (s - 2.0 * t * (1.0 + t)), -2.0 * k2 * s * (s - 2.0 * t * t)};
    return d;
}

WaveProfile sample_wave(const ExactWaveSpec& spec, std::span<const double> grid) {
    WaveProfile p;
    p.x.assign(grid.begin(), grid.end());
    p.u.reserve(grid.size());
    p.v.reserve(grid.size());
    std::vector<double> w;
    w.reserve(grid.size());
    for (double x : grid) {
        const auto val = evaluate_wave(spec, x);
        p.u.push_back(val.u);
        p.v.push_back(val.v);
        w.push_back(val.w);
    }
    p.w = std::move(w);
    p.theta = spec.free.theta;
    return p;
}

std::array<double, 3> residual(const ExactWaveSpec& spec, std::span<const double> grid) {
    if (grid.empty()) throw DomainError("residual needs a nonempty grid");
    const auto& c = spec.params.c;
    const auto& d = spec.params.d;
    const auto& sigma = spec.params.sigma;
    const double theta = spec.free.theta;
    std::array<double, 3> worst{0.0, 0.0, 0.0};
    for (double x : grid) {
        const auto der = evaluate_wave_derivatives(spec, x);
        const auto& f = der.value;
        const std::array<double, 3> r{
            row_residual(c[0], d[0], sigma[0], f.u, der.first.u, der.second.u, theta, f),
            row_residual(c[1], d[1], sigma[1], f.v, der.first.v, der.second.v, theta, f),
            row_residual(c[2], d[2], sigma[2], f.w, der.first.w, der.second.w, theta, f)};
        for (int i = 0; i < 3; ++i) worst[i] = std::max(worst[i], std::abs(r[i]));
    }
    return worst;
}

double TwoSpeciesExactWave::u(double x) const {
    return 0.5 * (u_star + 1.0) + 0.5 * (u_star - 1.0) * std::tanh(x);
}

double TwoSpeciesExactWave::v(double x) const {
    const double t = 1.0 + std::tanh(x);
    return k1 * t * t;
}

WaveProfile TwoSpeciesExactWave::sample(std::span<const double> grid) const {
    WaveProfile p;
    p.x.assign(grid.begin(), grid.end());
    for (double x : grid) {
        p.u.push_back(u(x));
        p.v.push_back(v(x));
    }
    p.theta = theta;
    return p;
}

std::array<double, 2> TwoSpeciesExactWave::residual(std::span<const double> grid) const {
    if (grid.empty()) throw DomainError("residual needs a nonempty grid");
    const double b = 0.5 * (u_star - 1.0);
    std::array<double, 2> worst{0.0, 0.0};
    for (double x : grid) {
        const auto [t, s] = tanh_pair(x);
        const double uu = u(x);
        const double vv = v(x);
        const double u1 = b * s;
        const double u2 = -2.0 * b * t * s;
        const double v1 = 2.0 * k1 * (1.0 + t) * s;
        const double v2 = 2.0 * k1 * s * (s - 2.0 * t * (1.0 + t));
        const double r1 = params.d1 * u2 + theta * u1 + uu * (params.sigma1 - params.c11 * uu - params.c12 * vv);
        const double r2 = params.d2 * v2 + theta * v1 + vv * (params.sigma2 - params.c21 * uu - params.c22 * vv);
        worst[0] = std::max(worst[0], std::abs(r1));
        worst[1] = std::max(worst[1], std::abs(r2));
    }
    return worst;
}

TwoSpeciesExactWave solve_two_species_wave(double d1, double d2, double sigma1, double k1) {
    if (!(d1 > 0) || !(d2 > 0) || !(sigma1 > 0) || !(k1 > 0)) {
        throw DomainError("two-species wave needs positive d1, d2, sigma1, k1");
    }
    TwoSpeciesExactWave wave;
    wave.k1 = k1;
    wave.theta = 0.5 * (sigma1 - 4.0 * d1);
    wave.u_star = 1.0 - 8.0 * d1 / sigma1;
    wave.v_star = 4.0 * k1;
    if (!(wave.u_star > 0)) throw Infeasible("u* = 1 - 8 d1/sigma1 is not positive (needs sigma1 > 8 d1)");
    auto& p = wave.params;
    p.d1 = d1;
    p.d2 = d2;
    p.sigma1 = sigma1;
    p.c11 = sigma1;
    p.c12 = 2.0 * d1 / k1;
    p.c22 = 6.0 * d2 / k1;
    p.c21 = sigma1 * (20.0 * d2 + sigma1 - 4.0 * d1) / (4.0 * d1);
    p.sigma2 = p.c21 * wave.u_star + 24.0 * d2;
    if (!(p.c21 > 0)) throw Infeasible("induced c21 is not positive");
    if (!(p.sigma2 > 0)) throw Infeasible("induced sigma2 is not positive");
    return wave;
}

TwoSpeciesExactWave two_species_exact_wave(double d1, double d2, double theta, double sigma1, double sigma2,
                                           double k1) {
    TwoSpeciesExactWave wave = solve_two_species_wave(d1, d2, sigma1, k1);
    auto close = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max({std::abs(a), std::abs(b), 1.0}); };
    if (!close(theta, wave.theta)) {
        throw Infeasible("ansatz forces theta = (sigma1 - 4 d1)/2 = " + format_double(wave.theta) + ", got " +
                         format_double(theta));
    }
    if (!close(sigma2, wave.params.sigma2)) {
        throw Infeasible("ansatz forces sigma2 = c21 u* + 24 d2 = " + format_double(wave.params.sigma2) + ", got " +
                         format_double(sigma2));
    }
    return wave;
}

}  // namespace lvwaves
