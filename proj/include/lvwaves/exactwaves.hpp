#pragma once

// Exact tanh-polynomial traveling waves connecting (1, 0, 0) to (u*, v*, 0):
//
//   u(x) = (u* + 1)/2 + (u* - 1)/2 T,  v(x) = k1 (1 + T)^2,  w(x) = k2 (1 - T^2),
//
// with T = tanh(x) and sigma1 = c11. Substituting into the traveling-wave
// ODEs and collecting powers of T fixes the competition matrix in terms of
// the free parameters (k1, k2, d_i, theta, sigma_i).

#include "lvwaves/model.hpp"
#include "lvwaves/profile.hpp"

#include <array>
#include <span>

namespace lvwaves {

template <Scalar T>
struct BasicFreeParams {
    T k1{1}, k2{1};
    T d1{1}, d2{1}, d3{1};
    T theta{0};
    T sigma1{1}, sigma2{1}, sigma3{1};

    /// Throws DomainError unless k_i, d_i, sigma_i are positive and 2 d1 + theta != 0.
    void validate() const {
        const std::array<std::pair<const char*, const T*>, 8> positive{{{"k1", &k1},
                                                                        {"k2", &k2},
                                                                        {"d1", &d1},
                                                                        {"d2", &d2},
                                                                        {"d3", &d3},
                                                                        {"sigma1", &sigma1},
                                                                        {"sigma2", &sigma2},
                                                                        {"sigma3", &sigma3}}};
        for (const auto& [name, value] : positive) {
            if (!(*value > 0)) throw DomainError(std::string("free parameter ") + name + " must be positive");
        }
        if (T(2) * d1 + theta == 0) throw DomainError("2 d1 + theta must not vanish");
    }
};

using FreeParams = BasicFreeParams<double>;
using ExactFreeParams = BasicFreeParams<Rational>;

template <Scalar T>
struct BasicExactWaveSpec {
    BasicFreeParams<T> free;
    BasicThreeSpeciesParams<T> params;  ///< induced coefficients, sigma1 = c11
    T u_star{0};
    T v_star{0};
};

using ExactWaveSpec = BasicExactWaveSpec<double>;
using RationalExactWaveSpec = BasicExactWaveSpec<Rational>;

inline ExactWaveSpec to_double(const RationalExactWaveSpec& s) {
    ExactWaveSpec out;
    out.free = {to_double(s.free.k1), to_double(s.free.k2),     to_double(s.free.d1),
                to_double(s.free.d2), to_double(s.free.d3),     to_double(s.free.theta),
                to_double(s.free.sigma1), to_double(s.free.sigma2), to_double(s.free.sigma3)};
    out.params = to_double(s.params);
    out.u_star = to_double(s.u_star);
    out.v_star = to_double(s.v_star);
    return out;
}

/// Relative tolerance of the v* = 4 k1 consistency check in double mode.
inline constexpr double kConsistencyTolerance = 1e-12;

/// The nine coefficients forced by the ansatz:
///
///   c11 = sigma1
///   c12 = d1 sigma1 / (k1 (2 d1 + theta))
///   c13 = (-2 d1 theta + d1 sigma1 - 4 d1^2) / (k2 (2 d1 + theta))
///   c21 = 16 d2 + 4 theta + sigma2
///   c22 = (2 d1 theta - 4 d2 theta + d1 sigma2 + 8 d1 d2 - theta^2) / (k1 (2 d1 + theta))
///   c23 = (2 d1 theta - 10 d2 theta + d1 sigma2 - 4 d1 d2 - theta^2) / (k2 (2 d1 + theta))
///   c31 = 4 d3 + 2 theta + sigma3
///   c32 = (d1 sigma3 + 4 d1 d3 - theta^2) / (k1 (2 d1 + theta))
///   c33 = (-6 d3 theta + d1 sigma3 - 8 d1 d3 - theta^2) / (k2 (2 d1 + theta))
///
/// and (u*, v*) from the induced (u, v) nullclines, which must satisfy v* = 4 k1.
/// Throws NonPositiveCoefficient (first offending c_ij in row-major order)
/// or ConsistencyError.
template <Scalar T>
BasicExactWaveSpec<T> induce_coefficients(const BasicFreeParams<T>& f) {
    f.validate();
    const T& d1 = f.d1;
    const T& d2 = f.d2;
    const T& d3 = f.d3;
    const T& th = f.theta;
    const T den = T(2) * d1 + th;
    const T den1 = f.k1 * den;
    const T den2 = f.k2 * den;

    BasicExactWaveSpec<T> s;
    s.free = f;
    s.params.d = {d1, d2, d3};
    s.params.sigma = {f.sigma1, f.sigma2, f.sigma3};
    auto& c = s.params.c;
    c[0][0] = f.sigma1;
    c[0][1] = d1 * f.sigma1 / den1;
    c[0][2] = (T(-2) * d1 * th + d1 * f.sigma1 - T(4) * d1 * d1) / den2;
    c[1][0] = T(16) * d2 + T(4) * th + f.sigma2;
    c[1][1] = (T(2) * d1 * th - T(4) * d2 * th + d1 * f.sigma2 + T(8) * d1 * d2 - th * th) / den1;
    c[1][2] = (T(2) * d1 * th - T(10) * d2 * th + d1 * f.sigma2 - T(4) * d1 * d2 - th * th) / den2;
    c[2][0] = T(4) * d3 + T(2) * th + f.sigma3;
    c[2][1] = (d1 * f.sigma3 + T(4) * d1 * d3 - th * th) / den1;
    c[2][2] = (T(-6) * d3 * th + d1 * f.sigma3 - T(8) * d1 * d3 - th * th) / den2;

    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (!(c[i][j] > 0)) throw NonPositiveCoefficient(i + 1, j + 1, to_double(c[i][j]));
        }
    }

    const auto e4 = coexistence_equilibrium(s.params.two_species_block());
    s.u_star = e4.u;
    s.v_star = e4.v;
    const T expected_v = T(4) * f.k1;
    if constexpr (std::same_as<T, Rational>) {
        if (s.v_star != expected_v) throw ConsistencyError("induced v* differs from 4 k1");
    } else {
        if (std::abs(s.v_star - expected_v) > kConsistencyTolerance * std::abs(expected_v)) {
            throw ConsistencyError("induced v* differs from 4 k1");
        }
    }
    return s;
}

struct WaveValues {
    double u{0.0};
    double v{0.0};
    double w{0.0};
};

/// Ansatz evaluated at x.
WaveValues evaluate_wave(const ExactWaveSpec& spec, double x);

/// First and second x-derivatives of the ansatz, computed from T' = 1 - T^2.
struct WaveDerivatives {
    WaveValues value;
    WaveValues first;
    WaveValues second;
};

WaveDerivatives evaluate_wave_derivatives(const ExactWaveSpec& spec, double x);

/// Samples the wave on `grid` (theta copied from the spec).
WaveProfile sample_wave(const ExactWaveSpec& spec, std::span<const double> grid);

/// Max |d_i f_i'' + theta f_i' + f_i (sigma_i - sum_j c_ij f_j)| over the grid
/// for each of the three equations, with analytic derivatives.
/// Throws DomainError on an empty grid.
std::array<double, 3> residual(const ExactWaveSpec& spec, std::span<const double> grid);

/// Exact (e2, e4)-wave of the two-species system with the same ansatz for
/// (u, v). Substitution leaves seven polynomial identities in T whose only
/// nondegenerate solution is
///
///   theta  = (sigma1 - 4 d1) / 2
///   u*     = 1 - 8 d1 / sigma1
///   c11 = sigma1,  c12 = 2 d1 / k1,  c22 = 6 d2 / k1
///   c21    = sigma1 (20 d2 + sigma1 - 4 d1) / (4 d1)
///   sigma2 = c21 u* + 24 d2
///
/// and v* = 4 k1. Derived once by computer algebra (tests/oracles/tanh_ansatz.py).
struct TwoSpeciesExactWave {
    TwoSpeciesParams params;
    double theta{0.0};
    double k1{0.0};
    double u_star{0.0};
    double v_star{0.0};

    double u(double x) const;
    double v(double x) const;
    WaveProfile sample(std::span<const double> grid) const;
    /// Max residual of the two traveling-wave ODEs over the grid.
    std::array<double, 2> residual(std::span<const double> grid) const;
};

/// Constraint-derived wave for given (d1, d2, sigma1, k1); theta and sigma2
/// follow from the constraints above. Throws Infeasible when u* <= 0 or an
/// induced coefficient is not positive.
TwoSpeciesExactWave solve_two_species_wave(double d1, double d2, double sigma1, double k1);

/// Checks a full parameter request against the constraints. Throws
/// Infeasible, naming the violated constraint, when theta or sigma2 differ
/// from the forced values by more than 1e-12 relative, or when the induced
/// wave is not positive.
TwoSpeciesExactWave two_species_exact_wave(double d1, double d2, double theta, double sigma1, double sigma2,
                                           double k1);

}  // namespace lvwaves
