#pragma once

// Parameter sets, equilibria and competition regimes of the diffusive
// Lotka-Volterra competition systems
//
//   u_t = d1 u_yy + u (sigma1 - c11 u - c12 v - c13 w)
//   v_t = d2 v_yy + v (sigma2 - c21 u - c22 v - c23 w)
//   w_t = d3 w_yy + w (sigma3 - c31 u - c32 v - c33 w)
//
// and of the two-species system obtained by dropping w.

#include "lvwaves/errors.hpp"
#include "lvwaves/rational.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>

namespace lvwaves {

template <Scalar T>
struct BasicTwoSpeciesParams {
    T d1{1}, d2{1};
    T sigma1{1}, sigma2{1};
    T c11{1}, c12{1}, c21{1}, c22{1};

    /// Throws DomainError unless every field is strictly positive.
    void validate() const {
        const std::array<std::pair<const char*, const T*>, 8> fields{{{"d1", &d1},
                                                                      {"d2", &d2},
                                                                      {"sigma1", &sigma1},
                                                                      {"sigma2", &sigma2},
                                                                      {"c11", &c11},
                                                                      {"c12", &c12},
                                                                      {"c21", &c21},
                                                                      {"c22", &c22}}};
        for (const auto& [name, value] : fields) {
            if (!(*value > 0)) throw DomainError(std::string("parameter ") + name + " must be positive");
        }
    }

    bool operator==(const BasicTwoSpeciesParams&) const = default;
};

using TwoSpeciesParams = BasicTwoSpeciesParams<double>;
using ExactTwoSpeciesParams = BasicTwoSpeciesParams<Rational>;

template <Scalar T>
struct BasicThreeSpeciesParams {
    std::array<T, 3> d{T(1), T(1), T(1)};
    std::array<T, 3> sigma{T(1), T(1), T(1)};
    /// c[i][j] is the effect of species j on species i (0-based).
    std::array<std::array<T, 3>, 3> c{{{T(1), T(1), T(1)}, {T(1), T(1), T(1)}, {T(1), T(1), T(1)}}};

    /// All fields strictly positive, except c13 and c23 which may vanish
    /// (the limit where w does not act back on u and v).
    void validate() const {
        for (int i = 0; i < 3; ++i) {
            if (!(d[i] > 0)) throw DomainError("parameter d" + std::to_string(i + 1) + " must be positive");
            if (!(sigma[i] > 0)) throw DomainError("parameter sigma" + std::to_string(i + 1) + " must be positive");
            for (int j = 0; j < 3; ++j) {
                const bool may_vanish = j == 2 && i < 2;
                const bool ok = may_vanish ? c[i][j] >= 0 : c[i][j] > 0;
                if (!ok) {
                    throw DomainError("parameter c" + std::to_string(i + 1) + std::to_string(j + 1) +
                                      (may_vanish ? " must be nonnegative" : " must be positive"));
                }
            }
        }
    }

    /// The (u, v) subsystem with w removed.
    BasicTwoSpeciesParams<T> two_species_block() const {
        return {d[0], d[1], sigma[0], sigma[1], c[0][0], c[0][1], c[1][0], c[1][1]};
    }

    bool operator==(const BasicThreeSpeciesParams&) const = default;
};

using ThreeSpeciesParams = BasicThreeSpeciesParams<double>;
using ExactThreeSpeciesParams = BasicThreeSpeciesParams<Rational>;

inline TwoSpeciesParams to_double(const ExactTwoSpeciesParams& p) {
    return {to_double(p.d1),     to_double(p.d2),  to_double(p.sigma1), to_double(p.sigma2),
            to_double(p.c11),    to_double(p.c12), to_double(p.c21),    to_double(p.c22)};
}

inline ThreeSpeciesParams to_double(const ExactThreeSpeciesParams& p) {
    ThreeSpeciesParams out;
    for (int i = 0; i < 3; ++i) {
        out.d[i] = to_double(p.d[i]);
        out.sigma[i] = to_double(p.sigma[i]);
        for (int j = 0; j < 3; ++j) out.c[i][j] = to_double(p.c[i][j]);
    }
    return out;
}

enum class EquilibriumKind { Origin, UOnly, VOnly, Coexistence };

template <Scalar T>
struct BasicEquilibrium2 {
    EquilibriumKind kind{EquilibriumKind::Origin};
    T u{0};
    T v{0};
    /// Coexistence only: false when u <= 0 or v <= 0 (the point exists but is
    /// not a biologically meaningful state).
    bool positive{true};
};

using Equilibrium2 = BasicEquilibrium2<double>;

/// The three semitrivial equilibria e1 = (0,0), e2 = (sigma1/c11, 0), e3 = (0, sigma2/c22).
template <Scalar T>
std::array<BasicEquilibrium2<T>, 3> trivial_equilibria(const BasicTwoSpeciesParams<T>& p) {
    return {{{EquilibriumKind::Origin, T(0), T(0), true},
             {EquilibriumKind::UOnly, T(p.sigma1 / p.c11), T(0), true},
             {EquilibriumKind::VOnly, T(0), T(p.sigma2 / p.c22), true}}};
}

/// Intersection e4 = (u*, v*) of the nullclines sigma1 = c11 u + c12 v and
/// sigma2 = c21 u + c22 v. Throws SingularLinesError when c11 c22 = c12 c21.
template <Scalar T>
BasicEquilibrium2<T> coexistence_equilibrium(const BasicTwoSpeciesParams<T>& p) {
    const T det = p.c11 * p.c22 - p.c12 * p.c21;
    if (det == 0) throw SingularLinesError("nullclines are parallel (c11 c22 = c12 c21)");
    BasicEquilibrium2<T> e;
    e.kind = EquilibriumKind::Coexistence;
    e.u = (p.c22 * p.sigma1 - p.c12 * p.sigma2) / det;
    e.v = (p.c11 * p.sigma2 - p.c21 * p.sigma1) / det;
    e.positive = e.u > 0 && e.v > 0;
    return e;
}

enum class Regime { ExclusionUWins, ExclusionVWins, Strong, Weak, Degenerate };

const char* to_string(Regime r);

/// Default relative tolerance for calling a regime comparison an equality.
inline constexpr double kRegimeTolerance = 1e-9;

namespace detail {

// Sign of a - b, zero when |a - b| <= tol * max(|a|, |b|).
template <Scalar T>
int compare_with_tolerance(const T& a, const T& b, double tol) {
    const T diff = a - b;
    if constexpr (std::same_as<T, double>) {
        const double scale = std::max(std::abs(a), std::abs(b));
        if (std::abs(diff) <= tol * scale) return 0;
    } else {
        const T scale = std::max(abs(a), abs(b));
        if (abs(diff) <= T(tol) * scale) return 0;
    }
    return diff > 0 ? 1 : -1;
}

}  // namespace detail

/// Classifies the kinetics by comparing sigma1/c11 with sigma2/c21 and
/// sigma2/c22 with sigma1/c12. The comparisons are done on the cross products
/// sigma1 c21 vs sigma2 c11 and sigma2 c12 vs sigma1 c22.
template <Scalar T>
Regime classify_regime(const BasicTwoSpeciesParams<T>& p, double tol = kRegimeTolerance) {
    // sigma1/c11 vs sigma2/c21
    const int first = detail::compare_with_tolerance<T>(p.sigma1 * p.c21, p.sigma2 * p.c11, tol);
    // sigma2/c22 vs sigma1/c12
    const int second = detail::compare_with_tolerance<T>(p.sigma2 * p.c12, p.sigma1 * p.c22, tol);
    if (first == 0 || second == 0) return Regime::Degenerate;
    if (first > 0 && second < 0) return Regime::ExclusionUWins;
    if (first < 0 && second > 0) return Regime::ExclusionVWins;
    if (first > 0 && second > 0) return Regime::Strong;
    return Regime::Weak;
}

/// Normalised Shannon entropy of the two densities, in [0, 1].
/// Uses 0 ln 0 = 0. Throws DomainError for negative input or u + v = 0.
double evenness_index(double u, double v);

}  // namespace lvwaves
