#pragma once

// N-barrier maximum principle for two-species (e2, e4)-waves: closed-form
// bounds q_lower <= alpha u + beta v <= q_upper, the conic F(u, v) = 0, and
// the explicit three-line barriers used under strong competition.

#include "lvwaves/model.hpp"
#include "lvwaves/profile.hpp"
#include "lvwaves/report.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace lvwaves {

/// F(u, v) = alpha u (sigma1 - c11 u - c12 v) + beta v (sigma2 - c21 u - c22 v).
template <Scalar T>
T F_value(const BasicTwoSpeciesParams<T>& p, const T& alpha, const T& beta, const T& u, const T& v) {
    return alpha * u * (p.sigma1 - p.c11 * u - p.c12 * v) + beta * v * (p.sigma2 - p.c21 * u - p.c22 * v);
}

template <Scalar T>
struct BasicBoundPair {
    T q_lower{0};
    T q_upper{0};
    T alpha{1};
    T beta{1};
};

using BoundPair = BasicBoundPair<double>;

inline BoundPair to_double(const BasicBoundPair<Rational>& b) {
    return {to_double(b.q_lower), to_double(b.q_upper), to_double(b.alpha), to_double(b.beta)};
}

namespace detail {

template <Scalar T>
void require_strong_or_weak(const BasicTwoSpeciesParams<T>& p, const char* what) {
    const Regime r = classify_regime(p);
    if (r != Regime::Strong && r != Regime::Weak) {
        throw RegimeError(std::string(what) + " requires strong or weak competition, got " + to_string(r));
    }
}

template <Scalar T>
void require_positive_weights(const T& alpha, const T& beta) {
    if (!(alpha > 0) || !(beta > 0)) throw DomainError("weights alpha and beta must be positive");
}

}  // namespace detail

/// q_lower = min[alpha min(sigma1/c11, sigma2/c21), beta min(sigma2/c22, sigma1/c12)] * min(d1/d2, d2/d1).
template <Scalar T>
T lower_bound(const BasicTwoSpeciesParams<T>& p, const T& alpha, const T& beta) {
    p.validate();
    detail::require_positive_weights(alpha, beta);
    detail::require_strong_or_weak(p, "lower_bound");
    const T a = alpha * std::min<T>(p.sigma1 / p.c11, p.sigma2 / p.c21);
    const T b = beta * std::min<T>(p.sigma2 / p.c22, p.sigma1 / p.c12);
    return std::min(a, b) * std::min<T>(p.d1 / p.d2, p.d2 / p.d1);
}

/// q_upper = max[alpha max(sigma1/c11, sigma2/c21), beta max(sigma2/c22, sigma1/c12)] * max(d1/d2, d2/d1).
template <Scalar T>
T upper_bound(const BasicTwoSpeciesParams<T>& p, const T& alpha, const T& beta) {
    p.validate();
    detail::require_positive_weights(alpha, beta);
    detail::require_strong_or_weak(p, "upper_bound");
    const T a = alpha * std::max<T>(p.sigma1 / p.c11, p.sigma2 / p.c21);
    const T b = beta * std::max<T>(p.sigma2 / p.c22, p.sigma1 / p.c12);
    return std::max(a, b) * std::max<T>(p.d1 / p.d2, p.d2 / p.d1);
}

template <Scalar T>
BasicBoundPair<T> bounds(const BasicTwoSpeciesParams<T>& p, const T& alpha, const T& beta) {
    return {lower_bound(p, alpha, beta), upper_bound(p, alpha, beta), alpha, beta};
}

enum class ConicKind { Hyperbola, Parabola, Ellipse };

const char* to_string(ConicKind k);

struct ConicClass {
    double discriminant{0.0};
    ConicKind kind{ConicKind::Hyperbola};
};

/// Relative tolerance for the parabola test |D| <= tol (alpha c12 + beta c21)^2.
inline constexpr double kParabolaTolerance = 1e-9;

/// Type of the quadratic curve F(u, v) = 0 from its discriminant
/// D = (alpha c12 + beta c21)^2 - 4 alpha beta c11 c22.
ConicClass conic_classify(const TwoSpeciesParams& p, double alpha, double beta, double tol = kParabolaTolerance);

enum class BarrierSide { LowerBound, UpperBound };

const char* to_string(BarrierSide s);

/// Levels of the two lines alpha d1 u + beta d2 v = lambda and of the line
/// alpha u + beta v = eta forming one N-barrier.
template <Scalar T>
struct BasicBarrierLines {
    T lambda1{0};
    T lambda2{0};
    T eta{0};
    BarrierSide side{BarrierSide::LowerBound};
    /// 1..4, the case of the construction (d2 >= d1 gives 1 or 2).
    int case_id{1};
    /// Upper case 1 only: sigma2 d2 / (c22 d1), the level without the beta
    /// weight. Kept for comparison; `eta` is the level actually used.
    std::optional<T> eta_unweighted;
};

using BarrierLines = BasicBarrierLines<double>;

/// The explicit barrier of the strong-competition construction. Case
/// selection uses d2 vs d1 and, for the lower side,
/// beta sigma1 c21 d2 vs alpha sigma2 c12 d1; for the upper side
/// beta sigma2 c11 d2 vs alpha sigma1 c22 d1.
///
/// Upper case 1 uses eta = beta sigma2 d2 / (c22 d1), the value consistent
/// with the other two levels (eta = lambda2 / min(d1, d2)).
///
/// Throws RegimeError unless the parameters are strongly competitive; no
/// closed-form table exists for weak competition.
template <Scalar T>
BasicBarrierLines<T> construct_barrier(const BasicTwoSpeciesParams<T>& p, const T& alpha, const T& beta,
                                       BarrierSide side) {
    p.validate();
    detail::require_positive_weights(alpha, beta);
    if (classify_regime(p) != Regime::Strong) {
        throw RegimeError("explicit barriers are tabulated for strong competition only");
    }
    const T& d1 = p.d1;
    const T& d2 = p.d2;
    BasicBarrierLines<T> b;
    b.side = side;
    if (side == BarrierSide::LowerBound) {
        const bool beta_dominates = beta * p.sigma1 * p.c21 * d2 >= alpha * p.sigma2 * p.c12 * d1;
        const T su = alpha * p.sigma2 / p.c21;  // alpha times the u-intercept sigma2/c21
        const T sv = beta * p.sigma1 / p.c12;   // beta times the v-intercept sigma1/c12
        if (d2 >= d1) {
            if (beta_dominates) {
                b = {su * d1 * d1 / d2, su * d1, su * d1 / d2, side, 1, std::nullopt};
            } else {
                b = {sv * d1, sv * d2, sv, side, 2, std::nullopt};
            }
        } else {
            if (beta_dominates) {
                b = {su * d2, su * d1, su, side, 3, std::nullopt};
            } else {
                b = {sv * d2 * d2 / d1, sv * d2, sv * d2 / d1, side, 4, std::nullopt};
            }
        }
    } else {
        const bool beta_dominates = beta * p.sigma2 * p.c11 * d2 >= alpha * p.sigma1 * p.c22 * d1;
        const T su = alpha * p.sigma1 / p.c11;
        const T sv = beta * p.sigma2 / p.c22;
        if (d2 >= d1) {
            if (beta_dominates) {
                b = {sv * d2 * d2 / d1, sv * d2, sv * d2 / d1, side, 1, std::nullopt};
                b.eta_unweighted = p.sigma2 * d2 / (p.c22 * d1);
            } else {
                b = {su * d2, su * d1, su, side, 2, std::nullopt};
            }
        } else {
            if (beta_dominates) {
                b = {sv * d1, sv * d2, sv, side, 3, std::nullopt};
            } else {
                b = {su * d1 * d1 / d2, su * d1, su * d1 / d2, side, 4, std::nullopt};
            }
        }
    }
    return b;
}

/// Pointwise audit of q_lower <= alpha u + beta v <= q_upper on a sampled
/// profile. Items "lower" and "upper" carry side, extremum, margin and the
/// grid location (argmin_x / argmax_x) of the extremum.
CheckReport verify_bounds_on_profile(const WaveProfile& profile, double alpha, double beta, const BoundPair& bounds);

}  // namespace lvwaves
