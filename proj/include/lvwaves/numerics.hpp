#pragma once

// Time integration of the kinetics, method-of-lines simulation of the
// reaction-diffusion systems, front-speed estimation and the monotone
// iteration for the non-autonomous Fisher equation
//
//   d3 w'' + theta w' + w (sigma3 - c31 u~(x) - c32 v~(x) - c33 w) = 0.

#include "lvwaves/model.hpp"
#include "lvwaves/profile.hpp"
#include "lvwaves/report.hpp"

#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace lvwaves {

// ---------------------------------------------------------------------------
// Kinetics

struct OdeTrajectory {
    std::vector<double> t;
    std::vector<double> u;
    std::vector<double> v;
};

/// Classical fourth-order Runge-Kutta for u' = u (sigma1 - c11 u - c12 v),
/// v' = v (sigma2 - c21 u - c22 v). Records every step. Throws DomainError
/// for negative initial data and BlowupDetected if a state exceeds 1e12.
OdeTrajectory integrate_ode(const TwoSpeciesParams& p, double u0, double v0, double t_end, double dt);

// ---------------------------------------------------------------------------
// Method of lines

enum class Boundary { NeumannZero, DirichletFromProfile };
enum class Scheme { ExplicitEuler, RK4MOL };

const char* to_string(Boundary b);
const char* to_string(Scheme s);

struct GridSpec {
    double x_min{-1.0};
    double x_max{1.0};
    std::size_t n{3};
    Boundary boundary{Boundary::NeumannZero};

    double spacing() const;
    std::vector<double> nodes() const;
    /// Throws DomainError unless n >= 3 and x_min < x_max.
    void validate() const;
};

struct SimConfig {
    GridSpec grid;
    double t_end{1.0};
    /// Empty means auto: 0.4 h^2 / max d_i.
    std::optional<double> dt;
    Scheme scheme{Scheme::RK4MOL};
    /// Time between stored snapshots; empty stores only the initial and final states.
    std::optional<double> snapshot_interval;
};

struct Snapshot {
    double t{0.0};
    WaveProfile profile;
};

/// Time step used for `cfg` and the largest diffusion rate `max_d`.
double resolve_time_step(const SimConfig& cfg, double max_d);

/// Second-order central differences in space, explicit Euler or RK4 in time.
/// Integrates the three-species system when the initial profile carries w,
/// otherwise only the (u, v) rows (w treated as absent).
/// Throws CflViolation when dt > h^2 / (2 max d_i) and NegativeDensity if a
/// density drops below zero.
std::vector<Snapshot> simulate_pde(const ThreeSpeciesParams& p, const WaveProfile& init, const SimConfig& cfg);
std::vector<Snapshot> simulate_pde(const TwoSpeciesParams& p, const WaveProfile& init, const SimConfig& cfg);

// ---------------------------------------------------------------------------
// Front speed

enum class Component { U, V, W };

const char* to_string(Component c);

struct FrontSpeed {
    double speed{0.0};
    /// Root-mean-square deviation of the level positions from the fitted line.
    double fit_residual{0.0};
    /// True when every level position coincides (no motion).
    bool stationary{false};
    std::vector<double> times;
    std::vector<double> positions;
};

/// Least-squares slope of the first crossing position of `level` against time.
/// Throws LevelNotCrossed if any snapshot never crosses the level, DomainError
/// for fewer than two snapshots.
FrontSpeed estimate_front_speed(std::span<const Snapshot> snapshots, Component component, double level);

/// Linearly interpolated position of the first crossing of `level`, if any.
std::optional<double> level_crossing(std::span<const double> x, std::span<const double> values, double level);

// ---------------------------------------------------------------------------
// Non-autonomous Fisher equation

struct FisherContext {
    double d3{1.0};
    double theta{0.0};
    double sigma3{1.0};
    double c31{1.0};
    double c32{1.0};
    double c33{1.0};
    /// Frozen (u~, v~) on a uniform grid.
    WaveProfile background;

    /// Throws DomainError unless d3 > 0, c33 > 0 and the background is valid.
    void validate() const;
    /// sigma3 - c31 u~ - c32 v~ at node i.
    double linear_growth(std::size_t i) const;
};

/// Constant candidate w = K.
struct ConstantCandidate {
    double K{0.0};
};

/// Pulse candidate w = K (1 - tanh^2 x).
struct TanhPulseCandidate {
    double K{0.0};
};

/// Values on the background grid; derivatives by central differences.
struct SampledCandidate {
    std::vector<double> values;
};

using Candidate = std::variant<ConstantCandidate, TanhPulseCandidate, SampledCandidate>;

enum class SolutionSide { Sub, Super };

const char* to_string(SolutionSide s);

/// Candidate sampled on the background grid.
std::vector<double> sample_candidate(const Candidate& candidate, std::span<const double> x);

/// Pointwise residual d3 w'' + theta w' + w (sigma3 - c31 u~ - c32 v~ - c33 w).
/// Analytic derivatives for the constant and tanh forms; sampled candidates
/// use central differences and leave the two end nodes out.
std::vector<double> fisher_residual(const FisherContext& ctx, const Candidate& candidate);

/// Sub: residual >= -tol everywhere; Super: residual <= tol everywhere.
/// The single item "residual" carries the worst signed violation as margin
/// and its location.
CheckReport check_sub_super(const FisherContext& ctx, const Candidate& candidate, SolutionSide side,
                            double tol = 1e-12);

enum class ShiftStrategy {
    /// M = max(sigma3 + 2 c33 max(w_super), sup |d_w reaction| on the bracket).
    Constant,
    /// Per node and iteration, the smallest shift keeping w -> M w + f(w)
    /// nondecreasing on [w_sub, w_k]. Same ordering guarantees, faster.
    Adaptive,
};

struct FisherOptions {
    double tol{1e-8};
    std::size_t max_iter{200};
    ShiftStrategy shift{ShiftStrategy::Constant};
    /// Absolute slack for the ordering assertions.
    double order_tol{1e-12};
    /// Called with (iteration, iterate) after each accepted step.
    std::function<void(std::size_t, std::span<const double>)> on_iterate;
};

struct FisherSolution {
    std::vector<double> x;
    std::vector<double> w;
    std::size_t iterations{0};
    /// Max |discrete residual| over interior nodes at the returned iterate.
    double residual{0.0};
    /// Max over iterations of max(w_{k+1} - w_k); <= 0 for a monotone sequence.
    double max_increase{0.0};
    bool upwind{false};
};

/// Monotone iteration from w_super down to a fixed point between w_sub and
/// w_super, with homogeneous Dirichlet values at both ends of the background
/// grid. Each step solves (d3 D2 + theta D1 - M) w_{k+1} = -M w_k - f(w_k)
/// by tridiagonal elimination. D1 is central when h |theta| <= 2 d3 and
/// upwind otherwise, so the discrete operator stays monotone.
/// Throws NotOrdered if w_sub > w_super somewhere or an iterate leaves the
/// bracket, MaxIterExceeded if the residual is still >= tol.
FisherSolution solve_fisher_bvp(const FisherContext& ctx, const Candidate& w_sub, const Candidate& w_super,
                                const FisherOptions& options = {});

/// Solves a x = d for the tridiagonal matrix with sub-diagonal `lower`
/// (lower[0] unused), diagonal `diag` and super-diagonal `upper`
/// (upper[n-1] unused). No pivoting.
std::vector<double> solve_tridiagonal(std::span<const double> lower, std::span<const double> diag,
                                      std::span<const double> upper, std::span<const double> rhs);

}  // namespace lvwaves
