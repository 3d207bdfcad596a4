#include "lvwaves/exactwaves.hpp"
#include "lvwaves/nbarrier.hpp"
#include "lvwaves/numerics.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace lvwaves;

namespace {

const TwoSpeciesParams kStrong{1, 1, 1, 1, 1, 2, 3, 1};
const TwoSpeciesParams kWeak{1, 1, 1, 1, 1, 0.5, 2.0 / 3.0, 1};

ExactWaveSpec reference_wave() {
    ExactFreeParams f;
    f.theta = 3;
    f.sigma1 = f.sigma2 = f.sigma3 = 41;
    return to_double(induce_coefficients(f));
}

WaveProfile constant_profile(const GridSpec& g, double u, double v) {
    WaveProfile p;
    p.x = g.nodes();
    p.u.assign(g.n, u);
    p.v.assign(g.n, v);
    return p;
}

double tracking_error(std::size_t n, double t_end) {
    const auto spec = reference_wave();
    SimConfig cfg;
    cfg.grid = {-60.0, 60.0, n, Boundary::DirichletFromProfile};
    cfg.t_end = t_end;
    const auto x = cfg.grid.nodes();
    const auto last = simulate_pde(spec.params, sample_wave(spec, x), cfg).back();
    double err = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (std::abs(x[i]) > 40.0) continue;
        const auto e = evaluate_wave(spec, x[i] - 3.0 * last.t);
        err = std::max({err, std::abs(last.profile.u[i] - e.u), std::abs(last.profile.v[i] - e.v),
                        std::abs(last.profile.w->at(i) - e.w)});
    }
    return err;
}

}  // namespace

TEST_CASE("kinetics") {
    const auto e4 = coexistence_equilibrium(kWeak);
    const auto weak = integrate_ode(kWeak, 0.1, 0.1, 200.0, 0.01);
    CHECK(std::abs(weak.u.back() - e4.u) < 1e-4);
    CHECK(std::abs(weak.v.back() - e4.v) < 1e-4);

    const TwoSpeciesParams excl{1, 1, 1, 1, 1, 0.5, 2.0, 1};
    const auto ex = integrate_ode(excl, 0.3, 2.0, 200.0, 0.01);
    CHECK(std::abs(ex.u.back() - 1.0) < 1e-4);
    CHECK(std::abs(ex.v.back()) < 1e-4);

    const auto rest = integrate_ode(kStrong, 1.0, 0.0, 50.0, 0.01);
    for (std::size_t i = 0; i < rest.t.size(); ++i) {
        CHECK(rest.u[i] == 1.0);
        CHECK(rest.v[i] == 0.0);
    }
    CHECK_THROWS_AS(integrate_ode(kStrong, -0.1, 0.1, 1.0, 0.01), DomainError);
}

TEST_CASE("equilibrium is a steady state of the PDE") {
    const GridSpec g{-10.0, 10.0, 201, Boundary::NeumannZero};
    for (const auto& p : {kStrong, kWeak}) {
        const auto e4 = coexistence_equilibrium(p);
        SimConfig cfg{g, 5.0, std::nullopt, Scheme::RK4MOL, std::nullopt};
        const auto last = simulate_pde(p, constant_profile(g, e4.u, e4.v), cfg).back();
        for (std::size_t i = 0; i < g.n; ++i) {
            CHECK(std::abs(last.profile.u[i] - e4.u) < 1e-10);
            CHECK(std::abs(last.profile.v[i] - e4.v) < 1e-10);
        }
    }
}

TEST_CASE("absent third species stays absent") {
    const auto spec = reference_wave();
    const GridSpec g{-20.0, 20.0, 401, Boundary::NeumannZero};
    auto init = sample_wave(spec, g.nodes());
    init.w = std::vector<double>(g.n, 0.0);
    SimConfig cfg{g, 0.5, std::nullopt, Scheme::ExplicitEuler, 0.25};
    for (const auto& s : simulate_pde(spec.params, init, cfg)) {
        CHECK(std::all_of(s.profile.w->begin(), s.profile.w->end(), [](double w) { return w == 0.0; }));
    }
}

TEST_CASE("time step and snapshots") {
    SimConfig cfg;
    cfg.grid = {0.0, 1.0, 11, Boundary::NeumannZero};
    CHECK(resolve_time_step(cfg, 2.0) == doctest::Approx(0.4 * 0.01 / 2.0));
    cfg.dt = 0.003;
    CHECK_THROWS_AS(resolve_time_step(cfg, 2.0), CflViolation);

    const GridSpec g{-5.0, 5.0, 51, Boundary::NeumannZero};
    SimConfig snap{g, 1.0, std::nullopt, Scheme::RK4MOL, 0.25};
    const auto snaps = simulate_pde(kStrong, constant_profile(g, 0.5, 0.5), snap);
    REQUIRE(snaps.size() == 5);
    for (std::size_t k = 0; k < snaps.size(); ++k) CHECK(snaps[k].t == doctest::Approx(0.25 * double(k)).epsilon(1e-14));

    CHECK_THROWS_AS((GridSpec{1.0, 0.0, 11, Boundary::NeumannZero}.validate()), DomainError);
    CHECK_THROWS_AS((GridSpec{0.0, 1.0, 2, Boundary::NeumannZero}.validate()), DomainError);
}

TEST_CASE("negative density aborts") {
    const TwoSpeciesParams harsh{1, 1, 1, 1, 1, 1e6, 1, 1};
    const GridSpec g{0.0, 4.0, 5, Boundary::NeumannZero};
    SimConfig cfg{g, 1.0, std::nullopt, Scheme::ExplicitEuler, std::nullopt};
    CHECK_THROWS_AS(simulate_pde(harsh, constant_profile(g, 1.0, 1.0), cfg), NegativeDensity);
}

TEST_CASE("grid refinement halves h and cuts the tracking error at least threefold") {
    const double coarse = tracking_error(1201, 1.0);
    const double fine = tracking_error(2401, 1.0);
    CAPTURE(coarse);
    CAPTURE(fine);
    CHECK(coarse / fine >= 3.0);
}

TEST_CASE("discrete shadow of the upper bound") {
    const GridSpec g{-30.0, 30.0, 601, Boundary::NeumannZero};
    WaveProfile init;
    init.x = g.nodes();
    for (double x : init.x) {
        const double s = 0.5 * (1.0 + std::tanh(x));
        init.u.push_back(1.0 - s);
        init.v.push_back(s);
    }
    const ExactTwoSpeciesParams exact{1, 1, 1, 1, 1, 2, 3, 1};
    const double q = to_double(upper_bound(exact, Rational(1), Rational(1)));
    SimConfig cfg{g, 10.0, std::nullopt, Scheme::RK4MOL, 0.5};
    const double h = g.spacing();
    for (const auto& s : simulate_pde(kStrong, init, cfg)) {
        double top = 0.0;
        for (std::size_t i = 0; i < g.n; ++i) top = std::max(top, s.profile.u[i] + s.profile.v[i]);
        CHECK(top <= q + h * h);
    }
}

TEST_CASE("front speed") {
    const auto spec = reference_wave();
    const auto x = uniform_grid(-20.0, 20.0, 801);
    std::vector<Snapshot> snaps;
    for (int k = 0; k <= 4; ++k) {
        const double t = 0.5 * k;
        WaveProfile p;
        p.x = x;
        for (double xi : x) {
            const auto v = evaluate_wave(spec, xi - 3.0 * t);
            p.u.push_back(v.u);
            p.v.push_back(v.v);
        }
        snaps.push_back({t, p});
    }
    CHECK(estimate_front_speed(snaps, Component::V, 2.0).speed == doctest::Approx(3.0).epsilon(1e-3));

    std::vector<Snapshot> still{snaps.front(), snaps.front()};
    still[1].t = 1.0;
    const auto fs = estimate_front_speed(still, Component::V, 2.0);
    CHECK(fs.stationary);
    CHECK(fs.speed == 0.0);
    CHECK_THROWS_AS(estimate_front_speed(snaps, Component::V, 100.0), LevelNotCrossed);
    CHECK_THROWS_AS(estimate_front_speed(std::span(snaps).first(1), Component::V, 2.0), DomainError);
}

TEST_CASE("tridiagonal solve") {
    const std::vector<double> lo{0.0, -1.0, -1.0, -1.0};
    const std::vector<double> di{2.0, 2.0, 2.0, 2.0};
    const std::vector<double> up{-1.0, -1.0, -1.0, 0.0};
    const std::vector<double> rhs{1.0, 0.0, 0.0, 1.0};
    const auto x = solve_tridiagonal(lo, di, up, rhs);
    for (double v : x) CHECK(v == doctest::Approx(1.0).epsilon(1e-15));
}

namespace {

FisherContext flat_context(double sigma3, double u, double v, double d3 = 1.0, double theta = 0.0) {
    FisherContext ctx;
    ctx.d3 = d3;
    ctx.theta = theta;
    ctx.sigma3 = sigma3;
    ctx.c31 = 1.0;
    ctx.c32 = 1.0;
    ctx.c33 = 1.0;
    ctx.background.x = uniform_grid(-20.0, 20.0, 401);
    ctx.background.u.assign(401, u);
    ctx.background.v.assign(401, v);
    return ctx;
}

}  // namespace

TEST_CASE("sub and super candidates") {
    // q_lower stands in for c31 u + c32 v; H2 holds: c33 K + q_lower - sigma3 = 5 + 2 - 6 >= 0.
    const auto super_ctx = flat_context(6.0, 2.0, 0.0);
    CHECK(check_sub_super(super_ctx, ConstantCandidate{5.0}, SolutionSide::Super).pass());
    CHECK_FALSE(check_sub_super(super_ctx, ConstantCandidate{1.0}, SolutionSide::Super).pass());

    // q_upper = 1, d3 = 1, theta = 0, c33 K = 1, sigma3 = 10: 4 (1 + 6)(-1 - 2 - 1 + 10) >= 0.
    const auto sub_ctx = flat_context(10.0, 1.0, 0.0);
    const auto sub = check_sub_super(sub_ctx, TanhPulseCandidate{1.0}, SolutionSide::Sub);
    CHECK(sub.pass());
    // With sigma3 = 3 the quadratic is negative at tanh x = 0.
    CHECK_FALSE(check_sub_super(flat_context(3.0, 1.0, 0.0), TanhPulseCandidate{1.0}, SolutionSide::Sub).pass());

    const auto zero = check_sub_super(sub_ctx, ConstantCandidate{0.0}, SolutionSide::Sub);
    CHECK(zero.pass());
    CHECK(zero.item("residual").margin == 0.0);
}

TEST_CASE("monotone iteration") {
    const auto dying = flat_context(1.0, 1.0, 1.0, 1.0, 0.5);
    const auto sol = solve_fisher_bvp(dying, ConstantCandidate{0.0}, ConstantCandidate{2.0});
    CHECK(*std::max_element(sol.w.begin(), sol.w.end()) < 1e-8);
    CHECK(sol.max_increase <= 0.0);

    CHECK_THROWS_AS(solve_fisher_bvp(dying, ConstantCandidate{3.0}, ConstantCandidate{2.0}), NotOrdered);

    FisherOptions tight;
    tight.max_iter = 1;
    CHECK_THROWS_AS(solve_fisher_bvp(dying, ConstantCandidate{0.0}, ConstantCandidate{2.0}, tight), MaxIterExceeded);
}

TEST_CASE("monotone iteration on a two-species background") {
    const auto wave = solve_two_species_wave(1.0, 0.25, 9.0, 1.0);
    FisherContext ctx;
    ctx.d3 = 4.0;
    ctx.theta = wave.theta;
    ctx.sigma3 = 90.0;
    ctx.c31 = 100.0;
    ctx.c32 = 20.0;
    ctx.c33 = 1.0;
    ctx.background = wave.sample(uniform_grid(-40.0, 40.0, 1601));
    for (auto shift : {ShiftStrategy::Constant, ShiftStrategy::Adaptive}) {
        FisherOptions o;
        o.shift = shift;
        o.max_iter = 5000;
        const auto sol = solve_fisher_bvp(ctx, TanhPulseCandidate{1.0}, ConstantCandidate{81.0}, o);
        CHECK(sol.w.front() < 1e-6);
        CHECK(sol.w.back() < 1e-6);
        CHECK(sol.max_increase <= 1e-12);
        CHECK(sol.residual < 1e-8);
        const auto sub = sample_candidate(TanhPulseCandidate{1.0}, sol.x);
        for (std::size_t i = 0; i < sol.w.size(); ++i) {
            CHECK(sol.w[i] >= sub[i] - 1e-12);
            CHECK(sol.w[i] <= 81.0 + 1e-12);
        }
    }
}
