#include "lvwaves/exactwaves.hpp"

#include <doctest.h>

#include <cmath>

using namespace lvwaves;

namespace {

ExactFreeParams reference_free() {
    ExactFreeParams f;
    f.k1 = f.k2 = f.d1 = f.d2 = f.d3 = 1;
    f.theta = 3;
    f.sigma1 = f.sigma2 = f.sigma3 = 41;
    return f;
}

}  // namespace

TEST_CASE("induced coefficients, exact") {
    const auto s = induce_coefficients(reference_free());
    const Rational want[3][3] = {{41, Rational(41, 5), Rational(31, 5)},
                                 {69, Rational(34, 5), Rational(4, 5)},
                                 {51, Rational(36, 5), Rational(6, 5)}};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) CHECK(s.params.c[i][j] == want[i][j]);
    }
    CHECK(s.u_star == Rational(1, 5));
    CHECK(s.v_star == 4);
}

TEST_CASE("induced coefficients, double agrees with exact") {
    FreeParams f;
    f.theta = 3;
    f.sigma1 = f.sigma2 = f.sigma3 = 41;
    const auto d = induce_coefficients(f);
    const auto e = to_double(induce_coefficients(reference_free()));
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) CHECK(d.params.c[i][j] == doctest::Approx(e.params.c[i][j]).epsilon(1e-15));
    }
}

TEST_CASE("nonpositive coefficient is rejected") {
    auto f = reference_free();
    f.theta = 41;
    CHECK_THROWS_AS(induce_coefficients(f), NonPositiveCoefficient);
}

TEST_CASE("evaluation") {
    const auto s = to_double(induce_coefficients(reference_free()));
    const auto at0 = evaluate_wave(s, 0.0);
    CHECK(at0.u == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(at0.v == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(at0.w == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(evaluate_wave(s, 1.0).u == doctest::Approx(0.29536233761769404).epsilon(1e-14));

    const auto left = evaluate_wave(s, -40.0);
    const auto right = evaluate_wave(s, 40.0);
    CHECK(std::abs(left.u - 1.0) < 1e-12);
    CHECK(std::abs(left.v) < 1e-12);
    CHECK(std::abs(left.w) < 1e-12);
    CHECK(std::abs(right.u - 0.2) < 1e-12);
    CHECK(std::abs(right.v - 4.0) < 1e-12);
    CHECK(std::abs(right.w) < 1e-12);
}

TEST_CASE("residuals") {
    const auto s = to_double(induce_coefficients(reference_free()));
    const auto grid = uniform_grid(-10.0, 10.0, 2001);
    const auto r = residual(s, grid);
    for (double v : r) CHECK(v < 1e-10);

    auto bumped = s;
    bumped.params.c[0][0] += 1e-3;
    CHECK(residual(bumped, grid)[0] >= 1e-4);

    CHECK_THROWS_AS(residual(s, std::vector<double>{}), DomainError);
}

TEST_CASE("two-species wave from the constraints") {
    const auto w = solve_two_species_wave(1.0, 0.25, 9.0, 1.0);
    CHECK(w.theta == doctest::Approx(2.5));
    CHECK(w.u_star == doctest::Approx(1.0 / 9.0));
    CHECK(w.v_star == doctest::Approx(4.0));
    CHECK(w.params.c12 == doctest::Approx(2.0));
    CHECK(w.params.c21 == doctest::Approx(22.5));
    CHECK(w.params.c22 == doctest::Approx(1.5));
    CHECK(w.params.sigma2 == doctest::Approx(8.5));

    const auto r = w.residual(uniform_grid(-10.0, 10.0, 2001));
    CHECK(r[0] < 1e-10);
    CHECK(r[1] < 1e-10);
    CHECK(std::abs(w.u(-40.0) - 1.0) < 1e-12);
    CHECK(std::abs(w.v(-40.0)) < 1e-12);
    CHECK(std::abs(w.u(40.0) - w.u_star) < 1e-12);
    CHECK(std::abs(w.v(40.0) - 4.0 * w.k1) < 1e-12);
}

TEST_CASE("two-species wave rejects inconsistent requests") {
    CHECK_THROWS_AS(solve_two_species_wave(1.0, 1.0, 8.0, 1.0), Infeasible);
    CHECK_NOTHROW(two_species_exact_wave(1.0, 0.25, 2.5, 9.0, 8.5, 1.0));
    CHECK_THROWS_AS(two_species_exact_wave(1.0, 0.25, 3.0, 9.0, 8.5, 1.0), Infeasible);
    CHECK_THROWS_AS(two_species_exact_wave(1.0, 0.25, 2.5, 9.0, 9.0, 1.0), Infeasible);
}
