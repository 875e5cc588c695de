#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "lv/map.hpp"
#include "lv/scenarios.hpp"
#include "lv/stability.hpp"
#include "oracles.hpp"

using lv::CoeffParams;
using lv::EcoParams;
using lv::StabilityClass;
using lv::StateVec;

namespace {

// Central finite differences of the step map; the map is quadratic so the
// truncation term vanishes.
lv::Mat fd_jacobian(const CoeffParams& c, const std::array<double, 4>& fp) {
    lv::Mat j(4);
    for (int col = 0; col < 4; ++col) {
        const double h = 1e-4 * std::max(1.0, std::abs(fp[static_cast<size_t>(col)]));
        StateVec plus(fp[0], fp[1], fp[2], fp[3]);
        StateVec minus = plus;
        plus[col] += h;
        minus[col] -= h;
        const auto fplus = lv::step(c, plus).next;
        const auto fminus = lv::step(c, minus).next;
        for (int row = 0; row < 4; ++row)
            j(row, col) = (fplus[row] - fminus[row]) / (2.0 * h);
    }
    return j;
}

}  // namespace

TEST_CASE("fixed_point: fig1a and fig1d caption values") {
    for (const char* name : {"fig1a", "fig1d"}) {
        const auto& preset = lv::get_preset(name);
        const auto rep = lv::fixed_point(lv::compile(preset.eco));
        REQUIRE(rep.exists);
        REQUIRE(rep.positive);
        const auto& expect = *preset.expected_fixed_point;
        for (int i = 0; i < 4; ++i)
            CHECK(std::abs(rep.point[static_cast<size_t>(i)] - expect[static_cast<size_t>(i)]) <
                  1e-3 * expect[static_cast<size_t>(i)]);
    }
}

TEST_CASE("fixed_point: species symmetry") {
    EcoParams e = lv::get_preset("fig1a").eco;
    e.E = {{{0.3, 0.2}, {0.2, 0.3}}};  // symmetric under species swap
    const auto rep = lv::fixed_point(lv::compile(e));
    REQUIRE(rep.positive);
    CHECK(rep.point[0] == doctest::Approx(rep.point[1]).epsilon(1e-9));
    CHECK(rep.point[2] == doctest::Approx(rep.point[3]).epsilon(1e-9));
}

TEST_CASE("fixed_point: degenerate system has no unique solution") {
    CoeffParams c{};
    c.r = {1.5, 1.5};
    c.p = {0.3, 0.3};  // k = B = C = 0
    const auto rep = lv::fixed_point(c);
    CHECK_FALSE(rep.exists);
    CHECK_FALSE(rep.positive);
}

TEST_CASE("fixed_point then step: the solution is an equilibrium of the map") {
    std::mt19937 rng(67);
    int checked = 0;
    for (int trial = 0; trial < 500 && checked < 30; ++trial) {
        const CoeffParams c = lv::compile(oracle::random_eco(rng));
        const auto rep = lv::fixed_point(c);
        if (!rep.exists || !rep.positive) continue;
        ++checked;
        const StateVec fp(rep.point[0], rep.point[1], rep.point[2], rep.point[3]);
        const auto next = lv::step(c, fp).next;
        for (int i = 0; i < 4; ++i)
            CHECK(std::abs(next[i] - fp[i]) < 1e-9 * std::max(1.0, fp[i]));
    }
    CHECK(checked == 30);
}

TEST_CASE("jacobian: fig1a diagonal") {
    const CoeffParams c = lv::compile(lv::get_preset("fig1a").eco);
    const auto rep = lv::fixed_point(c);
    REQUIRE(rep.positive);
    const lv::Mat j = lv::jacobian(c, rep.point);
    CHECK(j(0, 0) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(j(1, 1) == doctest::Approx(0.75).epsilon(1e-9));
    CHECK(j(2, 2) == doctest::Approx(1.0));
    CHECK(j(3, 3) == doctest::Approx(1.0));
    CHECK(j(0, 1) == 0.0);
    CHECK(j(1, 0) == 0.0);
    CHECK(j(2, 3) == 0.0);
    CHECK(j(3, 2) == 0.0);
}

TEST_CASE("jacobian: rejects off-equilibrium points") {
    const CoeffParams c = lv::compile(lv::get_preset("fig1a").eco);
    CHECK_THROWS_AS(lv::jacobian(c, {100.0, 100.0, 100.0, 100.0}), lv::NotAFixedPoint);
}

TEST_CASE("jacobian: matches finite differences of the step map at every preset") {
    for (const auto& preset : lv::list_presets()) {
        const CoeffParams c = lv::compile(preset.eco);
        const auto rep = lv::fixed_point(c);
        if (!rep.exists || !rep.positive) continue;
        const lv::Mat j = lv::jacobian(c, rep.point);
        const lv::Mat fd = fd_jacobian(c, rep.point);
        for (int r = 0; r < 4; ++r)
            for (int col = 0; col < 4; ++col)
                CHECK(std::abs(j(r, col) - fd(r, col)) < 1e-6);
    }
}

TEST_CASE("classify: fig1a stable, fig1b unstable near the unit circle") {
    const auto a = lv::classify(lv::compile(lv::get_preset("fig1a").eco));
    CHECK(a.cls == StabilityClass::Stable);
    REQUIRE(a.eig.has_value());
    for (const lv::Complex& lam : a.eig->eigenvalues) CHECK(std::abs(lam) < 1.0);

    const auto b = lv::classify(lv::compile(lv::get_preset("fig1b").eco));
    CHECK(b.cls == StabilityClass::Unstable);
    REQUIRE(b.eig.has_value());
    CHECK(b.eig->spectral_radius > 1.0);
    CHECK(b.eig->spectral_radius < 1.1);
}

TEST_CASE("classify: overwhelming predator dependency gives a non-positive point") {
    EcoParams e = lv::get_preset("fig1a").eco;
    e.p = {0.9, 0.9};
    const auto cl = lv::classify(lv::compile(e));
    CHECK(cl.cls == StabilityClass::NonPositive);
    CHECK(cl.fp.exists);
    CHECK_FALSE(cl.fp.positive);
}

TEST_CASE("classify: pure function, identical results on repeated calls") {
    const CoeffParams c = lv::compile(lv::get_preset("fig1c").eco);
    const auto a = lv::classify(c);
    const auto b = lv::classify(c);
    CHECK(a.cls == b.cls);
    REQUIRE(a.eig.has_value());
    REQUIRE(b.eig.has_value());
    CHECK(a.eig->spectral_radius == b.eig->spectral_radius);
    for (int i = 0; i < 4; ++i)
        CHECK(a.eig->eigenvalues[static_cast<size_t>(i)] ==
              b.eig->eigenvalues[static_cast<size_t>(i)]);
}

TEST_CASE("diagram: symmetric template gives a transpose-symmetric grid") {
    const lv::StabilityGrid grid = lv::diagram(lv::get_preset("fig4a").eco, 20);
    for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 20; ++j) {
            CHECK(grid.at(i, j).cls == grid.at(j, i).cls);
            if (!std::isnan(grid.at(i, j).spectral_radius))
                CHECK(grid.at(i, j).spectral_radius ==
                      doctest::Approx(grid.at(j, i).spectral_radius).epsilon(1e-9));
        }
}

TEST_CASE("diagram: zero search rate leaves no positive fixed point anywhere") {
    EcoParams e = lv::get_preset("fig3a").eco;
    e.s = {0.0, 0.0};
    const lv::StabilityGrid grid = lv::diagram(e, 8);
    for (const auto& cell : grid.cells)
        CHECK((cell.cls == StabilityClass::NonPositive ||
               cell.cls == StabilityClass::NoUniqueFixedPoint));
}

TEST_CASE("diagram: fig5b stable cells keep h1 away from the neutral center") {
    const lv::StabilityGrid grid = lv::diagram(lv::get_preset("fig5b").eco, 40);
    int stable = 0;
    for (int i = 0; i < 40; ++i)
        for (int j = 0; j < 40; ++j)
            if (grid.at(i, j).cls == StabilityClass::Stable) {
                ++stable;
                const double h1 = lv::StabilityGrid::coord(i, 40);
                CHECK((h1 < 0.45 || h1 > 0.55));
            }
    CHECK(stable > 0);
}

TEST_CASE("diagram: per-cell class and spectral radius are consistent") {
    const lv::StabilityGrid grid = lv::diagram(lv::get_preset("fig3a").eco, 16);
    for (const auto& cell : grid.cells) {
        if (cell.cls == StabilityClass::Stable) CHECK(cell.spectral_radius < 1.0);
        if (cell.cls == StabilityClass::Unstable && !cell.solver_warning)
            CHECK(cell.spectral_radius >= 1.0 - lv::kStabilityMargin);
        if (cell.cls == StabilityClass::NonPositive ||
            cell.cls == StabilityClass::NoUniqueFixedPoint)
            CHECK(std::isnan(cell.spectral_radius));
    }
}

TEST_CASE("diagram: resolution below 2 is rejected") {
    CHECK_THROWS_AS(lv::diagram(lv::get_preset("fig3a").eco, 1), std::invalid_argument);
}
