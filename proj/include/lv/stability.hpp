// Nondegenerate fixed point, Jacobian at equilibrium, stability
// classification, and stability-diagram sweeps over the hunting-efficiency
// unit square.
#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lv/map.hpp"
#include "lv/params.hpp"
#include "lv/smallmat.hpp"

namespace lv {

struct NotAFixedPoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FixedPointReport {
    bool exists = false;
    std::array<double, 4> point{};  // meaningful only when exists; may be negative
    bool positive = false;
};

// Solves the zero-increment linear system
//   [ k1   0   B11 B12 ] [x1]   [r1]
//   [ 0    k2  B21 B22 ] [x2] = [r2]
//   [ C11  C12 0   0   ] [X1]   [p1]
//   [ C21  C22 0   0   ] [X2]   [p2]
// A singular matrix means no unique nondegenerate fixed point.
inline FixedPointReport fixed_point(const CoeffParams& c) {
    Mat m{{c.k[0], 0.0, c.B[0][0], c.B[0][1]},
          {0.0, c.k[1], c.B[1][0], c.B[1][1]},
          {c.C[0][0], c.C[0][1], 0.0, 0.0},
          {c.C[1][0], c.C[1][1], 0.0, 0.0}};
    FixedPointReport rep;
    Mat inv(4);
    try {
        inv = invert(m);
    } catch (const SingularMatrix&) {
        return rep;
    }
    const std::vector<double> rhs{c.r[0], c.r[1], c.p[0], c.p[1]};
    const std::vector<double> sol = mul(inv, rhs);
    rep.exists = true;
    rep.positive = true;
    for (int i = 0; i < 4; ++i) {
        rep.point[static_cast<size_t>(i)] = sol[static_cast<size_t>(i)];
        if (!(sol[static_cast<size_t>(i)] > 0.0)) rep.positive = false;
    }
    return rep;
}

// Jacobian of the step map at a nondegenerate fixed point, simplified by the
// equilibrium conditions. Rejects points whose zero-increment residual
// exceeds 1e-8 relative, where the simplification does not hold.
inline Mat jacobian(const CoeffParams& c, const std::array<double, 4>& fp) {
    const double x1 = fp[0], x2 = fp[1], X1 = fp[2], X2 = fp[3];
    const double g1 = c.r[0] - c.k[0] * x1 - c.B[0][0] * X1 - c.B[0][1] * X2;
    const double g2 = c.r[1] - c.k[1] * x2 - c.B[1][0] * X1 - c.B[1][1] * X2;
    const double g3 = -c.p[0] + c.C[0][0] * x1 + c.C[0][1] * x2;
    const double g4 = -c.p[1] + c.C[1][0] * x1 + c.C[1][1] * x2;
    if (std::abs(g1) > 1e-8 * std::max(1.0, std::abs(c.r[0])) ||
        std::abs(g2) > 1e-8 * std::max(1.0, std::abs(c.r[1])) ||
        std::abs(g3) > 1e-8 * std::max(1.0, c.p[0]) ||
        std::abs(g4) > 1e-8 * std::max(1.0, c.p[1]))
        throw NotAFixedPoint("jacobian: point does not satisfy the equilibrium conditions");
    return Mat{{1.0 - c.k[0] * x1, 0.0, -c.B[0][0] * x1, -c.B[0][1] * x1},
               {0.0, 1.0 - c.k[1] * x2, -c.B[1][0] * x2, -c.B[1][1] * x2},
               {c.C[0][0] * X1, c.C[0][1] * X1, 1.0, 0.0},
               {c.C[1][0] * X2, c.C[1][1] * X2, 0.0, 1.0}};
}

struct EigenReport {
    std::array<Complex, 4> eigenvalues{};
    double spectral_radius = 0.0;
};

enum class StabilityClass { NoUniqueFixedPoint, NonPositive, Stable, Unstable };

inline const char* to_string(StabilityClass c) {
    switch (c) {
        case StabilityClass::NoUniqueFixedPoint: return "NoUniqueFixedPoint";
        case StabilityClass::NonPositive: return "NonPositive";
        case StabilityClass::Stable: return "Stable";
        case StabilityClass::Unstable: return "Unstable";
    }
    return "?";
}

// Tie rule at the unit circle: Stable iff spectral radius < 1 - 1e-9.
constexpr double kStabilityMargin = 1e-9;

struct Classification {
    StabilityClass cls = StabilityClass::NoUniqueFixedPoint;
    FixedPointReport fp;
    std::optional<EigenReport> eig;  // present for Stable/Unstable
    bool solver_warning = false;     // eigensolver failed to converge
};

inline Classification classify(const CoeffParams& c) {
    Classification out;
    out.fp = fixed_point(c);
    if (!out.fp.exists) {
        out.cls = StabilityClass::NoUniqueFixedPoint;
        return out;
    }
    if (!out.fp.positive) {
        out.cls = StabilityClass::NonPositive;
        return out;
    }
    const Mat j = jacobian(c, out.fp.point);
    EigenReport eig;
    try {
        const auto lams = eigenvalues(j);
        for (int i = 0; i < 4; ++i) eig.eigenvalues[static_cast<size_t>(i)] = lams[static_cast<size_t>(i)];
    } catch (const NoConvergence& e) {
        // Best iterate, flagged; classified as Unstable-with-warning.
        for (size_t i = 0; i < 4 && i < e.best_roots.size(); ++i)
            eig.eigenvalues[i] = e.best_roots[i];
        out.solver_warning = true;
    }
    for (const Complex& lam : eig.eigenvalues)
        eig.spectral_radius = std::max(eig.spectral_radius, std::abs(lam));
    out.eig = eig;
    out.cls = (!out.solver_warning && eig.spectral_radius < 1.0 - kStabilityMargin)
                  ? StabilityClass::Stable
                  : StabilityClass::Unstable;
    return out;
}

struct GridCell {
    StabilityClass cls = StabilityClass::NoUniqueFixedPoint;
    double spectral_radius = std::numeric_limits<double>::quiet_NaN();
    bool solver_warning = false;
};

// Per-cell classification of the (h1, h2) efficiency square. Cell (i, j)
// samples the center h1 = (i + 0.5)/N, h2 = (j + 0.5)/N with
// E = [[h1, 1-h1], [1-h2, h2]].
struct StabilityGrid {
    int resolution = 0;
    std::vector<GridCell> cells;  // row-major in i (h1 index), then j

    const GridCell& at(int i, int j) const {
        return cells[static_cast<size_t>(i) * static_cast<size_t>(resolution) +
                     static_cast<size_t>(j)];
    }
    GridCell& at(int i, int j) {
        return cells[static_cast<size_t>(i) * static_cast<size_t>(resolution) +
                     static_cast<size_t>(j)];
    }
    static double coord(int idx, int n) { return (idx + 0.5) / n; }
};

inline StabilityGrid diagram(const EcoParams& tmpl, int resolution) {
    if (resolution < 2) throw std::invalid_argument("diagram: resolution must be >= 2");
    tmpl.validate();
    StabilityGrid grid;
    grid.resolution = resolution;
    grid.cells.resize(static_cast<size_t>(resolution) * static_cast<size_t>(resolution));
    for (int i = 0; i < resolution; ++i) {
        const double h1 = StabilityGrid::coord(i, resolution);
        for (int j = 0; j < resolution; ++j) {
            const double h2 = StabilityGrid::coord(j, resolution);
            EcoParams eco = tmpl;
            eco.E = {{{h1, 1.0 - h1}, {1.0 - h2, h2}}};
            const Classification cl = classify(compile(eco));
            GridCell& cell = grid.at(i, j);
            cell.cls = cl.cls;
            cell.solver_warning = cl.solver_warning;
            if (cl.eig) cell.spectral_radius = cl.eig->spectral_radius;
        }
    }
    return grid;
}

}  // namespace lv
