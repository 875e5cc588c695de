// Model parameterizations for the two-prey/two-predator map: the ecological
// form the user supplies (EcoParams) and the coefficient form the map
// iterates (CoeffParams), plus compilation and efficiency-row normalization.
#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace lv {

struct ZeroEfficiencyRow : std::runtime_error {
    int predator;
    explicit ZeroEfficiencyRow(int j)
        : std::runtime_error("normalize: predator " + std::to_string(j + 1) +
                             " has zero total hunting efficiency"),
          predator(j) {}
};

// Nonnegative population 4-vector: prey1, prey2, predator1, predator2.
struct StateVec {
    std::array<double, 4> v{};

    StateVec() = default;
    StateVec(double x1, double x2, double X1, double X2) : v{x1, x2, X1, X2} {}

    double& operator[](int i) { return v[static_cast<size_t>(i)]; }
    double operator[](int i) const { return v[static_cast<size_t>(i)]; }

    bool operator==(const StateVec&) const = default;

    void validate() const {
        for (double x : v)
            if (!(x >= 0.0) || !std::isfinite(x))
                throw std::invalid_argument("StateVec: coordinates must be finite and >= 0");
    }
};

inline const char* species_name(int i) {
    static const char* names[4] = {"prey1", "prey2", "predator1", "predator2"};
    return names[i];
}

// Ecological parameterization. Matrix E is predator-major (E[j][i]: predator
// j hunting prey i); D is prey-major (D[i][j]: prey i against predator j);
// Q is predator-major (Q[j][i]: predator j offspring per consumed prey i).
struct EcoParams {
    std::array<double, 2> r{};                 // intrinsic prey growth, > 0
    std::array<double, 2> K{};                 // carrying capacity, > 0 or +inf
    std::array<double, 2> s{};                 // predator search rate, >= 0
    std::array<double, 2> p{};                 // predator dependency (decay), in (0, 1)
    std::array<std::array<double, 2>, 2> E{};  // hunting efficiency, >= 0
    std::array<std::array<double, 2>, 2> D{{{1.0, 1.0}, {1.0, 1.0}}};  // adaptation, > 0
    std::array<std::array<double, 2>, 2> Q{};  // conversion ratio, > 0

    void validate() const {
        for (int i = 0; i < 2; ++i) {
            if (!(r[static_cast<size_t>(i)] > 0.0) || !std::isfinite(r[static_cast<size_t>(i)]))
                throw std::invalid_argument("EcoParams: r must be positive and finite");
            if (!(K[static_cast<size_t>(i)] > 0.0))
                throw std::invalid_argument("EcoParams: K must be positive (may be +inf)");
            if (!(s[static_cast<size_t>(i)] >= 0.0) || !std::isfinite(s[static_cast<size_t>(i)]))
                throw std::invalid_argument("EcoParams: s must be >= 0 and finite");
            if (!(p[static_cast<size_t>(i)] > 0.0) || !(p[static_cast<size_t>(i)] < 1.0))
                throw std::invalid_argument("EcoParams: p must lie in (0, 1)");
            for (int j = 0; j < 2; ++j) {
                const auto si = static_cast<size_t>(i);
                const auto sj = static_cast<size_t>(j);
                if (!(E[si][sj] >= 0.0) || !std::isfinite(E[si][sj]))
                    throw std::invalid_argument("EcoParams: E entries must be >= 0 and finite");
                if (!(D[si][sj] > 0.0) || !std::isfinite(D[si][sj]))
                    throw std::invalid_argument("EcoParams: D entries must be positive and finite");
                if (!(Q[si][sj] > 0.0) || !std::isfinite(Q[si][sj]))
                    throw std::invalid_argument("EcoParams: Q entries must be positive and finite");
            }
        }
    }
};

// Coefficient form actually iterated: B[i][j] is the predation coefficient of
// predator j on prey i, C[j][i] the reproduction coefficient of predator j
// from prey i, k[i] = r[i]/K[i] the prey self-inhibition.
struct CoeffParams {
    std::array<double, 2> r{};
    std::array<double, 2> k{};
    std::array<std::array<double, 2>, 2> B{};
    std::array<std::array<double, 2>, 2> C{};
    std::array<double, 2> p{};

    bool operator==(const CoeffParams&) const = default;
};

// B[i][j] = s_j D[i][j] E[j][i], C[j][i] = Q[j][i] B[i][j], k_i = r_i / K_i.
// Each predator row of E is folded through its row sum so that compiling a
// normalized parameter set reproduces the same coefficients bit for bit.
inline CoeffParams compile(const EcoParams& eco) {
    eco.validate();
    CoeffParams c;
    for (int i = 0; i < 2; ++i) {
        const auto si = static_cast<size_t>(i);
        c.r[si] = eco.r[si];
        c.k[si] = std::isinf(eco.K[si]) ? 0.0 : eco.r[si] / eco.K[si];
        c.p[si] = eco.p[si];
    }
    for (int j = 0; j < 2; ++j) {
        const auto sj = static_cast<size_t>(j);
        const double sigma = eco.E[sj][0] + eco.E[sj][1];
        double u0 = 0.0, u1 = 0.0, scaled_s = 0.0;
        if (sigma > 0.0) {
            u0 = eco.E[sj][0] / sigma;
            u1 = 1.0 - u0;
            scaled_s = eco.s[sj] * sigma;
        }
        c.B[0][sj] = scaled_s * u0 * eco.D[0][sj];
        c.B[1][sj] = scaled_s * u1 * eco.D[1][sj];
        c.C[sj][0] = eco.Q[sj][0] * c.B[0][sj];
        c.C[sj][1] = eco.Q[sj][1] * c.B[1][sj];
    }
    return c;
}

// Distributes each predator's total hunting ability: efficiency rows are
// rescaled to sum to 1 and the row sum moves into the search rate, leaving
// compiled coefficients unchanged. Rows already summing to 1 are untouched.
inline EcoParams normalize(const EcoParams& eco) {
    eco.validate();
    EcoParams out = eco;
    for (int j = 0; j < 2; ++j) {
        const auto sj = static_cast<size_t>(j);
        const double sigma = eco.E[sj][0] + eco.E[sj][1];
        if (sigma == 0.0) throw ZeroEfficiencyRow(j);
        if (sigma == 1.0) continue;
        out.E[sj][0] = eco.E[sj][0] / sigma;
        out.E[sj][1] = 1.0 - out.E[sj][0];
        out.s[sj] = eco.s[sj] * sigma;
    }
    return out;
}

}  // namespace lv
