// The map step (increment form), the generic multiplicative Lotka-Volterra
// step, trajectory simulation, and persistence accounting.
#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lv/params.hpp"

namespace lv {

constexpr double kBlowUpBound = 1e12;

struct BlowUpError : std::runtime_error {
    int species;
    double value;
    BlowUpError(int i, double v)
        : std::runtime_error(std::string("blow-up: ") + species_name(i) + " exceeded 1e12"),
          species(i),
          value(v) {}
};

struct StepResult {
    StateVec next;
    uint8_t clamped = 0;  // bit i set: coordinate i clamped to 0 this step
};

// One generation of the increment-form map:
//   x_i  <- x_i + x_i (r_i - k_i x_i - sum_j B[i][j] X_j)
//   X_j  <- X_j + X_j (-p_j + sum_i C[j][i] x_i)
// Negative results are clamped to 0 (extinction); a coordinate past 1e12
// aborts with BlowUpError.
inline StepResult step(const CoeffParams& c, const StateVec& st) {
    st.validate();
    const double x1 = st[0], x2 = st[1], X1 = st[2], X2 = st[3];
    StepResult out;
    out.next[0] = x1 + x1 * (c.r[0] - c.k[0] * x1 - c.B[0][0] * X1 - c.B[0][1] * X2);
    out.next[1] = x2 + x2 * (c.r[1] - c.k[1] * x2 - c.B[1][0] * X1 - c.B[1][1] * X2);
    out.next[2] = X1 + X1 * (-c.p[0] + c.C[0][0] * x1 + c.C[0][1] * x2);
    out.next[3] = X2 + X2 * (-c.p[1] + c.C[1][0] * x1 + c.C[1][1] * x2);
    for (int i = 0; i < 4; ++i) {
        if (out.next[i] > kBlowUpBound) throw BlowUpError(i, out.next[i]);
        if (out.next[i] < 0.0) {
            out.next[i] = 0.0;
            out.clamped |= static_cast<uint8_t>(1u << i);
        }
    }
    return out;
}

// Generic n-species Lotka-Volterra map in multiplicative form:
//   x_i <- x_i (e_i + sum_j A[i][j] x_j)
// No clamping; faithful to the textbook form.
struct GenericLV {
    int n = 0;
    std::vector<double> growth;                 // e_i
    std::vector<std::vector<double>> interact;  // A[i][j]

    void validate() const {
        if (n < 1 || n > 8) throw std::invalid_argument("GenericLV: n must be in [1, 8]");
        if (static_cast<int>(growth.size()) != n || static_cast<int>(interact.size()) != n)
            throw std::invalid_argument("GenericLV: size mismatch");
        for (double e : growth)
            if (!std::isfinite(e)) throw std::invalid_argument("GenericLV: non-finite growth");
        for (const auto& row : interact) {
            if (static_cast<int>(row.size()) != n)
                throw std::invalid_argument("GenericLV: ragged interaction matrix");
            for (double a : row)
                if (!std::isfinite(a)) throw std::invalid_argument("GenericLV: non-finite entry");
        }
    }
};

inline std::vector<double> step_generic(const GenericLV& g, const std::vector<double>& state) {
    g.validate();
    if (static_cast<int>(state.size()) != g.n)
        throw std::invalid_argument("step_generic: state dimension mismatch");
    std::vector<double> out(static_cast<size_t>(g.n));
    for (int i = 0; i < g.n; ++i) {
        const auto si = static_cast<size_t>(i);
        double bracket = g.growth[si];
        for (int j = 0; j < g.n; ++j)
            bracket += g.interact[si][static_cast<size_t>(j)] * state[static_cast<size_t>(j)];
        out[si] = state[si] * bracket;
        if (std::abs(out[si]) > kBlowUpBound) throw BlowUpError(i, out[si]);
    }
    return out;
}

struct Event {
    enum class Kind { Extinction, BlowUp };
    long generation;
    Kind kind;
    int species;
};

struct Trajectory {
    std::vector<StateVec> states;  // generation 0..T
    std::vector<Event> events;
    bool blew_up = false;

    long generations() const { return static_cast<long>(states.size()) - 1; }
};

// Repeated step from init. An extinction event is logged the first time each
// species is clamped; a blow-up logs an event and ends the run early.
inline Trajectory simulate(const CoeffParams& c, const StateVec& init, long generations) {
    if (generations < 1) throw std::invalid_argument("simulate: generations must be >= 1");
    init.validate();
    Trajectory t;
    t.states.reserve(static_cast<size_t>(generations) + 1);
    t.states.push_back(init);
    uint8_t seen_clamped = 0;
    for (long g = 0; g < generations; ++g) {
        try {
            StepResult res = step(c, t.states.back());
            const uint8_t fresh = static_cast<uint8_t>(res.clamped & ~seen_clamped);
            for (int i = 0; i < 4; ++i)
                if (fresh & (1u << i))
                    t.events.push_back({g + 1, Event::Kind::Extinction, i});
            seen_clamped |= res.clamped;
            t.states.push_back(res.next);
        } catch (const BlowUpError& e) {
            t.events.push_back({g + 1, Event::Kind::BlowUp, e.species});
            t.blew_up = true;
            break;
        }
    }
    return t;
}

struct PersistenceReport {
    bool collapsed = false;
    long generation = -1;  // first generation any coordinate < threshold
    int species = -1;
    bool blew_up = false;
};

inline PersistenceReport persistence(const Trajectory& t, double threshold) {
    if (!(threshold > 0.0)) throw std::invalid_argument("persistence: threshold must be > 0");
    PersistenceReport rep;
    rep.blew_up = t.blew_up;
    for (size_t g = 0; g < t.states.size(); ++g) {
        for (int i = 0; i < 4; ++i) {
            if (t.states[g][i] < threshold) {
                rep.collapsed = true;
                rep.generation = static_cast<long>(g);
                rep.species = i;
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace lv
