// Named parameter presets: six simulation scenarios (fig1a-f), six
// localist-vs-globalist diagram templates (fig3a-f), four adapted-prey
// diagram templates (fig4a-d), and five asymmetric-role diagram templates
// (fig5a-e).
#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lv/params.hpp"

namespace lv {

struct UnknownPreset : std::runtime_error {
    explicit UnknownPreset(const std::string& name)
        : std::runtime_error("unknown preset: " + name) {}
};

struct Preset {
    std::string name;
    std::string description;
    EcoParams eco;
    std::optional<StateVec> init;
    std::optional<std::array<double, 4>> expected_fixed_point;
};

namespace detail {

inline std::vector<Preset> make_presets() {
    using M2 = std::array<std::array<double, 2>, 2>;
    std::vector<Preset> out;

    auto add = [&](std::string name, std::string desc, EcoParams eco,
                   std::optional<StateVec> init = std::nullopt,
                   std::optional<std::array<double, 4>> fp = std::nullopt) {
        out.push_back({std::move(name), std::move(desc), eco, init, fp});
    };

    // fig1a-c: generalist/specialist mixes over identical prey species.
    EcoParams sim;
    sim.r = {1.5, 1.5};
    sim.K = {1e4, 1e4};
    sim.s = {0.01, 0.01};
    sim.p = {0.3, 0.3};
    sim.Q = {{{0.02, 0.02}, {0.02, 0.02}}};

    EcoParams e = sim;
    e.E = M2{{{0.3, 0.3}, {0.2, 0.5}}};
    add("fig1a", "generalist vs specialist predator; converges to the coexistence point", e,
        StateVec(100, 100, 100, 100), std::array<double, 4>{3333.3333, 1666.6667, 277.7778, 83.3333});

    e = sim;
    e.E = M2{{{0.2, 0.45}, {0.5, 0.25}}};
    add("fig1b", "both predators specialized; regular oscillation around the coexistence point", e,
        StateVec(100, 100, 100, 100), std::array<double, 4>{1714.2857, 2571.4286, 140.8163, 192.2449});

    e = sim;
    e.E = M2{{{0.24, 0.6}, {0.56, 0.27}}};
    add("fig1c", "more specialized predator 1; irregular oscillation", e,
        StateVec(100, 100, 100, 100), std::array<double, 4>{1825.2, 1769.9, 132.8351, 162.0379});

    // fig1d-f: larger capacities, weak coupling.
    EcoParams weak = sim;
    weak.K = {1e5, 1e5};
    weak.p = {0.01, 0.01};
    weak.s = {0.001, 0.001};

    e = weak;
    e.E = M2{{{0.2, 0.4}, {0.31, 0.29}}};
    add("fig1d", "dominant generalist predator with alternating prey dominance", e,
        StateVec(100, 100, 100, 100), std::array<double, 4>{833.3333, 833.3333, 450.7576, 4507.576});

    e = weak;
    e.E = M2{{{0.4, 0.2}, {0.2, 0.35}}};
    add("fig1e", "near-equilibrium start; persistent oscillation", e,
        StateVec(700, 2000, 2300, 3000), std::array<double, 4>{750.0, 1000.0, 2240.6, 2962.5});
    add("fig1f", "same parameters as fig1e, far start; collapses near generation 600", e,
        StateVec(10, 100, 200, 2500), std::array<double, 4>{750.0, 1000.0, 2240.6, 2962.5});

    // fig3: localist (predator 1) vs globalist (predator 2) diagram templates.
    EcoParams loc;
    loc.r = {1.5, 1.5};
    loc.K = {1e5, 1e5};
    loc.Q = {{{0.01, 0.01}, {0.01, 0.01}}};
    loc.E = M2{{{0.5, 0.5}, {0.5, 0.5}}};  // placeholder; diagrams sweep E

    e = loc;
    e.p = {0.06, 0.01};
    e.s = {0.09, 0.01};
    add("fig3a", "localist vs globalist, baseline", e);

    e = loc;
    e.p = {0.06, 0.01};
    e.s = {0.09, 0.012};
    add("fig3b", "globalist with slightly higher search rate", e);

    e = loc;
    e.p = {0.03, 0.01};
    e.s = {0.09, 0.01};
    add("fig3c", "lower localist dependency (caption value p1=0.03; prose instead says s1=0.03)", e);

    e = loc;
    e.p = {0.06, 0.01};
    e.s = {0.03, 0.01};
    add("fig3d", "localist with low search rate relative to dependency", e);

    e = loc;
    e.p = {0.06, 0.01};
    e.s = {0.09, 0.01};
    e.Q = {{{0.013, 0.01}, {0.013, 0.01}}};
    add("fig3e", "small localist: higher conversion ratios on prey 1 side", e);

    e = loc;
    e.p = {0.06, 0.01};
    e.s = {0.09, 0.01};
    e.Q = {{{0.01, 0.011}, {0.01, 0.011}}};
    add("fig3f", "large localist: higher conversion ratios on prey 2 side", e);

    // fig4: adapted preys, D[0][0] = D[1][1] = 0.4, cross terms 1.5.
    EcoParams adapt = loc;
    adapt.D = M2{{{0.4, 1.5}, {1.5, 0.4}}};

    e = adapt;
    e.s = {0.02, 0.02};
    e.p = {0.02, 0.02};
    add("fig4a", "adapted preys, fully symmetric rates", e);

    e = adapt;
    e.s = {0.02, 0.02};
    e.p = {0.03, 0.02};
    add("fig4b", "adapted preys, higher dependency of predator 1", e);

    e = adapt;
    e.s = {0.07, 0.02};
    e.p = {0.02, 0.02};
    add("fig4c", "adapted preys, higher search rate of predator 1", e);

    e = adapt;
    e.s = {0.07, 0.02};
    e.p = {0.04, 0.02};
    add("fig4d", "adapted preys, predator 1 searches more and depends more", e);

    // fig5: body size and asymmetric conversion ratios.
    EcoParams asym = loc;

    e = asym;
    e.s = {0.01, 0.01};
    e.p = {0.01, 0.01};
    e.Q = {{{0.04, 0.01}, {0.04, 0.01}}};
    add("fig5a", "small predator 1: high conversion ratios on prey 1 side", e);

    e = asym;
    e.s = {0.01, 0.01};
    e.p = {0.05, 0.01};
    add("fig5b", "predator 1 five times more dependent on preys", e);

    e = asym;
    e.s = {0.01, 0.01};
    e.p = {0.03, 0.01};
    e.Q = {{{0.01, 0.03}, {0.02, 0.01}}};
    add("fig5c", "asymmetric conversion ratios", e);

    e = asym;
    e.r = {1.2, 1.5};
    e.s = {0.02, 0.01};
    e.p = {0.03, 0.01};
    e.Q = {{{0.01, 0.015}, {0.02, 0.01}}};
    add("fig5d", "asymmetric conversion ratios with varied growth and search rates", e);

    e = asym;
    e.r = {1.3, 1.7};
    e.s = {0.04, 0.01};
    e.p = {0.01, 0.01};
    e.Q = {{{0.03, 0.01}, {0.015, 0.02}}};
    add("fig5e", "asymmetric conversion ratios constraining predator strategies", e);

    return out;
}

inline const std::vector<Preset>& registry() {
    static const std::vector<Preset> presets = make_presets();
    return presets;
}

}  // namespace detail

inline const std::vector<Preset>& list_presets() { return detail::registry(); }

inline const Preset& get_preset(const std::string& name) {
    for (const Preset& p : detail::registry())
        if (p.name == name) return p;
    throw UnknownPreset(name);
}

}  // namespace lv
