// File emitters and JSON conversions: trajectory/grid CSV, P6 pixmap
// heatmaps, parameter and report JSON. All writes go through a temp file and
// rename so outputs are never observed half-written.
#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lv/map.hpp"
#include "lv/params.hpp"
#include "lv/scenarios.hpp"
#include "lv/stability.hpp"

namespace lv {

using json = nlohmann::ordered_json;

// Shortest representation that round-trips (at most 17 significant digits).
inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

inline std::string trajectory_csv(const Trajectory& t) {
    std::string s = "generation,x1,x2,X1,X2\n";
    for (size_t g = 0; g < t.states.size(); ++g) {
        s += std::to_string(g);
        for (int i = 0; i < 4; ++i) {
            s += ',';
            s += format_double(t.states[g][i]);
        }
        s += '\n';
    }
    return s;
}

inline std::string grid_csv(const StabilityGrid& grid) {
    std::string s = "h1,h2,class,rho\n";
    const int n = grid.resolution;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const GridCell& cell = grid.at(i, j);
            s += format_double(StabilityGrid::coord(i, n));
            s += ',';
            s += format_double(StabilityGrid::coord(j, n));
            s += ',';
            s += to_string(cell.cls);
            s += ',';
            s += std::isnan(cell.spectral_radius) ? "nan" : format_double(cell.spectral_radius);
            s += '\n';
        }
    }
    return s;
}

// P6 pixmap, row 0 at h2 = top. Stable cells are red, unstable cells a gray
// ramp darkening with spectral radius (capped at 2; this grading is not part
// of the source diagrams), cells without a positive fixed point white.
inline std::string grid_ppm(const StabilityGrid& grid) {
    const int n = grid.resolution;
    std::string s = "P6\n" + std::to_string(n) + " " + std::to_string(n) + "\n255\n";
    s.reserve(s.size() + static_cast<size_t>(n) * static_cast<size_t>(n) * 3);
    for (int row = 0; row < n; ++row) {
        const int j = n - 1 - row;  // h2 decreases downward
        for (int i = 0; i < n; ++i) {
            const GridCell& cell = grid.at(i, j);
            unsigned char rgb[3] = {255, 255, 255};
            if (cell.cls == StabilityClass::Stable) {
                rgb[0] = 255;
                rgb[1] = 0;
                rgb[2] = 0;
            } else if (cell.cls == StabilityClass::Unstable) {
                const double rho = std::min(cell.spectral_radius, 2.0);
                const double t = std::clamp(rho - 1.0, 0.0, 1.0);
                const auto g = static_cast<unsigned char>(std::lround(200.0 - 140.0 * t));
                rgb[0] = rgb[1] = rgb[2] = g;
            }
            s.append(reinterpret_cast<const char*>(rgb), 3);
        }
    }
    return s;
}

inline json state_to_json(const StateVec& s) {
    return json::array({s[0], s[1], s[2], s[3]});
}

inline json eco_to_json(const EcoParams& e) {
    auto mat = [](const std::array<std::array<double, 2>, 2>& m) {
        return json::array({json::array({m[0][0], m[0][1]}), json::array({m[1][0], m[1][1]})});
    };
    json k = json::array();
    for (double v : e.K) k.push_back(std::isinf(v) ? json("inf") : json(v));
    return json{{"r", {e.r[0], e.r[1]}}, {"K", k},           {"s", {e.s[0], e.s[1]}},
                {"p", {e.p[0], e.p[1]}}, {"E", mat(e.E)},    {"D", mat(e.D)},
                {"Q", mat(e.Q)}};
}

inline EcoParams eco_from_json(const json& j) {
    EcoParams e;
    auto pair = [&](const char* key, std::array<double, 2>& dst, bool required = true) {
        if (!j.contains(key)) {
            if (required) throw std::invalid_argument(std::string("params: missing field ") + key);
            return;
        }
        const json& a = j.at(key);
        if (!a.is_array() || a.size() != 2)
            throw std::invalid_argument(std::string("params: ") + key + " must be a 2-array");
        for (int i = 0; i < 2; ++i) dst[static_cast<size_t>(i)] = a[static_cast<size_t>(i)].get<double>();
    };
    auto mat = [&](const char* key, std::array<std::array<double, 2>, 2>& dst,
                   bool required = true) {
        if (!j.contains(key)) {
            if (required) throw std::invalid_argument(std::string("params: missing field ") + key);
            return;
        }
        const json& a = j.at(key);
        if (!a.is_array() || a.size() != 2)
            throw std::invalid_argument(std::string("params: ") + key + " must be a 2x2 array");
        for (int r = 0; r < 2; ++r) {
            const json& row = a[static_cast<size_t>(r)];
            if (!row.is_array() || row.size() != 2)
                throw std::invalid_argument(std::string("params: ") + key + " must be a 2x2 array");
            for (int c = 0; c < 2; ++c)
                dst[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    row[static_cast<size_t>(c)].get<double>();
        }
    };
    pair("r", e.r);
    if (!j.contains("K")) throw std::invalid_argument("params: missing field K");
    for (int i = 0; i < 2; ++i) {
        const json& kv = j.at("K").at(static_cast<size_t>(i));
        e.K[static_cast<size_t>(i)] = kv.is_string()
                                          ? std::numeric_limits<double>::infinity()
                                          : kv.get<double>();
        if (kv.is_string() && kv.get<std::string>() != "inf")
            throw std::invalid_argument("params: K entries must be numbers or \"inf\"");
    }
    pair("s", e.s);
    pair("p", e.p);
    mat("E", e.E);
    mat("D", e.D, /*required=*/false);
    mat("Q", e.Q);
    e.validate();
    return e;
}

inline json classification_to_json(const Classification& cl) {
    json out;
    out["class"] = to_string(cl.cls);
    json fp;
    fp["exists"] = cl.fp.exists;
    fp["positive"] = cl.fp.positive;
    if (cl.fp.exists)
        fp["point"] = {cl.fp.point[0], cl.fp.point[1], cl.fp.point[2], cl.fp.point[3]};
    out["fixed_point"] = fp;
    if (cl.eig) {
        json lams = json::array();
        for (const Complex& lam : cl.eig->eigenvalues)
            lams.push_back({{"re", lam.real()}, {"im", lam.imag()}, {"modulus", std::abs(lam)}});
        out["eigenvalues"] = lams;
        out["spectral_radius"] = cl.eig->spectral_radius;
    }
    out["solver_warning"] = cl.solver_warning;
    return out;
}

inline json persistence_to_json(const PersistenceReport& rep) {
    json out;
    out["collapsed"] = rep.collapsed;
    if (rep.collapsed) {
        out["generation"] = rep.generation;
        out["species"] = species_name(rep.species);
    }
    out["blew_up"] = rep.blew_up;
    return out;
}

inline json events_to_json(const Trajectory& t) {
    json out = json::array();
    for (const Event& ev : t.events)
        out.push_back({{"generation", ev.generation},
                       {"kind", ev.kind == Event::Kind::Extinction ? "extinction" : "blowup"},
                       {"species", species_name(ev.species)}});
    return out;
}

}  // namespace lv
