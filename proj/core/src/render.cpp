// SPDX-License-Identifier: Apache-2.0
#include "radiomap/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>

#include "radiomap/error.hpp"

namespace radiomap {

Palette palette_from_name(const std::string& name) {
    if (name == "jet") return Palette::Jet;
    if (name == "gray" || name == "grey") return Palette::Gray;
    throw DataError("unknown palette `" + name + "` (expected jet|gray)");
}

namespace {

std::array<unsigned char, 3> jet_color(double u) {
    // Piecewise-linear blue -> cyan -> green -> yellow -> red.
    struct Stop {
        double t;
        double r, g, b;
    };
    static constexpr Stop stops[] = {
        {0.00, 0.0, 0.0, 0.5}, {0.125, 0.0, 0.0, 1.0}, {0.375, 0.0, 1.0, 1.0},
        {0.625, 1.0, 1.0, 0.0}, {0.875, 1.0, 0.0, 0.0}, {1.00, 0.5, 0.0, 0.0},
    };
    u = std::clamp(u, 0.0, 1.0);
    for (std::size_t i = 1; i < std::size(stops); ++i) {
        if (u > stops[i].t) continue;
        const Stop& a = stops[i - 1];
        const Stop& b = stops[i];
        const double w = (u - a.t) / (b.t - a.t);
        return {static_cast<unsigned char>(255.0 * (a.r + w * (b.r - a.r))),
                static_cast<unsigned char>(255.0 * (a.g + w * (b.g - a.g))),
                static_cast<unsigned char>(255.0 * (a.b + w * (b.b - a.b)))};
    }
    return {128, 0, 0};
}

std::array<unsigned char, 3> gray_color(double u) {
    u = std::clamp(u, 0.0, 1.0);
    const unsigned char g = static_cast<unsigned char>(255.0 * u);
    return {g, g, g};
}

}  // namespace

void render_radiomap(const RadiomapTensor& t, double f_mhz, Palette palette, double min_db,
                     double max_db, const std::filesystem::path& out_path) {
    const int k = t.freq_index(f_mhz);
    if (k < 0) throw DataError("render: frequency " + std::to_string(f_mhz) + " not present");
    if (!(max_db > min_db)) throw DataError("render: max_db must exceed min_db");

    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw DataError("cannot write " + out_path.string());
    out << "P6\n" << t.cols() << " " << t.rows() << "\n255\n";
    const std::array<unsigned char, 3> building = {96, 16, 16};  // dark red
    for (int r = 0; r < t.rows(); ++r)
        for (int c = 0; c < t.cols(); ++c) {
            std::array<unsigned char, 3> px = building;
            if (t.has(r, c, k)) {
                const double u = (t.at(r, c, k) - min_db) / (max_db - min_db);
                px = palette == Palette::Jet ? jet_color(u) : gray_color(u);
            }
            out.write(reinterpret_cast<const char*>(px.data()), 3);
        }
}

}  // namespace radiomap
