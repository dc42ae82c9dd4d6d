// SPDX-License-Identifier: Apache-2.0
#ifndef RADIOMAP_RENDER_HPP
#define RADIOMAP_RENDER_HPP

#include <filesystem>

#include "radiomap/radiomap_tensor.hpp"

namespace radiomap {

enum class Palette { Jet, Gray };

Palette palette_from_name(const std::string& name);

// Binary PPM (P6), one pixel per grid. Values map linearly onto the palette
// between min_db and max_db; cells without a value render dark red.
void render_radiomap(const RadiomapTensor& t, double f_mhz, Palette palette, double min_db,
                     double max_db, const std::filesystem::path& out_path);

}  // namespace radiomap

#endif  // RADIOMAP_RENDER_HPP
