// SPDX-License-Identifier: Apache-2.0
#ifndef RADIOMAP_GRID_HPP
#define RADIOMAP_GRID_HPP

#include <compare>

namespace radiomap {

// Grid cell index, northwest origin, 0-based. Row grows southward, column eastward.
struct GridIndex {
    int row = 0;
    int col = 0;

    friend bool operator==(const GridIndex&, const GridIndex&) = default;
    friend auto operator<=>(const GridIndex&, const GridIndex&) = default;
};

// Index of a square block in the block partition, 0-based, northwest anchored.
struct BlockIndex {
    int row = 0;
    int col = 0;

    friend bool operator==(const BlockIndex&, const BlockIndex&) = default;
    friend auto operator<=>(const BlockIndex&, const BlockIndex&) = default;
};

// Planar point/vector, meters unless stated otherwise.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

}  // namespace radiomap

#endif  // RADIOMAP_GRID_HPP
