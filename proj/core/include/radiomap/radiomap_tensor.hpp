// SPDX-License-Identifier: Apache-2.0
#ifndef RADIOMAP_RADIOMAP_TENSOR_HPP
#define RADIOMAP_RADIOMAP_TENSOR_HPP

#include <filesystem>
#include <vector>

#include "radiomap/grid.hpp"
#include "radiomap/scenario.hpp"

namespace radiomap {

// Per-grid, per-frequency RSS in dBm. Cells without a value (buildings, or
// grids a prediction does not cover) hold NaN. Layout is cell-major:
// values[(row*cols + col)*K + k].
class RadiomapTensor {
public:
    RadiomapTensor() = default;
    RadiomapTensor(int rows, int cols, std::vector<double> frequencies_mhz);

    // NaN-filled tensor shaped after the scenario.
    static RadiomapTensor empty_like(const UrbanScenario& sc);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int band_count() const { return static_cast<int>(freqs_.size()); }
    const std::vector<double>& frequencies_mhz() const { return freqs_; }
    int freq_index(double f_mhz) const;  // -1 when absent

    double at(int row, int col, int k) const { return values_[index(row, col, k)]; }
    double at(GridIndex g, int k) const { return at(g.row, g.col, k); }
    void set(int row, int col, int k, double v) { values_[index(row, col, k)] = v; }
    bool has(int row, int col, int k) const;

    const std::vector<double>& raw() const { return values_; }
    std::vector<double>& raw() { return values_; }

    // Generator contract: finite at every non-building cell, NaN exactly at
    // building cells. Throws DataError when violated.
    void validate_against(const UrbanScenario& sc) const;

    std::size_t index(int row, int col, int k) const {
        return (static_cast<std::size_t>(row) * cols_ + col) * freqs_.size() + k;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> freqs_;
    std::vector<double> values_;
};

// CSV: header `row,col,f_mhz,rss_dbm`, one line per valid (cell, band), cells
// without values omitted. Binary: magic "RMAP", u32 version/rows/cols/K,
// K f64 frequencies, rows*cols*K f64 values (NaN = no value), little-endian.
void save_tensor_csv(const RadiomapTensor& t, const std::filesystem::path& path);
RadiomapTensor load_tensor_csv(const std::filesystem::path& path);
void save_tensor_binary(const RadiomapTensor& t, const std::filesystem::path& path);
RadiomapTensor load_tensor_binary(const std::filesystem::path& path);

// Dispatch on extension: `.csv` text, anything else binary.
void save_tensor(const RadiomapTensor& t, const std::filesystem::path& path);
RadiomapTensor load_tensor(const std::filesystem::path& path);

}  // namespace radiomap

#endif  // RADIOMAP_RADIOMAP_TENSOR_HPP
