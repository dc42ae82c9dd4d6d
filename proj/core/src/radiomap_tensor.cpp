// SPDX-License-Identifier: Apache-2.0
#include "radiomap/radiomap_tensor.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <string>

#include "radiomap/error.hpp"
#include "radiomap/kvconfig.hpp"

namespace radiomap {

namespace {
constexpr char kMagic[4] = {'R', 'M', 'A', 'P'};
constexpr std::uint32_t kVersion = 1;
const double kNan = std::numeric_limits<double>::quiet_NaN();
}  // namespace

RadiomapTensor::RadiomapTensor(int rows, int cols, std::vector<double> frequencies_mhz)
    : rows_(rows), cols_(cols), freqs_(std::move(frequencies_mhz)) {
    if (rows_ <= 0 || cols_ <= 0 || freqs_.empty())
        throw DataError("radiomap tensor needs positive dimensions and >= 1 frequency");
    values_.assign(static_cast<std::size_t>(rows_) * cols_ * freqs_.size(), kNan);
}

RadiomapTensor RadiomapTensor::empty_like(const UrbanScenario& sc) {
    return RadiomapTensor(sc.rows(), sc.cols(), sc.frequencies_mhz);
}

int RadiomapTensor::freq_index(double f_mhz) const {
    for (std::size_t k = 0; k < freqs_.size(); ++k)
        if (freqs_[k] == f_mhz) return static_cast<int>(k);
    return -1;
}

bool RadiomapTensor::has(int row, int col, int k) const {
    return std::isfinite(values_[index(row, col, k)]);
}

void RadiomapTensor::validate_against(const UrbanScenario& sc) const {
    if (rows_ != sc.rows() || cols_ != sc.cols())
        throw DataError("tensor dimensions do not match the scenario");
    if (freqs_ != sc.frequencies_mhz)
        throw DataError("tensor frequency axis does not match the scenario");
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            for (int k = 0; k < band_count(); ++k) {
                const bool valid = has(r, c, k);
                if (sc.building(r, c) && valid)
                    throw DataError("tensor has a value at building cell (" +
                                    std::to_string(r) + "," + std::to_string(c) + ")");
                if (!sc.building(r, c) && !valid)
                    throw DataError("tensor missing a value at free cell (" +
                                    std::to_string(r) + "," + std::to_string(c) + ")");
            }
}

void save_tensor_csv(const RadiomapTensor& t, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());
    out << "row,col,f_mhz,rss_dbm\n";
    char buf[96];
    for (int r = 0; r < t.rows(); ++r)
        for (int c = 0; c < t.cols(); ++c)
            for (int k = 0; k < t.band_count(); ++k) {
                if (!t.has(r, c, k)) continue;
                std::snprintf(buf, sizeof(buf), "%d,%d,%.10g,%.17g\n", r, c,
                              t.frequencies_mhz()[k], t.at(r, c, k));
                out << buf;
            }
}

RadiomapTensor load_tensor_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string(), 0, "cannot open file");
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) throw ParseError(path.string(), 1, "empty file");
    ++lineno;
    if (line.rfind("row,col,f_mhz,rss_dbm", 0) != 0)
        throw ParseError(path.string(), 1, "expected header `row,col,f_mhz,rss_dbm`");

    struct Cell {
        int row, col;
        double f, v;
    };
    std::vector<Cell> cells;
    std::map<double, int> freq_set;
    int max_row = -1, max_col = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        Cell cell{};
        std::istringstream ls(line);
        std::string tok;
        double fields[4];
        for (int f = 0; f < 4; ++f) {
            if (!std::getline(ls, tok, ','))
                throw ParseError(path.string(), lineno, "expected 4 comma-separated fields");
            fields[f] = KvConfig::parse_double(tok, path.string(), lineno);
        }
        cell.row = static_cast<int>(fields[0]);
        cell.col = static_cast<int>(fields[1]);
        cell.f = fields[2];
        cell.v = fields[3];
        if (cell.row < 0 || cell.col < 0)
            throw ParseError(path.string(), lineno, "negative grid index");
        max_row = std::max(max_row, cell.row);
        max_col = std::max(max_col, cell.col);
        freq_set.emplace(cell.f, 0);
        cells.push_back(cell);
    }
    if (cells.empty()) throw ParseError(path.string(), lineno, "no data rows");

    std::vector<double> freqs;
    for (auto& [f, idx] : freq_set) {
        idx = static_cast<int>(freqs.size());
        freqs.push_back(f);
    }
    RadiomapTensor t(max_row + 1, max_col + 1, freqs);
    for (const Cell& c : cells) t.set(c.row, c.col, freq_set.at(c.f), c.v);
    return t;
}

void save_tensor_binary(const RadiomapTensor& t, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());
    out.write(kMagic, 4);
    const std::uint32_t header[3] = {kVersion, static_cast<std::uint32_t>(t.rows()),
                                     static_cast<std::uint32_t>(t.cols())};
    out.write(reinterpret_cast<const char*>(header), sizeof(header));
    const std::uint32_t k = static_cast<std::uint32_t>(t.band_count());
    out.write(reinterpret_cast<const char*>(&k), sizeof(k));
    out.write(reinterpret_cast<const char*>(t.frequencies_mhz().data()),
              static_cast<std::streamsize>(k * sizeof(double)));
    out.write(reinterpret_cast<const char*>(t.raw().data()),
              static_cast<std::streamsize>(t.raw().size() * sizeof(double)));
}

RadiomapTensor load_tensor_binary(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path.string(), 0, "cannot open file");
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw ParseError(path.string(), 0, "not a radiomap tensor file (bad magic)");
    std::uint32_t header[4];
    in.read(reinterpret_cast<char*>(header), sizeof(header));
    if (!in) throw ParseError(path.string(), 0, "truncated header");
    if (header[0] != kVersion)
        throw ParseError(path.string(), 0, "unsupported version " + std::to_string(header[0]));
    std::vector<double> freqs(header[3]);
    in.read(reinterpret_cast<char*>(freqs.data()),
            static_cast<std::streamsize>(freqs.size() * sizeof(double)));
    RadiomapTensor t(static_cast<int>(header[1]), static_cast<int>(header[2]), freqs);
    in.read(reinterpret_cast<char*>(t.raw().data()),
            static_cast<std::streamsize>(t.raw().size() * sizeof(double)));
    if (!in) throw ParseError(path.string(), 0, "truncated data section");
    return t;
}

void save_tensor(const RadiomapTensor& t, const std::filesystem::path& path) {
    if (path.extension() == ".csv")
        save_tensor_csv(t, path);
    else
        save_tensor_binary(t, path);
}

RadiomapTensor load_tensor(const std::filesystem::path& path) {
    if (path.extension() == ".csv") return load_tensor_csv(path);
    return load_tensor_binary(path);
}

}  // namespace radiomap
