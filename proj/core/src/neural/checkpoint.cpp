// SPDX-License-Identifier: Apache-2.0
#include "radiomap/neural/checkpoint.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "radiomap/error.hpp"

namespace radiomap::neural {

namespace {
constexpr char kMagic[4] = {'G', 'A', 'T', 'C'};
constexpr std::uint32_t kVersion = 1;

void write_tensor(std::ofstream& out, const Tensor& t) {
    out.write(reinterpret_cast<const char*>(t.data.data()),
              static_cast<std::streamsize>(t.data.size() * sizeof(double)));
}

void read_tensor(std::ifstream& in, Tensor& t) {
    in.read(reinterpret_cast<char*>(t.data.data()),
            static_cast<std::streamsize>(t.data.size() * sizeof(double)));
}
}  // namespace

void save_checkpoint(const GatModel& model, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write checkpoint " + path.string());
    out.write(kMagic, 4);
    out.write(reinterpret_cast<const char*>(&kVersion), sizeof(kVersion));
    const std::uint32_t layers = 3;
    out.write(reinterpret_cast<const char*>(&layers), sizeof(layers));
    for (const GatLayer& l : model.layers) {
        const std::uint32_t dims[2] = {static_cast<std::uint32_t>(l.params.weight.rows()),
                                       static_cast<std::uint32_t>(l.params.weight.cols())};
        out.write(reinterpret_cast<const char*>(dims), sizeof(dims));
        const std::uint8_t act = l.params.activation == Activation::Elu ? 1 : 0;
        out.write(reinterpret_cast<const char*>(&act), 1);
        out.write(reinterpret_cast<const char*>(&l.params.leaky_slope), sizeof(double));
        write_tensor(out, l.params.weight);
        write_tensor(out, l.params.attention);
    }
}

GatModel load_checkpoint(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path.string(), 0, "cannot open checkpoint");
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw ParseError(path.string(), 0, "not a checkpoint file (bad magic)");
    std::uint32_t version = 0, layers = 0;
    in.read(reinterpret_cast<char*>(&version), sizeof(version));
    in.read(reinterpret_cast<char*>(&layers), sizeof(layers));
    if (version != kVersion)
        throw ParseError(path.string(), 0, "unsupported checkpoint version");
    if (layers != 3) throw ParseError(path.string(), 0, "expected 3 layers");

    GatModel model;
    for (GatLayer& l : model.layers) {
        std::uint32_t dims[2];
        in.read(reinterpret_cast<char*>(dims), sizeof(dims));
        std::uint8_t act = 0;
        in.read(reinterpret_cast<char*>(&act), 1);
        double slope = 0.2;
        in.read(reinterpret_cast<char*>(&slope), sizeof(double));
        l.params.weight = Tensor::zeros(dims[0], dims[1]);
        l.params.attention = Tensor{2 * static_cast<std::size_t>(dims[1])};
        l.params.activation = act ? Activation::Elu : Activation::Identity;
        l.params.leaky_slope = slope;
        read_tensor(in, l.params.weight);
        read_tensor(in, l.params.attention);
        if (!in) throw ParseError(path.string(), 0, "truncated checkpoint");
    }
    return model;
}

void save_checkpoint_meta(const CheckpointMeta& meta, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "{\n"
                  "  \"config_hash\": \"%s\",\n"
                  "  \"seed\": %llu,\n"
                  "  \"epoch\": %ld,\n"
                  "  \"rss_min_dbm\": %.17g,\n"
                  "  \"rss_max_dbm\": %.17g\n"
                  "}\n",
                  meta.config_hash.c_str(), static_cast<unsigned long long>(meta.seed),
                  meta.epoch, meta.rss_min_dbm, meta.rss_max_dbm);
    out << buf;
}

namespace {
std::string json_field(const std::string& text, const std::string& key) {
    const std::string needle = "\"" + key + "\":";
    auto pos = text.find(needle);
    if (pos == std::string::npos) return "";
    pos += needle.size();
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    std::string out;
    bool quoted = pos < text.size() && text[pos] == '"';
    if (quoted) ++pos;
    while (pos < text.size()) {
        const char c = text[pos];
        if (quoted && c == '"') break;
        if (!quoted && (c == ',' || c == '\n' || c == '}')) break;
        out.push_back(c);
        ++pos;
    }
    return out;
}
}  // namespace

CheckpointMeta load_checkpoint_meta(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string(), 0, "cannot open metadata sidecar");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    CheckpointMeta meta;
    meta.config_hash = json_field(text, "config_hash");
    meta.seed = std::strtoull(json_field(text, "seed").c_str(), nullptr, 10);
    meta.epoch = std::strtol(json_field(text, "epoch").c_str(), nullptr, 10);
    meta.rss_min_dbm = std::strtod(json_field(text, "rss_min_dbm").c_str(), nullptr);
    meta.rss_max_dbm = std::strtod(json_field(text, "rss_max_dbm").c_str(), nullptr);
    return meta;
}

std::string content_hash(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace radiomap::neural
