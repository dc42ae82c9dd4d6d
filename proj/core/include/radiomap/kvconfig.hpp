// SPDX-License-Identifier: Apache-2.0
#ifndef RADIOMAP_KVCONFIG_HPP
#define RADIOMAP_KVCONFIG_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace radiomap {

// Sectioned key-value text:
//   # comment
//   [section]
//   key = value
// Duplicate keys are kept in order (used for repeated `tx = ...` lines).
class KvConfig {
public:
    struct Entry {
        std::string key;
        std::string value;
        int line = 0;
    };

    static KvConfig parse_file(const std::filesystem::path& path);
    static KvConfig parse_string(const std::string& text, const std::string& name);

    const std::string& source_name() const { return source_; }
    const std::string& raw_text() const { return raw_; }

    bool has_section(const std::string& section) const;
    const std::vector<Entry>& section(const std::string& section) const;

    // All values for a repeated key, in file order.
    std::vector<Entry> entries(const std::string& section, const std::string& key) const;

    std::optional<std::string> find(const std::string& section, const std::string& key) const;

    // Typed getters; throw ParseError naming file/line on missing keys or bad numbers.
    std::string get_string(const std::string& section, const std::string& key) const;
    double get_double(const std::string& section, const std::string& key) const;
    long long get_int(const std::string& section, const std::string& key) const;
    bool get_bool(const std::string& section, const std::string& key) const;
    std::vector<double> get_doubles(const std::string& section, const std::string& key) const;

    std::string get_string_or(const std::string& section, const std::string& key,
                              const std::string& fallback) const;
    double get_double_or(const std::string& section, const std::string& key,
                         double fallback) const;
    long long get_int_or(const std::string& section, const std::string& key,
                         long long fallback) const;
    bool get_bool_or(const std::string& section, const std::string& key, bool fallback) const;
    std::vector<double> get_doubles_or(const std::string& section, const std::string& key,
                                       const std::vector<double>& fallback) const;

    // Parse helpers shared with other loaders.
    static double parse_double(const std::string& text, const std::string& file, int line);
    static std::vector<double> parse_doubles(const std::string& text, const std::string& file,
                                             int line);

private:
    std::string source_;
    std::string raw_;
    std::map<std::string, std::vector<Entry>> sections_;
    int line_of(const std::string& section, const std::string& key) const;
};

}  // namespace radiomap

#endif  // RADIOMAP_KVCONFIG_HPP
