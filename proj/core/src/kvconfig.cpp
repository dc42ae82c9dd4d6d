// SPDX-License-Identifier: Apache-2.0
#include "radiomap/kvconfig.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "radiomap/error.hpp"

namespace radiomap {

namespace {

std::string trim(const std::string& s) {
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

}  // namespace

KvConfig KvConfig::parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string(), 0, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str(), path.string());
}

KvConfig KvConfig::parse_string(const std::string& text, const std::string& name) {
    KvConfig cfg;
    cfg.source_ = name;
    cfg.raw_ = text;

    std::istringstream in(text);
    std::string line;
    std::string current;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t.back() != ']' || t.size() < 3)
                throw ParseError(name, lineno, "malformed section header: " + t);
            current = trim(t.substr(1, t.size() - 2));
            cfg.sections_[current];  // section may stay empty
            continue;
        }
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ParseError(name, lineno, "expected `key = value`: " + t);
        if (current.empty())
            throw ParseError(name, lineno, "entry before any [section]: " + t);
        Entry e;
        e.key = trim(t.substr(0, eq));
        e.value = trim(t.substr(eq + 1));
        e.line = lineno;
        if (e.key.empty()) throw ParseError(name, lineno, "empty key");
        cfg.sections_[current].push_back(std::move(e));
    }
    return cfg;
}

bool KvConfig::has_section(const std::string& section) const {
    return sections_.count(section) > 0;
}

const std::vector<KvConfig::Entry>& KvConfig::section(const std::string& section) const {
    auto it = sections_.find(section);
    if (it == sections_.end())
        throw ParseError(source_, 0, "missing section [" + section + "]");
    return it->second;
}

std::vector<KvConfig::Entry> KvConfig::entries(const std::string& section,
                                               const std::string& key) const {
    std::vector<Entry> out;
    auto it = sections_.find(section);
    if (it == sections_.end()) return out;
    for (const auto& e : it->second)
        if (e.key == key) out.push_back(e);
    return out;
}

std::optional<std::string> KvConfig::find(const std::string& section,
                                          const std::string& key) const {
    auto it = sections_.find(section);
    if (it == sections_.end()) return std::nullopt;
    std::optional<std::string> out;
    for (const auto& e : it->second)
        if (e.key == key) out = e.value;  // last one wins
    return out;
}

int KvConfig::line_of(const std::string& section, const std::string& key) const {
    auto it = sections_.find(section);
    if (it == sections_.end()) return 0;
    int line = 0;
    for (const auto& e : it->second)
        if (e.key == key) line = e.line;
    return line;
}

std::string KvConfig::get_string(const std::string& section, const std::string& key) const {
    auto v = find(section, key);
    if (!v)
        throw ParseError(source_, 0, "missing key `" + key + "` in section [" + section + "]");
    return *v;
}

double KvConfig::parse_double(const std::string& text, const std::string& file, int line) {
    const std::string t = trim(text);
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
    if (ec != std::errc() || ptr != t.data() + t.size())
        throw ParseError(file, line, "not a number: `" + t + "`");
    return out;
}

std::vector<double> KvConfig::parse_doubles(const std::string& text, const std::string& file,
                                            int line) {
    std::vector<double> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) out.push_back(parse_double(tok, file, line));
    return out;
}

double KvConfig::get_double(const std::string& section, const std::string& key) const {
    return parse_double(get_string(section, key), source_, line_of(section, key));
}

long long KvConfig::get_int(const std::string& section, const std::string& key) const {
    const std::string t = get_string(section, key);
    long long out = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
    if (ec != std::errc() || ptr != t.data() + t.size())
        throw ParseError(source_, line_of(section, key), "not an integer: `" + t + "`");
    return out;
}

bool KvConfig::get_bool(const std::string& section, const std::string& key) const {
    const std::string t = get_string(section, key);
    if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
    if (t == "false" || t == "0" || t == "no" || t == "off") return false;
    throw ParseError(source_, line_of(section, key), "not a boolean: `" + t + "`");
}

std::vector<double> KvConfig::get_doubles(const std::string& section,
                                          const std::string& key) const {
    return parse_doubles(get_string(section, key), source_, line_of(section, key));
}

std::string KvConfig::get_string_or(const std::string& section, const std::string& key,
                                    const std::string& fallback) const {
    auto v = find(section, key);
    return v ? *v : fallback;
}

double KvConfig::get_double_or(const std::string& section, const std::string& key,
                               double fallback) const {
    return find(section, key) ? get_double(section, key) : fallback;
}

long long KvConfig::get_int_or(const std::string& section, const std::string& key,
                               long long fallback) const {
    return find(section, key) ? get_int(section, key) : fallback;
}

bool KvConfig::get_bool_or(const std::string& section, const std::string& key,
                           bool fallback) const {
    return find(section, key) ? get_bool(section, key) : fallback;
}

std::vector<double> KvConfig::get_doubles_or(const std::string& section, const std::string& key,
                                             const std::vector<double>& fallback) const {
    return find(section, key) ? get_doubles(section, key) : fallback;
}

}  // namespace radiomap
