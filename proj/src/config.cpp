#include "refusion/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "refusion/errors.hpp"

namespace refusion {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

}  // namespace

KeyValueConfig KeyValueConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open config: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str());
}

KeyValueConfig KeyValueConfig::parse_string(std::string_view text) {
    KeyValueConfig cfg;
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        const std::size_t end = text.find('\n', pos);
        std::string_view line = text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
        pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + " has no '='");
        }
        const std::string key = trim(std::string_view(stripped).substr(0, eq));
        const std::string value = trim(std::string_view(stripped).substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("config line " + std::to_string(line_no) + " has empty key");
        }
        cfg.entries_.emplace_back(key, value);
    }
    return cfg;
}

bool KeyValueConfig::has(const std::string& key) const {
    return get(key).has_value();
}

std::optional<std::string> KeyValueConfig::get(const std::string& key) const {
    std::optional<std::string> found;
    for (const auto& [k, v] : entries_) {
        if (k == key) found = v;
    }
    return found;
}

std::vector<std::string> KeyValueConfig::get_all(const std::string& key) const {
    std::vector<std::string> out;
    for (const auto& [k, v] : entries_) {
        if (k == key) out.push_back(v);
    }
    return out;
}

std::string KeyValueConfig::get_string(const std::string& key, const std::string& fallback) const {
    return get(key).value_or(fallback);
}

int KeyValueConfig::get_int(const std::string& key, int fallback) const {
    const auto v = get(key);
    if (!v) return fallback;
    try {
        return std::stoi(*v);
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "' is not an integer: " + *v);
    }
}

double KeyValueConfig::get_double(const std::string& key, double fallback) const {
    const auto v = get(key);
    if (!v) return fallback;
    try {
        return std::stod(*v);
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "' is not a number: " + *v);
    }
}

bool KeyValueConfig::get_bool(const std::string& key, bool fallback) const {
    const auto v = get(key);
    if (!v) return fallback;
    std::string s = *v;
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (s == "1" || s == "true" || s == "yes" || s == "on") return true;
    if (s == "0" || s == "false" || s == "no" || s == "off") return false;
    throw ConfigError("config key '" + key + "' is not a boolean: " + *v);
}

void KeyValueConfig::set(const std::string& key, const std::string& value) {
    entries_.emplace_back(key, value);
}

std::vector<std::string> split_csv_line(std::string_view line, char sep) {
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
        const std::size_t end = line.find(sep, pos);
        fields.push_back(trim(line.substr(pos, end == std::string_view::npos ? line.size() - pos : end - pos)));
        if (end == std::string_view::npos) break;
        pos = end + 1;
    }
    return fields;
}

}  // namespace refusion
