#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace refusion {

/// Flat `key = value` text config. '#' starts a comment, keys may repeat
/// (get() returns the last occurrence, get_all() returns every one).
class KeyValueConfig {
public:
    KeyValueConfig() = default;

    static KeyValueConfig parse_file(const std::string& path);
    static KeyValueConfig parse_string(std::string_view text);

    bool has(const std::string& key) const;
    std::optional<std::string> get(const std::string& key) const;
    std::vector<std::string> get_all(const std::string& key) const;

    std::string get_string(const std::string& key, const std::string& fallback) const;
    int get_int(const std::string& key, int fallback) const;
    double get_double(const std::string& key, double fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;

    void set(const std::string& key, const std::string& value);

    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

/// Splits "a,b,c" into trimmed fields.
std::vector<std::string> split_csv_line(std::string_view line, char sep = ',');

}  // namespace refusion
