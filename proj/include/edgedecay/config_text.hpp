// config_text.hpp — flat key-value configuration files

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace edgedecay {

// Accepts either "key = value" lines ('#' starts a comment; ':' also separates)
// or a flat JSON object.  JSON arrays become comma-separated strings.
class ConfigText {
public:
    static ConfigText parse(const std::string& text);
    static ConfigText from_file(const std::string& path);

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    std::optional<std::string> get(const std::string& key) const;

    // Throws ConfigError naming the key when missing or malformed.
    double number(const std::string& key) const;
    double number_or(const std::string& key, double fallback) const;
    int integer_or(const std::string& key, int fallback) const;
    std::vector<std::string> list(const std::string& key) const;
    std::vector<double> number_list(const std::string& key) const;

    void set(const std::string& key, const std::string& value) { values_[key] = value; }
    const std::map<std::string, std::string>& values() const noexcept { return values_; }

private:
    std::map<std::string, std::string> values_;
};

}  // namespace edgedecay
