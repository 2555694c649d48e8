// config_text.cpp — key-value and flat-JSON configuration parsing

#include "edgedecay/config_text.hpp"

#include <algorithm>
#include <cmath>
#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "edgedecay/common.hpp"

namespace edgedecay {
namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::string json_scalar_text(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number()) {
        std::ostringstream os;
        os.precision(17);
        os << v.get<double>();
        return os.str();
    }
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    throw ConfigError("config: unsupported JSON value " + v.dump());
}

double parse_double(const std::string& key, const std::string& text) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (trim(text.substr(used)).empty()) return v;
    } catch (const std::exception&) {
    }
    throw ConfigError("config: key '" + key + "' expects a number, got '" + text + "'");
}

}  // namespace

ConfigText ConfigText::parse(const std::string& text) {
    ConfigText out;
    const std::string body = trim(text);
    if (!body.empty() && body.front() == '{') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(body);
        } catch (const nlohmann::json::parse_error& e) {
            throw ConfigError(std::string("config: malformed JSON: ") + e.what());
        }
        for (const auto& [key, v] : doc.items()) {
            if (v.is_array()) {
                std::string joined;
                for (const auto& item : v) {
                    if (!joined.empty()) joined += ",";
                    joined += json_scalar_text(item);
                }
                out.values_[key] = joined;
            } else {
                out.values_[key] = json_scalar_text(v);
            }
        }
        return out;
    }

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto sep = line.find_first_of("=:");
        if (sep == std::string::npos) {
            throw ConfigError("config: line " + std::to_string(lineno) +
                              " is not of the form key = value");
        }
        const std::string key = trim(line.substr(0, sep));
        std::string value = trim(line.substr(sep + 1));
        if (value.size() >= 2 && value.front() == '[' && value.back() == ']') {
            value = trim(value.substr(1, value.size() - 2));
        }
        if (key.empty()) throw ConfigError("config: empty key on line " + std::to_string(lineno));
        out.values_[key] = value;
    }
    return out;
}

ConfigText ConfigText::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::optional<std::string> ConfigText::get(const std::string& key) const {
    if (auto it = values_.find(key); it != values_.end()) return it->second;
    return std::nullopt;
}

double ConfigText::number(const std::string& key) const {
    auto v = get(key);
    if (!v) throw ConfigError("config: missing required key '" + key + "'");
    return parse_double(key, *v);
}

double ConfigText::number_or(const std::string& key, double fallback) const {
    return has(key) ? number(key) : fallback;
}

int ConfigText::integer_or(const std::string& key, int fallback) const {
    if (!has(key)) return fallback;
    const double v = number(key);
    if (v != std::floor(v)) throw ConfigError("config: key '" + key + "' expects an integer");
    return static_cast<int>(v);
}

std::vector<std::string> ConfigText::list(const std::string& key) const {
    std::vector<std::string> out;
    auto v = get(key);
    if (!v) return out;
    std::string item;
    std::istringstream in(*v);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.size() >= 2 && item.front() == '"' && item.back() == '"') {
            item = item.substr(1, item.size() - 2);
        }
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::vector<double> ConfigText::number_list(const std::string& key) const {
    std::vector<double> out;
    for (const auto& item : list(key)) out.push_back(parse_double(key, item));
    return out;
}

}  // namespace edgedecay
