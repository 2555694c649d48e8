// common.cpp — method tag names

#include "edgedecay/common.hpp"

#include <array>
#include <utility>

namespace edgedecay {
namespace {

constexpr std::array<std::pair<Method, std::string_view>, 6> kNames{{
    {Method::series, "series"},
    {Method::star_series, "star"},
    {Method::rational, "rational"},
    {Method::asymptotic, "asymptotic"},
    {Method::volterra, "volterra"},
    {Method::laplace, "laplace"},
}};

}  // namespace

std::string_view to_string(Method m) noexcept {
    for (const auto& [tag, name] : kNames) {
        if (tag == m) return name;
    }
    return "unknown";
}

Method method_from_string(std::string_view name) {
    if (name == "star_series") return Method::star_series;
    for (const auto& [tag, n] : kNames) {
        if (n == name) return tag;
    }
    throw ConfigError("unknown method '" + std::string(name) +
                      "' (expected series, star, rational, asymptotic, volterra or laplace)");
}

}  // namespace edgedecay
