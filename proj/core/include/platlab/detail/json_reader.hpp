#pragma once

// Path-tracking accessors over nlohmann::json used by every document
// reader. Unknown keys are rejected once an object has been consumed.

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "platlab/errors.hpp"

namespace platlab::detail {

class ObjectReader {
public:
    ObjectReader(const nlohmann::json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) throw SchemaError(path_, "expected an object");
    }

    std::string child_path(std::string_view key) const {
        return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
    }

    bool has(std::string_view key) const { return j_.contains(std::string(key)); }

    const nlohmann::json& raw(std::string_view key) {
        used_.insert(std::string(key));
        auto it = j_.find(std::string(key));
        if (it == j_.end()) throw SchemaError(child_path(key), "required field is missing");
        return *it;
    }

    const nlohmann::json* optional_raw(std::string_view key) {
        used_.insert(std::string(key));
        auto it = j_.find(std::string(key));
        if (it == j_.end() || it->is_null()) return nullptr;
        return &*it;
    }

    double number(std::string_view key) { return as_number(raw(key), child_path(key)); }

    double number_or(std::string_view key, double fallback) {
        const auto* v = optional_raw(key);
        return v ? as_number(*v, child_path(key)) : fallback;
    }

    /// Number, or the string "inf" for an unbounded value.
    double number_or_inf(std::string_view key) { return as_number_or_inf(raw(key), child_path(key)); }

    double number_or_inf_or(std::string_view key, double fallback) {
        const auto* v = optional_raw(key);
        return v ? as_number_or_inf(*v, child_path(key)) : fallback;
    }

    std::int64_t integer(std::string_view key) { return as_integer(raw(key), child_path(key)); }

    std::int64_t integer_or(std::string_view key, std::int64_t fallback) {
        const auto* v = optional_raw(key);
        return v ? as_integer(*v, child_path(key)) : fallback;
    }

    bool boolean(std::string_view key) {
        const auto& v = raw(key);
        if (!v.is_boolean()) throw SchemaError(child_path(key), "expected a boolean");
        return v.get<bool>();
    }

    bool boolean_or(std::string_view key, bool fallback) {
        const auto* v = optional_raw(key);
        if (!v) return fallback;
        if (!v->is_boolean()) throw SchemaError(child_path(key), "expected a boolean");
        return v->get<bool>();
    }

    std::string string(std::string_view key) {
        const auto& v = raw(key);
        if (!v.is_string()) throw SchemaError(child_path(key), "expected a string");
        return v.get<std::string>();
    }

    std::string string_or(std::string_view key, std::string fallback) {
        const auto* v = optional_raw(key);
        if (!v) return fallback;
        if (!v->is_string()) throw SchemaError(child_path(key), "expected a string");
        return v->get<std::string>();
    }

    /// Throws on any key that was never requested.
    void finish() const {
        for (auto it = j_.begin(); it != j_.end(); ++it) {
            if (!used_.count(it.key())) throw SchemaError(child_path(it.key()), "unknown field");
        }
    }

    static double as_number(const nlohmann::json& v, const std::string& path) {
        if (!v.is_number()) throw SchemaError(path, "expected a number");
        const double d = v.get<double>();
        if (!std::isfinite(d)) throw SchemaError(path, "expected a finite number");
        return d;
    }

    static double as_number_or_inf(const nlohmann::json& v, const std::string& path) {
        if (v.is_string()) {
            if (v.get<std::string>() == "inf") return std::numeric_limits<double>::infinity();
            throw SchemaError(path, "expected a number or \"inf\"");
        }
        return as_number(v, path);
    }

    static std::int64_t as_integer(const nlohmann::json& v, const std::string& path) {
        if (!v.is_number_integer()) throw SchemaError(path, "expected an integer");
        return v.get<std::int64_t>();
    }

private:
    const nlohmann::json& j_;
    std::string path_;
    std::set<std::string> used_;
};

inline nlohmann::json number_or_inf_to_json(double v) {
    if (std::isinf(v) && v > 0) return "inf";
    return v;
}

}  // namespace platlab::detail
