#pragma once

// Run configuration: a single JSON object. Every key is optional; missing keys
// take the values of the reference experiment (the classical model with
// harmonic forcing on [0, 1]).
//
//   alpha1 alpha2 lambda n delta1 delta2 omega1 omega2 x_star y_star a b
//   horizon steps mode output_path step_counts

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "../errors.hpp"
#include "../gdm.hpp"

namespace fracdyn::cli {

enum class RunMode { simulate, phase, converge };

inline std::string_view to_string(RunMode mode)
{
    switch (mode) {
    case RunMode::simulate: return "simulate";
    case RunMode::phase: return "phase";
    case RunMode::converge: return "converge";
    }
    return "simulate";
}

inline std::optional<RunMode> parse_mode(std::string_view text)
{
    if (text == "simulate") return RunMode::simulate;
    if (text == "phase") return RunMode::phase;
    if (text == "converge") return RunMode::converge;
    return std::nullopt;
}

struct RunConfig
{
    gdm::GdmParams model;
    double horizon = 1.0;
    std::size_t steps = 320;
    RunMode mode = RunMode::simulate;
    std::string output_path;
    std::vector<std::size_t> step_counts{10, 20, 40, 80, 160, 320};

    /// Throws ParameterError naming the offending key.
    void validate() const
    {
        model.validate();
        if (!(horizon > 0.0) || !std::isfinite(horizon))
            throw ParameterError("horizon", "must be positive and finite");
        if (steps < 2)
            throw ParameterError("steps", "must be >= 2");
        if (step_counts.size() < 2)
            throw ParameterError("step_counts", "needs at least two entries");
        if (step_counts.front() == 0)
            throw ParameterError("step_counts", "entries must be positive");
        for (std::size_t k = 1; k < step_counts.size(); ++k)
            if (step_counts[k] != 2 * step_counts[k - 1])
                throw ParameterError("step_counts", "each entry must double the previous one");
    }

    bool operator==(const RunConfig&) const = default;
};

/// Malformed configuration document (syntax, not values).
class ConfigError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline double number_field(const nlohmann::json& value, const std::string& key)
{
    if (!value.is_number())
        throw ParameterError(key, "expected a number, got " + value.dump());
    return value.get<double>();
}

inline std::size_t count_field(const nlohmann::json& value, const std::string& key)
{
    if (value.is_number_unsigned())
        return value.get<std::size_t>();
    if (value.is_number_integer())
        throw ParameterError(key, "must be non-negative, got " + value.dump());
    if (value.is_number_float()) {
        const double d = value.get<double>();
        if (d >= 0.0 && d == std::floor(d) && d < 9.0e15)
            return static_cast<std::size_t>(d);
    }
    throw ParameterError(key, "expected a non-negative integer, got " + value.dump());
}

inline FractionalOrder order_field(const nlohmann::json& value, const std::string& key)
{
    const double v = number_field(value, key);
    if (!(v > 0.0 && v <= 1.0))
        throw ParameterError(key, "must lie in (0, 1], got " + value.dump());
    return FractionalOrder(v);
}

} // namespace detail

/// Builds and validates a RunConfig from a parsed JSON object.
inline RunConfig config_from_json(const nlohmann::json& doc)
{
    if (!doc.is_object())
        throw ConfigError("configuration must be a JSON object");

    RunConfig cfg;
    auto& m = cfg.model;
    for (const auto& [key, value] : doc.items()) {
        if (key == "alpha1") m.alpha1 = detail::order_field(value, key);
        else if (key == "alpha2") m.alpha2 = detail::order_field(value, key);
        else if (key == "lambda") m.lambda = detail::number_field(value, key);
        else if (key == "n") m.accumulation_rate = detail::number_field(value, key);
        else if (key == "delta1") m.delta1 = detail::number_field(value, key);
        else if (key == "delta2") m.delta2 = detail::number_field(value, key);
        else if (key == "omega1") m.omega1 = detail::number_field(value, key);
        else if (key == "omega2") m.omega2 = detail::number_field(value, key);
        else if (key == "x_star") m.x_star = detail::number_field(value, key);
        else if (key == "y_star") m.y_star = detail::number_field(value, key);
        else if (key == "a") m.a = detail::number_field(value, key);
        else if (key == "b") m.b = detail::number_field(value, key);
        else if (key == "horizon") cfg.horizon = detail::number_field(value, key);
        else if (key == "steps") cfg.steps = detail::count_field(value, key);
        else if (key == "mode") {
            const auto mode = value.is_string() ? parse_mode(value.get<std::string>()) : std::nullopt;
            if (!mode)
                throw ParameterError(key, "expected one of simulate, phase, converge, got " +
                                              value.dump());
            cfg.mode = *mode;
        }
        else if (key == "output_path") {
            if (!value.is_string())
                throw ParameterError(key, "expected a string, got " + value.dump());
            cfg.output_path = value.get<std::string>();
        }
        else if (key == "step_counts") {
            if (!value.is_array())
                throw ParameterError(key, "expected an array of integers, got " + value.dump());
            cfg.step_counts.clear();
            for (const auto& entry : value)
                cfg.step_counts.push_back(detail::count_field(entry, key));
        }
        else
            throw ParameterError(key, "unknown key");
    }
    cfg.validate();
    return cfg;
}

inline nlohmann::json parse_document(std::string_view text)
{
    try {
        return nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("malformed configuration: ") + e.what());
    }
}

inline RunConfig parse_config(std::string_view text) { return config_from_json(parse_document(text)); }

/// Effective configuration with every key present.
inline nlohmann::json to_json(const RunConfig& cfg)
{
    const auto& m = cfg.model;
    nlohmann::json doc = {
        {"alpha1", m.alpha1.value()},
        {"alpha2", m.alpha2.value()},
        {"lambda", m.lambda},
        {"n", m.accumulation_rate},
        {"delta1", m.delta1},
        {"delta2", m.delta2},
        {"omega1", m.omega1},
        {"omega2", m.omega2},
        {"x_star", m.x_star},
        {"y_star", m.y_star},
        {"a", m.a},
        {"b", m.b},
        {"horizon", cfg.horizon},
        {"steps", cfg.steps},
        {"mode", std::string(to_string(cfg.mode))},
        {"output_path", cfg.output_path},
        {"step_counts", cfg.step_counts},
    };
    return doc;
}

inline std::string serialize_config(const RunConfig& cfg) { return to_json(cfg).dump(2); }

/// Applies one `key=value` override to a configuration document. The value is
/// read as JSON when it parses as JSON, otherwise as a bare string.
inline void apply_override(nlohmann::json& doc, std::string_view assignment)
{
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos || eq == 0)
        throw ConfigError("override must have the form key=value, got '" + std::string(assignment) +
                          "'");
    const std::string key(assignment.substr(0, eq));
    const std::string_view raw = assignment.substr(eq + 1);
    nlohmann::json value = nlohmann::json::parse(raw, nullptr, false);
    if (value.is_discarded())
        value = std::string(raw);
    doc[key] = std::move(value);
}

} // namespace fracdyn::cli
