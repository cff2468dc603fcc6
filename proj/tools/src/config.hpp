#ifndef UDWFORCE_CONFIG_HPP
#define UDWFORCE_CONFIG_HPP

#include <json.hpp>
#include <optional>
#include <string>

#include "udw/core.hpp"
#include "udw/force.hpp"
#include "udw/quadrature.hpp"

// JSON run configuration. Physical inputs come either as SI values or as
// dimensionless groups -- exactly one style per file, selected by "units".
// Internally everything is natural units (c = hbar = 1) with sigma = 1, so
// the dimensionless style maps one-to-one onto the engine parameters.

namespace udwforce {

struct ConfigError : udw::Error {
    using udw::Error::Error;
};

struct SweepSpec {
    std::string parameter;  // one of delta_tau, d, v, sigma_omega
    double from = 0.0;
    double to = 0.0;
    long points = 0;
    bool log_scale = false;
};

struct RunConfig {
    udw::DetectorParams params;  // natural units, sigma = 1
    udw::DetectorState state;
    double beta = 0.0;  // v/c along x
    udw::Boundary boundary = udw::Free{};
    udw::SwitchingWindow window;  // c dtau / sigma
    udw::force::Regime regime = udw::force::Regime::finite_time;
    udw::force::Normalization normalization = udw::force::Normalization::raw_natural;
    udw::quad::ToleranceSpec tol;
    std::optional<SweepSpec> sweep;
    // optional file-level defaults, overridable from the command line
    std::optional<std::string> out_path;
    std::optional<std::string> out_format;
    std::optional<int> threads;
};

// Parses and validates; throws ConfigError naming the offending field.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

// Fully resolved dimensionless config (the round-trip embedding): parsing it
// back reproduces the same RunConfig bit for bit.
nlohmann::ordered_json resolved_json(const RunConfig& cfg);

}  // namespace udwforce

#endif
