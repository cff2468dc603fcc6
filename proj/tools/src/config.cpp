#include "config.hpp"

#include <cmath>
#include <fstream>
#include <set>

namespace udwforce {

namespace {

using nlohmann::json;

constexpr double kC = 299792458.0;  // m/s

[[noreturn]] void fail(const std::string& field, const std::string& why) {
    throw ConfigError("config field '" + field + "': " + why);
}

const json& get(const json& j, const std::string& field) {
    if (!j.contains(field)) fail(field, "missing");
    return j.at(field);
}

double num(const json& j, const std::string& field) {
    const json& v = get(j, field);
    if (!v.is_number()) fail(field, "must be a number");
    return v.get<double>();
}

double num_or(const json& j, const std::string& field, double fallback) {
    if (!j.contains(field)) return fallback;
    return num(j, field);
}

std::string str(const json& j, const std::string& field) {
    const json& v = get(j, field);
    if (!v.is_string()) fail(field, "must be a string");
    return v.get<std::string>();
}

void check_keys(const json& j, const std::string& where,
                const std::set<std::string>& allowed) {
    if (!j.is_object()) fail(where, "must be an object");
    for (const auto& [key, _] : j.items())
        if (!allowed.count(key))
            fail(where + "." + key,
                 "unknown key for this unit style (one style per file)");
}

}  // namespace

RunConfig parse_config(const nlohmann::json& j) {
    RunConfig cfg;
    check_keys(j, "config",
               {"units", "detector", "state", "trajectory", "boundary", "window",
                "regime", "normalization", "tolerances", "sweep", "output",
                "threads"});
    const std::string units = j.contains("units") ? str(j, "units") : "dimensionless";
    if (units != "dimensionless" && units != "si")
        fail("units", "must be 'dimensionless' or 'si'");
    const bool si = units == "si";

    // --- detector -----------------------------------------------------------
    const json& det = get(j, "detector");
    if (si) {
        check_keys(det, "detector",
                   {"omega_rad_per_s", "sigma_m", "coupling_lambda",
                    "regulator_gamma_rad_per_s"});
        const double omega = num(det, "omega_rad_per_s");
        const double sigma = num(det, "sigma_m");
        if (!(sigma > 0.0)) fail("detector.sigma_m", "must be > 0");
        cfg.params.gap_omega = omega * sigma / kC;
        cfg.params.regulator_gamma =
            num_or(det, "regulator_gamma_rad_per_s", 0.0) * sigma / kC;
        cfg.params.coupling_lambda = num_or(det, "coupling_lambda", 1.0);
    } else {
        check_keys(det, "detector",
                   {"sigma_omega", "coupling_lambda", "regulator_gamma"});
        cfg.params.gap_omega = num(det, "sigma_omega");
        cfg.params.regulator_gamma = num_or(det, "regulator_gamma", 0.0);
        cfg.params.coupling_lambda = num_or(det, "coupling_lambda", 1.0);
    }
    cfg.params.smearing_sigma = 1.0;
    try {
        cfg.params.validate();
    } catch (const udw::Error& e) {
        fail("detector", e.what());
    }

    // --- state ---------------------------------------------------------------
    if (j.contains("state")) {
        const json& st = j.at("state");
        check_keys(st, "state", {"excited_pop", "coherence_re", "coherence_im"});
        cfg.state.excited_pop = num_or(st, "excited_pop", 0.0);
        cfg.state.coherence = udw::complexd(num_or(st, "coherence_re", 0.0),
                                            num_or(st, "coherence_im", 0.0));
        try {
            udw::validate_state(cfg.state);
        } catch (const udw::Error& e) {
            fail("state", e.what());
        }
    }

    // --- trajectory ----------------------------------------------------------
    const json& tr = get(j, "trajectory");
    if (si) {
        check_keys(tr, "trajectory", {"v_m_per_s"});
        cfg.beta = num(tr, "v_m_per_s") / kC;
    } else {
        check_keys(tr, "trajectory", {"beta"});
        cfg.beta = num(tr, "beta");
    }
    try {
        udw::lorentz_gamma(cfg.beta);
    } catch (const udw::Error& e) {
        fail("trajectory", e.what());
    }

    // --- boundary -------------------------------------------------------------
    if (j.contains("boundary")) {
        const json& b = j.at("boundary");
        const std::string type = str(b, "type");
        if (type == "free") {
            check_keys(b, "boundary", {"type"});
            cfg.boundary = udw::Free{};
        } else if (type == "plate") {
            udw::Plate plate;
            if (si) {
                check_keys(b, "boundary",
                           {"type", "d_m", "reflection_re", "reflection_im"});
                const double sigma = num(get(j, "detector"), "sigma_m");
                plate.distance = num(b, "d_m") / sigma;
            } else {
                check_keys(b, "boundary",
                           {"type", "d_over_sigma", "reflection_re", "reflection_im"});
                plate.distance = num(b, "d_over_sigma");
            }
            plate.reflection = udw::complexd(num_or(b, "reflection_re", 1.0),
                                             num_or(b, "reflection_im", 0.0));
            if (!(plate.distance > 0.0)) fail("boundary.d", "must be > 0");
            if (std::abs(plate.reflection) > 1.0 + 1e-12)
                fail("boundary.reflection", "|R| must be <= 1");
            cfg.boundary = plate;
        } else {
            fail("boundary.type", "must be 'free' or 'plate'");
        }
    }

    // --- window ----------------------------------------------------------------
    if (j.contains("window")) {
        const json& w = j.at("window");
        if (si) {
            check_keys(w, "window", {"delta_tau_s"});
            const double sigma = num(get(j, "detector"), "sigma_m");
            cfg.window.delta_tau = num(w, "delta_tau_s") * kC / sigma;
        } else {
            check_keys(w, "window", {"omega_delta_tau", "c_delta_tau_over_sigma"});
            if (w.contains("omega_delta_tau") && w.contains("c_delta_tau_over_sigma"))
                fail("window", "give omega_delta_tau or c_delta_tau_over_sigma, not both");
            if (w.contains("omega_delta_tau")) {
                if (!(cfg.params.gap_omega > 0.0))
                    fail("window.omega_delta_tau", "requires sigma_omega > 0");
                cfg.window.delta_tau =
                    num(w, "omega_delta_tau") / cfg.params.gap_omega;
            } else {
                cfg.window.delta_tau = num(w, "c_delta_tau_over_sigma");
            }
        }
        if (!(cfg.window.delta_tau >= 0.0)) fail("window", "must be >= 0");
    }

    // --- regime, normalization ---------------------------------------------------
    const std::string regime = j.contains("regime") ? str(j, "regime") : "finite";
    if (regime == "finite")
        cfg.regime = udw::force::Regime::finite_time;
    else if (regime == "long")
        cfg.regime = udw::force::Regime::long_time;
    else
        fail("regime", "must be 'finite' or 'long'");
    if (cfg.regime == udw::force::Regime::finite_time && !j.contains("window"))
        fail("window", "required for the finite regime");

    const std::string norm =
        j.contains("normalization") ? str(j, "normalization") : "raw";
    if (norm == "raw")
        cfg.normalization = udw::force::Normalization::raw_natural;
    else if (norm == "friction")
        cfg.normalization = udw::force::Normalization::friction_units;
    else if (norm == "casimir")
        cfg.normalization = udw::force::Normalization::casimir_units;
    else
        fail("normalization", "must be 'raw', 'friction' or 'casimir'");

    // --- tolerances -----------------------------------------------------------
    if (j.contains("tolerances")) {
        const json& t = j.at("tolerances");
        check_keys(t, "tolerances", {"rel_tol", "abs_tol", "max_evals"});
        cfg.tol.rel_tol = num_or(t, "rel_tol", cfg.tol.rel_tol);
        cfg.tol.abs_tol = num_or(t, "abs_tol", cfg.tol.abs_tol);
        cfg.tol.max_evals = (long)num_or(t, "max_evals", (double)cfg.tol.max_evals);
        if (!(cfg.tol.rel_tol > 0.0) || cfg.tol.abs_tol < 0.0 || cfg.tol.max_evals < 15)
            fail("tolerances", "rel_tol > 0, abs_tol >= 0, max_evals >= 15 required");
    }

    // --- sweep -------------------------------------------------------------------
    if (j.contains("sweep")) {
        const json& s = j.at("sweep");
        check_keys(s, "sweep", {"parameter", "from", "to", "points", "scale"});
        SweepSpec sp;
        sp.parameter = str(s, "parameter");
        if (sp.parameter != "delta_tau" && sp.parameter != "d" &&
            sp.parameter != "v" && sp.parameter != "sigma_omega")
            fail("sweep.parameter", "must be one of delta_tau, d, v, sigma_omega");
        sp.from = num(s, "from");
        sp.to = num(s, "to");
        sp.points = (long)num(s, "points");
        const std::string scale = s.contains("scale") ? str(s, "scale") : "linear";
        if (scale != "linear" && scale != "log") fail("sweep.scale", "must be linear or log");
        sp.log_scale = scale == "log";
        if (sp.points < 2 || sp.points > 100000)
            fail("sweep.points", "must be in [2, 100000]");
        if (!(sp.from < sp.to)) fail("sweep", "requires from < to (monotone grid)");
        if (sp.log_scale && !(sp.from > 0.0)) fail("sweep", "log scale requires from > 0");
        cfg.sweep = sp;
    }

    // --- output, threads ------------------------------------------------------------
    if (j.contains("output")) {
        const json& o = j.at("output");
        check_keys(o, "output", {"path", "format"});
        if (o.contains("path")) cfg.out_path = str(o, "path");
        if (o.contains("format")) {
            cfg.out_format = str(o, "format");
            if (*cfg.out_format != "csv" && *cfg.out_format != "json")
                fail("output.format", "must be csv or json");
        }
    }
    if (j.contains("threads")) {
        cfg.threads = (int)num(j, "threads");
        if (*cfg.threads < 1) fail("threads", "must be >= 1");
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }
    return parse_config(j);
}

nlohmann::ordered_json resolved_json(const RunConfig& cfg) {
    nlohmann::ordered_json j;
    j["units"] = "dimensionless";
    j["detector"] = {{"sigma_omega", cfg.params.gap_omega},
                     {"coupling_lambda", cfg.params.coupling_lambda},
                     {"regulator_gamma", cfg.params.regulator_gamma}};
    j["state"] = {{"excited_pop", cfg.state.excited_pop},
                  {"coherence_re", cfg.state.coherence.real()},
                  {"coherence_im", cfg.state.coherence.imag()}};
    j["trajectory"] = {{"beta", cfg.beta}};
    if (const auto* plate = std::get_if<udw::Plate>(&cfg.boundary)) {
        j["boundary"] = {{"type", "plate"},
                         {"d_over_sigma", plate->distance},
                         {"reflection_re", plate->reflection.real()},
                         {"reflection_im", plate->reflection.imag()}};
    } else {
        j["boundary"] = {{"type", "free"}};
    }
    j["window"] = {{"c_delta_tau_over_sigma", cfg.window.delta_tau}};
    j["regime"] = cfg.regime == udw::force::Regime::finite_time ? "finite" : "long";
    switch (cfg.normalization) {
        case udw::force::Normalization::raw_natural: j["normalization"] = "raw"; break;
        case udw::force::Normalization::friction_units:
            j["normalization"] = "friction";
            break;
        case udw::force::Normalization::casimir_units:
            j["normalization"] = "casimir";
            break;
    }
    j["tolerances"] = {{"rel_tol", cfg.tol.rel_tol},
                       {"abs_tol", cfg.tol.abs_tol},
                       {"max_evals", cfg.tol.max_evals}};
    if (cfg.sweep) {
        j["sweep"] = {{"parameter", cfg.sweep->parameter},
                      {"from", cfg.sweep->from},
                      {"to", cfg.sweep->to},
                      {"points", cfg.sweep->points},
                      {"scale", cfg.sweep->log_scale ? "log" : "linear"}};
    }
    return j;
}

}  // namespace udwforce
