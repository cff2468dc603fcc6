#include "commands.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>
#include <vector>

#include "udw/asymptotics.hpp"
#include "udw/force.hpp"
#include "udw/verify.hpp"

namespace udwforce {

namespace {

constexpr double kPi = std::numbers::pi;

namespace asym = udw::asym;
namespace force = udw::force;
using asym::Component;
using asym::Contribution;
using asym::Distance;
using asym::RegimeKey;
using asym::State;
using asym::Time;
using asym::Velocity;
using force::ForceComponents;
using force::Regime;
using udw::complexd;
using udw::DetectorParams;
using udw::DetectorState;
using udw::Plate;
using udw::SwitchingWindow;

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + path);
    out << content;
}

void parallel_for(long n, int threads, const std::function<void(long)>& fn) {
    threads = (int)std::min<long>(std::max(1, threads), n);
    if (threads <= 1) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::exception_ptr first_error;
    std::mutex err_mutex;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (long i; (i = next.fetch_add(1)) < n;) {
                try {
                    fn(i);
                } catch (...) {
                    std::scoped_lock lock(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

// ---------------------------------------------------------------------------
// Point evaluation
// ---------------------------------------------------------------------------

ForceComponents evaluate_point(const RunConfig& cfg) {
    ForceComponents f;
    if (const auto* plate = std::get_if<Plate>(&cfg.boundary)) {
        f = force::force_plate(cfg.params, cfg.state, cfg.beta, *plate, cfg.window,
                               cfg.regime, cfg.tol);
    } else {
        if (cfg.regime != Regime::finite_time)
            throw ConfigError(
                "the long regime needs a plate boundary; in free space use a "
                "large finite window instead");
        f = force::force_free(cfg.params, cfg.state, cfg.beta, cfg.window, cfg.tol);
    }
    const double d =
        std::holds_alternative<Plate>(cfg.boundary)
            ? std::get<Plate>(cfg.boundary).distance
            : 0.0;
    const double div =
        force::normalization_divisor(cfg.normalization, cfg.params, cfg.beta, d);
    for (int mu = 0; mu < 4; ++mu) {
        f.F[mu] /= div;
        f.err[mu] /= div;
    }
    f.normalization = cfg.normalization;
    return f;
}

// ---------------------------------------------------------------------------
// Asymptote catalogue (named keys applicable to a boundary/state combination)
// ---------------------------------------------------------------------------

struct NamedKey {
    std::string name;
    RegimeKey key;
};

std::vector<NamedKey> applicable_keys(bool plate, double excited_pop) {
    std::vector<NamedKey> out;
    auto add_state = [&](State st, const std::string& s) {
        if (!plate) {
            out.push_back({"asym_" + s + "_x_short_free",
                           {st, Component::friction_x, Time::short_t,
                            Distance::free_space}});
            out.push_back({"asym_" + s + "_x_long_free",
                           {st, Component::friction_x, Time::long_t,
                            Distance::free_space}});
            return;
        }
        if (st == State::ground) {
            out.push_back({"asym_g_x_short_small_d",
                           {st, Component::friction_x, Time::short_t, Distance::small_d}});
            out.push_back({"asym_g_x_short_large_d",
                           {st, Component::friction_x, Time::short_t, Distance::large_d}});
            out.push_back({"asym_g_x_long_small_d",
                           {st, Component::friction_x, Time::long_t, Distance::small_d}});
            out.push_back({"asym_g_x_long_large_d",
                           {st, Component::friction_x, Time::long_t, Distance::large_d}});
            out.push_back({"asym_g_z_short_small_d",
                           {st, Component::casimir_z, Time::short_t, Distance::small_d}});
            out.push_back({"asym_g_z_short_large_d",
                           {st, Component::casimir_z, Time::short_t, Distance::large_d}});
            out.push_back({"asym_g_z_long_small_d",
                           {st, Component::casimir_z, Time::long_t, Distance::small_d}});
            out.push_back({"asym_g_z_long_large_d_small_v",
                           {st, Component::casimir_z, Time::long_t, Distance::large_d,
                            Velocity::small_v}});
            out.push_back({"asym_g_z_long_large_d_high_v",
                           {st, Component::casimir_z, Time::long_t, Distance::large_d,
                            Velocity::high_v}});
            out.push_back({"asym_g_z_long_pointlike",
                           {st, Component::casimir_z, Time::long_t, Distance::pointlike,
                            Velocity::small_v}});
        } else {
            for (auto [comp, c] : {std::pair{Component::friction_x, std::string("x")},
                                   std::pair{Component::casimir_z, std::string("z")}}) {
                out.push_back({"asym_e_" + c + "_short_small_d",
                               {st, comp, Time::short_t, Distance::small_d}});
                out.push_back({"asym_e_" + c + "_short_large_d",
                               {st, comp, Time::short_t, Distance::large_d}});
                out.push_back({"asym_e_" + c + "_long_small_d_pv",
                               {st, comp, Time::long_t, Distance::small_d,
                                Velocity::any, Contribution::pv}});
                out.push_back({"asym_e_" + c + "_long_small_d_delta",
                               {st, comp, Time::long_t, Distance::small_d,
                                Velocity::any, Contribution::delta}});
                out.push_back({"asym_e_" + c + "_long_large_d_pv",
                               {st, comp, Time::long_t, Distance::large_d,
                                Velocity::any, Contribution::pv}});
                out.push_back({"asym_e_" + c + "_long_large_d_delta",
                               {st, comp, Time::long_t, Distance::large_d,
                                Velocity::any, Contribution::delta}});
            }
        }
    };
    if (excited_pop < 1.0) add_state(State::ground, "g");
    if (excited_pop > 0.0) add_state(State::excited, "e");
    return out;
}

double eval_key(const RegimeKey& key, const RunConfig& cfg) {
    double d = 0.0;
    complexd R = 0.0;
    if (const auto* plate = std::get_if<Plate>(&cfg.boundary)) {
        d = plate->distance;
        R = plate->reflection;
    }
    try {
        return asym::asymptote(key, cfg.params, cfg.beta, d, R, cfg.window);
    } catch (const udw::Error&) {
        return std::numeric_limits<double>::quiet_NaN();
    }
}

// ---------------------------------------------------------------------------
// force
// ---------------------------------------------------------------------------

const char* norm_name(force::Normalization n) {
    switch (n) {
        case force::Normalization::raw_natural: return "raw";
        case force::Normalization::friction_units: return "friction";
        case force::Normalization::casimir_units: return "casimir";
    }
    return "?";
}

nlohmann::ordered_json groups_json(const RunConfig& cfg) {
    const auto g =
        udw::to_dimensionless(cfg.params, cfg.boundary, cfg.beta, cfg.window);
    return {{"y", g.y},          {"x_gap", g.x_gap},
            {"t_gap", g.t_gap},  {"d_ratio", g.d_ratio},
            {"beta_v", g.beta_v}, {"gamma_lorentz", g.gamma_lorentz}};
}

int cmd_force_impl(const RunConfig& cfg, const std::string& out,
                   const std::string& format) {
    const ForceComponents f = evaluate_point(cfg);
    const auto g = udw::to_dimensionless(cfg.params, cfg.boundary, cfg.beta, cfg.window);
    std::ostringstream os;
    if (format == "json") {
        nlohmann::ordered_json j;
        j["config"] = resolved_json(cfg);
        j["groups"] = groups_json(cfg);
        j["force"] = {{"normalization", norm_name(f.normalization)},
                      {"F", {f.F[0], f.F[1], f.F[2], f.F[3]}},
                      {"err", {f.err[0], f.err[1], f.err[2], f.err[3]}},
                      {"converged", f.converged}};
        os << j.dump(2) << "\n";
    } else {
        os << "# udwforce force\n";
        os << "# config = " << resolved_json(cfg).dump() << "\n";
        os << "F_t,F_x,F_y,F_z,err_t,err_x,err_y,err_z,normalization,converged,"
              "y,x_gap,t_gap,d_ratio,beta_v,gamma_lorentz\n";
        for (int mu = 0; mu < 4; ++mu) os << fmt17(f.F[mu]) << ",";
        for (int mu = 0; mu < 4; ++mu) os << fmt17(f.err[mu]) << ",";
        os << norm_name(f.normalization) << "," << (f.converged ? 1 : 0) << ","
           << fmt17(g.y) << "," << fmt17(g.x_gap) << "," << fmt17(g.t_gap) << ","
           << fmt17(g.d_ratio) << "," << fmt17(g.beta_v) << ","
           << fmt17(g.gamma_lorentz) << "\n";
    }
    write_output(out, os.str());
    return f.converged ? 0 : 3;
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

std::vector<double> make_grid(const SweepSpec& s) {
    std::vector<double> g(s.points);
    for (long i = 0; i < s.points; ++i) {
        const double t = (double)i / (double)(s.points - 1);
        g[i] = s.log_scale
                   ? std::exp(std::log(s.from) + t * (std::log(s.to) - std::log(s.from)))
                   : s.from + t * (s.to - s.from);
    }
    return g;
}

RunConfig at_point(const RunConfig& base, const std::string& parameter, double x) {
    RunConfig c = base;
    if (parameter == "delta_tau") {
        c.window.delta_tau = x;
    } else if (parameter == "d") {
        auto* plate = std::get_if<Plate>(&c.boundary);
        if (!plate) throw ConfigError("sweep over d requires a plate boundary");
        plate->distance = x;
    } else if (parameter == "v") {
        c.beta = x;
    } else {  // sigma_omega
        c.params.gap_omega = x;
    }
    return c;
}

int cmd_sweep_impl(const RunConfig& cfg, const std::string& out,
                   const std::string& format, int threads) {
    if (!cfg.sweep) throw ConfigError("sweep command needs a 'sweep' config block");
    const SweepSpec& sp = *cfg.sweep;
    const std::vector<double> grid = make_grid(sp);
    const bool plate = std::holds_alternative<Plate>(cfg.boundary);
    const std::vector<NamedKey> keys = applicable_keys(plate, cfg.state.excited_pop);

    struct Row {
        ForceComponents f;
        std::vector<double> asymptotes;
    };
    std::vector<Row> rows(grid.size());
    parallel_for((long)grid.size(), threads, [&](long i) {
        const RunConfig c = at_point(cfg, sp.parameter, grid[i]);
        Row r;
        r.f = evaluate_point(c);
        const double d =
            plate ? std::get<Plate>(c.boundary).distance : 0.0;
        const double div =
            force::normalization_divisor(c.normalization, c.params, c.beta, d);
        for (const NamedKey& k : keys)
            r.asymptotes.push_back(eval_key(k.key, c) / div);
        rows[i] = std::move(r);
    });

    bool all_converged = true;
    std::ostringstream os;
    if (format == "json") {
        nlohmann::ordered_json j;
        j["config"] = resolved_json(cfg);
        auto& arr = j["rows"] = nlohmann::ordered_json::array();
        for (size_t i = 0; i < grid.size(); ++i) {
            const Row& r = rows[i];
            nlohmann::ordered_json row;
            row[sp.parameter] = grid[i];
            row["F"] = {r.f.F[0], r.f.F[1], r.f.F[2], r.f.F[3]};
            row["err"] = {r.f.err[0], r.f.err[1], r.f.err[2], r.f.err[3]};
            row["converged"] = r.f.converged;
            for (size_t k = 0; k < keys.size(); ++k)
                row[keys[k].name] = r.asymptotes[k];
            arr.push_back(std::move(row));
            all_converged = all_converged && r.f.converged;
        }
        os << j.dump(2) << "\n";
    } else {
        os << "# udwforce sweep\n";
        os << "# config = " << resolved_json(cfg).dump() << "\n";
        os << sp.parameter << ",F_t,F_x,F_y,F_z,err_t,err_x,err_y,err_z,converged";
        for (const NamedKey& k : keys) os << "," << k.name;
        os << "\n";
        for (size_t i = 0; i < grid.size(); ++i) {
            const Row& r = rows[i];
            os << fmt17(grid[i]);
            for (int mu = 0; mu < 4; ++mu) os << "," << fmt17(r.f.F[mu]);
            for (int mu = 0; mu < 4; ++mu) os << "," << fmt17(r.f.err[mu]);
            os << "," << (r.f.converged ? 1 : 0);
            for (double a : r.asymptotes) os << "," << fmt17(a);
            os << "\n";
            all_converged = all_converged && r.f.converged;
        }
    }
    write_output(out, os.str());
    return all_converged ? 0 : 3;
}

// ---------------------------------------------------------------------------
// figure
// ---------------------------------------------------------------------------

std::vector<double> logspace(double a, double b, long n) {
    SweepSpec s;
    s.from = a;
    s.to = b;
    s.points = n;
    s.log_scale = true;
    return make_grid(s);
}

struct FigureData {
    std::string description;
    RunConfig base;                     // fixed parameters, embedded in metadata
    std::string abscissa;               // abscissa column name
    std::vector<std::string> columns;   // value column names
    std::vector<double> grid;
    std::function<std::vector<double>(double)> eval;  // one row per grid value
};

RunConfig free_base(double sigma_omega, double excited_pop) {
    RunConfig c;
    c.params.gap_omega = sigma_omega;
    c.state.excited_pop = excited_pop;
    c.beta = 0.5;
    c.boundary = udw::Free{};
    c.normalization = force::Normalization::friction_units;
    c.tol.rel_tol = 1e-6;
    return c;
}

RunConfig plate_base(double excited_pop, double beta, complexd R, Regime regime,
                     double omega_dtau) {
    RunConfig c;
    c.params.gap_omega = 1.0;  // Omega = c/sigma
    c.state.excited_pop = excited_pop;
    c.beta = beta;
    c.boundary = Plate{1.0, R};
    c.regime = regime;
    c.window.delta_tau = omega_dtau;  // Omega = 1
    c.tol.rel_tol = 1e-6;
    return c;
}

FigureData figure_data(const std::string& id) {
    const complexd Rboth = complexd(1.0, 1.0) / std::sqrt(2.0);
    FigureData fig;

    auto free_fig = [&](double sOm, double tmin, double tmax) {
        fig.base = free_base(sOm, id == "fig1" ? 0.0 : 1.0);
        fig.abscissa = "omega_delta_tau";
        fig.grid = logspace(tmin, tmax, 120);
        const RunConfig base = fig.base;
        const State st = base.state.excited_pop > 0.0 ? State::excited : State::ground;
        fig.columns = {"F_over_N", "short_limit", "long_limit"};
        if (st == State::excited) fig.columns.push_back("long_nonosc");
        fig.eval = [base, st](double om_dtau) {
            RunConfig c = base;
            c.window.delta_tau = om_dtau / c.params.gap_omega;
            const double div = force::normalization_divisor(
                c.normalization, c.params, c.beta, 0.0);
            std::vector<double> row;
            row.push_back(evaluate_point(c).F[1]);
            row.push_back(eval_key({st, Component::friction_x, Time::short_t,
                                    Distance::free_space},
                                   c) /
                          div);
            row.push_back(eval_key({st, Component::friction_x, Time::long_t,
                                    Distance::free_space},
                                   c) /
                          div);
            if (st == State::excited) {
                const double O = c.params.gap_omega;
                row.push_back(-kPi * std::exp(-0.5 * O * O));
            }
            return row;
        };
    };

    // ratio figures vs d/sigma share a scaffold: a numeric curve and closed
    // forms, all divided by a fixed reference value
    auto ratio_fig = [&](RunConfig base, int mu, bool split_channel,
                         Contribution contribution, double reference,
                         std::vector<std::pair<std::string, RegimeKey>> curves) {
        fig.base = base;
        fig.abscissa = "d_over_sigma";
        fig.grid = logspace(1e-2, 1e2, 60);
        fig.columns = {"ratio_numeric"};
        for (const auto& [name, _] : curves) fig.columns.push_back(name);
        fig.eval = [base, mu, split_channel, contribution, reference,
                    curves](double d) {
            RunConfig c = base;
            std::get<Plate>(c.boundary).distance = d;
            std::vector<double> row;
            double numeric;
            if (split_channel) {
                const auto split = force::force_plate_split(
                    c.params, c.state, c.beta, std::get<Plate>(c.boundary), c.tol);
                numeric = (contribution == Contribution::delta ? split.delta : split.pv)
                              .F[mu];
            } else {
                numeric = evaluate_point(c).F[mu] *
                          force::normalization_divisor(c.normalization, c.params,
                                                       c.beta, d);
            }
            row.push_back(numeric / reference);
            for (const auto& [_, key] : curves) row.push_back(eval_key(key, c) / reference);
            return row;
        };
    };

    if (id == "fig1") {
        fig.description = "ground-state free-space friction vs switching time, "
                          "sigma Omega = 1";
        free_fig(1.0, 1e-2, 300.0);
    } else if (id == "fig2a" || id == "fig2b" || id == "fig2c" || id == "fig2d") {
        const double sOm = id == "fig2a" ? 1e-2 : id == "fig2b" ? 1e-1
                           : id == "fig2c" ? 1.0 : 5.0;
        char som_label[32];
        std::snprintf(som_label, sizeof(som_label), "%g", sOm);
        fig.description = "excited-state free-space friction vs switching time, "
                          "sigma Omega = " + std::string(som_label);
        if (sOm < 0.5)
            free_fig(sOm, 1e-3, 30.0);
        else
            free_fig(sOm, 1e-2, 300.0);
    } else if (id == "fig3" || id == "fig4") {
        const bool short_time = id == "fig3";
        fig.description = std::string("ground-state plate friction ratio vs "
                                      "distance, ") +
                          (short_time ? "short" : "long") + " switching time";
        RunConfig base = plate_base(0.0, 0.999, Rboth,
                                    short_time ? Regime::finite_time : Regime::long_time,
                                    1e-3);
        const Time tm = short_time ? Time::short_t : Time::long_t;
        const double ref =
            asym::asymptote({State::ground, Component::friction_x, tm,
                             Distance::small_d},
                            base.params, base.beta, 1.0, Rboth, base.window);
        ratio_fig(base, 1, false, Contribution::total, ref,
                  {{"ratio_small_d",
                    {State::ground, Component::friction_x, tm, Distance::small_d}},
                   {"ratio_large_d",
                    {State::ground, Component::friction_x, tm, Distance::large_d}}});
    } else if (id == "fig5") {
        fig.description = "ground-state plate Casimir ratio vs distance, short "
                          "switching time, reference d = sigma";
        RunConfig base = plate_base(0.0, 0.999, Rboth, Regime::finite_time, 1e-3);
        RunConfig at_sigma = base;
        const double ref = evaluate_point(at_sigma).F[3];
        ratio_fig(base, 3, false, Contribution::total, ref,
                  {{"ratio_small_d",
                    {State::ground, Component::casimir_z, Time::short_t,
                     Distance::small_d}},
                   {"ratio_large_d",
                    {State::ground, Component::casimir_z, Time::short_t,
                     Distance::large_d}}});
    } else if (id == "fig6a" || id == "fig6b") {
        const bool slow = id == "fig6a";
        fig.description = std::string("ground-state plate Casimir ratio vs "
                                      "distance, long switching time, v = ") +
                          (slow ? "0" : "0.999c") + ", reference d = sigma";
        RunConfig base = plate_base(0.0, slow ? 0.0 : 0.999, 1.0, Regime::long_time, 0.0);
        const double ref = evaluate_point(base).F[3];
        std::vector<std::pair<std::string, RegimeKey>> curves = {
            {"ratio_small_d",
             {State::ground, Component::casimir_z, Time::long_t, Distance::small_d}},
            {slow ? "ratio_large_d_small_v" : "ratio_large_d_high_v",
             {State::ground, Component::casimir_z, Time::long_t, Distance::large_d,
              slow ? Velocity::small_v : Velocity::high_v}}};
        if (slow)
            curves.push_back({"ratio_pointlike",
                              {State::ground, Component::casimir_z, Time::long_t,
                               Distance::pointlike, Velocity::small_v}});
        ratio_fig(base, 3, false, Contribution::total, ref, curves);
        if (slow) {
            // append the small-distance limit of the pointlike form
            fig.columns.push_back("ratio_pointlike_small_d");
            auto inner = fig.eval;
            const double lam2 =
                base.params.coupling_lambda * base.params.coupling_lambda;
            fig.eval = [inner, ref, lam2](double d) {
                auto row = inner(d);
                row.push_back(-lam2 / (16.0 * kPi * d * d) / ref);
                return row;
            };
        }
    } else if (id == "fig7") {
        fig.description = "excited-state plate friction ratio vs distance, short "
                          "switching time";
        RunConfig base = plate_base(1.0, 0.999, Rboth, Regime::finite_time, 1e-3);
        const double ref =
            asym::asymptote({State::excited, Component::friction_x, Time::short_t,
                             Distance::small_d},
                            base.params, base.beta, 1.0, Rboth, base.window);
        ratio_fig(base, 1, false, Contribution::total, ref,
                  {{"ratio_small_d",
                    {State::excited, Component::friction_x, Time::short_t,
                     Distance::small_d}},
                   {"ratio_large_d",
                    {State::excited, Component::friction_x, Time::short_t,
                     Distance::large_d}}});
    } else if (id == "fig8" || id == "fig9" || id == "fig10a" || id == "fig10b") {
        const bool friction = id == "fig8" || id == "fig9";
        const Contribution part =
            (id == "fig8" || id == "fig10a") ? Contribution::delta : Contribution::pv;
        const Component comp = friction ? Component::friction_x : Component::casimir_z;
        fig.description =
            std::string("excited-state plate ") +
            (friction ? "friction" : "Casimir") + " " +
            (part == Contribution::delta ? "on-shell" : "principal-value") +
            " part, long switching time, ratio to the small-distance form at d = sigma";
        RunConfig base = plate_base(1.0, 0.999, Rboth, Regime::long_time, 0.0);
        const double ref = asym::asymptote(
            {State::excited, comp, Time::long_t, Distance::small_d, Velocity::any, part},
            base.params, base.beta, 1.0, Rboth, base.window);
        ratio_fig(base, friction ? 1 : 3, true, part, ref,
                  {{"ratio_small_d",
                    {State::excited, comp, Time::long_t, Distance::small_d,
                     Velocity::any, part}},
                   {"ratio_large_d",
                    {State::excited, comp, Time::long_t, Distance::large_d,
                     Velocity::any, part}}});
    } else {
        throw ConfigError("unknown figure id: " + id);
    }
    return fig;
}

int cmd_figure_impl(const std::string& id, const std::string& out, int threads) {
    const FigureData fig = figure_data(id);
    std::vector<std::vector<double>> rows(fig.grid.size());
    parallel_for((long)fig.grid.size(), threads,
                 [&](long i) { rows[i] = fig.eval(fig.grid[i]); });

    std::ostringstream os;
    os << "# udwforce figure\n";
    os << "# figure = " << id << "\n";
    os << "# " << fig.description << "\n";
    os << "# config = " << resolved_json(fig.base).dump() << "\n";
    os << fig.abscissa;
    for (const std::string& c : fig.columns) os << "," << c;
    os << "\n";
    for (size_t i = 0; i < fig.grid.size(); ++i) {
        os << fmt17(fig.grid[i]);
        for (double v : rows[i]) os << "," << fmt17(v);
        os << "\n";
    }
    const std::string path = out.empty() ? id + ".csv" : out;
    write_output(path, os.str());
    return 0;
}

}  // namespace

int resolve_threads(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("UDWF_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? (int)hw : 1;
}

int cmd_force(const RunConfig& cfg, const std::string& out,
              const std::string& format) {
    return cmd_force_impl(cfg, out, format);
}

int cmd_sweep(const RunConfig& cfg, const std::string& out,
              const std::string& format, int threads) {
    return cmd_sweep_impl(cfg, out, format, threads);
}

int cmd_figure(const std::string& id, const std::string& out, int threads) {
    return cmd_figure_impl(id, out, threads);
}

int cmd_verify(const std::string& suite) {
    udw::verify::Suite s;
    if (suite == "fast")
        s = udw::verify::Suite::fast;
    else if (suite == "full")
        s = udw::verify::Suite::full;
    else
        throw ConfigError("verify suite must be 'fast' or 'full'");
    bool all = true;
    for (int id : udw::verify::suite_ids(s)) {
        const auto r = udw::verify::run_criterion(id);
        std::cout << udw::verify::format_result(r) << "\n";
        all = all && r.pass;
    }
    std::cout << (all ? "VERIFY PASS" : "VERIFY FAIL") << "\n";
    return all ? 0 : 1;
}

}  // namespace udwforce
