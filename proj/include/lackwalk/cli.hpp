#pragma once

// Command-line front end: `run`, `sweep` and `scale`.
//
// Settings come from three layers, highest precedence first: command-line
// flags, a flat `key = value` config file (`--config`), and a named preset
// (`--preset`). Keys in the file are the long flag names without dashes;
// repeatable flags (cluster) may appear on several lines.
//
// Exit codes: 0 success, 2 configuration error, 3 runtime error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lackwalk/experiments.hpp"
#include "lackwalk/io.hpp"
#include "lackwalk/lattice.hpp"
#include "lackwalk/search.hpp"

namespace lackwalk::cli {

inline constexpr const char* kVersion = "lackwalk 0.1.0";

enum ExitCode : int { kOk = 0, kConfigError = 2, kRuntimeError = 3 };

class ConfigError : public std::invalid_argument {
public:
    ConfigError(const std::string& field, const std::string& message)
        : std::invalid_argument(field + ": " + message)
    {
    }
};

/// Everything a command needs, validated.
struct RunConfig {
    std::string command;
    int dimension = 1;
    std::size_t side = 0;
    CoinFamily coin = CoinFamily::G;
    LoopWeightRule loop_weight;
    std::vector<ClusterSpec> clusters;
    VertexId anchor = 0;
    std::string anchor_text = "0";
    HorizonRule horizon;
    double prominence = kDefaultProminence;
    std::string trace_path;
    std::string out;
    std::string format = "json";
    unsigned jobs = 0;
    // sweep
    std::string weights_text;
    // scale
    std::vector<std::size_t> sizes;
    std::vector<ScalingModel> fits;
};

namespace detail {

using Settings = std::map<std::string, std::vector<std::string>>;

struct Preset {
    std::string command;
    Settings settings;
};

inline const std::map<std::string, Preset>& presets()
{
    static const std::map<std::string, Preset> table = {
        {"fig2",
         {"sweep",
          {{"dim", {"1"}},
           {"side", {"1000"}},
           {"coin", {"g"}},
           {"cluster", {"run:1", "run:2", "run:5", "run:8"}},
           {"weights", {"0.01/N:10/N:100"}}}}},
        {"fig3",
         {"scale",
          {{"dim", {"1"}},
           {"coin", {"g"}},
           {"loop-weight", {"0.1/N"}},
           {"cluster", {"run:1", "run:2", "run:5", "run:8"}},
           {"sizes", {"200,400,600,800,1000"}},
           {"fit", {"power_law,linear_over_M"}}}}},
        {"fig4",
         {"sweep",
          {{"dim", {"2"}},
           {"side", {"40"}},
           {"coin", {"g"}},
           {"cluster", {"block:1x1", "block:2x1", "block:5x5", "block:8x8", "diag"}},
           {"weights", {"0.0001:0.1"}},
           {"horizon", {"x200"}}}}},
        {"fig5",
         {"scale",
          {{"dim", {"2"}},
           {"coin", {"g"}},
           {"loop-weight", {"0.01"}},
           {"cluster", {"block:1x1", "block:2x1", "block:3x3", "block:6x6", "diag"}},
           {"sizes", {"20,40,60,80,100"}},
           {"fit", {"power_law,sqrt_log"}}}}},
    };
    return table;
}

/// Raw option strings as CLI11 sees them.
struct RawOptions {
    std::string config, preset, dim, side, coin, loop_weight, anchor, horizon, prominence, out,
        jobs, trace, format, weights, sizes, fit;
    std::vector<std::string> clusters;
};

inline void add_common(CLI::App& sub, RawOptions& raw)
{
    sub.add_option("--config", raw.config, "flat key = value config file");
    sub.add_option("--preset", raw.preset, "fig2 | fig3 | fig4 | fig5");
    sub.add_option("--dim", raw.dim, "lattice dimension (1 or 2)");
    sub.add_option("--coin", raw.coin, "coin family: g | akr | skw");
    sub.add_option("--loop-weight", raw.loop_weight, "self-loop weight a, or c/N");
    sub.add_option("--cluster", raw.clusters, "run:m | block:kxl | diag | list:v1,v2,...");
    sub.add_option("--anchor", raw.anchor, "cluster anchor: vertex index or x,y");
    sub.add_option("--horizon", raw.horizon, "max steps, or xK for K times the expected scaling");
    sub.add_option("--prominence", raw.prominence, "minimum rise above p(0) for a first peak");
    sub.add_option("--out", raw.out, "output file (run) or directory (sweep, scale)");
    sub.add_option("--jobs", raw.jobs, "worker threads (0 = all cores)")->envname("LACKWALK_JOBS");
}

inline std::unique_ptr<CLI::App> make_app(RawOptions& raw)
{
    auto app = std::make_unique<CLI::App>("Lackadaisical quantum-walk search simulator", "lackwalk");
    app->set_version_flag("--version", kVersion);
    app->require_subcommand(1);

    auto* run = app->add_subcommand("run", "one search run; JSON record and optional trace");
    add_common(*run, raw);
    run->add_option("--side", raw.side, "lattice side (N in 1D)");
    run->add_option("--trace", raw.trace, "write step,probability CSV here");
    run->add_option("--format", raw.format, "record format: json | csv");

    auto* sweep = app->add_subcommand("sweep", "first-peak time and probability over a loop-weight grid");
    add_common(*sweep, raw);
    sweep->add_option("--side", raw.side, "lattice side (N in 1D)");
    sweep->add_option("--weights", raw.weights, "lo:hi[:points], endpoints may use c/N");

    auto* scale = app->add_subcommand("scale", "first-peak time and probability over lattice sizes");
    add_common(*scale, raw);
    scale->add_option("--sizes", raw.sizes, "comma-separated N (1D) or side (2D)");
    scale->add_option("--fit", raw.fit, "comma-separated: power_law, linear_over_M, sqrt_log");
    return app;
}

inline std::string trim(std::string s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline Settings read_config_file(const std::string& path, const std::set<std::string>& known)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config", "cannot read '" + path + "'");
    }
    Settings settings;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config", path + ":" + std::to_string(lineno) + ": expected key = value");
        }
        std::string key = trim(line.substr(0, eq));
        for (char& c : key) {
            if (c == '_') c = '-';
        }
        if (!known.count(key) || key == "config") {
            throw ConfigError("config", path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
        settings[key].push_back(trim(line.substr(eq + 1)));
    }
    return settings;
}

inline std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    for (auto part : lackwalk::detail::split(text, ',')) {
        out.push_back(trim(std::string(part)));
    }
    return out;
}

inline double parse_weight_endpoint(const std::string& text, const LatticeGeometry& geometry)
{
    return LoopWeightRule::parse(text).value(geometry);
}

template <typename Fn>
auto field(const std::string& name, Fn&& fn) -> decltype(fn())
{
    try {
        return fn();
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(name, e.what());
    }
}

inline VertexId parse_anchor(const std::string& text, const LatticeGeometry& geometry)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        const VertexId v = lackwalk::detail::parse_size(text, "anchor");
        geometry.check_vertex(v);
        return v;
    }
    const std::size_t x = lackwalk::detail::parse_size(trim(text.substr(0, comma)), "anchor x");
    const std::size_t y = lackwalk::detail::parse_size(trim(text.substr(comma + 1)), "anchor y");
    return geometry.index({x, y});
}

inline HorizonRule parse_horizon(const std::string& text)
{
    HorizonRule rule;
    if (text.empty()) return rule;
    if (text[0] == 'x') {
        rule.multiplier = lackwalk::detail::parse_double(text.substr(1), "horizon multiplier");
        if (!(rule.multiplier > 0.0)) throw std::invalid_argument("horizon multiplier must be positive");
    } else {
        rule.fixed = lackwalk::detail::parse_size(text, "horizon");
        if (*rule.fixed < 2) throw std::invalid_argument("horizon must be at least 2 steps");
    }
    return rule;
}

inline std::string horizon_text(const HorizonRule& rule)
{
    if (rule.fixed) return std::to_string(*rule.fixed);
    return "x" + lackwalk::detail::shortest(rule.multiplier);
}

/// Validates raw strings into a RunConfig. Throws ConfigError naming the field.
inline RunConfig validate(const std::string& command, const RawOptions& raw)
{
    RunConfig cfg;
    cfg.command = command;

    cfg.dimension = field("dim", [&] {
        if (raw.dim != "1" && raw.dim != "2") throw std::invalid_argument("dimension must be 1 or 2");
        return raw.dim == "1" ? 1 : 2;
    });
    cfg.coin = field("coin", [&] { return parse_coin_family(raw.coin.empty() ? "g" : raw.coin); });
    cfg.loop_weight = field("loop-weight", [&] {
        if (raw.loop_weight.empty()) {
            return LoopWeightRule::parse(cfg.dimension == 1 ? "0.1/N" : "0.01");
        }
        return LoopWeightRule::parse(raw.loop_weight);
    });
    cfg.horizon = field("horizon", [&] { return parse_horizon(raw.horizon); });
    cfg.prominence = field("prominence", [&] {
        if (raw.prominence.empty()) return kDefaultProminence;
        const double p = lackwalk::detail::parse_double(raw.prominence, "prominence");
        if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("prominence must lie in [0, 1)");
        return p;
    });
    cfg.jobs = field("jobs", [&] {
        return raw.jobs.empty() ? 0u
                                : static_cast<unsigned>(lackwalk::detail::parse_size(raw.jobs, "jobs"));
    });

    const std::vector<std::string> cluster_texts =
        raw.clusters.empty() ? std::vector<std::string>{cfg.dimension == 1 ? "run:1" : "block:1x1"}
                             : raw.clusters;
    for (const auto& text : cluster_texts) {
        cfg.clusters.push_back(field("cluster", [&] { return ClusterSpec::parse(text); }));
    }
    cfg.out = raw.out;
    cfg.anchor_text = raw.anchor.empty() ? "0" : raw.anchor;

    auto check_clusters = [&](const LatticeGeometry& geometry) {
        cfg.anchor = field("anchor", [&] { return parse_anchor(cfg.anchor_text, geometry); });
        for (const auto& cluster : cfg.clusters) {
            field("cluster", [&] { return cluster.make(geometry, cfg.anchor).size(); });
        }
    };

    if (command == "run" || command == "sweep") {
        cfg.side = field("side", [&] {
            if (raw.side.empty()) throw std::invalid_argument("side is required");
            return lackwalk::detail::parse_size(raw.side, "side");
        });
        const auto geometry = field("side", [&] { return build_lattice(cfg.dimension, cfg.side); });
        check_clusters(geometry);
        (void)field("loop-weight", [&] { return CoinSpec(cfg.coin, cfg.loop_weight.value(geometry)); });
    }

    if (command == "run") {
        if (cfg.clusters.size() != 1) throw ConfigError("cluster", "run takes exactly one cluster");
        cfg.trace_path = raw.trace;
        cfg.format = raw.format.empty() ? "json" : raw.format;
        if (cfg.format != "json" && cfg.format != "csv") {
            throw ConfigError("format", "format must be json or csv");
        }
    } else if (command == "sweep") {
        if (raw.weights.empty()) throw ConfigError("weights", "weight grid is required");
        cfg.weights_text = raw.weights;
        const auto geometry = build_lattice(cfg.dimension, cfg.side);
        (void)field("weights", [&] {
            const auto parts = lackwalk::detail::split(raw.weights, ':');
            if (parts.size() < 2 || parts.size() > 3) {
                throw std::invalid_argument("expected lo:hi[:points]");
            }
            const double lo = parse_weight_endpoint(std::string(parts[0]), geometry);
            const double hi = parse_weight_endpoint(std::string(parts[1]), geometry);
            const std::size_t points =
                parts.size() == 3 ? lackwalk::detail::parse_size(parts[2], "point count")
                                  : (lo > 0 && hi >= lo ? grid_points_per_decade(lo, hi) : 0);
            return geometric_grid(lo, hi, points);
        });
    } else if (command == "scale") {
        if (raw.sizes.empty()) throw ConfigError("sizes", "size list is required");
        for (const auto& s : split_list(raw.sizes)) {
            cfg.sizes.push_back(field("sizes", [&] {
                const auto v = lackwalk::detail::parse_size(s, "size");
                (void)build_lattice(cfg.dimension, v);
                return v;
            }));
        }
        if (!std::is_sorted(cfg.sizes.begin(), cfg.sizes.end())) {
            throw ConfigError("sizes", "sizes must be sorted ascending");
        }
        const std::string fit_text =
            raw.fit.empty() ? (cfg.dimension == 1 ? "power_law,linear_over_M" : "power_law,sqrt_log")
                            : raw.fit;
        if (fit_text != "none") {
            for (const auto& f : split_list(fit_text)) {
                cfg.fits.push_back(field("fit", [&] { return parse_scaling_model(f); }));
            }
        }
        for (std::size_t s : cfg.sizes) {
            check_clusters(build_lattice(cfg.dimension, s));
        }
    }
    return cfg;
}

inline std::vector<double> weight_grid(const RunConfig& cfg)
{
    const auto geometry = build_lattice(cfg.dimension, cfg.side);
    const auto parts = lackwalk::detail::split(cfg.weights_text, ':');
    const double lo = parse_weight_endpoint(std::string(parts[0]), geometry);
    const double hi = parse_weight_endpoint(std::string(parts[1]), geometry);
    const std::size_t points = parts.size() == 3 ? lackwalk::detail::parse_size(parts[2], "point count")
                                                 : grid_points_per_decade(lo, hi);
    return geometric_grid(lo, hi, points);
}

/// Canonical flags that reproduce a single run.
inline std::vector<std::string> canonical_run_args(const RunConfig& cfg)
{
    return {"run",
            "--dim", std::to_string(cfg.dimension),
            "--side", std::to_string(cfg.side),
            "--coin", std::string(to_string(cfg.coin)),
            "--loop-weight", cfg.loop_weight.to_string(),
            "--cluster", cfg.clusters.front().to_string(),
            "--anchor", cfg.anchor_text,
            "--horizon", horizon_text(cfg.horizon),
            "--prominence", lackwalk::detail::shortest(cfg.prominence)};
}

/// Unique file tags for a cluster list.
inline std::vector<std::string> cluster_tags(const std::vector<ClusterSpec>& clusters)
{
    std::vector<std::string> tags;
    std::map<std::string, int> seen;
    for (const auto& c : clusters) {
        std::string tag = c.tag();
        const int n = ++seen[tag];
        if (n > 1) tag += "_" + std::to_string(n);
        tags.push_back(tag);
    }
    return tags;
}

inline std::filesystem::path out_dir(const RunConfig& cfg)
{
    return cfg.out.empty() ? std::filesystem::path(".") : std::filesystem::path(cfg.out);
}

inline int cmd_run(const RunConfig& cfg, std::ostream& out)
{
    const auto start = std::chrono::steady_clock::now();
    const auto geometry = build_lattice(cfg.dimension, cfg.side);
    const double a = cfg.loop_weight.value(geometry);
    const CoinSpec spec(cfg.coin, a);
    const MarkedSet marked = cfg.clusters.front().make(geometry, cfg.anchor);
    const std::size_t horizon = cfg.horizon.steps(geometry, marked.size());

    PeakResult peak;
    std::vector<double> trace;
    if (!cfg.trace_path.empty()) {
        trace = evolve_trace(geometry, spec, marked, horizon).values;
        peak = find_first_peak(trace, cfg.prominence);
    } else {
        peak = run_to_first_peak(geometry, spec, marked, horizon, cfg.prominence);
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::string record;
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["version"] = kVersion;
        j["config"] = {{"dim", cfg.dimension},
                       {"side", cfg.side},
                       {"coin", to_string(cfg.coin)},
                       {"loop_weight", cfg.loop_weight.to_string()},
                       {"cluster", cfg.clusters.front().to_string()},
                       {"anchor", cfg.anchor_text},
                       {"horizon", horizon_text(cfg.horizon)},
                       {"prominence", cfg.prominence}};
        j["argv"] = canonical_run_args(cfg);
        j["vertex_count"] = geometry.vertex_count();
        j["marked_count"] = marked.size();
        j["loop_weight_value"] = a;
        j["horizon_steps"] = horizon;
        j["result"] = {{"t_peak", peak.t_peak},
                       {"p_peak", peak.p_peak},
                       {"terminated_by", to_string(peak.terminated_by)}};
        j["trace_path"] = cfg.trace_path.empty() ? nlohmann::ordered_json(nullptr)
                                                 : nlohmann::ordered_json(cfg.trace_path);
        j["duration_seconds"] = seconds;
        record = j.dump(2) + "\n";
    } else {
        record = "dim,side,coin,loop_weight,cluster,M,t_peak,p_peak,terminated_by\n" +
                 std::to_string(cfg.dimension) + ',' + std::to_string(cfg.side) + ',' +
                 std::string(to_string(cfg.coin)) + ',' + io::format_double(a) + ',' +
                 cfg.clusters.front().to_string() + ',' + std::to_string(marked.size()) + ',' +
                 std::to_string(peak.t_peak) + ',' + io::format_double(peak.p_peak) + ',' +
                 to_string(peak.terminated_by) + '\n';
    }

    if (!cfg.trace_path.empty()) {
        io::write_file_atomic(cfg.trace_path, io::trace_csv(trace));
    }
    if (cfg.out.empty()) {
        out << record;
    } else {
        io::write_file_atomic(cfg.out, record);
    }
    return kOk;
}

inline int cmd_sweep(const RunConfig& cfg, std::ostream& out)
{
    const auto geometry = build_lattice(cfg.dimension, cfg.side);
    const auto weights = weight_grid(cfg);
    const RunOptions options{cfg.horizon, cfg.prominence, cfg.jobs};
    const auto tags = cluster_tags(cfg.clusters);

    std::vector<std::pair<std::filesystem::path, std::string>> files;
    for (std::size_t i = 0; i < cfg.clusters.size(); ++i) {
        const MarkedSet marked = cfg.clusters[i].make(geometry, cfg.anchor);
        const auto rows = sweep_loop_weight(geometry, cfg.coin, marked, weights, options);
        files.emplace_back(out_dir(cfg) / ("sweep_" + tags[i] + ".csv"),
                           io::sweep_csv(rows, cfg.dimension));
    }
    for (const auto& [path, content] : files) {
        io::write_file_atomic(path, content);
        out << path.string() << '\n';
    }
    return kOk;
}

inline nlohmann::ordered_json fit_json(const FitResult& fit)
{
    nlohmann::ordered_json j;
    j["model"] = to_string(fit.model);
    j["c"] = fit.c;
    if (fit.model == ScalingModel::PowerLaw) j["beta"] = fit.beta;
    j["residual"] = fit.residual;
    j["ratio_min"] = fit.ratio_min;
    j["ratio_max"] = fit.ratio_max;
    j["spread"] = fit.spread();
    j["points"] = fit.points;
    return j;
}

inline int cmd_scale(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const RunOptions options{cfg.horizon, cfg.prominence, cfg.jobs};
    const auto tags = cluster_tags(cfg.clusters);

    std::vector<std::pair<std::filesystem::path, std::string>> files;
    for (std::size_t i = 0; i < cfg.clusters.size(); ++i) {
        const auto rows = scaling_run(cfg.coin, cfg.dimension, cfg.sizes, cfg.clusters[i],
                                      cfg.loop_weight, options, cfg.anchor);
        files.emplace_back(out_dir(cfg) / ("scale_" + tags[i] + ".csv"), io::scaling_csv(rows));
        if (cfg.fits.empty()) continue;
        nlohmann::ordered_json fits = nlohmann::ordered_json::array();
        for (ScalingModel model : cfg.fits) {
            try {
                fits.push_back(fit_json(fit_scaling(std::span<const ScalingRow>(rows), model)));
            } catch (const std::exception& e) {
                err << "fit " << to_string(model) << " for " << cfg.clusters[i].to_string()
                    << ": " << e.what() << '\n';
                fits.push_back({{"model", to_string(model)}, {"error", e.what()}});
            }
        }
        nlohmann::ordered_json j;
        j["cluster"] = cfg.clusters[i].to_string();
        j["fits"] = std::move(fits);
        files.emplace_back(out_dir(cfg) / ("fit_" + tags[i] + ".json"), j.dump(2) + "\n");
    }
    for (const auto& [path, content] : files) {
        io::write_file_atomic(path, content);
        out << path.string() << '\n';
    }
    return kOk;
}

/// Parses args (without program name) into a validated config. Returns the
/// exit code to use if parsing stopped early (help, version, error).
inline std::optional<int> parse(const std::vector<std::string>& args, RunConfig& cfg,
                                std::ostream& out, std::ostream& err)
{
    auto parse_once = [&](const std::vector<std::string>& a, RawOptions& raw,
                          std::unique_ptr<CLI::App>& app) -> std::optional<int> {
        app = make_app(raw);
        std::vector<std::string> reversed(a.rbegin(), a.rend());
        try {
            app->parse(reversed);
        } catch (const CLI::CallForHelp& e) {
            out << app->help();
            return kOk;
        } catch (const CLI::CallForVersion&) {
            out << kVersion << '\n';
            return kOk;
        } catch (const CLI::ParseError& e) {
            err << "error: " << e.what() << '\n';
            return kConfigError;
        }
        return std::nullopt;
    };

    RawOptions first;
    std::unique_ptr<CLI::App> app;
    if (auto code = parse_once(args, first, app)) return code;
    CLI::App* sub = app->get_subcommands().front();
    const std::string command = sub->get_name();

    std::set<std::string> known;
    std::set<std::string> given;
    for (const CLI::Option* opt : sub->get_options()) {
        const auto& names = opt->get_lnames();
        if (names.empty()) continue;
        known.insert(names.front());
        if (opt->count() > 0) given.insert(names.front());
    }

    try {
        Settings file;
        if (!first.config.empty()) file = read_config_file(first.config, known);
        std::string preset_name = first.preset;
        if (preset_name.empty() && file.count("preset")) preset_name = file.at("preset").back();
        Settings preset;
        if (!preset_name.empty()) {
            const auto it = presets().find(preset_name);
            if (it == presets().end()) {
                throw ConfigError("preset", "unknown preset '" + preset_name + "'");
            }
            if (it->second.command != command) {
                throw ConfigError("preset", preset_name + " is a '" + it->second.command +
                                                "' preset, not '" + command + "'");
            }
            preset = it->second.settings;
        }

        std::vector<std::string> merged{command};
        auto append = [&](const Settings& layer, std::set<std::string>& taken) {
            for (const auto& [key, values] : layer) {
                if (taken.count(key) || key == "preset") continue;
                for (const auto& v : values) {
                    merged.push_back("--" + key);
                    merged.push_back(v);
                }
                taken.insert(key);
            }
        };
        std::set<std::string> taken = given;
        append(file, taken);
        append(preset, taken);
        merged.insert(merged.end(), args.begin() + 1, args.end());

        RawOptions raw;
        std::unique_ptr<CLI::App> app2;
        if (auto code = parse_once(merged, raw, app2)) return code;
        cfg = validate(command, raw);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }
    return std::nullopt;
}

} // namespace detail

/// Entry point shared by the tool and the tests. `args` excludes argv[0].
inline int run_main(const std::vector<std::string>& args, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr)
{
    RunConfig cfg;
    if (args.empty()) {
        err << "error: expected a subcommand (run, sweep, scale); see --help\n";
        return kConfigError;
    }
    if (auto code = detail::parse(args, cfg, out, err)) return *code;
    try {
        if (cfg.command == "run") return detail::cmd_run(cfg, out);
        if (cfg.command == "sweep") return detail::cmd_sweep(cfg, out);
        return detail::cmd_scale(cfg, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kRuntimeError;
    }
}

} // namespace lackwalk::cli
