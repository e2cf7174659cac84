#pragma once

// Marked-cluster generators, loop-weight sweeps, size-scaling runs and the
// scaling fits used to read off running-time exponents.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <optional>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "lackwalk/lattice.hpp"
#include "lackwalk/operators.hpp"
#include "lackwalk/search.hpp"

namespace lackwalk {

// ---------------------------------------------------------------------------
// cluster generators

/// k x l rectangle (k along x, l along y) anchored at `anchor`, wrapping.
inline MarkedSet make_marked_block(const LatticeGeometry& geometry, std::size_t k, std::size_t l,
                                   VertexId anchor = 0)
{
    if (geometry.dimension() != 2) {
        throw std::invalid_argument("block clusters need a 2D lattice");
    }
    if (k < 1 || l < 1) {
        throw std::invalid_argument("block sides must be at least 1");
    }
    if (k > geometry.side() || l > geometry.side()) {
        throw std::invalid_argument("block " + std::to_string(k) + "x" + std::to_string(l) +
                                    " does not fit a side-" + std::to_string(geometry.side()) +
                                    " lattice");
    }
    std::vector<VertexId> vertices;
    vertices.reserve(k * l);
    for (std::size_t dy = 0; dy < l; ++dy) {
        for (std::size_t dx = 0; dx < k; ++dx) {
            vertices.push_back(geometry.translate(anchor, dx, dy));
        }
    }
    return MarkedSet(geometry, std::move(vertices),
                     {ClusterDescriptor::Kind::Block, k, l, anchor});
}

/// The main diagonal {(i, i)}.
inline MarkedSet make_marked_diagonal(const LatticeGeometry& geometry)
{
    if (geometry.dimension() != 2) {
        throw std::invalid_argument("diagonal clusters need a 2D lattice");
    }
    std::vector<VertexId> vertices;
    for (std::size_t i = 0; i < geometry.side(); ++i) {
        vertices.push_back(geometry.index({i, i}));
    }
    return MarkedSet(geometry, std::move(vertices), {ClusterDescriptor::Kind::Diagonal, 0, 0, 0});
}

/// m consecutive vertices of a ring starting at `anchor`.
inline MarkedSet make_marked_run(const LatticeGeometry& geometry, std::size_t m,
                                 VertexId anchor = 0)
{
    if (geometry.dimension() != 1) {
        throw std::invalid_argument("run clusters need a 1D lattice");
    }
    if (m < 1 || m > geometry.vertex_count()) {
        throw std::invalid_argument("run length must be in [1, N]");
    }
    geometry.check_vertex(anchor);
    std::vector<VertexId> vertices;
    for (std::size_t i = 0; i < m; ++i) {
        vertices.push_back((anchor + i) % geometry.vertex_count());
    }
    return MarkedSet(geometry, std::move(vertices), {ClusterDescriptor::Kind::Run, m, 0, anchor});
}

namespace detail {

inline std::size_t parse_size(std::string_view text, std::string_view what)
{
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw std::invalid_argument("invalid " + std::string(what) + " '" + std::string(text) +
                                    "'");
    }
    return value;
}

inline double parse_double(std::string_view text, std::string_view what)
{
    const std::string s(text);
    char* end = nullptr;
    const double value = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(value)) {
        throw std::invalid_argument("invalid " + std::string(what) + " '" + s + "'");
    }
    return value;
}

/// Shortest decimal text that parses back to exactly `value`.
inline std::string shortest(double value)
{
    char buf[40];
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, value);
        if (std::strtod(buf, nullptr) == value) break;
    }
    return buf;
}

inline std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

} // namespace detail

/// Parsed `--cluster` value: run:m | block:kxl | diag | list:v1,v2,...
struct ClusterSpec {
    ClusterDescriptor::Kind kind = ClusterDescriptor::Kind::Run;
    std::size_t k = 1;
    std::size_t l = 1;
    std::vector<VertexId> explicit_vertices;

    static ClusterSpec parse(std::string_view text)
    {
        ClusterSpec spec;
        const auto colon = text.find(':');
        const std::string_view head = text.substr(0, colon);
        const std::string_view body =
            colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
        if (head == "diag" && colon == std::string_view::npos) {
            spec.kind = ClusterDescriptor::Kind::Diagonal;
        } else if (head == "run") {
            spec.kind = ClusterDescriptor::Kind::Run;
            spec.k = detail::parse_size(body, "run length");
        } else if (head == "block") {
            spec.kind = ClusterDescriptor::Kind::Block;
            const auto x = body.find('x');
            if (x == std::string_view::npos) {
                throw std::invalid_argument("block cluster must look like block:KxL");
            }
            spec.k = detail::parse_size(body.substr(0, x), "block width");
            spec.l = detail::parse_size(body.substr(x + 1), "block height");
        } else if (head == "list") {
            spec.kind = ClusterDescriptor::Kind::Explicit;
            for (auto part : detail::split(body, ',')) {
                spec.explicit_vertices.push_back(detail::parse_size(part, "vertex id"));
            }
        } else {
            throw std::invalid_argument("unknown cluster '" + std::string(text) +
                                        "' (expected run:m, block:kxl, diag or list:...)");
        }
        return spec;
    }

    std::string to_string() const
    {
        switch (kind) {
        case ClusterDescriptor::Kind::Run: return "run:" + std::to_string(k);
        case ClusterDescriptor::Kind::Block:
            return "block:" + std::to_string(k) + "x" + std::to_string(l);
        case ClusterDescriptor::Kind::Diagonal: return "diag";
        case ClusterDescriptor::Kind::Explicit: {
            std::string out = "list:";
            for (std::size_t i = 0; i < explicit_vertices.size(); ++i) {
                out += (i ? "," : "") + std::to_string(explicit_vertices[i]);
            }
            return out;
        }
        }
        return {};
    }

    /// File-name friendly label.
    std::string tag() const
    {
        if (kind == ClusterDescriptor::Kind::Explicit) return "list";
        return ClusterDescriptor{kind, k, l, 0}.tag();
    }

    MarkedSet make(const LatticeGeometry& geometry, VertexId anchor = 0) const
    {
        switch (kind) {
        case ClusterDescriptor::Kind::Run: return make_marked_run(geometry, k, anchor);
        case ClusterDescriptor::Kind::Block: return make_marked_block(geometry, k, l, anchor);
        case ClusterDescriptor::Kind::Diagonal: return make_marked_diagonal(geometry);
        case ClusterDescriptor::Kind::Explicit:
            if (explicit_vertices.empty()) {
                throw std::invalid_argument("explicit cluster list is empty");
            }
            return MarkedSet(geometry, explicit_vertices, {});
        }
        throw std::logic_error("unknown cluster kind");
    }
};

// ---------------------------------------------------------------------------
// run rules

/// Self-loop weight as a constant or as c/N.
struct LoopWeightRule {
    double coefficient = 0.01;
    bool per_vertex = false;

    static LoopWeightRule parse(std::string_view text)
    {
        LoopWeightRule rule;
        if (text.size() > 2 && text.substr(text.size() - 2) == "/N") {
            rule.per_vertex = true;
            text.remove_suffix(2);
        }
        rule.coefficient = detail::parse_double(text, "loop weight");
        if (!(rule.coefficient > 0.0)) {
            throw std::invalid_argument("loop weight must be positive");
        }
        return rule;
    }

    double value(const LatticeGeometry& geometry) const
    {
        return per_vertex ? coefficient / static_cast<double>(geometry.vertex_count())
                          : coefficient;
    }

    std::string to_string() const
    {
        return detail::shortest(coefficient) + (per_vertex ? "/N" : "");
    }
};

/// Either a fixed step count or `multiplier` times the expected scaling.
struct HorizonRule {
    double multiplier = 20.0;
    std::optional<std::size_t> fixed;

    std::size_t steps(const LatticeGeometry& geometry, std::size_t marked_count) const
    {
        if (fixed) return *fixed;
        return default_horizon(geometry, marked_count, multiplier);
    }
};

struct RunOptions {
    HorizonRule horizon;
    double prominence = kDefaultProminence;
    unsigned jobs = 1; // 0 = hardware concurrency
};

/// Runs fn(i) for i in [0, n) on up to `jobs` threads. fn must not throw.
template <typename Fn>
void parallel_for_index(std::size_t n, unsigned jobs, Fn&& fn)
{
    unsigned workers = jobs ? jobs : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) fn(i);
        });
    }
}

// ---------------------------------------------------------------------------
// sweeps and scaling runs

enum class RowStatus { Ok, HorizonReached, Error };

inline constexpr const char* to_string(RowStatus s)
{
    switch (s) {
    case RowStatus::Ok: return "ok";
    case RowStatus::HorizonReached: return "horizon_reached";
    case RowStatus::Error: return "error";
    }
    return "error";
}

struct SweepRow {
    double loop_weight = 0.0;
    double scaled_weight = 0.0; // N * a
    std::size_t t_peak = 0;
    double p_peak = 0.0;
    RowStatus status = RowStatus::Error;
    std::string error;
};

struct ScalingRow {
    std::size_t vertex_count = 0;
    std::size_t side = 0;
    std::size_t marked_count = 0;
    std::string cluster;
    double loop_weight = 0.0;
    std::size_t t_peak = 0;
    double p_peak = 0.0;
    RowStatus status = RowStatus::Error;
    std::string error;
};

inline RowStatus status_of(const PeakResult& r)
{
    return r.terminated_by == Termination::PeakFound ? RowStatus::Ok : RowStatus::HorizonReached;
}

/// Geometric grid of `points` values from lo to hi inclusive.
inline std::vector<double> geometric_grid(double lo, double hi, std::size_t points)
{
    if (!(lo > 0.0) || !(hi >= lo) || points == 0) {
        throw std::invalid_argument("weight grid needs 0 < lo <= hi and at least one point");
    }
    if (points == 1) return {lo};
    std::vector<double> grid(points);
    const double step = std::log(hi / lo) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        grid[i] = lo * std::exp(step * static_cast<double>(i));
    }
    grid.back() = hi;
    return grid;
}

/// Point count for `per_decade` points per decade between lo and hi.
inline std::size_t grid_points_per_decade(double lo, double hi, double per_decade = 25.0)
{
    return static_cast<std::size_t>(std::lround(per_decade * std::log10(hi / lo))) + 1;
}

inline std::vector<SweepRow> sweep_loop_weight(const LatticeGeometry& geometry, CoinFamily family,
                                               const MarkedSet& marked,
                                               std::span<const double> weights,
                                               const RunOptions& options = {})
{
    if (weights.empty()) {
        throw std::invalid_argument("weight grid is empty");
    }
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!(weights[i] > 0.0) || !std::isfinite(weights[i])) {
            throw std::invalid_argument("loop weights must be positive and finite");
        }
        if (i > 0 && weights[i] < weights[i - 1]) {
            throw std::invalid_argument("loop weights must be sorted ascending");
        }
    }
    const std::size_t horizon = options.horizon.steps(geometry, marked.size());
    const auto n = static_cast<double>(geometry.vertex_count());
    std::vector<SweepRow> rows(weights.size());
    parallel_for_index(weights.size(), options.jobs, [&](std::size_t i) {
        SweepRow& row = rows[i];
        row.loop_weight = weights[i];
        row.scaled_weight = n * weights[i];
        try {
            const auto peak = run_to_first_peak(geometry, CoinSpec(family, weights[i]), marked,
                                                horizon, options.prominence);
            row.t_peak = peak.t_peak;
            row.p_peak = peak.p_peak;
            row.status = status_of(peak);
        } catch (const std::exception& e) {
            row.status = RowStatus::Error;
            row.error = e.what();
        }
    });
    return rows;
}

/// One row per lattice size. `sizes` are N for 1D and the side length for 2D.
inline std::vector<ScalingRow> scaling_run(CoinFamily family, int dimension,
                                           std::span<const std::size_t> sizes,
                                           const ClusterSpec& cluster,
                                           const LoopWeightRule& loop_weight,
                                           const RunOptions& options = {}, VertexId anchor = 0)
{
    if (sizes.empty()) {
        throw std::invalid_argument("size list is empty");
    }
    for (std::size_t i = 1; i < sizes.size(); ++i) {
        if (sizes[i] < sizes[i - 1]) {
            throw std::invalid_argument("sizes must be sorted ascending");
        }
    }
    std::vector<ScalingRow> rows(sizes.size());
    parallel_for_index(sizes.size(), options.jobs, [&](std::size_t i) {
        ScalingRow& row = rows[i];
        row.side = sizes[i];
        row.cluster = cluster.to_string();
        try {
            const LatticeGeometry geometry(dimension, sizes[i]);
            row.vertex_count = geometry.vertex_count();
            const MarkedSet marked = cluster.make(geometry, anchor);
            row.marked_count = marked.size();
            row.loop_weight = loop_weight.value(geometry);
            const auto peak = run_to_first_peak(geometry, CoinSpec(family, row.loop_weight),
                                                marked, options.horizon.steps(geometry, marked.size()),
                                                options.prominence);
            row.t_peak = peak.t_peak;
            row.p_peak = peak.p_peak;
            row.status = status_of(peak);
        } catch (const std::exception& e) {
            row.status = RowStatus::Error;
            row.error = e.what();
        }
    });
    return rows;
}

// ---------------------------------------------------------------------------
// scaling fits

enum class ScalingModel { PowerLaw, LinearOverM, SqrtLog };

inline constexpr const char* to_string(ScalingModel m)
{
    switch (m) {
    case ScalingModel::PowerLaw: return "power_law";
    case ScalingModel::LinearOverM: return "linear_over_M";
    case ScalingModel::SqrtLog: return "sqrt_log";
    }
    return "?";
}

inline ScalingModel parse_scaling_model(std::string_view text)
{
    if (text == "power_law") return ScalingModel::PowerLaw;
    if (text == "linear_over_M") return ScalingModel::LinearOverM;
    if (text == "sqrt_log") return ScalingModel::SqrtLog;
    throw std::invalid_argument("unknown fit model '" + std::string(text) +
                                "' (expected power_law, linear_over_M or sqrt_log)");
}

/// One (N/M, t) observation.
struct ScalePoint {
    double ratio = 0.0; // N / M
    double time = 0.0;
};

/// c and beta for power_law (t = c * (N/M)^beta); for the ratio models c is
/// the mean of t / f(N/M). ratio_min/ratio_max bound t / f(N/M), where f is
/// (N/M)^beta for the power law.
/// residual is the RMS of log(t) - log(model) in every case.
struct FitResult {
    ScalingModel model = ScalingModel::PowerLaw;
    double c = 0.0;
    double beta = 1.0;
    double residual = 0.0;
    double ratio_min = 0.0;
    double ratio_max = 0.0;
    std::size_t points = 0;

    /// max/min - 1 of t / f(N/M).
    double spread() const { return ratio_max / ratio_min - 1.0; }
};

inline double model_scale(ScalingModel model, double ratio)
{
    switch (model) {
    case ScalingModel::PowerLaw:
    case ScalingModel::LinearOverM: return ratio;
    case ScalingModel::SqrtLog: return std::sqrt(ratio * std::log(ratio));
    }
    return ratio;
}

inline FitResult fit_scaling(std::span<const ScalePoint> points, ScalingModel model)
{
    if (points.size() < 3) {
        throw std::invalid_argument("scaling fit needs at least 3 rows, got " +
                                    std::to_string(points.size()));
    }
    for (const auto& p : points) {
        if (!(p.time > 0.0) || !(p.ratio > 0.0)) {
            throw std::invalid_argument("scaling fit needs positive times and N/M");
        }
        if (model == ScalingModel::SqrtLog && !(p.ratio > 1.0)) {
            throw std::invalid_argument("sqrt_log model needs N/M > 1");
        }
    }
    const auto n = static_cast<double>(points.size());
    FitResult fit;
    fit.model = model;
    fit.points = points.size();

    std::vector<double> ratios;
    if (model == ScalingModel::PowerLaw) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (const auto& p : points) {
            const double x = std::log(p.ratio);
            const double y = std::log(p.time);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double denom = n * sxx - sx * sx;
        if (!(std::abs(denom) > 0.0)) {
            throw std::invalid_argument("power-law fit needs at least two distinct N/M");
        }
        fit.beta = (n * sxy - sx * sy) / denom;
        const double intercept = (sy - fit.beta * sx) / n;
        fit.c = std::exp(intercept);
        double ss = 0;
        for (const auto& p : points) {
            const double r = std::log(p.time) - (intercept + fit.beta * std::log(p.ratio));
            ss += r * r;
        }
        fit.residual = std::sqrt(ss / n);
        for (const auto& p : points) ratios.push_back(p.time / std::pow(p.ratio, fit.beta));
    } else {
        for (const auto& p : points) ratios.push_back(p.time / model_scale(model, p.ratio));
        double sum = 0;
        for (double r : ratios) sum += r;
        fit.c = sum / n;
        double ss = 0;
        for (double r : ratios) {
            const double d = std::log(r / fit.c);
            ss += d * d;
        }
        fit.residual = std::sqrt(ss / n);
    }
    fit.ratio_min = *std::min_element(ratios.begin(), ratios.end());
    fit.ratio_max = *std::max_element(ratios.begin(), ratios.end());
    return fit;
}

/// Fit over the non-error rows of a scaling run.
inline FitResult fit_scaling(std::span<const ScalingRow> rows, ScalingModel model)
{
    std::vector<ScalePoint> points;
    for (const auto& row : rows) {
        if (row.status == RowStatus::Error) continue;
        points.push_back({static_cast<double>(row.vertex_count) /
                              static_cast<double>(row.marked_count),
                          static_cast<double>(row.t_peak)});
    }
    return fit_scaling(std::span<const ScalePoint>(points), model);
}

} // namespace lackwalk
