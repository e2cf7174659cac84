#pragma once

// Evolution loop, success-probability traces and first-peak detection.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lackwalk/lattice.hpp"
#include "lackwalk/operators.hpp"

namespace lackwalk {

inline constexpr double kDefaultProminence = 0.05;

/// Total probability on marked vertices, all coin slots (LOOP included).
inline double success_probability(const WalkState& state, const MarkedSet& marked)
{
    double p = 0.0;
    for (VertexId v : marked.vertices()) {
        p += state.vertex_probability(v);
    }
    return p;
}

struct ProbabilityTrace {
    std::vector<double> values; // p(t) for t = 0..T
    LatticeGeometry geometry;
    CoinSpec spec;
    MarkedSet marked;
};

enum class Termination { PeakFound, HorizonReached };

inline constexpr const char* to_string(Termination t)
{
    return t == Termination::PeakFound ? "peak_found" : "horizon_reached";
}

struct PeakResult {
    std::size_t t_peak = 0;
    double p_peak = 0.0;
    Termination terminated_by = Termination::HorizonReached;
};

inline ProbabilityTrace evolve_trace(const LatticeGeometry& geometry, const CoinSpec& spec,
                                     const MarkedSet& marked, std::size_t max_steps)
{
    Stepper stepper(geometry, spec, marked);
    WalkState state = build_initial_state(geometry, spec);
    ProbabilityTrace trace{{}, geometry, spec, marked};
    trace.values.reserve(max_steps + 1);
    trace.values.push_back(success_probability(state, marked));
    for (std::size_t t = 0; t < max_steps; ++t) {
        stepper(state);
        trace.values.push_back(success_probability(state, marked));
    }
    return trace;
}

namespace detail {

inline bool is_first_peak(std::span<const double> p, std::size_t t, double prominence)
{
    return p[t] >= p[t - 1] && p[t] > p[t + 1] && p[t] - p[0] >= prominence;
}

} // namespace detail

/// Smallest t with p(t) >= p(t-1), p(t) > p(t+1) and p(t) - p(0) >= prominence.
/// Falls back to the trace maximum when no such t exists.
inline PeakResult find_first_peak(std::span<const double> values,
                                  double min_prominence = kDefaultProminence)
{
    if (values.size() < 3) {
        throw std::invalid_argument("peak detection needs a trace of at least 3 values");
    }
    if (!(min_prominence >= 0.0 && min_prominence < 1.0)) {
        throw std::invalid_argument("prominence must lie in [0, 1)");
    }
    for (std::size_t t = 1; t + 1 < values.size(); ++t) {
        if (detail::is_first_peak(values, t, min_prominence)) {
            return {t, values[t], Termination::PeakFound};
        }
    }
    const auto it = std::max_element(values.begin(), values.end());
    return {static_cast<std::size_t>(it - values.begin()), *it, Termination::HorizonReached};
}

inline PeakResult find_first_peak(const ProbabilityTrace& trace,
                                  double min_prominence = kDefaultProminence)
{
    return find_first_peak(trace.values, min_prominence);
}

/// Evolves until the first peak is confirmed (one step past it) or the
/// horizon is reached. Gives the same answer as find_first_peak on the full
/// trace of length horizon+1 without computing the tail.
inline PeakResult run_to_first_peak(const LatticeGeometry& geometry, const CoinSpec& spec,
                                    const MarkedSet& marked, std::size_t horizon,
                                    double min_prominence = kDefaultProminence,
                                    std::vector<double>* trace_out = nullptr)
{
    if (horizon < 2) {
        throw std::invalid_argument("horizon must be at least 2 steps");
    }
    if (!(min_prominence >= 0.0 && min_prominence < 1.0)) {
        throw std::invalid_argument("prominence must lie in [0, 1)");
    }
    Stepper stepper(geometry, spec, marked);
    WalkState state = build_initial_state(geometry, spec);
    std::vector<double> local;
    std::vector<double>& p = trace_out ? *trace_out : local;
    p.clear();
    p.push_back(success_probability(state, marked));
    for (std::size_t t = 0; t < horizon; ++t) {
        stepper(state);
        p.push_back(success_probability(state, marked));
        const std::size_t cand = p.size() - 2;
        if (cand >= 1 && detail::is_first_peak(p, cand, min_prominence)) {
            return {cand, p[cand], Termination::PeakFound};
        }
    }
    return find_first_peak(p, min_prominence);
}

/// Default horizons: 20 N/M in 1D, 20 sqrt((N/M) ln(N/M)) in 2D.
inline std::size_t default_horizon(const LatticeGeometry& geometry, std::size_t marked_count,
                                   double multiplier = 20.0)
{
    if (marked_count == 0) {
        throw std::invalid_argument("marked set is empty");
    }
    const double ratio =
        static_cast<double>(geometry.vertex_count()) / static_cast<double>(marked_count);
    double scale = 0.0;
    if (geometry.dimension() == 1) {
        scale = std::ceil(ratio);
    } else {
        scale = std::ceil(std::sqrt(ratio * std::log(std::max(ratio, 1.0))));
    }
    return std::max<std::size_t>(static_cast<std::size_t>(multiplier * std::max(scale, 1.0)), 2);
}

} // namespace lackwalk
