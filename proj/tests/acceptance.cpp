// Acceptance suite. One PASS/FAIL line per criterion; exits nonzero if any
// criterion fails.

#include "lackwalk/dense.hpp"
#include "lackwalk/experiments.hpp"
#include "lackwalk/io.hpp"
#include "lackwalk/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

using namespace lackwalk;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::string problems;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            problems += (problems.empty() ? "" : "; ") + what;
        }
    }
};

std::string fmt(const char* format, auto... args)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

int failures = 0;

void criterion(int id, const char* name, double budget_seconds, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = body();
    } catch (const std::exception& e) {
        outcome.require(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0) {
        outcome.require(seconds < budget_seconds,
                        fmt("runtime %.1fs exceeds %.0fs", seconds, budget_seconds));
    }
    if (!outcome.pass) ++failures;
    std::printf("[%s] %d %s (%.2fs): %s%s%s\n", outcome.pass ? "PASS" : "FAIL", id, name, seconds,
                outcome.detail.c_str(), outcome.problems.empty() ? "" : " | failed: ",
                outcome.problems.c_str());
    std::fflush(stdout);
}

MarkedSet random_marked(const LatticeGeometry& g, std::mt19937_64& rng)
{
    std::vector<VertexId> all(g.vertex_count());
    std::iota(all.begin(), all.end(), VertexId{0});
    std::shuffle(all.begin(), all.end(), rng);
    const std::size_t m = 1 + rng() % std::max<std::size_t>(1, g.vertex_count() / 3);
    all.resize(m);
    return MarkedSet(g, all);
}

double max_peak(const ProbabilityTrace& t)
{
    return *std::max_element(t.values.begin(), t.values.end());
}

MarkedSet cluster(const LatticeGeometry& g, const std::string& spec)
{
    return ClusterSpec::parse(spec).make(g);
}

} // namespace

int main()
{
    criterion(1, "oracle equivalence: sparse vs dense, 100 steps", 10, [] {
        Outcome o;
        std::mt19937_64 rng(2024);
        std::uniform_real_distribution<double> weight(0.01, 2.0);
        double worst = 0;
        int cases = 0;
        std::vector<LatticeGeometry> geometries{build_lattice(1, 4), build_lattice(1, 8),
                                                build_lattice(1, 16), build_lattice(2, 3),
                                                build_lattice(2, 4)};
        for (const auto& g : geometries) {
            for (auto family : {CoinFamily::G, CoinFamily::AKR, CoinFamily::SKW}) {
                for (int rep = 0; rep < 3; ++rep) {
                    const CoinSpec spec(family, weight(rng));
                    const MarkedSet marked = random_marked(g, rng);
                    const auto u = dense::build_dense_step(g, spec, marked);
                    auto sparse = build_initial_state(g, spec);
                    const auto reference = dense::dense_evolve(u, sparse, 100);
                    Stepper stepper(g, spec, marked);
                    for (int t = 0; t < 100; ++t) stepper(sparse);
                    for (std::size_t i = 0; i < sparse.size(); ++i) {
                        worst = std::max(worst, std::abs(sparse.amplitudes()[i] -
                                                         reference.amplitudes()[i]));
                    }
                    ++cases;
                }
            }
        }
        o.detail = fmt("%d cases, max |diff| = %.2e (tol 1e-10)", cases, worst);
        o.require(worst <= 1e-10, "max-norm above tolerance");
        return o;
    });

    criterion(2, "unitarity: norm drift over 1e4 steps", 30, [] {
        Outcome o;
        const std::pair<LatticeGeometry, double> configs[] = {{build_lattice(1, 1000), 0.1 / 1000},
                                                              {build_lattice(2, 40), 0.01}};
        for (const auto& [g, a] : configs) {
            const CoinSpec spec(CoinFamily::G, a);
            Stepper stepper(g, spec, MarkedSet(g, {0}));
            auto s = build_initial_state(g, spec);
            double drift = 0;
            for (int t = 0; t < 10000; ++t) {
                stepper(s);
                drift = std::max(drift, std::abs(s.squared_norm() - 1.0));
            }
            o.detail += fmt("%dD N=%zu drift %.2e; ", g.dimension(), g.vertex_count(), drift);
            o.require(drift < 1e-10, "drift above 1e-10");
        }
        return o;
    });

    criterion(3, "involutions: shift^2, oracles^2 exact; diffusion^2 within 1e-14", 0, [] {
        Outcome o;
        double diffusion_worst = 0;
        std::size_t exact_failures = 0, inputs = 0;
        for (const auto& g : {build_lattice(1, 2), build_lattice(1, 3), build_lattice(1, 4),
                              build_lattice(1, 8), build_lattice(2, 2), build_lattice(2, 3),
                              build_lattice(2, 4)}) {
            std::vector<VertexId> half(g.vertex_count() / 2 + 1);
            std::iota(half.begin(), half.end(), VertexId{0});
            const MarkedSet marked(g, half);
            const CoinSpec spec(CoinFamily::G, 0.29);
            for (std::size_t i = 0; i < g.state_size(); ++i) {
                WalkState e(g);
                e.amplitudes()[i] = 1.0;
                auto s = e;
                apply_flipflop_shift(s);
                apply_flipflop_shift(s);
                exact_failures += !(s == e);
                s = e;
                apply_loop_oracle(s, marked);
                apply_loop_oracle(s, marked);
                exact_failures += !(s == e);
                s = e;
                apply_akr_oracle(s, marked);
                apply_akr_oracle(s, marked);
                exact_failures += !(s == e);
                s = e;
                apply_grover_diffusion(s, spec);
                apply_grover_diffusion(s, spec);
                for (std::size_t k = 0; k < s.size(); ++k) {
                    diffusion_worst =
                        std::max(diffusion_worst, std::abs(s.amplitudes()[k] - e.amplitudes()[k]));
                }
                ++inputs;
            }
        }
        o.detail = fmt("%zu basis inputs, exact mismatches %zu, diffusion^2 max err %.2e", inputs,
                       exact_failures, diffusion_worst);
        o.require(exact_failures == 0, "exact involution broken");
        o.require(diffusion_worst <= 1e-14, "diffusion^2 above 1e-14");
        return o;
    });

    criterion(4, "1D headline: N=1000, M=1, a=0.1/N", 60, [] {
        Outcome o;
        const auto g = build_lattice(1, 1000);
        const auto marked = make_marked_run(g, 1);
        const std::size_t horizon = default_horizon(g, 1);
        const auto loop = run_to_first_peak(g, CoinSpec(CoinFamily::G, 0.1 / 1000), marked, horizon);
        const auto akr = run_to_first_peak(g, CoinSpec(CoinFamily::AKR, 0.1 / 1000), marked, horizon);
        o.detail = fmt("G p=%.4f at t=%zu (need >= 0.95); AKR p=%.4f at t=%zu (need <= 0.80)",
                       loop.p_peak, loop.t_peak, akr.p_peak, akr.t_peak);
        o.require(loop.terminated_by == Termination::PeakFound && loop.p_peak >= 0.95,
                  "G peak too low");
        o.require(akr.p_peak <= 0.80, "AKR peak too high");
        return o;
    });

    criterion(5, "1D scaling: sizes 200..1000, M in {1,2,5,8}, a=0.1/N", 300, [] {
        Outcome o;
        const std::vector<std::size_t> sizes{200, 400, 600, 800, 1000};
        for (const char* spec : {"run:1", "run:2", "run:5", "run:8"}) {
            const auto rows = scaling_run(CoinFamily::G, 1, sizes, ClusterSpec::parse(spec),
                                          LoopWeightRule::parse("0.1/N"), {HorizonRule{}, 0.05, 0});
            double p_min = 1.0;
            for (const auto& row : rows) {
                p_min = std::min(p_min, row.p_peak);
                o.require(row.status == RowStatus::Ok && row.p_peak > 0.9,
                          fmt("%s N=%zu p=%.4f <= 0.9", spec, row.vertex_count, row.p_peak));
            }
            const auto fit = fit_scaling(std::span<const ScalingRow>(rows), ScalingModel::PowerLaw);
            o.detail += fmt("%s: min p=%.4f beta=%.4f; ", spec, p_min, fit.beta);
            o.require(fit.beta >= 0.9 && fit.beta <= 1.1, fmt("%s beta=%.4f outside [0.9,1.1]", spec, fit.beta));
        }
        return o;
    });

    criterion(6, "2D sweep shape: 40x40, a from 1e-4 to 1e-1", 600, [] {
        Outcome o;
        const auto g = build_lattice(2, 40);
        // 25 points per decade; indices 0 and 50 are a = 1e-4 and a = 1e-2
        const auto weights = geometric_grid(1e-4, 1e-1, grid_points_per_decade(1e-4, 1e-1));
        std::size_t i_small = 0, i_ref = 0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (std::abs(std::log10(weights[i]) + 4) < 1e-9) i_small = i;
            if (std::abs(std::log10(weights[i]) + 2) < 1e-9) i_ref = i;
        }
        HorizonRule horizon;
        horizon.multiplier = 200;
        for (const char* spec : {"block:1x1", "block:2x1", "block:5x5", "block:8x8", "diag"}) {
            const auto rows = sweep_loop_weight(g, CoinFamily::G, cluster(g, spec), weights,
                                                {horizon, 0.05, 0});
            const auto& small = rows[i_small];
            const auto& ref = rows[i_ref];
            const double growth = static_cast<double>(small.t_peak) / static_cast<double>(ref.t_peak);
            double best = 0, best_a = 0;
            for (const auto& row : rows) {
                if (row.loop_weight >= 0.003 && row.loop_weight <= 0.03 && row.p_peak > best) {
                    best = row.p_peak;
                    best_a = row.loop_weight;
                }
            }
            o.detail += fmt("%s: t(1e-4)/t(1e-2)=%zu/%zu=%.1f, best p=%.3f at a=%.4f; ", spec,
                            small.t_peak, ref.t_peak, growth, best, best_a);
            o.require(small.status == RowStatus::Ok && ref.status == RowStatus::Ok,
                      fmt("%s: peak not found at an endpoint", spec));
            o.require(growth >= 5.0, fmt("%s growth %.2f < 5", spec, growth));
            o.require(best >= 0.7, fmt("%s best p %.3f < 0.7", spec, best));
        }
        return o;
    });

    criterion(7, "2D scaling: sides 20..100, a=0.01, G", 1200, [] {
        Outcome o;
        const std::vector<std::size_t> sides{20, 40, 60, 80, 100};
        for (const char* spec : {"block:1x1", "block:2x1", "block:3x3", "block:6x6", "diag"}) {
            const auto rows = scaling_run(CoinFamily::G, 2, sides, ClusterSpec::parse(spec),
                                          LoopWeightRule::parse("0.01"), {HorizonRule{}, 0.05, 0});
            double p_min = 1.0;
            for (const auto& row : rows) {
                p_min = std::min(p_min, row.p_peak);
                o.require(row.status == RowStatus::Ok && row.p_peak >= 0.8,
                          fmt("%s side=%zu p=%.4f < 0.8", spec, row.side, row.p_peak));
            }
            const auto fit = fit_scaling(std::span<const ScalingRow>(rows), ScalingModel::SqrtLog);
            const double factor = fit.ratio_max / fit.ratio_min;
            o.detail += fmt("%s: min p=%.3f ratio %.2f..%.2f (x%.2f); ", spec, p_min, fit.ratio_min,
                            fit.ratio_max, factor);
            o.require(factor < 2.0, fmt("%s ratio varies x%.2f", spec, factor));
        }
        return o;
    });

    criterion(8, "AKR exceptional configurations: 32x32, a=0.01", 0, [] {
        Outcome o;
        const auto g = build_lattice(2, 32);
        for (const char* spec : {"block:2x1", "diag"}) {
            const auto marked = cluster(g, spec);
            const std::size_t horizon = default_horizon(g, marked.size());
            const auto loop = run_to_first_peak(g, CoinSpec(CoinFamily::G, 0.01), marked, horizon);
            const double akr_max = max_peak(evolve_trace(g, CoinSpec(CoinFamily::AKR, 0.01), marked, horizon));
            o.detail += fmt("%s: G p=%.4f, AKR max=%.4f over %zu steps; ", spec, loop.p_peak,
                            akr_max, horizon);
            o.require(loop.p_peak >= 0.5, fmt("%s: G below 0.5", spec));
            o.require(akr_max <= 0.2, fmt("%s: AKR max %.4f > 0.2", spec, akr_max));
        }
        return o;
    });

    criterion(9, "properties: translation covariance, p(0)=M/N, byte-identical reruns", 0, [] {
        Outcome o;
        std::mt19937_64 rng(99);

        std::size_t covariance_mismatch = 0;
        for (const auto& g : {build_lattice(1, 23), build_lattice(2, 9)}) {
            for (auto family : {CoinFamily::G, CoinFamily::AKR, CoinFamily::SKW}) {
                const CoinSpec spec(family, 0.05);
                const MarkedSet marked = random_marked(g, rng);
                const std::size_t dx = 1 + rng() % g.side();
                const std::size_t dy = g.dimension() == 2 ? rng() % g.side() : 0;
                std::vector<VertexId> moved;
                for (VertexId v : marked.vertices()) moved.push_back(g.translate(v, dx, dy));
                auto s = build_initial_state(g, spec);
                // break the uniform start so the translation is visible
                step(s, spec, marked);
                WalkState shifted(g);
                for (VertexId v = 0; v < g.vertex_count(); ++v) {
                    const auto src = s.coin_block(v);
                    std::copy(src.begin(), src.end(), shifted.coin_block(g.translate(v, dx, dy)).begin());
                }
                const MarkedSet marked_moved(g, moved);
                for (int t = 0; t < 30; ++t) {
                    step(s, spec, marked);
                    step(shifted, spec, marked_moved);
                }
                for (VertexId v = 0; v < g.vertex_count(); ++v) {
                    const auto a = s.coin_block(v);
                    const auto b = shifted.coin_block(g.translate(v, dx, dy));
                    covariance_mismatch += !std::equal(a.begin(), a.end(), b.begin());
                }
            }
        }
        o.require(covariance_mismatch == 0, "translation covariance broken");

        double worst = 0;
        for (int trial = 0; trial < 50; ++trial) {
            const int dim = 1 + trial % 2;
            const auto g = build_lattice(dim, dim == 1 ? 10 + rng() % 500 : 3 + rng() % 40);
            const MarkedSet marked = random_marked(g, rng);
            const auto s = build_initial_state(g, CoinSpec(CoinFamily::G, 1e-4 + 0.05 * trial));
            worst = std::max(worst, std::abs(success_probability(s, marked) -
                                             static_cast<double>(marked.size()) /
                                                 static_cast<double>(g.vertex_count())));
        }
        o.require(worst <= 1e-12, "initial success probability off");

        const auto g = build_lattice(2, 16);
        const auto weights = geometric_grid(0.001, 0.1, 12);
        const auto csv1 = io::sweep_csv(sweep_loop_weight(g, CoinFamily::G, make_marked_diagonal(g), weights, {HorizonRule{}, 0.05, 1}), 2);
        const auto csv2 = io::sweep_csv(sweep_loop_weight(g, CoinFamily::G, make_marked_diagonal(g), weights, {HorizonRule{}, 0.05, 4}), 2);
        const std::vector<std::size_t> sizes{50, 100, 150};
        const auto sc1 = io::scaling_csv(scaling_run(CoinFamily::G, 1, sizes, ClusterSpec::parse("run:2"), LoopWeightRule::parse("0.1/N")));
        const auto sc2 = io::scaling_csv(scaling_run(CoinFamily::G, 1, sizes, ClusterSpec::parse("run:2"), LoopWeightRule::parse("0.1/N")));
        o.require(csv1 == csv2 && sc1 == sc2, "CSV reruns differ");

        o.detail = fmt("covariance mismatches %zu, max |p(0)-M/N| %.1e over 50 configs, reruns %s",
                       covariance_mismatch, worst, (csv1 == csv2 && sc1 == sc2) ? "identical" : "differ");
        return o;
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
