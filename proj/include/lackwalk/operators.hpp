#pragma once

// Oracles, coins and the flip-flop shift.
//
// All operators mutate a WalkState in place. The coin-space operators touch
// only the coin blocks they are defined on; the shift is a permutation that
// reads from the current buffer and writes into a scratch buffer which is then
// swapped in.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lackwalk/lattice.hpp"

namespace lackwalk {

/// How a marked set was generated. Kept for reporting only.
struct ClusterDescriptor {
    enum class Kind { Block, Diagonal, Run, Explicit };
    Kind kind = Kind::Explicit;
    std::size_t k = 0; // block width, or run length
    std::size_t l = 0; // block height
    VertexId anchor = 0;

    std::string tag() const
    {
        switch (kind) {
        case Kind::Block: return "block" + std::to_string(k) + "x" + std::to_string(l);
        case Kind::Diagonal: return "diag";
        case Kind::Run: return "run" + std::to_string(k);
        case Kind::Explicit: return "list";
        }
        return "list";
    }
};

/// Distinct marked vertices in generation order.
class MarkedSet {
public:
    MarkedSet() = default;

    MarkedSet(const LatticeGeometry& geometry, std::vector<VertexId> vertices,
              ClusterDescriptor provenance = {})
        : vertices_(std::move(vertices)), provenance_(provenance)
    {
        for (VertexId v : vertices_) {
            geometry.check_vertex(v);
        }
        std::vector<VertexId> sorted = vertices_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw std::invalid_argument("marked vertices must be distinct");
        }
    }

    const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    bool empty() const noexcept { return vertices_.empty(); }
    const ClusterDescriptor& provenance() const noexcept { return provenance_; }

    /// Per-vertex membership flags of length N.
    std::vector<char> mask(const LatticeGeometry& geometry) const
    {
        std::vector<char> flags(geometry.vertex_count(), 0);
        for (VertexId v : vertices_) {
            geometry.check_vertex(v);
            flags[v] = 1;
        }
        return flags;
    }

private:
    std::vector<VertexId> vertices_;
    ClusterDescriptor provenance_;
};

namespace detail {

inline void check_marked(const WalkState& state, const MarkedSet& marked)
{
    for (VertexId v : marked.vertices()) {
        state.geometry().check_vertex(v);
    }
}

inline void reflect_block(std::span<double> block, std::span<const double> axis)
{
    double overlap = 0.0;
    for (std::size_t c = 0; c < block.size(); ++c) {
        overlap += axis[c] * block[c];
    }
    const double twice = 2.0 * overlap;
    for (std::size_t c = 0; c < block.size(); ++c) {
        block[c] = twice * axis[c] - block[c];
    }
}

} // namespace detail

/// Negates the LOOP amplitude at every marked vertex.
inline void apply_loop_oracle(WalkState& state, const MarkedSet& marked)
{
    detail::check_marked(state, marked);
    const std::size_t loop = state.geometry().degree();
    for (VertexId v : marked.vertices()) {
        auto block = state.coin_block(v);
        block[loop] = -block[loop];
    }
}

/// Negates the whole coin block at every marked vertex.
inline void apply_akr_oracle(WalkState& state, const MarkedSet& marked)
{
    detail::check_marked(state, marked);
    for (VertexId v : marked.vertices()) {
        for (double& x : state.coin_block(v)) {
            x = -x;
        }
    }
}

/// Grover diffusion 2|psi_c><psi_c| - I on every coin block.
inline void apply_grover_diffusion(WalkState& state, std::span<const double> coin_state)
{
    const auto& geometry = state.geometry();
    if (coin_state.size() != geometry.coin_size()) {
        throw std::invalid_argument("coin state dimension does not match d+1");
    }
    for (VertexId v = 0; v < geometry.vertex_count(); ++v) {
        detail::reflect_block(state.coin_block(v), coin_state);
    }
}

inline void apply_grover_diffusion(WalkState& state, const CoinSpec& spec)
{
    const auto psi = spec.coin_state(state.geometry());
    apply_grover_diffusion(state, psi);
}

/// Diffusion at unmarked vertices, -I at marked vertices.
inline void apply_skw_coin(WalkState& state, std::span<const double> coin_state,
                           std::span<const char> marked_mask)
{
    const auto& geometry = state.geometry();
    if (coin_state.size() != geometry.coin_size() ||
        marked_mask.size() != geometry.vertex_count()) {
        throw std::invalid_argument("coin state or mask does not match the lattice");
    }
    for (VertexId v = 0; v < geometry.vertex_count(); ++v) {
        auto block = state.coin_block(v);
        if (marked_mask[v]) {
            for (double& x : block) {
                x = -x;
            }
        } else {
            detail::reflect_block(block, coin_state);
        }
    }
}

inline void apply_skw_coin(WalkState& state, const CoinSpec& spec, const MarkedSet& marked)
{
    detail::check_marked(state, marked);
    const auto psi = spec.coin_state(state.geometry());
    const auto mask = marked.mask(state.geometry());
    apply_skw_coin(state, psi, mask);
}

/// Flip-flop shift: (X+, v) -> (X-, v+x), (X-, v) -> (X+, v-x), likewise for
/// Y, and LOOP stays. `scratch` is resized as needed and ends up holding the
/// previous amplitudes.
inline void apply_flipflop_shift(WalkState& state, std::vector<double>& scratch)
{
    const auto& geometry = state.geometry();
    const std::size_t side = geometry.side();
    const std::size_t n = geometry.vertex_count();
    const std::size_t cs = geometry.coin_size();
    const std::size_t loop = geometry.degree();
    scratch.resize(state.size());
    const std::span<const double> src = state.amplitudes();

    for (VertexId v = 0; v < n; ++v) {
        const std::size_t x = v % side;
        const std::size_t row = v - x;
        const VertexId right = row + (x + 1 == side ? 0 : x + 1);
        const VertexId left = row + (x == 0 ? side - 1 : x - 1);
        const double* in = src.data() + v * cs;
        scratch[right * cs + 1] = in[0];
        scratch[left * cs + 0] = in[1];
        if (geometry.dimension() == 2) {
            const VertexId up = v + side >= n ? v + side - n : v + side;
            const VertexId down = v < side ? v + n - side : v - side;
            scratch[up * cs + 3] = in[2];
            scratch[down * cs + 2] = in[3];
        }
        scratch[v * cs + loop] = in[loop];
    }
    state.swap_amplitudes(scratch);
}

inline void apply_flipflop_shift(WalkState& state)
{
    std::vector<double> scratch;
    apply_flipflop_shift(state, scratch);
}

/// One application of U = S * C for a fixed configuration. Holds the
/// precomputed coin state, marked mask and shift buffer so repeated steps do
/// not allocate.
class Stepper {
public:
    Stepper(const LatticeGeometry& geometry, const CoinSpec& spec, MarkedSet marked)
        : geometry_(geometry),
          spec_(spec),
          marked_(std::move(marked)),
          coin_state_(spec.coin_state(geometry)),
          mask_(marked_.mask(geometry))
    {
        if (marked_.empty()) {
            throw std::invalid_argument("search needs at least one marked vertex");
        }
    }

    const LatticeGeometry& geometry() const noexcept { return geometry_; }
    const CoinSpec& spec() const noexcept { return spec_; }
    const MarkedSet& marked() const noexcept { return marked_; }
    std::span<const double> coin_state() const noexcept { return coin_state_; }

    void operator()(WalkState& state)
    {
        if (!(state.geometry() == geometry_)) {
            throw std::invalid_argument("state geometry differs from the stepper's");
        }
        switch (spec_.family()) {
        case CoinFamily::G:
            apply_loop_oracle(state, marked_);
            apply_grover_diffusion(state, coin_state_);
            break;
        case CoinFamily::AKR:
            apply_akr_oracle(state, marked_);
            apply_grover_diffusion(state, coin_state_);
            break;
        case CoinFamily::SKW:
            apply_skw_coin(state, coin_state_, mask_);
            break;
        }
        apply_flipflop_shift(state, scratch_);
    }

private:
    LatticeGeometry geometry_;
    CoinSpec spec_;
    MarkedSet marked_;
    std::vector<double> coin_state_;
    std::vector<char> mask_;
    std::vector<double> scratch_;
};

/// Single evolution step; oracle first, then diffusion, then shift.
inline void step(WalkState& state, const CoinSpec& spec, const MarkedSet& marked)
{
    Stepper stepper(state.geometry(), spec, marked);
    stepper(state);
}

} // namespace lackwalk
