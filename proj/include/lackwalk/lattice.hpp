#pragma once

// Lattice geometry, coin/vertex indexing and the walk state container.
//
// Amplitudes are stored vertex-major: the d+1 coin amplitudes of vertex 0,
// then those of vertex 1, and so on. Within a coin block the edge directions
// come first (X+, X-, then Y+, Y- in 2D) and LOOP is always last.
//
// Every operator of the lackadaisical walk (Grover diffusion, the phase
// oracles and the flip-flop shift) has real matrix elements and the initial
// state is real, so the state is a real vector for all time.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lackwalk {

using VertexId = std::size_t;

enum class CoinDirection : std::uint8_t { XPlus, XMinus, YPlus, YMinus, Loop };

inline constexpr std::string_view to_string(CoinDirection dir)
{
    switch (dir) {
    case CoinDirection::XPlus: return "X+";
    case CoinDirection::XMinus: return "X-";
    case CoinDirection::YPlus: return "Y+";
    case CoinDirection::YMinus: return "Y-";
    case CoinDirection::Loop: return "LOOP";
    }
    return "?";
}

/// The direction a flip-flop shift turns an edge direction into.
inline constexpr CoinDirection opposite(CoinDirection dir)
{
    switch (dir) {
    case CoinDirection::XPlus: return CoinDirection::XMinus;
    case CoinDirection::XMinus: return CoinDirection::XPlus;
    case CoinDirection::YPlus: return CoinDirection::YMinus;
    case CoinDirection::YMinus: return CoinDirection::YPlus;
    case CoinDirection::Loop: return CoinDirection::Loop;
    }
    return dir;
}

struct Coords {
    std::size_t x = 0;
    std::size_t y = 0;
    friend bool operator==(const Coords&, const Coords&) = default;
};

/// Periodic 1D ring or square 2D torus.
class LatticeGeometry {
public:
    LatticeGeometry(int dimension, std::size_t side) : dimension_(dimension), side_(side)
    {
        if (dimension != 1 && dimension != 2) {
            throw std::invalid_argument("dimension must be 1 or 2");
        }
        if (side < 2) {
            throw std::invalid_argument("side must be at least 2");
        }
    }

    int dimension() const noexcept { return dimension_; }
    std::size_t side() const noexcept { return side_; }
    std::size_t degree() const noexcept { return 2 * static_cast<std::size_t>(dimension_); }
    std::size_t coin_size() const noexcept { return degree() + 1; }
    std::size_t vertex_count() const noexcept { return dimension_ == 1 ? side_ : side_ * side_; }
    std::size_t state_size() const noexcept { return coin_size() * vertex_count(); }

    /// Position of `dir` inside a coin block. LOOP is the last slot.
    std::size_t coin_index(CoinDirection dir) const
    {
        if (dir == CoinDirection::Loop) {
            return degree();
        }
        const auto idx = static_cast<std::size_t>(dir);
        if (idx >= degree()) {
            throw std::invalid_argument("coin direction " + std::string(to_string(dir)) +
                                        " does not exist on a 1D lattice");
        }
        return idx;
    }

    CoinDirection direction(std::size_t coin_slot) const
    {
        if (coin_slot == degree()) {
            return CoinDirection::Loop;
        }
        if (coin_slot > degree()) {
            throw std::out_of_range("coin slot out of range");
        }
        return static_cast<CoinDirection>(coin_slot);
    }

    VertexId index(Coords c) const
    {
        if (c.x >= side_ || c.y >= (dimension_ == 1 ? 1 : side_)) {
            throw std::out_of_range("coordinates outside the lattice");
        }
        return c.y * side_ + c.x;
    }

    Coords coords(VertexId v) const
    {
        check_vertex(v);
        return {v % side_, v / side_};
    }

    void check_vertex(VertexId v) const
    {
        if (v >= vertex_count()) {
            throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " +
                                    std::to_string(vertex_count()) + ")");
        }
    }

    /// Periodic neighbor of `v` along an edge direction. LOOP is rejected:
    /// the self-loop is handled by the shift directly.
    VertexId neighbor(VertexId v, CoinDirection dir) const
    {
        check_vertex(v);
        if (dir == CoinDirection::Loop) {
            throw std::invalid_argument("LOOP has no neighbor");
        }
        (void)coin_index(dir);
        const std::size_t x = v % side_;
        const std::size_t row = v - x;
        switch (dir) {
        case CoinDirection::XPlus: return row + (x + 1 == side_ ? 0 : x + 1);
        case CoinDirection::XMinus: return row + (x == 0 ? side_ - 1 : x - 1);
        case CoinDirection::YPlus: return (v + side_) % vertex_count();
        case CoinDirection::YMinus: return (v + vertex_count() - side_) % vertex_count();
        case CoinDirection::Loop: break;
        }
        return v;
    }

    /// Vertex reached by translating `v` by (dx, dy) with periodic wrap.
    VertexId translate(VertexId v, std::size_t dx, std::size_t dy) const
    {
        const Coords c = coords(v);
        if (dimension_ == 1) {
            return (c.x + dx) % side_;
        }
        return index({(c.x + dx) % side_, (c.y + dy) % side_});
    }

    friend bool operator==(const LatticeGeometry&, const LatticeGeometry&) = default;

private:
    int dimension_;
    std::size_t side_;
};

inline LatticeGeometry build_lattice(int dimension, std::size_t side)
{
    return LatticeGeometry(dimension, side);
}

enum class CoinFamily { G, AKR, SKW };

inline constexpr std::string_view to_string(CoinFamily family)
{
    switch (family) {
    case CoinFamily::G: return "g";
    case CoinFamily::AKR: return "akr";
    case CoinFamily::SKW: return "skw";
    }
    return "?";
}

inline CoinFamily parse_coin_family(std::string_view text)
{
    if (text == "g" || text == "G") return CoinFamily::G;
    if (text == "akr" || text == "AKR") return CoinFamily::AKR;
    if (text == "skw" || text == "SKW") return CoinFamily::SKW;
    throw std::invalid_argument("unknown coin family '" + std::string(text) +
                                "' (expected g, akr or skw)");
}

/// Coin family plus self-loop weight a.
class CoinSpec {
public:
    CoinSpec(CoinFamily family, double loop_weight) : family_(family), loop_weight_(loop_weight)
    {
        if (!std::isfinite(loop_weight) || loop_weight <= 0.0) {
            throw std::invalid_argument("loop weight must be positive and finite");
        }
    }

    CoinFamily family() const noexcept { return family_; }
    double loop_weight() const noexcept { return loop_weight_; }

    /// Normalized weighted uniform coin state: 1 on every edge slot and
    /// sqrt(a) on LOOP, scaled by 1/sqrt(d + a).
    std::vector<double> coin_state(const LatticeGeometry& geometry) const
    {
        const auto d = static_cast<double>(geometry.degree());
        const double scale = 1.0 / std::sqrt(d + loop_weight_);
        std::vector<double> psi(geometry.coin_size(), scale);
        psi.back() = std::sqrt(loop_weight_) * scale;
        return psi;
    }

private:
    CoinFamily family_;
    double loop_weight_;
};

/// Real amplitude vector over coin x vertex space.
class WalkState {
public:
    explicit WalkState(const LatticeGeometry& geometry)
        : geometry_(geometry), amplitudes_(geometry.state_size(), 0.0)
    {
    }

    WalkState(const LatticeGeometry& geometry, std::vector<double> amplitudes)
        : geometry_(geometry), amplitudes_(std::move(amplitudes))
    {
        if (amplitudes_.size() != geometry_.state_size()) {
            throw std::invalid_argument("amplitude count does not match (d+1)*N");
        }
    }

    const LatticeGeometry& geometry() const noexcept { return geometry_; }

    std::span<double> amplitudes() noexcept { return amplitudes_; }
    std::span<const double> amplitudes() const noexcept { return amplitudes_; }
    std::size_t size() const noexcept { return amplitudes_.size(); }

    std::span<double> coin_block(VertexId v)
    {
        return std::span<double>(amplitudes_).subspan(v * geometry_.coin_size(),
                                                      geometry_.coin_size());
    }
    std::span<const double> coin_block(VertexId v) const
    {
        return std::span<const double>(amplitudes_).subspan(v * geometry_.coin_size(),
                                                            geometry_.coin_size());
    }

    double& at(CoinDirection dir, VertexId v)
    {
        return amplitudes_[v * geometry_.coin_size() + geometry_.coin_index(dir)];
    }
    double at(CoinDirection dir, VertexId v) const
    {
        return amplitudes_[v * geometry_.coin_size() + geometry_.coin_index(dir)];
    }

    double squared_norm() const noexcept
    {
        double sum = 0.0;
        for (double x : amplitudes_) {
            sum += x * x;
        }
        return sum;
    }

    /// Probability of finding the walker at `v`, summed over the coin block.
    double vertex_probability(VertexId v) const
    {
        double p = 0.0;
        for (double x : coin_block(v)) {
            p += x * x;
        }
        return p;
    }

    void swap_amplitudes(std::vector<double>& other) noexcept { amplitudes_.swap(other); }

    friend bool operator==(const WalkState&, const WalkState&) = default;

private:
    LatticeGeometry geometry_;
    std::vector<double> amplitudes_;
};

/// Uniform start: every vertex carries the weighted coin state, scaled by 1/sqrt(N).
inline WalkState build_initial_state(const LatticeGeometry& geometry, const CoinSpec& spec)
{
    const std::vector<double> psi = spec.coin_state(geometry);
    const double vertex_scale = 1.0 / std::sqrt(static_cast<double>(geometry.vertex_count()));
    WalkState state(geometry);
    for (VertexId v = 0; v < geometry.vertex_count(); ++v) {
        auto block = state.coin_block(v);
        for (std::size_t c = 0; c < block.size(); ++c) {
            block[c] = psi[c] * vertex_scale;
        }
    }
    return state;
}

} // namespace lackwalk
