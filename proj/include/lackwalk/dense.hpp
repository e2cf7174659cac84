#pragma once

// Dense reference evolution for small instances.
//
// The step matrix is assembled from explicit tensor products of coin-space and
// vertex-space matrices, independently of the block kernels in operators.hpp,
// so the two can be compared against each other. Basis index of |c>|v> is
// v*(d+1) + c, i.e. kron(vertex_op, coin_op).

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

#include "lackwalk/lattice.hpp"
#include "lackwalk/operators.hpp"

namespace lackwalk::dense {

inline constexpr std::size_t kMaxDimension = 512;

class InstanceTooLarge : public std::invalid_argument {
public:
    explicit InstanceTooLarge(std::size_t dim)
        : std::invalid_argument("dense reference limited to dimension " +
                                std::to_string(kMaxDimension) + ", got " + std::to_string(dim) +
                                "; use the sparse engine (Stepper) for this instance")
    {
    }
};

inline Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b)
{
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// |e_i><e_j| of size n.
inline Eigen::MatrixXd outer(Eigen::Index n, Eigen::Index i, Eigen::Index j)
{
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    m(i, j) = 1.0;
    return m;
}

inline Eigen::MatrixXd grover_coin(const LatticeGeometry& geometry, const CoinSpec& spec)
{
    const auto psi_std = spec.coin_state(geometry);
    const Eigen::VectorXd psi = Eigen::Map<const Eigen::VectorXd>(
        psi_std.data(), static_cast<Eigen::Index>(psi_std.size()));
    const auto cs = static_cast<Eigen::Index>(geometry.coin_size());
    return 2.0 * psi * psi.transpose() - Eigen::MatrixXd::Identity(cs, cs);
}

/// Projector onto the marked vertices in vertex space.
inline Eigen::MatrixXd marked_projector(const LatticeGeometry& geometry, const MarkedSet& marked)
{
    const auto n = static_cast<Eigen::Index>(geometry.vertex_count());
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
    for (VertexId t : marked.vertices()) {
        p += outer(n, static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(t));
    }
    return p;
}

inline Eigen::MatrixXd flipflop_shift(const LatticeGeometry& geometry)
{
    const auto n = static_cast<Eigen::Index>(geometry.vertex_count());
    const auto cs = static_cast<Eigen::Index>(geometry.coin_size());
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n * cs, n * cs);
    for (std::size_t slot = 0; slot < geometry.degree(); ++slot) {
        const CoinDirection dir = geometry.direction(slot);
        const auto to = static_cast<Eigen::Index>(geometry.coin_index(opposite(dir)));
        Eigen::MatrixXd move = Eigen::MatrixXd::Zero(n, n);
        for (VertexId v = 0; v < geometry.vertex_count(); ++v) {
            move(static_cast<Eigen::Index>(geometry.neighbor(v, dir)),
                 static_cast<Eigen::Index>(v)) = 1.0;
        }
        s += kron(move, outer(cs, to, static_cast<Eigen::Index>(slot)));
    }
    s += kron(Eigen::MatrixXd::Identity(n, n), outer(cs, cs - 1, cs - 1));
    return s;
}

inline Eigen::MatrixXd coin_operator(const LatticeGeometry& geometry, const CoinSpec& spec,
                                     const MarkedSet& marked)
{
    const auto n = static_cast<Eigen::Index>(geometry.vertex_count());
    const auto cs = static_cast<Eigen::Index>(geometry.coin_size());
    const Eigen::MatrixXd c0 = grover_coin(geometry, spec);
    const Eigen::MatrixXd id_v = Eigen::MatrixXd::Identity(n, n);
    const Eigen::MatrixXd id_c = Eigen::MatrixXd::Identity(cs, cs);
    const Eigen::MatrixXd pm = marked_projector(geometry, marked);

    switch (spec.family()) {
    case CoinFamily::G: {
        const Eigen::MatrixXd loop = outer(cs, cs - 1, cs - 1);
        const Eigen::MatrixXd oracle = kron(id_v, id_c) - 2.0 * kron(pm, loop);
        return kron(id_v, c0) * oracle;
    }
    case CoinFamily::AKR:
        return kron(id_v - 2.0 * pm, c0);
    case CoinFamily::SKW:
        return kron(id_v - pm, c0) - kron(pm, id_c);
    }
    throw std::logic_error("unknown coin family");
}

/// Explicit step matrix U = S * C with its configuration.
struct DenseUnitary {
    Eigen::MatrixXd entries;
    LatticeGeometry geometry;
    CoinSpec spec;
    MarkedSet marked;

    Eigen::Index dimension() const noexcept { return entries.rows(); }
};

inline DenseUnitary build_dense_step(const LatticeGeometry& geometry, const CoinSpec& spec,
                                     const MarkedSet& marked)
{
    if (geometry.state_size() > kMaxDimension) {
        throw InstanceTooLarge(geometry.state_size());
    }
    for (VertexId t : marked.vertices()) {
        geometry.check_vertex(t);
    }
    Eigen::MatrixXd u = flipflop_shift(geometry) * coin_operator(geometry, spec, marked);
    return DenseUnitary{std::move(u), geometry, spec, marked};
}

/// U^steps |state> by repeated matrix-vector products.
inline WalkState dense_evolve(const DenseUnitary& u, const WalkState& state, std::size_t steps)
{
    if (static_cast<Eigen::Index>(state.size()) != u.dimension() ||
        !(state.geometry() == u.geometry)) {
        throw std::invalid_argument("state dimension does not match the dense step");
    }
    const auto amps = state.amplitudes();
    Eigen::VectorXd psi =
        Eigen::Map<const Eigen::VectorXd>(amps.data(), static_cast<Eigen::Index>(amps.size()));
    for (std::size_t t = 0; t < steps; ++t) {
        psi = u.entries * psi;
    }
    return WalkState(state.geometry(), std::vector<double>(psi.data(), psi.data() + psi.size()));
}

/// max |U^T U - I|.
inline double orthogonality_error(const DenseUnitary& u)
{
    const Eigen::MatrixXd gram = u.entries.transpose() * u.entries;
    return (gram - Eigen::MatrixXd::Identity(u.dimension(), u.dimension())).cwiseAbs().maxCoeff();
}

} // namespace lackwalk::dense
