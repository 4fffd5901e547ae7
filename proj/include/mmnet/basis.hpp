#pragma once

// State-space coordinate systems and bases for the six parameter definitions.
//
// Every state of a network with M modes per side is a 4M-vector. The canonical
// frame is the wave frame [V1+; V1-; V2+; V2-]. Each parameter kind K stacks the
// two vectors around its defining equation, left-hand side on top:
//
//   S    [V1-; V2-; V1+; V2+]      T  [V1+; V1-; V2-; V2+]
//   ABCD [V1;  I1;  V2; -I2]       Z  [V1;  V2;  I1;  I2]
//   Y    [I1;  I2;  V1;  V2]       H  [V1;  I2;  I1;  V2]
//
// with V_s = V_s+ + V_s- and I_s = Y_s (V_s+ - V_s-).

#include <array>

#include "mmnet/core.hpp"

namespace mmnet {

template <typename Real>
struct BasicCoordSystem {
    ParamKind kind;
    /// Kind coordinates -> canonical wave coordinates.
    CMatrix<Real> to_canonical;
    /// Canonical wave coordinates -> kind coordinates.
    CMatrix<Real> from_canonical;
};

/// 4M x 2M column set spanning the solution space of a network, written in the
/// coordinates of `expressed_in`.
template <typename Real>
struct BasicBasis {
    ParamKind kind;
    CMatrix<Real> columns;
    ParamKind expressed_in;

    Eigen::Index block_size() const noexcept { return columns.rows() / 4; }
    auto upper_half() const { return columns.topRows(columns.rows() / 2); }
    auto lower_half() const { return columns.bottomRows(columns.rows() / 2); }
};

namespace detail {

struct Pick {
    int source;  // block index in the quantity vector
    int sign;
};

// Wave kinds pick from [V1+, V1-, V2+, V2-]; the others from [V1, I1, V2, I2].
inline constexpr bool uses_net_quantities(ParamKind kind) {
    return kind != ParamKind::S && kind != ParamKind::T;
}

inline constexpr std::array<Pick, 4> stacking(ParamKind kind) {
    switch (kind) {
        case ParamKind::S: return {{{1, 1}, {3, 1}, {0, 1}, {2, 1}}};
        case ParamKind::T: return {{{0, 1}, {1, 1}, {3, 1}, {2, 1}}};
        case ParamKind::ABCD: return {{{0, 1}, {1, 1}, {2, 1}, {3, -1}}};
        case ParamKind::Z: return {{{0, 1}, {2, 1}, {1, 1}, {3, 1}}};
        case ParamKind::Y: return {{{1, 1}, {3, 1}, {0, 1}, {2, 1}}};
        case ParamKind::H: return {{{0, 1}, {3, 1}, {1, 1}, {2, 1}}};
    }
    return {};
}

/// Canonical waves -> [V1; I1; V2; I2].
template <typename Real>
CMatrix<Real> waves_to_net(const BasicModeSpec<Real>& modes) {
    const Eigen::Index m = modes.modes();
    const CMatrix<Real> id = CMatrix<Real>::Identity(m, m);
    CMatrix<Real> w = CMatrix<Real>::Zero(4 * m, 4 * m);
    for (int s = 0; s < 2; ++s) {
        const CMatrix<Real> y = mode_admittance_matrix(modes, s == 0 ? Side::One : Side::Two);
        const Eigen::Index r = 2 * s * m;
        w.block(r, r, m, m) = id;
        w.block(r, r + m, m, m) = id;
        w.block(r + m, r, m, m) = y;
        w.block(r + m, r + m, m, m) = -y;
    }
    return w;
}

/// [V1; I1; V2; I2] -> canonical waves, from V± = (V ± Z_s I) / 2.
template <typename Real>
CMatrix<Real> net_to_waves(const BasicModeSpec<Real>& modes) {
    const Eigen::Index m = modes.modes();
    const CMatrix<Real> half = CMatrix<Real>::Identity(m, m) * Real(0.5);
    CMatrix<Real> w = CMatrix<Real>::Zero(4 * m, 4 * m);
    for (int s = 0; s < 2; ++s) {
        const CMatrix<Real> z =
            mode_impedance_matrix(modes, s == 0 ? Side::One : Side::Two) * Real(0.5);
        const Eigen::Index r = 2 * s * m;
        w.block(r, r, m, m) = half;
        w.block(r, r + m, m, m) = z;
        w.block(r + m, r, m, m) = half;
        w.block(r + m, r + m, m, m) = -z;
    }
    return w;
}

template <typename Real>
CMatrix<Real> signed_permutation(ParamKind kind, Eigen::Index m) {
    CMatrix<Real> p = CMatrix<Real>::Zero(4 * m, 4 * m);
    const auto picks = stacking(kind);
    for (int row = 0; row < 4; ++row) {
        p.block(row * m, picks[row].source * m, m, m) =
            CMatrix<Real>::Identity(m, m) * Real(picks[row].sign);
    }
    return p;
}

}  // namespace detail

/// Transform pair between canonical wave coordinates and the stacked
/// coordinates of `kind`. Both directions are built in closed form.
template <typename Real>
BasicCoordSystem<Real> coord_system(ParamKind kind, const BasicModeSpec<Real>& modes) {
    const CMatrix<Real> p = detail::signed_permutation<Real>(kind, modes.modes());
    if (!detail::uses_net_quantities(kind)) {
        return {kind, p.transpose(), p};
    }
    return {kind, detail::net_to_waves(modes) * p.transpose(), p * detail::waves_to_net(modes)};
}

/// Basis seeded from the network's own matrix: [matrix; identity] in the
/// network's coordinates.
template <typename Real>
BasicBasis<Real> seed_basis(ParamKind kind, const BasicNetworkMatrix<Real>& network) {
    if (network.kind != kind) {
        throw ConstructionError("cannot seed a " + std::string(kind_name(kind)) +
                                " basis from a " + std::string(kind_name(network.kind)) +
                                " matrix");
    }
    const Eigen::Index n = 2 * network.block_size();
    CMatrix<Real> columns(2 * n, n);
    columns.topRows(n) = network.matrix.data();
    columns.bottomRows(n).setIdentity();
    return {kind, std::move(columns), kind};
}

template <typename Real>
BasicBasis<Real> seed_basis(const BasicNetworkMatrix<Real>& network) {
    return seed_basis(network.kind, network);
}

/// Rewrites a basis in the coordinates of `target`.
template <typename Real>
BasicBasis<Real> express_in(const BasicBasis<Real>& basis, ParamKind target,
                            const BasicModeSpec<Real>& modes) {
    if (basis.columns.rows() != 4 * modes.modes() || basis.columns.cols() != 2 * modes.modes()) {
        throw ConstructionError("basis dimensions do not match mode count " +
                                std::to_string(modes.modes()));
    }
    if (basis.expressed_in == target) return basis;
    const auto src = coord_system(basis.expressed_in, modes);
    const auto dst = coord_system(target, modes);
    return {basis.kind, dst.from_canonical * (src.to_canonical * basis.columns), target};
}

using CoordSystem = BasicCoordSystem<double>;
using Basis = BasicBasis<double>;

}  // namespace mmnet
