#include <cmath>
#include <numbers>

#include "mmnet/conversion.hpp"
#include "mmnet/testkit.hpp"

namespace mmnet::testkit {

namespace {

constexpr int kMaxDraws = 1000;

bool well_conditioned(const NetworkMatrix& net, double cap) {
    for (ParamKind target : kAllKinds) {
        if (target == net.kind) continue;
        auto there = try_convert(net, target, cap);
        if (!there.network) return false;
        if (!(lower_half_condition(*there.network, net.kind) <= cap)) return false;
    }
    return true;
}

NetworkMatrix draw_network(ParamKind kind, const ModeSpec& modes, Rng& rng, double cap) {
    const Eigen::Index n = 2 * modes.modes();
    for (int draw = 0; draw < kMaxDraws; ++draw) {
        NetworkMatrix net(kind, BlockMatrix(random_matrix(n, n, rng)), modes);
        if (well_conditioned(net, cap)) return net;
    }
    throw GenerationFailed("no " + std::string(kind_name(kind)) + " network with condition below " +
                           std::to_string(cap) + " in " + std::to_string(kMaxDraws) + " draws");
}

// Kind coordinates split into four M-blocks -> canonical waves. Written out
// per kind from the defining equations, independently of basis.hpp.
VectorXcd kind_to_waves(ParamKind kind, const VectorXcd& coords, const ModeSpec& modes) {
    const Eigen::Index m = modes.modes();
    auto q = [&](int i) -> VectorXcd { return coords.segment(i * m, m); };
    VectorXcd waves(4 * m);
    auto set_waves = [&](const VectorXcd& v1p, const VectorXcd& v1m, const VectorXcd& v2p,
                         const VectorXcd& v2m) { waves << v1p, v1m, v2p, v2m; };
    auto set_net = [&](const VectorXcd& v1, const VectorXcd& i1, const VectorXcd& v2,
                       const VectorXcd& i2) {
        VectorXcd v1p(m), v1m(m), v2p(m), v2m(m);
        for (Eigen::Index k = 0; k < m; ++k) {
            const cdouble z1 = modes.side1()[static_cast<std::size_t>(k)];
            const cdouble z2 = modes.side2()[static_cast<std::size_t>(k)];
            v1p(k) = 0.5 * (v1(k) + z1 * i1(k));
            v1m(k) = 0.5 * (v1(k) - z1 * i1(k));
            v2p(k) = 0.5 * (v2(k) + z2 * i2(k));
            v2m(k) = 0.5 * (v2(k) - z2 * i2(k));
        }
        set_waves(v1p, v1m, v2p, v2m);
    };
    switch (kind) {
        case ParamKind::S: set_waves(q(2), q(0), q(3), q(1)); break;
        case ParamKind::T: set_waves(q(0), q(1), q(3), q(2)); break;
        case ParamKind::ABCD: set_net(q(0), q(1), q(2), -q(3)); break;
        case ParamKind::Z: set_net(q(0), q(2), q(1), q(3)); break;
        case ParamKind::Y: set_net(q(2), q(0), q(3), q(1)); break;
        case ParamKind::H: set_net(q(0), q(2), q(3), q(1)); break;
    }
    return waves;
}

}  // namespace

MatrixXcd random_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
    MatrixXcd out(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) out(i, j) = rng.complex_unit();
    }
    return out;
}

MatrixXcd random_invertible(Eigen::Index n, Rng& rng, double condition_cap) {
    for (int draw = 0; draw < kMaxDraws; ++draw) {
        MatrixXcd r = random_matrix(n, n, rng);
        if (condition_number(r) <= condition_cap) return r;
    }
    throw GenerationFailed("no invertible matrix below the condition cap");
}

ModeSpec random_modes(Eigen::Index modes, Rng& rng) {
    auto side = [&] {
        std::vector<cdouble> z;
        for (Eigen::Index k = 0; k < modes; ++k) {
            const double magnitude = rng.uniform(10.0, 200.0);
            const double phase = rng.uniform(-std::numbers::pi / 3, std::numbers::pi / 3);
            z.push_back(std::polar(magnitude, phase));
        }
        return z;
    };
    auto side1 = side();
    auto side2 = side();
    return ModeSpec(std::move(side1), std::move(side2));
}

NetworkMatrix random_network(ParamKind kind, Eigen::Index modes, std::uint64_t seed,
                             double condition_cap) {
    if (modes < 1) throw ConstructionError("mode count must be at least 1");
    if (!(condition_cap >= 1.0)) throw ConstructionError("condition cap must be at least 1");
    Rng rng(seed);
    const ModeSpec spec = random_modes(modes, rng);
    return draw_network(kind, spec, rng, condition_cap);
}

NetworkMatrix random_network(ParamKind kind, const ModeSpec& modes, std::uint64_t seed,
                             double condition_cap) {
    if (!(condition_cap >= 1.0)) throw ConstructionError("condition cap must be at least 1");
    Rng rng(seed);
    return draw_network(kind, modes, rng, condition_cap);
}

std::vector<StateVector> sample_states(const NetworkMatrix& net, int count, std::uint64_t seed) {
    Rng rng(seed);
    const Eigen::Index n = 2 * net.block_size();
    std::vector<StateVector> states;
    states.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const VectorXcd lower = random_matrix(n, 1, rng);
        VectorXcd coords(2 * n);
        coords << net.matrix.data() * lower, lower;
        states.emplace_back(kind_to_waves(net.kind, coords, net.modes));
    }
    return states;
}

}  // namespace mmnet::testkit
