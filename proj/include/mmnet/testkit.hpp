#pragma once

// Independent oracles for testing the conversion engine. oracle_monomode and
// redheffer_star use only closed-form formulas and plain Eigen algebra; they do
// not touch basis.hpp or conversion.hpp.

#include <cstdint>
#include <random>
#include <vector>

#include "mmnet/core.hpp"

namespace mmnet::testkit {

class OracleInapplicable : public NetworkError {
public:
    using NetworkError::NetworkError;
};

class SingularJunction : public NetworkError {
public:
    using NetworkError::NetworkError;
};

class GenerationFailed : public NetworkError {
public:
    using NetworkError::NetworkError;
};

/// Seed-stable generator: mt19937_64 (fully specified by the standard) with
/// our own bits-to-double mapping, so sequences match across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Real and imaginary parts uniform in [-1, 1].
    cdouble complex_unit() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }

private:
    std::mt19937_64 engine_;
};

MatrixXcd random_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Random invertible n x n matrix with 2-norm condition below `condition_cap`.
MatrixXcd random_invertible(Eigen::Index n, Rng& rng, double condition_cap = 1e3);

/// M impedances per side, magnitude uniform in [10, 200] ohm, phase in [-pi/3, pi/3].
ModeSpec random_modes(Eigen::Index modes, Rng& rng);

/// Random network of `kind` whose conversions to and from every other kind
/// invert lower halves with condition below `condition_cap`.
NetworkMatrix random_network(ParamKind kind, Eigen::Index modes, std::uint64_t seed,
                             double condition_cap);

/// Same, with caller-chosen mode impedances.
NetworkMatrix random_network(ParamKind kind, const ModeSpec& modes, std::uint64_t seed,
                             double condition_cap);

/// Canonical-coordinate states lying in the solution space of `net`.
std::vector<StateVector> sample_states(const NetworkMatrix& net, int count, std::uint64_t seed);

/// True when oracle_monomode has a closed form for the pair.
bool monomode_supported(ParamKind from, ParamKind to);

/// Classical single-mode 2-port conversion tables (equal real Z0 on both sides).
NetworkMatrix oracle_monomode(const NetworkMatrix& input, ParamKind target);

/// S-matrix of side 2 of `a` joined to side 1 of `b`, by the star product.
NetworkMatrix redheffer_star(const NetworkMatrix& a, const NetworkMatrix& b);

}  // namespace mmnet::testkit
