#include <doctest.h>

#include <cmath>

#include "mmnet/cascade.hpp"
#include "mmnet/testkit.hpp"

using namespace mmnet;

namespace {

NetworkMatrix matched_line(double theta, double z0 = 50.0) {
    const cdouble t = std::polar(1.0, -theta);
    MatrixXcd s(2, 2);
    s << 0.0, t, t, 0.0;
    return NetworkMatrix(ParamKind::S, BlockMatrix(std::move(s)), ModeSpec::uniform(1, z0));
}

}  // namespace

TEST_CASE("identity T is neutral") {
    const auto x = testkit::random_network(ParamKind::T, 2, 4, 1e6);
    const ModeSpec modes(x.modes.side1(), x.modes.side1());
    const NetworkMatrix id(ParamKind::T, BlockMatrix(MatrixXcd::Identity(4, 4)), modes);
    const auto out = cascade(id, x, ParamKind::T, ParamKind::T);
    CHECK(relative_error(out.matrix.data(), x.matrix.data()) < 1e-14);
    CHECK(out.modes == x.modes);
}

TEST_CASE("two matched lines add their phases") {
    const double t1 = 0.7, t2 = 1.9;
    for (ParamKind via : {ParamKind::T, ParamKind::ABCD}) {
        const auto s = cascade(matched_line(t1), matched_line(t2), via, ParamKind::S);
        CHECK(std::abs(s.matrix(1, 0) - std::polar(1.0, -(t1 + t2))) < 1e-14);
        CHECK(std::abs(s.matrix(0, 1) - std::polar(1.0, -(t1 + t2))) < 1e-14);
        CHECK(std::abs(s.matrix(0, 0)) < 1e-14);
        CHECK(std::abs(s.matrix(1, 1)) < 1e-14);
    }
}

TEST_CASE("cascade via T and via ABCD agree") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        testkit::Rng rng(seed);
        const Eigen::Index m = 1 + static_cast<Eigen::Index>(seed % 3);
        const ModeSpec left = testkit::random_modes(m, rng);
        const ModeSpec right = testkit::random_modes(m, rng);
        const auto a = testkit::random_network(ParamKind::Z, left, seed, 1e6);
        const auto b = testkit::random_network(ParamKind::Y, ModeSpec(left.side2(), right.side2()),
                                               seed + 7, 1e6);
        const auto via_t = cascade(a, b, ParamKind::T, ParamKind::S);
        const auto via_abcd = cascade(a, b, ParamKind::ABCD, ParamKind::S);
        CHECK(relative_error(via_t.matrix.data(), via_abcd.matrix.data()) < 1e-10);
        CHECK(via_t.modes.side1() == left.side1());
        CHECK(via_t.modes.side2() == right.side2());
    }
}

TEST_CASE("junction mismatches are rejected") {
    CHECK_THROWS_AS(cascade(matched_line(0.1, 50.0), matched_line(0.2, 75.0)), InterfaceMismatch);
    const auto two_mode = testkit::random_network(ParamKind::S, ModeSpec::uniform(2, 50.0), 1, 1e6);
    CHECK_THROWS_AS(cascade(matched_line(0.1), two_mode), InterfaceMismatch);
    auto a = matched_line(0.1);
    auto b = matched_line(0.2);
    a.frequency = 1e9;
    b.frequency = 2e9;
    CHECK_THROWS_AS(cascade(a, b), InterfaceMismatch);
    CHECK_THROWS_AS(cascade(matched_line(0.1), matched_line(0.2), ParamKind::Z), ConstructionError);
}

TEST_CASE("singular sections propagate") {
    MatrixXcd s = MatrixXcd::Identity(2, 2);
    const NetworkMatrix short_pair(ParamKind::S, BlockMatrix(s), ModeSpec::uniform(1, 50.0));
    CHECK_THROWS_AS(cascade(short_pair, matched_line(0.3)), SingularLowerHalf);
}

TEST_CASE("chain of sections") {
    std::vector<NetworkMatrix> chain = {matched_line(0.1), matched_line(0.2), matched_line(0.3)};
    const auto s = cascade_chain(chain);
    CHECK(std::abs(s.matrix(1, 0) - std::polar(1.0, -0.6)) < 1e-14);
}
