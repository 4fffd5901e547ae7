#include <doctest.h>

#include "mmnet/core.hpp"

using namespace mmnet;

TEST_CASE("make_block_matrix places blocks and reads them back") {
    const MatrixXcd one = MatrixXcd::Identity(2, 2);
    const MatrixXcd zero = MatrixXcd::Zero(2, 2);
    const auto id = make_block_matrix(one, zero, zero, one);
    CHECK(id.block_size() == 2);
    CHECK(id.data() == MatrixXcd::Identity(4, 4));

    const MatrixXcd z1 = MatrixXcd::Zero(1, 1);
    const MatrixXcd o1 = MatrixXcd::Ones(1, 1);
    const auto swap = make_block_matrix(z1, o1, o1, z1);
    MatrixXcd expected(2, 2);
    expected << 0.0, 1.0, 1.0, 0.0;
    CHECK(swap.data() == expected);
}

TEST_CASE("block round trip is bit exact") {
    MatrixXcd b[4];
    for (int k = 0; k < 4; ++k) b[k] = MatrixXcd::Random(3, 3);
    const auto m = make_block_matrix(b[0], b[1], b[2], b[3]);
    CHECK(MatrixXcd(m.block(1, 1)) == b[0]);
    CHECK(MatrixXcd(m.block(1, 2)) == b[1]);
    CHECK(MatrixXcd(m.block(2, 1)) == b[2]);
    CHECK(MatrixXcd(m.block(2, 2)) == b[3]);
}

TEST_CASE("mismatched blocks are rejected by name") {
    const MatrixXcd two = MatrixXcd::Zero(2, 2);
    const MatrixXcd three = MatrixXcd::Zero(3, 3);
    try {
        make_block_matrix(two, two, two, three);
        FAIL("expected ConstructionError");
    } catch (const ConstructionError& e) {
        CHECK(std::string(e.what()).find("block 22") != std::string::npos);
    }
}

TEST_CASE("block matrix rejects non-finite and odd shapes") {
    MatrixXcd bad = MatrixXcd::Zero(2, 2);
    bad(0, 1) = cdouble(std::nan(""), 0.0);
    CHECK_THROWS_AS(BlockMatrix{bad}, ConstructionError);
    CHECK_THROWS_AS(BlockMatrix{MatrixXcd::Zero(3, 3)}, ConstructionError);
    CHECK_THROWS_AS(BlockMatrix{MatrixXcd::Zero(2, 4)}, ConstructionError);
}

TEST_CASE("mode admittance matrix") {
    const ModeSpec spec({50.0, 75.0}, {cdouble(0.0, 100.0), 50.0});
    const MatrixXcd y1 = mode_admittance_matrix(spec, Side::One);
    CHECK(y1(0, 0) == cdouble(0.02));
    CHECK(y1(1, 1).real() == doctest::Approx(0.0133333333333));
    CHECK(y1(0, 1) == cdouble(0.0));
    CHECK(y1(1, 0) == cdouble(0.0));
    const MatrixXcd y2 = mode_admittance_matrix(spec, Side::Two);
    CHECK(y2(0, 0).real() == 0.0);
    CHECK(y2(0, 0).imag() == doctest::Approx(-0.01));

    const ModeSpec fifty = ModeSpec::uniform(2, 50.0);
    const MatrixXcd y = mode_admittance_matrix(fifty, Side::One);
    CHECK(y(0, 0) == cdouble(0.02));
    CHECK(y(1, 1) == cdouble(0.02));
}

TEST_CASE("admittance times impedance is identity") {
    const ModeSpec spec({cdouble(37.0, -12.5), cdouble(150.0, 80.0), cdouble(-20.0, 3.0)},
                        {cdouble(0.0, -1e3), cdouble(1e-3, 0.0), cdouble(50.0, 50.0)});
    for (Side side : {Side::One, Side::Two}) {
        const MatrixXcd p = mode_admittance_matrix(spec, side) * mode_impedance_matrix(spec, side);
        CHECK(relative_error(p, MatrixXcd::Identity(3, 3)) < 1e-15);
    }
}

TEST_CASE("mode spec invariants") {
    CHECK_THROWS_AS(ModeSpec({}, {}), ConstructionError);
    CHECK_THROWS_AS(ModeSpec({50.0}, {50.0, 50.0}), ConstructionError);
    CHECK_THROWS_AS(ModeSpec({0.0}, {50.0}), ConstructionError);
    // negative real part is admitted
    CHECK_NOTHROW(ModeSpec({cdouble(-50.0, 1.0)}, {50.0}));
}

TEST_CASE("network matrix binds block size to mode count") {
    const BlockMatrix m(MatrixXcd::Identity(4, 4));
    CHECK_THROWS_AS(NetworkMatrix(ParamKind::S, m, ModeSpec::uniform(1, 50.0)), ConstructionError);
    CHECK_NOTHROW(NetworkMatrix(ParamKind::S, m, ModeSpec::uniform(2, 50.0)));
    CHECK_THROWS_AS(NetworkMatrix(ParamKind::S, m, ModeSpec::uniform(2, 50.0), -1.0),
                    ConstructionError);
}

TEST_CASE("state vector length") {
    CHECK_THROWS_AS(StateVector(VectorXcd::Zero(6)), ConstructionError);
    CHECK(StateVector(VectorXcd::Zero(8)).block_size() == 2);
}

TEST_CASE("kind names parse back") {
    for (ParamKind k : kAllKinds) CHECK(parse_kind(kind_name(k)) == k);
    CHECK(parse_kind("h") == ParamKind::H);
    CHECK(parse_kind("abcd") == ParamKind::ABCD);
    CHECK_FALSE(parse_kind("G").has_value());
}
