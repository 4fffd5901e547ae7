#include <doctest.h>

#include "mmnet/io.hpp"
#include "mmnet/testkit.hpp"

using namespace mmnet;

TEST_CASE("complex literal format") {
    CHECK(format_complex({1.0, -2.5}) == "1.0000000000000000e+00-2.5000000000000000e+00j");
    CHECK(parse_complex("50+0j") == cdouble(50.0, 0.0));
    CHECK(parse_complex("1e-3-2.5e+2j") == cdouble(1e-3, -250.0));
    CHECK(parse_complex("-4j") == cdouble(0.0, -4.0));
    CHECK(parse_complex("7.5") == cdouble(7.5, 0.0));
    CHECK_FALSE(parse_complex("1+j").has_value());
    CHECK_FALSE(parse_complex("abc").has_value());
    CHECK_FALSE(parse_complex("1+2i").has_value());
    CHECK_FALSE(parse_complex("nan+0j").has_value());
}

TEST_CASE("2-port Touchstone column order is S11 S21 S12 S22") {
    const auto sweep = parse_touchstone("# GHZ S RI R 50\n1.0 0.0 0.0 0.5 0.0 0.5 0.0 0.0 0.0\n");
    REQUIRE(sweep.size() == 1);
    const auto& p = sweep.points()[0];
    CHECK(*p.frequency == 1e9);
    MatrixXcd expected(2, 2);
    expected << 0.0, 0.5, 0.5, 0.0;
    CHECK(p.matrix.data() == expected);
    CHECK(p.modes == ModeSpec::uniform(1, 50.0));

    // distinct values pin the order
    const auto ordered = parse_touchstone("# HZ S RI R 50\n1 11 0 21 0 12 0 22 0\n");
    const auto& s = ordered.points()[0].matrix;
    CHECK(s(0, 0) == cdouble(11.0));
    CHECK(s(1, 0) == cdouble(21.0));
    CHECK(s(0, 1) == cdouble(12.0));
    CHECK(s(1, 1) == cdouble(22.0));
}

TEST_CASE("Touchstone number formats and units") {
    const auto ma = parse_touchstone("# MHZ S MA R 75\n! comment\n2 1 -90 0 0 0 0 1 0\n");
    const cdouble s11 = ma.points()[0].matrix(0, 0);
    CHECK(s11.real() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(s11.imag() == doctest::Approx(-1.0));
    CHECK(*ma.points()[0].frequency == 2e6);
    CHECK(ma.modes().side1()[0] == cdouble(75.0));

    const auto db = parse_touchstone("# khz s db r 50\n3 -20 180 0 0 0 0 0 0\n");
    CHECK(db.points()[0].matrix(0, 0).real() == doctest::Approx(-0.1));
    CHECK(*db.points()[0].frequency == 3e3);

    // defaults: GHz, MA, 50 ohm
    const auto dflt = parse_touchstone("1 1 0 0 0 0 0 1 0\n");
    CHECK(*dflt.points()[0].frequency == 1e9);
}

TEST_CASE("Touchstone errors") {
    CHECK_THROWS_AS(parse_touchstone("# HZ S RI R 50\n1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n", 3),
                    UnsupportedTopology);
    CHECK_THROWS_AS(parse_touchstone("# HZ Z RI R 50\n1 0 0 0 0 0 0 0 0\n"), Unsupported);
    CHECK_THROWS_AS(parse_touchstone("# HZ S RI Q 50\n1 0 0 0 0 0 0 0 0\n"), ParseError);
    try {
        parse_touchstone("# HZ S RI R 50\n1 0 0 0 0 0 0 0 0\n2 0 0 0 x 0 0 0 0\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    try {
        parse_touchstone("# HZ S RI R 50\n1 0 0 0 0 0 0 0 0\n2 0 0 0 0 0 0\n", 2);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_touchstone("# HZ S RI R 50\n2 0 0 0 0 0 0 0 0\n1 0 0 0 0 0 0 0 0\n"),
                    ParseError);
}

TEST_CASE("4-port Touchstone wraps rows and infers the port count") {
    testkit::Rng rng(2);
    std::vector<NetworkMatrix> pts;
    for (int i = 0; i < 3; ++i) {
        pts.emplace_back(ParamKind::S, BlockMatrix(testkit::random_matrix(4, 4, rng)),
                         ModeSpec::uniform(2, 50.0), 1e9 * (i + 1));
    }
    const Sweep sweep(pts);
    for (PortOrder order : {PortOrder::Blocked, PortOrder::Interleaved}) {
        const std::string text = write_touchstone(sweep, order);
        const Sweep inferred = parse_touchstone(text, std::nullopt, order);
        const Sweep given = parse_touchstone(text, 4, order);
        for (std::size_t i = 0; i < sweep.size(); ++i) {
            CHECK(relative_error(inferred.points()[i].matrix.data(), sweep.points()[i].matrix.data()) <= 1e-15);
            CHECK(given.points()[i].matrix.data() == inferred.points()[i].matrix.data());
        }
        // export -> import -> export preserves the file byte for byte
        CHECK(write_touchstone(inferred, order) == text);
    }
}

TEST_CASE("interleaved port order maps odd ports to side 1") {
    CHECK(port_to_index(0, 4, PortOrder::Interleaved) == 0);
    CHECK(port_to_index(1, 4, PortOrder::Interleaved) == 2);
    CHECK(port_to_index(2, 4, PortOrder::Interleaved) == 1);
    CHECK(port_to_index(3, 4, PortOrder::Interleaved) == 3);
    CHECK(port_to_index(3, 4, PortOrder::Blocked) == 3);
}

TEST_CASE("port count from file name") {
    CHECK(touchstone_ports_from_name("dut.s2p") == 2);
    CHECK(touchstone_ports_from_name("/a/b/Filter.S12P") == 12);
    CHECK_FALSE(touchstone_ports_from_name("dut.native").has_value());
    CHECK_FALSE(touchstone_ports_from_name("dut.sp").has_value());
}

TEST_CASE("Touchstone export preconditions") {
    const NetworkMatrix t(ParamKind::T, BlockMatrix(MatrixXcd::Identity(2, 2)), ModeSpec::uniform(1, 50.0), 1.0);
    CHECK_THROWS_AS(write_touchstone(Sweep({t})), UnsupportedExport);
    const NetworkMatrix mixed(ParamKind::S, BlockMatrix(MatrixXcd::Identity(2, 2)), ModeSpec({50.0}, {75.0}), 1.0);
    CHECK_THROWS_AS(write_touchstone(Sweep({mixed})), UnsupportedExport);
    const NetworkMatrix cplx(ParamKind::S, BlockMatrix(MatrixXcd::Identity(2, 2)),
                             ModeSpec::uniform(1, cdouble(50.0, 1.0)), 1.0);
    CHECK_THROWS_AS(write_touchstone(Sweep({cplx})), UnsupportedExport);
}

TEST_CASE("native minimal file") {
    const auto sweep = parse_native(
        "mmnet v1\nkind S\nmodes 1\nz1 50+0j\nz2 50+0j\nf 1e9\n1+0j 0+0j\n0+0j 1+0j\n");
    CHECK(sweep.size() == 1);
    CHECK(sweep.kind() == ParamKind::S);
    CHECK(sweep.points()[0].matrix.data() == MatrixXcd::Identity(2, 2));
}

TEST_CASE("native mixed impedances and comments") {
    const auto sweep = parse_native(
        "# header comment\nmmnet v1\nkind ABCD\nmodes 2\nz1 50+0j 75+0j  # trailing\n"
        "z2 50+0j 75-5j\n\nf 1\n1+0j 0+0j 0+0j 0+0j\n0+0j 1+0j 0+0j 0+0j\n"
        "0+0j 0+0j 1+0j 0+0j\n0+0j 0+0j 0+0j 1+0j\n");
    CHECK(sweep.kind() == ParamKind::ABCD);
    CHECK(sweep.modes().side1() == std::vector<cdouble>{50.0, 75.0});
    CHECK(sweep.modes().side2()[1] == cdouble(75.0, -5.0));
}

TEST_CASE("native parse errors carry line numbers") {
    const std::string head = "mmnet v1\nkind S\nmodes 1\nz1 50+0j\nz2 50+0j\n";
    const std::string block = "1+0j 0+0j\n0+0j 1+0j\n";
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            parse_native(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of(head + "f 1\n" + block + "f 1\n" + block) == 9);      // duplicate frequency
    CHECK(line_of("mmnet v1\nkind Q\n") == 2);                           // unknown kind
    CHECK(line_of("mmnet v1\nkind S\nmodes 2\nz1 50+0j\n") == 4);       // inconsistent M
    CHECK(line_of(head + "f 1\n1+0j\n0+0j 1+0j\n") == 7);                // ragged row
    CHECK(line_of(head + "f 1\n1+0j 0+0j\n") == 7);                      // truncated block
    CHECK(line_of(head) == 5);                                           // no points
    CHECK(line_of("mmnet v2\n") == 1);
    CHECK(line_of("mmnet v1\nkind S\nmodes 1\nz1 0+0j\nz2 50+0j\nf 1\n" + block) == 3);
}

TEST_CASE("native output is deterministic and exact") {
    const auto net = testkit::random_network(ParamKind::H, 2, 5, 1e6);
    std::vector<NetworkMatrix> pts;
    for (int i = 0; i < 4; ++i) {
        auto p = net;
        p.frequency = 1.234567e8 * (i + 1);
        pts.push_back(p);
    }
    const Sweep sweep(pts);
    const std::string a = write_native(sweep);
    CHECK(a == write_native(sweep));
    const Sweep back = parse_native(a);
    CHECK(write_native(back) == a);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(back.points()[i].matrix.data() == pts[i].matrix.data());
        CHECK(*back.points()[i].frequency == *pts[i].frequency);
    }
    CHECK(back.modes() == sweep.modes());
}

TEST_CASE("sweep invariants") {
    CHECK_THROWS_AS(Sweep({}), ConstructionError);
    const NetworkMatrix a(ParamKind::S, BlockMatrix(MatrixXcd::Identity(2, 2)), ModeSpec::uniform(1, 50.0), 1.0);
    auto b = a;
    b.kind = ParamKind::T;
    b.frequency = 2.0;
    CHECK_THROWS_AS(Sweep({a, b}), ConstructionError);
    CHECK_THROWS_AS(Sweep({a, a}), ConstructionError);
    auto c = a;
    c.frequency.reset();
    CHECK_THROWS_AS(Sweep({c}), ConstructionError);
}
