// Textbook single-mode 2-port conversion formulas, reference impedance z0 on
// both ports. Waves: V = V+ + V-, I = (V+ - V-) / z0.

#include <array>
#include <map>
#include <utility>

#include "mmnet/testkit.hpp"

namespace mmnet::testkit {

namespace {

using Quad = std::array<cdouble, 4>;  // p11, p12, p21, p22
using Formula = Quad (*)(const Quad&, double);

cdouble over(cdouble num, cdouble den) {
    if (den == cdouble(0.0)) throw OracleInapplicable("closed form has a zero denominator");
    return num / den;
}

cdouble det(const Quad& p) { return p[0] * p[3] - p[1] * p[2]; }

Quad s_to_z(const Quad& s, double z0) {
    const auto [s11, s12, s21, s22] = s;
    const cdouble d = (1.0 - s11) * (1.0 - s22) - s12 * s21;
    return {over(z0 * ((1.0 + s11) * (1.0 - s22) + s12 * s21), d), over(2.0 * z0 * s12, d),
            over(2.0 * z0 * s21, d), over(z0 * ((1.0 - s11) * (1.0 + s22) + s12 * s21), d)};
}

Quad z_to_s(const Quad& z, double z0) {
    const auto [z11, z12, z21, z22] = z;
    const cdouble d = (z11 + z0) * (z22 + z0) - z12 * z21;
    return {over((z11 - z0) * (z22 + z0) - z12 * z21, d), over(2.0 * z12 * z0, d),
            over(2.0 * z21 * z0, d), over((z11 + z0) * (z22 - z0) - z12 * z21, d)};
}

Quad s_to_y(const Quad& s, double z0) {
    const auto [s11, s12, s21, s22] = s;
    const double y0 = 1.0 / z0;
    const cdouble d = (1.0 + s11) * (1.0 + s22) - s12 * s21;
    return {over(y0 * ((1.0 - s11) * (1.0 + s22) + s12 * s21), d), over(-2.0 * s12 * y0, d),
            over(-2.0 * s21 * y0, d), over(y0 * ((1.0 + s11) * (1.0 - s22) + s12 * s21), d)};
}

Quad y_to_s(const Quad& y, double z0) {
    const auto [y11, y12, y21, y22] = y;
    const double y0 = 1.0 / z0;
    const cdouble d = (y0 + y11) * (y0 + y22) - y12 * y21;
    return {over((y0 - y11) * (y0 + y22) + y12 * y21, d), over(-2.0 * y12 * y0, d),
            over(-2.0 * y21 * y0, d), over((y0 + y11) * (y0 - y22) + y12 * y21, d)};
}

Quad s_to_abcd(const Quad& s, double z0) {
    const auto [s11, s12, s21, s22] = s;
    const cdouble d = 2.0 * s21;
    return {over((1.0 + s11) * (1.0 - s22) + s12 * s21, d),
            over(z0 * ((1.0 + s11) * (1.0 + s22) - s12 * s21), d),
            over(((1.0 - s11) * (1.0 - s22) - s12 * s21) / z0, d),
            over((1.0 - s11) * (1.0 + s22) + s12 * s21, d)};
}

Quad abcd_to_s(const Quad& t, double z0) {
    const auto [a, b, c, d] = t;
    const cdouble den = a + b / z0 + c * z0 + d;
    return {over(a + b / z0 - c * z0 - d, den), over(2.0 * det(t), den), over(2.0, den),
            over(-a + b / z0 - c * z0 + d, den)};
}

// T as [V1+; V1-] = T [V2-; V2+].
Quad s_to_t(const Quad& s, double) {
    const auto [s11, s12, s21, s22] = s;
    return {over(1.0, s21), over(-s22, s21), over(s11, s21), s12 - over(s11 * s22, s21)};
}

Quad t_to_s(const Quad& t, double) {
    const auto [t11, t12, t21, t22] = t;
    return {over(t21, t11), over(det(t), t11), over(1.0, t11), over(-t12, t11)};
}

// Z <-> Y is a plain 2x2 inverse in both directions.
Quad invert(const Quad& p, double) {
    const cdouble d = det(p);
    return {over(p[3], d), over(-p[1], d), over(-p[2], d), over(p[0], d)};
}

Quad z_to_abcd(const Quad& z, double) {
    return {over(z[0], z[2]), over(det(z), z[2]), over(1.0, z[2]), over(z[3], z[2])};
}

Quad abcd_to_z(const Quad& t, double) {
    return {over(t[0], t[2]), over(det(t), t[2]), over(1.0, t[2]), over(t[3], t[2])};
}

Quad y_to_abcd(const Quad& y, double) {
    return {over(-y[3], y[2]), over(-1.0, y[2]), over(-det(y), y[2]), over(-y[0], y[2])};
}

Quad abcd_to_y(const Quad& t, double) {
    return {over(t[3], t[1]), over(-det(t), t[1]), over(-1.0, t[1]), over(t[0], t[1])};
}

Quad z_to_h(const Quad& z, double) {
    return {over(det(z), z[3]), over(z[1], z[3]), over(-z[2], z[3]), over(1.0, z[3])};
}

Quad h_to_z(const Quad& h, double) {
    return {over(det(h), h[3]), over(h[1], h[3]), over(-h[2], h[3]), over(1.0, h[3])};
}

Quad y_to_h(const Quad& y, double) {
    return {over(1.0, y[0]), over(-y[1], y[0]), over(y[2], y[0]), over(det(y), y[0])};
}

Quad h_to_y(const Quad& h, double) {
    return {over(1.0, h[0]), over(-h[1], h[0]), over(h[2], h[0]), over(det(h), h[0])};
}

Quad abcd_to_h(const Quad& t, double) {
    return {over(t[1], t[3]), over(det(t), t[3]), over(-1.0, t[3]), over(t[2], t[3])};
}

Quad h_to_abcd(const Quad& h, double) {
    return {over(-det(h), h[2]), over(-h[0], h[2]), over(-h[3], h[2]), over(-1.0, h[2])};
}

const std::map<std::pair<ParamKind, ParamKind>, Formula>& formulas() {
    using K = ParamKind;
    static const std::map<std::pair<ParamKind, ParamKind>, Formula> table = {
        {{K::S, K::Z}, s_to_z},         {{K::Z, K::S}, z_to_s},
        {{K::S, K::Y}, s_to_y},         {{K::Y, K::S}, y_to_s},
        {{K::S, K::ABCD}, s_to_abcd},   {{K::ABCD, K::S}, abcd_to_s},
        {{K::S, K::T}, s_to_t},         {{K::T, K::S}, t_to_s},
        {{K::Z, K::Y}, invert},         {{K::Y, K::Z}, invert},
        {{K::Z, K::ABCD}, z_to_abcd},   {{K::ABCD, K::Z}, abcd_to_z},
        {{K::Y, K::ABCD}, y_to_abcd},   {{K::ABCD, K::Y}, abcd_to_y},
        {{K::Z, K::H}, z_to_h},         {{K::H, K::Z}, h_to_z},
        {{K::Y, K::H}, y_to_h},         {{K::H, K::Y}, h_to_y},
        {{K::ABCD, K::H}, abcd_to_h},   {{K::H, K::ABCD}, h_to_abcd},
    };
    return table;
}

}  // namespace

bool monomode_supported(ParamKind from, ParamKind to) {
    return from == to || formulas().contains({from, to});
}

NetworkMatrix oracle_monomode(const NetworkMatrix& input, ParamKind target) {
    if (input.block_size() != 1) throw OracleInapplicable("monomode oracle needs M = 1");
    const cdouble z1 = input.modes.side1().front();
    const cdouble z2 = input.modes.side2().front();
    if (z1 != z2 || z1.imag() != 0.0) {
        throw OracleInapplicable("monomode oracle needs one real reference impedance");
    }
    if (input.kind == target) return input;
    const auto it = formulas().find({input.kind, target});
    if (it == formulas().end()) {
        throw OracleInapplicable("no textbook formula for " + std::string(kind_name(input.kind)) +
                                 " -> " + std::string(kind_name(target)));
    }
    const auto& m = input.matrix.data();
    const Quad out = it->second({m(0, 0), m(0, 1), m(1, 0), m(1, 1)}, z1.real());
    MatrixXcd result(2, 2);
    result << out[0], out[1], out[2], out[3];
    if (!all_finite(result)) throw OracleInapplicable("closed form overflowed");
    return NetworkMatrix(target, BlockMatrix(std::move(result)), input.modes, input.frequency);
}

}  // namespace mmnet::testkit
