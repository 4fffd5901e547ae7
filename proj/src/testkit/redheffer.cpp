#include <cmath>

#include "mmnet/testkit.hpp"

namespace mmnet::testkit {

NetworkMatrix redheffer_star(const NetworkMatrix& a, const NetworkMatrix& b) {
    if (a.kind != ParamKind::S || b.kind != ParamKind::S) {
        throw OracleInapplicable("star product needs two S matrices");
    }
    const auto& out = a.modes.side2();
    const auto& in = b.modes.side1();
    if (out.size() != in.size()) throw InterfaceMismatch("junction mode count differs");
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (std::abs(out[i] - in[i]) > 1e-12 * std::abs(in[i])) {
            throw InterfaceMismatch("junction impedances differ");
        }
    }

    const Eigen::Index m = a.block_size();
    const MatrixXcd& sa = a.matrix.data();
    const MatrixXcd& sb = b.matrix.data();
    const MatrixXcd a11 = sa.topLeftCorner(m, m), a12 = sa.topRightCorner(m, m);
    const MatrixXcd a21 = sa.bottomLeftCorner(m, m), a22 = sa.bottomRightCorner(m, m);
    const MatrixXcd b11 = sb.topLeftCorner(m, m), b12 = sb.topRightCorner(m, m);
    const MatrixXcd b21 = sb.bottomLeftCorner(m, m), b22 = sb.bottomRightCorner(m, m);
    const MatrixXcd id = MatrixXcd::Identity(m, m);

    // Multiple reflections between a's port 2 and b's port 1.
    const MatrixXcd loop_a = id - b11 * a22;
    const MatrixXcd loop_b = id - a22 * b11;
    for (const MatrixXcd* loop : {&loop_a, &loop_b}) {
        Eigen::JacobiSVD<MatrixXcd> svd(*loop);
        const auto& sv = svd.singularValues();
        if (!(sv(m - 1) > sv(0) * 1e-12)) throw SingularJunction("I - S11b S22a is singular");
    }
    const auto inv_a = loop_a.partialPivLu();
    const auto inv_b = loop_b.partialPivLu();

    MatrixXcd s(2 * m, 2 * m);
    s.topLeftCorner(m, m) = a11 + a12 * inv_a.solve(b11 * a21);
    s.topRightCorner(m, m) = a12 * inv_a.solve(b12);
    s.bottomLeftCorner(m, m) = b21 * inv_b.solve(a21);
    s.bottomRightCorner(m, m) = b22 + b21 * inv_b.solve(a22 * b12);

    const auto frequency = a.frequency ? a.frequency : b.frequency;
    return NetworkMatrix(ParamKind::S, BlockMatrix(std::move(s)),
                         ModeSpec(a.modes.side1(), b.modes.side2()), frequency);
}

}  // namespace mmnet::testkit
