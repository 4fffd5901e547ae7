#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mmnet/errors.hpp"

namespace mmnet {

template <typename Real>
using Complex = std::complex<Real>;

template <typename Real>
using CMatrix = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using CVector = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, 1>;

/// The six network parameter definitions.
enum class ParamKind { S, T, ABCD, Z, Y, H };

inline constexpr std::array<ParamKind, 6> kAllKinds = {
    ParamKind::S, ParamKind::T, ParamKind::ABCD, ParamKind::Z, ParamKind::Y, ParamKind::H};

inline constexpr std::string_view kind_name(ParamKind kind) {
    switch (kind) {
        case ParamKind::S: return "S";
        case ParamKind::T: return "T";
        case ParamKind::ABCD: return "ABCD";
        case ParamKind::Z: return "Z";
        case ParamKind::Y: return "Y";
        case ParamKind::H: return "H";
    }
    return "?";
}

/// Case-insensitive lookup; "h" and "H" both name the hybrid matrix.
inline std::optional<ParamKind> parse_kind(std::string_view text) {
    std::string upper(text);
    for (char& c : upper) {
        if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    }
    for (ParamKind kind : kAllKinds) {
        if (upper == kind_name(kind)) return kind;
    }
    return std::nullopt;
}

enum class Side { One = 1, Two = 2 };

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            const auto& z = m(i, j);
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        }
    }
    return true;
}

/// 2M x 2M complex matrix addressed as four M x M blocks (11, 12, 21, 22).
template <typename Real>
class BasicBlockMatrix {
public:
    using Matrix = CMatrix<Real>;

    BasicBlockMatrix() = default;

    explicit BasicBlockMatrix(Matrix data) : data_(std::move(data)) {
        if (data_.rows() != data_.cols() || data_.rows() == 0 || data_.rows() % 2 != 0) {
            throw ConstructionError("block matrix must be square with even, nonzero side; got " +
                                    std::to_string(data_.rows()) + "x" +
                                    std::to_string(data_.cols()));
        }
        if (!all_finite(data_)) throw ConstructionError("block matrix contains NaN or Inf");
        block_size_ = data_.rows() / 2;
    }

    Eigen::Index block_size() const noexcept { return block_size_; }
    const Matrix& data() const noexcept { return data_; }

    /// Block (row, col) with row, col in {1, 2}.
    auto block(int row, int col) const {
        return data_.block((row - 1) * block_size_, (col - 1) * block_size_, block_size_,
                           block_size_);
    }

    const Complex<Real>& operator()(Eigen::Index i, Eigen::Index j) const { return data_(i, j); }

private:
    Matrix data_;
    Eigen::Index block_size_ = 0;
};

template <typename Real>
BasicBlockMatrix<Real> make_block_matrix(const CMatrix<Real>& b11, const CMatrix<Real>& b12,
                                         const CMatrix<Real>& b21, const CMatrix<Real>& b22) {
    const Eigen::Index m = b11.rows();
    const std::array<std::pair<const CMatrix<Real>*, const char*>, 4> blocks = {
        {{&b11, "11"}, {&b12, "12"}, {&b21, "21"}, {&b22, "22"}}};
    for (const auto& [b, name] : blocks) {
        if (b->rows() != m || b->cols() != m || m == 0) {
            throw ConstructionError(std::string("block ") + name + " is " +
                                    std::to_string(b->rows()) + "x" + std::to_string(b->cols()) +
                                    ", expected " + std::to_string(m) + "x" + std::to_string(m));
        }
    }
    CMatrix<Real> data(2 * m, 2 * m);
    data << b11, b12, b21, b22;
    return BasicBlockMatrix<Real>(std::move(data));
}

/// Complex mode impedances (ohms) on each side of the network.
template <typename Real>
class BasicModeSpec {
public:
    using List = std::vector<Complex<Real>>;

    BasicModeSpec() = default;

    BasicModeSpec(List side1, List side2) : side1_(std::move(side1)), side2_(std::move(side2)) {
        if (side1_.empty() || side1_.size() != side2_.size()) {
            throw ConstructionError("mode lists must be nonempty and of equal length; got " +
                                    std::to_string(side1_.size()) + " and " +
                                    std::to_string(side2_.size()));
        }
        for (const List* list : {&side1_, &side2_}) {
            for (const auto& z : *list) {
                if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                    throw ConstructionError("mode impedance is not finite");
                }
                if (z == Complex<Real>(0)) throw ConstructionError("mode impedance is zero");
            }
        }
    }

    /// Same impedance z0 for all M modes on both sides.
    static BasicModeSpec uniform(Eigen::Index modes, Complex<Real> z0) {
        return BasicModeSpec(List(static_cast<std::size_t>(modes), z0),
                             List(static_cast<std::size_t>(modes), z0));
    }

    Eigen::Index modes() const noexcept { return static_cast<Eigen::Index>(side1_.size()); }
    const List& side1() const noexcept { return side1_; }
    const List& side2() const noexcept { return side2_; }
    const List& side(Side s) const noexcept { return s == Side::One ? side1_ : side2_; }

    friend bool operator==(const BasicModeSpec&, const BasicModeSpec&) = default;

private:
    List side1_;
    List side2_;
};

/// Diag of the mode impedances on one side.
template <typename Real>
CMatrix<Real> mode_impedance_matrix(const BasicModeSpec<Real>& spec, Side side) {
    const auto& list = spec.side(side);
    CMatrix<Real> z = CMatrix<Real>::Zero(spec.modes(), spec.modes());
    for (Eigen::Index m = 0; m < spec.modes(); ++m) z(m, m) = list[static_cast<std::size_t>(m)];
    return z;
}

/// Diag of the mode admittances 1/Z0 on one side.
template <typename Real>
CMatrix<Real> mode_admittance_matrix(const BasicModeSpec<Real>& spec, Side side) {
    const auto& list = spec.side(side);
    CMatrix<Real> y = CMatrix<Real>::Zero(spec.modes(), spec.modes());
    for (Eigen::Index m = 0; m < spec.modes(); ++m) {
        y(m, m) = Real(1) / list[static_cast<std::size_t>(m)];
    }
    return y;
}

/// A parameter matrix together with the context needed to convert it.
template <typename Real>
struct BasicNetworkMatrix {
    ParamKind kind = ParamKind::S;
    BasicBlockMatrix<Real> matrix;
    BasicModeSpec<Real> modes;
    std::optional<Real> frequency;

    BasicNetworkMatrix() = default;

    BasicNetworkMatrix(ParamKind k, BasicBlockMatrix<Real> mat, BasicModeSpec<Real> spec,
                       std::optional<Real> freq = std::nullopt)
        : kind(k), matrix(std::move(mat)), modes(std::move(spec)), frequency(freq) {
        if (matrix.block_size() != modes.modes()) {
            throw ConstructionError("matrix block size " + std::to_string(matrix.block_size()) +
                                    " does not match mode count " +
                                    std::to_string(modes.modes()));
        }
        if (frequency && !(std::isfinite(*frequency) && *frequency >= Real(0))) {
            throw ConstructionError("frequency must be finite and non-negative");
        }
    }

    Eigen::Index block_size() const noexcept { return matrix.block_size(); }
};

/// Canonical state coordinates [V1+; V1-; V2+; V2-], 4M entries.
template <typename Real>
class BasicStateVector {
public:
    explicit BasicStateVector(CVector<Real> coords) : coords_(std::move(coords)) {
        if (coords_.size() == 0 || coords_.size() % 4 != 0) {
            throw ConstructionError("state vector length must be a positive multiple of 4");
        }
    }

    const CVector<Real>& coords() const noexcept { return coords_; }
    Eigen::Index block_size() const noexcept { return coords_.size() / 4; }

private:
    CVector<Real> coords_;
};

using cdouble = Complex<double>;
using MatrixXcd = CMatrix<double>;
using VectorXcd = CVector<double>;
using BlockMatrix = BasicBlockMatrix<double>;
using ModeSpec = BasicModeSpec<double>;
using NetworkMatrix = BasicNetworkMatrix<double>;
using StateVector = BasicStateVector<double>;

/// Frobenius-norm relative difference |a - b| / |b|; absolute when b is zero.
template <typename DerivedA, typename DerivedB>
auto relative_error(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    const auto denom = b.norm();
    const auto diff = (a - b).norm();
    return denom > 0 ? diff / denom : diff;
}

}  // namespace mmnet
