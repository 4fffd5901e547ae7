#pragma once

#include <limits>
#include <optional>
#include <vector>
#include <string>

#include "mmnet/basis.hpp"

namespace mmnet {

/// Lower halves with a larger 2-norm condition number are treated as singular.
inline constexpr double kSingularConditionThreshold = 1e12;

struct ConversionReport {
    ParamKind source_kind;
    ParamKind target_kind;
    double lower_half_condition = 1.0;
    bool succeeded = false;
};

template <typename Real>
struct BasicConversion {
    BasicNetworkMatrix<Real> network;
    ConversionReport report;
};

template <typename Real>
struct BasicConversionAttempt {
    std::optional<BasicNetworkMatrix<Real>> network;
    ConversionReport report;
};

/// Exact 2-norm condition number via SVD; infinity for a singular matrix.
template <typename Derived>
double condition_number(const Eigen::MatrixBase<Derived>& m) {
    using Matrix = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    Eigen::JacobiSVD<Matrix> svd(m.eval());
    const auto& sv = svd.singularValues();
    const double largest = static_cast<double>(sv(0));
    const double smallest = static_cast<double>(sv(sv.size() - 1));
    if (!(smallest > 0.0) || !std::isfinite(largest)) {
        return std::numeric_limits<double>::infinity();
    }
    return largest / smallest;
}

template <typename Real>
struct BasisSolve {
    std::optional<CMatrix<Real>> matrix;
    double condition;
};

/// Upper half times inverse of lower half of `basis` written in `target`
/// coordinates. `matrix` is empty when the lower half is singular.
template <typename Real>
BasisSolve<Real> solve_basis(const BasicBasis<Real>& basis, ParamKind target,
                             const BasicModeSpec<Real>& modes,
                             double threshold = kSingularConditionThreshold) {
    const BasicBasis<Real> in_target = express_in(basis, target, modes);
    const CMatrix<Real> lower = in_target.lower_half();
    const double cond = condition_number(lower);
    if (!(cond <= threshold)) return {std::nullopt, cond};
    // N = U L^-1, solved as L^T N^T = U^T.
    // Column scaling is a right factor on the basis, so N is unchanged.
    CMatrix<Real> scaled_lower = lower;
    CMatrix<Real> scaled_upper = in_target.upper_half();
    for (Eigen::Index j = 0; j < lower.cols(); ++j) {
        const Real s = scaled_lower.col(j).cwiseAbs().maxCoeff();
        if (s > Real(0)) {
            scaled_lower.col(j) /= s;
            scaled_upper.col(j) /= s;
        }
    }
    const auto lu = scaled_lower.transpose().partialPivLu();
    CMatrix<Real> result = lu.solve(scaled_upper.transpose()).transpose();
    const CMatrix<Real> residual = scaled_upper - result * scaled_lower;
    result += lu.solve(residual.transpose()).transpose();
    if (!all_finite(result)) return {std::nullopt, std::numeric_limits<double>::infinity()};
    return {std::move(result), cond};
}

/// Condition number of the lower half that converting `input` to `target` inverts.
template <typename Real>
double lower_half_condition(const BasicNetworkMatrix<Real>& input, ParamKind target) {
    if (input.kind == target) return 1.0;
    const auto basis = express_in(seed_basis(input), target, input.modes);
    return condition_number(basis.lower_half());
}

/// Non-throwing conversion; `network` is empty when the target does not exist.
template <typename Real>
BasicConversionAttempt<Real> try_convert(const BasicNetworkMatrix<Real>& input, ParamKind target,
                                         double threshold = kSingularConditionThreshold) {
    ConversionReport report{input.kind, target, 1.0, true};
    if (input.kind == target) return {input, report};
    auto solved = solve_basis(seed_basis(input), target, input.modes, threshold);
    report.lower_half_condition = solved.condition;
    report.succeeded = solved.matrix.has_value();
    if (!solved.matrix) return {std::nullopt, report};
    return {BasicNetworkMatrix<Real>(target, BasicBlockMatrix<Real>(std::move(*solved.matrix)),
                                     input.modes, input.frequency),
            report};
}

/// Converts a network matrix to another parameter kind in one step.
/// Throws SingularLowerHalf when the target representation does not exist.
template <typename Real>
BasicConversion<Real> convert(const BasicNetworkMatrix<Real>& input, ParamKind target,
                              double threshold = kSingularConditionThreshold) {
    auto attempt = try_convert(input, target, threshold);
    if (!attempt.network) {
        std::string msg = "no " + std::string(kind_name(target)) + " representation for this " +
                          std::string(kind_name(input.kind)) +
                          " matrix: lower half is singular (condition " +
                          std::to_string(attempt.report.lower_half_condition) + ")";
        if (input.kind == ParamKind::S && target == ParamKind::T) msg += "; S21 is singular";
        throw SingularLowerHalf(msg, attempt.report.lower_half_condition);
    }
    return {std::move(*attempt.network), attempt.report};
}

/// Direct conversion with no intermediate kinds; same result as convert().
template <typename Real>
BasicNetworkMatrix<Real> convert_path_free(const BasicNetworkMatrix<Real>& input,
                                           ParamKind target) {
    return convert(input, target).network;
}

/// Largest relative residual of the defining equation over the given
/// canonical-coordinate states.
template <typename Real>
Real verify_defining_relation(const BasicNetworkMatrix<Real>& net,
                              const std::vector<BasicStateVector<Real>>& states) {
    const Eigen::Index n = 2 * net.block_size();
    const CMatrix<Real> from = coord_system(net.kind, net.modes).from_canonical;
    Real worst = 0;
    for (const auto& state : states) {
        if (state.coords().size() != 2 * n) {
            throw ConstructionError("state has " + std::to_string(state.coords().size()) +
                                    " components, expected " + std::to_string(2 * n));
        }
        const CVector<Real> k = from * state.coords();
        const CVector<Real> upper = k.head(n);
        const CVector<Real> mapped = net.matrix.data() * k.tail(n);
        const Real denom = upper.norm() + mapped.norm() + std::numeric_limits<Real>::min();
        worst = std::max(worst, Real((upper - mapped).norm() / denom));
    }
    return worst;
}

using Conversion = BasicConversion<double>;
using ConversionAttempt = BasicConversionAttempt<double>;

}  // namespace mmnet
