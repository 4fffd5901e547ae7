#pragma once

#include <cmath>
#include <vector>

#include "mmnet/conversion.hpp"

namespace mmnet {

/// Relative tolerance for impedance equality at a junction.
inline constexpr double kJunctionTolerance = 1e-12;

namespace detail {

template <typename Real>
void check_junction(const BasicNetworkMatrix<Real>& first, const BasicNetworkMatrix<Real>& second) {
    const auto& out = first.modes.side2();
    const auto& in = second.modes.side1();
    if (out.size() != in.size()) {
        throw InterfaceMismatch("junction mode count differs: " + std::to_string(out.size()) +
                                " vs " + std::to_string(in.size()));
    }
    for (std::size_t m = 0; m < out.size(); ++m) {
        if (std::abs(out[m] - in[m]) > Real(kJunctionTolerance) * std::abs(in[m])) {
            throw InterfaceMismatch("junction impedance of mode " + std::to_string(m + 1) +
                                    " differs");
        }
    }
    if (first.frequency && second.frequency && *first.frequency != *second.frequency) {
        throw InterfaceMismatch("networks are at different frequencies");
    }
}

}  // namespace detail

/// Joins side 2 of `first` to side 1 of `second` by multiplying chain-type
/// matrices (`via` is T or ABCD) and converts the product to `output_kind`.
template <typename Real>
BasicNetworkMatrix<Real> cascade(const BasicNetworkMatrix<Real>& first,
                                 const BasicNetworkMatrix<Real>& second,
                                 ParamKind via = ParamKind::T,
                                 ParamKind output_kind = ParamKind::S) {
    if (via != ParamKind::T && via != ParamKind::ABCD) {
        throw ConstructionError("cascade must go via T or ABCD, not " +
                                std::string(kind_name(via)));
    }
    detail::check_junction(first, second);
    const auto a = convert(first, via).network;
    const auto b = convert(second, via).network;
    BasicModeSpec<Real> modes(first.modes.side1(), second.modes.side2());
    const auto frequency = first.frequency ? first.frequency : second.frequency;
    BasicNetworkMatrix<Real> product(via, BasicBlockMatrix<Real>(a.matrix.data() * b.matrix.data()),
                                     std::move(modes), frequency);
    return convert(product, output_kind).network;
}

/// Left-to-right cascade of a chain of sections.
template <typename Real>
BasicNetworkMatrix<Real> cascade_chain(const std::vector<BasicNetworkMatrix<Real>>& sections,
                                       ParamKind via = ParamKind::T,
                                       ParamKind output_kind = ParamKind::S) {
    if (sections.empty()) throw ConstructionError("cannot cascade an empty chain");
    if (sections.size() == 1) return convert(sections.front(), output_kind).network;
    BasicNetworkMatrix<Real> acc = sections.front();
    for (std::size_t i = 1; i < sections.size(); ++i) {
        acc = cascade(acc, sections[i], via, i + 1 == sections.size() ? output_kind : via);
    }
    return acc;
}

}  // namespace mmnet
