#include "mmnet/io.hpp"

#include <fmt/format.h>

#include "text.hpp"

namespace mmnet {

Sweep::Sweep(std::vector<NetworkMatrix> points) : points_(std::move(points)) {
    if (points_.empty()) throw ConstructionError("sweep has no points");
    const auto& first = points_.front();
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const auto& p = points_[i];
        if (p.kind != first.kind) throw ConstructionError("sweep mixes parameter kinds");
        if (!(p.modes == first.modes)) throw ConstructionError("sweep mixes mode specifications");
        if (!p.frequency) throw ConstructionError("sweep point without a frequency");
        if (i > 0 && !(*p.frequency > *points_[i - 1].frequency)) {
            throw ConstructionError("sweep frequencies are not strictly increasing");
        }
    }
}

std::string format_complex(cdouble z) {
    // + 0.0 folds -0 into +0
    return fmt::format("{:.16e}{:+.16e}j", z.real() + 0.0, z.imag() + 0.0);
}

std::optional<cdouble> parse_complex(std::string_view token) {
    if (token.empty()) return std::nullopt;
    const char last = token.back();
    if (last != 'j' && last != 'J') {
        auto re = text::parse_double(token);
        if (!re) return std::nullopt;
        return cdouble(*re, 0.0);
    }
    token.remove_suffix(1);
    // The imaginary part starts at the last sign that is not an exponent sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = token.size(); i-- > 1;) {
        if ((token[i] == '+' || token[i] == '-') && token[i - 1] != 'e' && token[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos) {
        auto im = text::parse_double(token);
        if (!im) return std::nullopt;
        return cdouble(0.0, *im);
    }
    auto re = text::parse_double(token.substr(0, split));
    auto im = text::parse_double(token.substr(split));
    if (!re || !im) return std::nullopt;
    return cdouble(*re, *im);
}

}  // namespace mmnet
