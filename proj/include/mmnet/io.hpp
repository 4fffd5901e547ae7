#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mmnet/core.hpp"

namespace mmnet {

/// Frequency-ordered points sharing one parameter kind and mode specification.
class Sweep {
public:
    explicit Sweep(std::vector<NetworkMatrix> points);

    const std::vector<NetworkMatrix>& points() const noexcept { return points_; }
    ParamKind kind() const noexcept { return points_.front().kind; }
    const ModeSpec& modes() const noexcept { return points_.front().modes; }
    Eigen::Index block_size() const noexcept { return points_.front().block_size(); }
    std::size_t size() const noexcept { return points_.size(); }

private:
    std::vector<NetworkMatrix> points_;
};

/// How Touchstone ports map onto network sides.
///  blocked:     ports 1..M -> side 1, ports M+1..2M -> side 2
///  interleaved: odd ports -> side 1, even ports -> side 2
enum class PortOrder { Blocked, Interleaved };

/// Row/column of the network matrix that holds Touchstone port `port` (0-based).
Eigen::Index port_to_index(Eigen::Index port, Eigen::Index ports, PortOrder order);

/// Reads Touchstone v1 S-parameter data. `ports` comes from the .sNp extension
/// when known; otherwise it is inferred from the size of the first data block.
Sweep parse_touchstone(std::string_view text, std::optional<int> ports = std::nullopt,
                       PortOrder order = PortOrder::Blocked);

/// Port count encoded in a ".sNp" file name, if any.
std::optional<int> touchstone_ports_from_name(std::string_view path);

std::string write_touchstone(const Sweep& sweep, PortOrder order = PortOrder::Blocked);

Sweep parse_native(std::string_view text);
std::string write_native(const Sweep& sweep);

/// "a+bj" with 17 significant digits in both parts.
std::string format_complex(cdouble z);

/// Parses "a+bj", "a-bj", "bj" or a plain real; nullopt on malformed input.
std::optional<cdouble> parse_complex(std::string_view token);

}  // namespace mmnet
