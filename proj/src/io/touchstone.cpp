#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "mmnet/io.hpp"
#include "text.hpp"

namespace mmnet {

namespace {

enum class DataFormat { RI, MA, DB };

struct Options {
    double frequency_scale = 1e9;
    DataFormat format = DataFormat::MA;
    double reference = 50.0;
};

Options parse_options(const text::Line& line) {
    Options opts;
    const auto& tok = line.tokens;
    // tok[0] is "#", possibly glued to the first option
    std::vector<std::string> words;
    for (std::size_t i = 0; i < tok.size(); ++i) {
        std::string_view t = tok[i];
        if (i == 0) {
            t.remove_prefix(1);
            if (t.empty()) continue;
        }
        words.push_back(text::upper(t));
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
        const std::string& w = words[i];
        if (w == "HZ") {
            opts.frequency_scale = 1.0;
        } else if (w == "KHZ") {
            opts.frequency_scale = 1e3;
        } else if (w == "MHZ") {
            opts.frequency_scale = 1e6;
        } else if (w == "GHZ") {
            opts.frequency_scale = 1e9;
        } else if (w == "RI") {
            opts.format = DataFormat::RI;
        } else if (w == "MA") {
            opts.format = DataFormat::MA;
        } else if (w == "DB") {
            opts.format = DataFormat::DB;
        } else if (w == "S") {
            // the only parameter type we read
        } else if (w == "Y" || w == "Z" || w == "H" || w == "G") {
            throw Unsupported("line " + std::to_string(line.number) + ": Touchstone " + w +
                              "-parameter data is not supported, only S");
        } else if (w == "R") {
            if (i + 1 >= words.size()) throw ParseError(line.number, "option R without a value");
            auto r = text::parse_double(words[++i]);
            if (!r || *r == 0.0) throw ParseError(line.number, "invalid reference resistance");
            opts.reference = *r;
        } else {
            throw ParseError(line.number, "unknown option '" + w + "'");
        }
    }
    return opts;
}

cdouble decode(double a, double b, DataFormat format) {
    constexpr double deg = std::numbers::pi / 180.0;
    switch (format) {
        case DataFormat::RI: return {a, b};
        case DataFormat::MA: return std::polar(a, b * deg);
        case DataFormat::DB: return std::polar(std::pow(10.0, a / 20.0), b * deg);
    }
    return {};
}

// File entry k (0-based, in file order) -> (row, col) in port numbering.
std::pair<Eigen::Index, Eigen::Index> entry_position(std::size_t k, Eigen::Index ports) {
    const auto n = static_cast<std::size_t>(ports);
    if (ports == 2) {
        static constexpr std::pair<Eigen::Index, Eigen::Index> order[] = {
            {0, 0}, {1, 0}, {0, 1}, {1, 1}};
        return order[k];
    }
    return {static_cast<Eigen::Index>(k / n), static_cast<Eigen::Index>(k % n)};
}

struct Block {
    std::size_t line;
    std::vector<double> values;
};

int infer_ports(const std::vector<text::Line>& data) {
    std::size_t total = data.front().tokens.size();
    for (std::size_t i = 1; i < data.size() && data[i].tokens.size() % 2 == 0; ++i) {
        total += data[i].tokens.size();
    }
    const auto pairs = (total - 1) / 2;
    const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(pairs))));
    if (total % 2 == 0 || n * n != pairs || n == 0) {
        throw ParseError(data.front().number,
                         "cannot infer port count from a data block of " + std::to_string(total) +
                             " values");
    }
    return static_cast<int>(n);
}

}  // namespace

Eigen::Index port_to_index(Eigen::Index port, Eigen::Index ports, PortOrder order) {
    if (order == PortOrder::Blocked) return port;
    const Eigen::Index m = ports / 2;
    return port % 2 == 0 ? port / 2 : m + port / 2;
}

std::optional<int> touchstone_ports_from_name(std::string_view path) {
    const auto dot = path.rfind('.');
    if (dot == std::string_view::npos) return std::nullopt;
    const std::string ext = text::upper(path.substr(dot + 1));
    if (ext.size() < 3 || ext.front() != 'S' || ext.back() != 'P') return std::nullopt;
    int ports = 0;
    for (std::size_t i = 1; i + 1 < ext.size(); ++i) {
        if (ext[i] < '0' || ext[i] > '9') return std::nullopt;
        ports = ports * 10 + (ext[i] - '0');
    }
    return ports;
}

Sweep parse_touchstone(std::string_view text, std::optional<int> ports, PortOrder order) {
    const auto lines = text::tokenize(text, '!');
    Options opts;
    bool have_options = false;
    std::vector<text::Line> data;
    for (const auto& line : lines) {
        if (line.tokens.front().front() == '#') {
            if (!data.empty()) throw ParseError(line.number, "option line after data");
            // only the first option line counts
            if (!have_options) opts = parse_options(line);
            have_options = true;
        } else if (line.tokens.front().front() == '[') {
            throw Unsupported("line " + std::to_string(line.number) +
                              ": Touchstone v2 keywords are not supported");
        } else {
            data.push_back(line);
        }
    }
    if (data.empty()) {
        throw ParseError(lines.empty() ? 1 : lines.back().number, "no network data");
    }

    const int n = ports ? *ports : infer_ports(data);
    if (n <= 0) throw ParseError(data.front().number, "invalid port count");
    if (n % 2 != 0) {
        throw UnsupportedTopology(std::to_string(n) +
                                  "-port data cannot be split into two equal sides");
    }
    const std::size_t block_len = 1 + 2 * static_cast<std::size_t>(n) * n;

    std::vector<Block> blocks;
    for (const auto& line : data) {
        if (blocks.empty() || blocks.back().values.size() == block_len) {
            blocks.push_back({line.number, {}});
            blocks.back().values.reserve(block_len);
        }
        auto& block = blocks.back();
        if (block.values.size() + line.tokens.size() > block_len) {
            throw ParseError(line.number, "wrong number of values for a " + std::to_string(n) +
                                              "-port frequency point");
        }
        for (auto tok : line.tokens) {
            auto v = text::parse_double(tok);
            if (!v) throw ParseError(line.number, "not a number: '" + std::string(tok) + "'");
            block.values.push_back(*v);
        }
    }
    if (blocks.back().values.size() != block_len) {
        throw ParseError(blocks.back().line, "incomplete frequency point: expected " +
                                                 std::to_string(block_len) + " values, got " +
                                                 std::to_string(blocks.back().values.size()));
    }

    const Eigen::Index m = n / 2;
    const ModeSpec modes = ModeSpec::uniform(m, cdouble(opts.reference, 0.0));
    std::vector<NetworkMatrix> points;
    points.reserve(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto& v = blocks[b].values;
        const double f = v[0] * opts.frequency_scale;
        if (f < 0.0) throw ParseError(blocks[b].line, "negative frequency");
        if (!points.empty() && !(f > *points.back().frequency)) {
            throw ParseError(blocks[b].line, "frequencies are not strictly increasing");
        }
        MatrixXcd s(n, n);
        for (std::size_t k = 0; k < static_cast<std::size_t>(n) * n; ++k) {
            const auto [row, col] = entry_position(k, n);
            const cdouble value = decode(v[1 + 2 * k], v[2 + 2 * k], opts.format);
            if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
                throw ParseError(blocks[b].line, "value overflows");
            }
            s(port_to_index(row, n, order), port_to_index(col, n, order)) = value;
        }
        points.emplace_back(ParamKind::S, BlockMatrix(std::move(s)), modes, f);
    }
    return Sweep(std::move(points));
}

std::string write_touchstone(const Sweep& sweep, PortOrder order) {
    if (sweep.kind() != ParamKind::S) {
        throw UnsupportedExport("Touchstone export needs S parameters, sweep holds " +
                                std::string(kind_name(sweep.kind())));
    }
    const cdouble z0 = sweep.modes().side1().front();
    for (const auto* side : {&sweep.modes().side1(), &sweep.modes().side2()}) {
        for (const auto& z : *side) {
            if (z != z0) throw UnsupportedExport("Touchstone export needs one common reference impedance");
        }
    }
    if (z0.imag() != 0.0) throw UnsupportedExport("Touchstone export needs a real reference impedance");

    const Eigen::Index n = 2 * sweep.block_size();
    std::string out = "! mmnet Touchstone export\n";
    out += fmt::format("# HZ S RI R {}\n", z0.real());
    for (const auto& point : sweep.points()) {
        const auto& s = point.matrix.data();
        auto entry = [&](Eigen::Index row, Eigen::Index col) {
            const cdouble v = s(port_to_index(row, n, order), port_to_index(col, n, order));
            return fmt::format(" {:.16e} {:.16e}", v.real() + 0.0, v.imag() + 0.0);
        };
        out += fmt::format("{:.16e}", *point.frequency);
        if (n == 2) {
            out += entry(0, 0) + entry(1, 0) + entry(0, 1) + entry(1, 1) + "\n";
            continue;
        }
        for (Eigen::Index row = 0; row < n; ++row) {
            for (Eigen::Index col = 0; col < n; ++col) {
                if (col > 0 && col % 4 == 0) out += "\n";
                out += entry(row, col);
            }
            out += "\n";
        }
    }
    return out;
}

}  // namespace mmnet
