#include <cmath>

#include <fmt/format.h>

#include "mmnet/io.hpp"
#include "text.hpp"

namespace mmnet {

namespace {

class NativeReader {
public:
    explicit NativeReader(std::string_view text) : lines_(text::tokenize(text, '#')) {}

    Sweep read() {
        const auto& header = next("header");
        if (header.tokens.size() != 2 || header.tokens[0] != "mmnet" || header.tokens[1] != "v1") {
            throw ParseError(header.number, "expected header 'mmnet v1'");
        }

        const auto& kind_line = keyword("kind", 2);
        const auto kind = parse_kind(kind_line.tokens[1]);
        if (!kind) {
            throw ParseError(kind_line.number,
                             "unknown kind '" + std::string(kind_line.tokens[1]) + "'");
        }

        const auto& modes_line = keyword("modes", 2);
        const auto m_value = text::parse_double(modes_line.tokens[1]);
        if (!m_value || *m_value < 1 || *m_value != std::floor(*m_value) || *m_value > 4096) {
            throw ParseError(modes_line.number, "modes must be a positive integer");
        }
        const auto m = static_cast<std::size_t>(*m_value);

        auto z1 = impedances("z1", m);
        auto z2 = impedances("z2", m);
        const ModeSpec modes = [&] {
            try {
                return ModeSpec(std::move(z1), std::move(z2));
            } catch (const ConstructionError& e) {
                throw ParseError(modes_line.number, e.what());
            }
        }();

        const auto n = static_cast<Eigen::Index>(2 * m);
        std::vector<NetworkMatrix> points;
        while (pos_ < lines_.size()) {
            const auto& f_line = keyword("f", 2);
            const auto f = text::parse_double(f_line.tokens[1]);
            if (!f || *f < 0.0) throw ParseError(f_line.number, "invalid frequency");
            if (!points.empty() && !(*f > *points.back().frequency)) {
                throw ParseError(f_line.number, "frequencies are not strictly increasing");
            }
            MatrixXcd data(n, n);
            for (Eigen::Index row = 0; row < n; ++row) {
                const auto& line = next("matrix row");
                if (static_cast<Eigen::Index>(line.tokens.size()) != n) {
                    throw ParseError(line.number, "matrix row has " +
                                                      std::to_string(line.tokens.size()) +
                                                      " entries, expected " + std::to_string(n));
                }
                for (Eigen::Index col = 0; col < n; ++col) {
                    data(row, col) = complex_at(line, static_cast<std::size_t>(col));
                }
            }
            points.emplace_back(*kind, BlockMatrix(std::move(data)), modes, *f);
        }
        if (points.empty()) {
            throw ParseError(lines_.empty() ? 1 : lines_.back().number, "no frequency points");
        }
        return Sweep(std::move(points));
    }

private:
    const text::Line& next(const char* what) {
        if (pos_ >= lines_.size()) {
            throw ParseError(lines_.empty() ? 1 : lines_.back().number,
                             std::string("unexpected end of input, expected ") + what);
        }
        return lines_[pos_++];
    }

    // `tokens` == 0 accepts any count.
    const text::Line& keyword(std::string_view word, std::size_t tokens) {
        const auto& line = next(std::string(word).c_str());
        if (line.tokens.front() != word) {
            throw ParseError(line.number, "expected '" + std::string(word) + "', found '" +
                                              std::string(line.tokens.front()) + "'");
        }
        if (tokens != 0 && line.tokens.size() != tokens) {
            throw ParseError(line.number, "malformed '" + std::string(word) + "' line");
        }
        return line;
    }

    std::vector<cdouble> impedances(std::string_view word, std::size_t m) {
        const auto& line = keyword(word, 0);
        if (line.tokens.size() != m + 1) {
            throw ParseError(line.number, std::string(word) + " lists " +
                                              std::to_string(line.tokens.size() - 1) +
                                              " impedances, expected " + std::to_string(m));
        }
        std::vector<cdouble> out;
        for (std::size_t i = 0; i < m; ++i) out.push_back(complex_at(line, i + 1));
        return out;
    }

    static cdouble complex_at(const text::Line& line, std::size_t index) {
        auto z = parse_complex(line.tokens[index]);
        if (!z) {
            throw ParseError(line.number,
                             "invalid complex number '" + std::string(line.tokens[index]) + "'");
        }
        return *z;
    }

    std::vector<text::Line> lines_;
    std::size_t pos_ = 0;
};

}  // namespace

Sweep parse_native(std::string_view text) { return NativeReader(text).read(); }

std::string write_native(const Sweep& sweep) {
    std::string out = "mmnet v1\n";
    out += fmt::format("kind {}\n", kind_name(sweep.kind()));
    out += fmt::format("modes {}\n", sweep.block_size());
    for (int s = 1; s <= 2; ++s) {
        out += fmt::format("z{}", s);
        for (const auto& z : sweep.modes().side(s == 1 ? Side::One : Side::Two)) {
            out += ' ';
            out += format_complex(z);
        }
        out += '\n';
    }
    for (const auto& point : sweep.points()) {
        out += fmt::format("f {:.16e}\n", *point.frequency);
        const auto& data = point.matrix.data();
        for (Eigen::Index row = 0; row < data.rows(); ++row) {
            for (Eigen::Index col = 0; col < data.cols(); ++col) {
                if (col > 0) out += ' ';
                out += format_complex(data(row, col));
            }
            out += '\n';
        }
    }
    return out;
}

}  // namespace mmnet
