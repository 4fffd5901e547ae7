// mmnet: convert, cascade and validate multimode network parameter files.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "mmnet/cascade.hpp"
#include "mmnet/conversion.hpp"
#include "mmnet/io.hpp"
#include "mmnet/testkit.hpp"

namespace {

using namespace mmnet;

constexpr const char* kVersion = "mmnet 1.0.0";

enum Exit : int {
    kOk = 0,
    kIoError = 1,
    kParseError = 2,
    kSingular = 3,
    kInterfaceMismatch = 4,
    kValidationFailed = 5,
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class FileFormat { Touchstone, Native };

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("error reading '" + path + "'");
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    out.close();
    if (!out) throw IoError("error writing '" + path + "'");
}

FileFormat resolve_format(const std::string& flag, const std::string& path) {
    if (flag == "touchstone") return FileFormat::Touchstone;
    if (flag == "native") return FileFormat::Native;
    return touchstone_ports_from_name(path) ? FileFormat::Touchstone : FileFormat::Native;
}

PortOrder resolve_order(const std::string& flag) {
    return flag == "interleaved" ? PortOrder::Interleaved : PortOrder::Blocked;
}

ParamKind resolve_kind(const std::string& flag) { return *parse_kind(flag); }

Sweep load(const std::string& path, const std::string& format_flag, PortOrder order) {
    const std::string text = read_file(path);
    if (resolve_format(format_flag, path) == FileFormat::Touchstone) {
        return parse_touchstone(text, touchstone_ports_from_name(path), order);
    }
    return parse_native(text);
}

void save(const std::string& path, const Sweep& sweep, const std::string& format_flag,
          PortOrder order) {
    const bool touchstone = resolve_format(format_flag, path) == FileFormat::Touchstone;
    write_file(path, touchstone ? write_touchstone(sweep, order) : write_native(sweep));
}

std::string hz(double f) { return fmt::format("{:.9g} Hz", f); }

// Maps library exceptions onto the exit-code contract.
template <typename Fn>
int guarded(Fn&& body) {
    try {
        return body();
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const UnsupportedExport& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const UnsupportedTopology& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const Unsupported& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const InterfaceMismatch& e) {
        std::cerr << "interface mismatch: " << e.what() << '\n';
        return kInterfaceMismatch;
    } catch (const SingularLowerHalf& e) {
        std::cerr << "singular: " << e.what() << '\n';
        return kSingular;
    } catch (const NetworkError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParseError;
    }
}

struct ConvertArgs {
    std::string in, out, to, in_format, out_format, port_order = "blocked";
    bool verbose = false;
    bool skip_singular = false;
};

int cmd_convert(const ConvertArgs& args) {
    return guarded([&] {
        const PortOrder order = resolve_order(args.port_order);
        const Sweep sweep = load(args.in, args.in_format, order);
        const ParamKind target = resolve_kind(args.to);
        std::vector<NetworkMatrix> out;
        for (const auto& point : sweep.points()) {
            try {
                auto result = convert(point, target);
                if (args.verbose) {
                    std::cerr << fmt::format("{}: {} -> {} condition {:.3e}\n", hz(*point.frequency),
                                             kind_name(result.report.source_kind),
                                             kind_name(result.report.target_kind),
                                             result.report.lower_half_condition);
                }
                out.push_back(std::move(result.network));
            } catch (const SingularLowerHalf& e) {
                if (!args.skip_singular) {
                    std::cerr << "singular at " << hz(*point.frequency) << ": " << e.what() << '\n';
                    return static_cast<int>(kSingular);
                }
                std::cerr << "warning: dropping " << hz(*point.frequency) << ": " << e.what()
                          << '\n';
            }
        }
        if (out.empty()) {
            std::cerr << "singular: no frequency point has a " << kind_name(target)
                      << " representation\n";
            return static_cast<int>(kSingular);
        }
        save(args.out, Sweep(std::move(out)), args.out_format, order);
        return static_cast<int>(kOk);
    });
}

struct CascadeArgs {
    std::vector<std::string> in;
    std::string out, via = "T", to = "S", out_format, port_order = "blocked";
};

int cmd_cascade(const CascadeArgs& args) {
    return guarded([&] {
        const PortOrder order = resolve_order(args.port_order);
        std::vector<Sweep> sweeps;
        for (const auto& path : args.in) sweeps.push_back(load(path, "", order));
        const auto& grid = sweeps.front().points();
        for (const auto& s : sweeps) {
            bool same = s.size() == grid.size();
            for (std::size_t i = 0; same && i < grid.size(); ++i) {
                same = *s.points()[i].frequency == *grid[i].frequency;
            }
            if (!same) throw InterfaceMismatch("input files have different frequency grids");
        }
        const ParamKind via = resolve_kind(args.via);
        const ParamKind target = resolve_kind(args.to);
        std::vector<NetworkMatrix> out;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            std::vector<NetworkMatrix> chain;
            for (const auto& s : sweeps) chain.push_back(s.points()[i]);
            try {
                out.push_back(cascade_chain(chain, via, target));
            } catch (const SingularLowerHalf& e) {
                std::cerr << "singular at " << hz(*grid[i].frequency) << ": " << e.what() << '\n';
                return static_cast<int>(kSingular);
            }
        }
        save(args.out, Sweep(std::move(out)), args.out_format, order);
        return static_cast<int>(kOk);
    });
}

constexpr double kResidualLimit = 1e-10;

bool validate_file(const Sweep& sweep) {
    bool ok = true;
    std::uint64_t seed = 1;
    for (const auto& point : sweep.points()) {
        const auto states = testkit::sample_states(point, 8, seed++);
        std::string line = hz(*point.frequency) + ":";
        for (ParamKind kind : kAllKinds) {
            auto attempt = try_convert(point, kind);
            if (!attempt.network) {
                line += fmt::format(" {}=n/a", kind_name(kind));
                continue;
            }
            const double r = verify_defining_relation(*attempt.network, states);
            if (!(r <= kResidualLimit)) ok = false;
            line += fmt::format(" {}={:.2e}", kind_name(kind), r);
        }
        std::cout << line << '\n';
    }
    return ok;
}

bool self_test(int trials, std::uint64_t seed) {
    int failures = 0;
    auto check = [&](bool pass, const std::string& what) {
        if (!pass) {
            ++failures;
            std::cout << "FAIL " << what << '\n';
        }
    };
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(t);
        const Eigen::Index m = 1 + t % 3;
        const ParamKind kind = kAllKinds[static_cast<std::size_t>(t) % kAllKinds.size()];
        const auto net = testkit::random_network(kind, m, s, 1e6);
        const auto states = testkit::sample_states(net, 4, s);
        for (ParamKind target : kAllKinds) {
            const auto there = convert(net, target).network;
            const auto back = convert(there, kind).network;
            check(relative_error(back.matrix.data(), net.matrix.data()) <= 1e-10,
                  fmt::format("round trip {}->{} seed {}", kind_name(kind), kind_name(target), s));
            check(verify_defining_relation(there, states) <= 1e-10,
                  fmt::format("solution space {}->{} seed {}", kind_name(kind), kind_name(target),
                              s));
        }
        const ModeSpec real50 = ModeSpec::uniform(1, 50.0);
        const auto mono = testkit::random_network(kind, real50, s, 1e6);
        for (ParamKind target : kAllKinds) {
            if (!testkit::monomode_supported(kind, target)) continue;
            const auto expected = testkit::oracle_monomode(mono, target);
            check(relative_error(convert(mono, target).network.matrix.data(),
                                 expected.matrix.data()) <= 1e-12,
                  fmt::format("monomode {}->{} seed {}", kind_name(kind), kind_name(target), s));
        }
        testkit::Rng rng(s);
        const ModeSpec left = testkit::random_modes(m, rng);
        const ModeSpec right = testkit::random_modes(m, rng);
        const auto a = testkit::random_network(ParamKind::S, left, s, 1e6);
        const auto b =
            testkit::random_network(ParamKind::S, ModeSpec(left.side2(), right.side2()), s + 1, 1e6);
        check(relative_error(cascade(a, b).matrix.data(),
                             testkit::redheffer_star(a, b).matrix.data()) <= 1e-9,
              fmt::format("cascade vs star product seed {}", s));
    }
    std::cout << fmt::format("self-test: {} trials, {} failures\n", trials, failures);
    return failures == 0;
}

struct ValidateArgs {
    std::string in, in_format, port_order = "blocked";
    bool self_test = false;
    int trials = 20;
    std::uint64_t seed = 1;
};

int cmd_validate(const ValidateArgs& args) {
    return guarded([&] {
        bool ok = true;
        if (!args.in.empty()) {
            const Sweep sweep = load(args.in, args.in_format, resolve_order(args.port_order));
            std::cout << fmt::format("{}: {} points, kind {}, M = {}\n", args.in, sweep.size(),
                                     kind_name(sweep.kind()), sweep.block_size());
            ok = validate_file(sweep) && ok;
        }
        if (args.self_test) ok = self_test(args.trials, args.seed) && ok;
        std::cout << (ok ? "all invariants hold\n" : "invariant violations found\n");
        return static_cast<int>(ok ? kOk : kValidationFailed);
    });
}

int cmd_rules() {
    int count = 0;
    for (ParamKind from : kAllKinds) {
        for (ParamKind to : kAllKinds) {
            if (from == to) continue;
            std::cout << fmt::format("{:>4} -> {:<4} direct\n", kind_name(from), kind_name(to));
            ++count;
        }
    }
    std::cout << count << " conversion rules\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conversion between multimode network parameter matrices", "mmnet"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    const std::vector<std::string> kinds = {"S", "T", "ABCD", "Z", "Y", "H"};
    const auto kind_check = CLI::IsMember(kinds, CLI::ignore_case);
    const auto format_check = CLI::IsMember({"touchstone", "native"});
    const auto order_check = CLI::IsMember({"blocked", "interleaved"});

    ConvertArgs conv;
    auto* convert_cmd = app.add_subcommand("convert", "Convert a file to another parameter kind");
    convert_cmd->add_option("--in", conv.in, "Input file")->required();
    convert_cmd->add_option("--out", conv.out, "Output file")->required();
    convert_cmd->add_option("--to", conv.to, "Target kind")->required()->check(kind_check);
    convert_cmd->add_option("--in-format", conv.in_format, "Input format")->check(format_check);
    convert_cmd->add_option("--out-format", conv.out_format, "Output format")->check(format_check);
    convert_cmd->add_option("--port-order", conv.port_order, "Touchstone port mapping")
        ->check(order_check);
    convert_cmd->add_flag("--verbose", conv.verbose, "Report per-point condition numbers");
    convert_cmd->add_flag("--skip-singular", conv.skip_singular,
                          "Drop points without a target representation");

    CascadeArgs casc;
    auto* cascade_cmd = app.add_subcommand("cascade", "Cascade two or more files");
    cascade_cmd->add_option("--in", casc.in, "Input files, in signal order")
        ->required()
        ->expected(2, 64);
    cascade_cmd->add_option("--out", casc.out, "Output file")->required();
    cascade_cmd->add_option("--via", casc.via, "Chain representation")
        ->check(CLI::IsMember({"T", "ABCD"}, CLI::ignore_case));
    cascade_cmd->add_option("--to", casc.to, "Output kind")->check(kind_check);
    cascade_cmd->add_option("--out-format", casc.out_format, "Output format")->check(format_check);
    cascade_cmd->add_option("--port-order", casc.port_order, "Touchstone port mapping")
        ->check(order_check);

    ValidateArgs val;
    auto* validate_cmd = app.add_subcommand("validate", "Check file invariants and residuals");
    validate_cmd->add_option("--in", val.in, "Input file");
    validate_cmd->add_option("--in-format", val.in_format, "Input format")->check(format_check);
    validate_cmd->add_option("--port-order", val.port_order, "Touchstone port mapping")
        ->check(order_check);
    validate_cmd->add_flag("--self-test", val.self_test, "Run the built-in oracle checks");
    validate_cmd->add_option("--trials", val.trials, "Self-test trials")->check(CLI::PositiveNumber);
    validate_cmd->add_option("--seed", val.seed, "Self-test seed");

    auto* rules_cmd = app.add_subcommand("rules", "List the supported conversion rules");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParseError;
    }

    if (*convert_cmd) return cmd_convert(conv);
    if (*cascade_cmd) return cmd_cascade(casc);
    if (*validate_cmd) {
        if (val.in.empty() && !val.self_test) {
            std::cerr << "validate: give --in, --self-test or both\n";
            return kParseError;
        }
        return cmd_validate(val);
    }
    if (*rules_cmd) return cmd_rules();
    return kParseError;
}
