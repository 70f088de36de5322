#include "cli.hpp"

#include "mocs/enumeration.hpp"
#include "mocs/error.hpp"
#include "mocs/family_io.hpp"
#include "mocs/verification.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

namespace mocs::cli {

namespace {

struct ConstructArgs {
    unsigned q = 0;
    unsigned m = 0;
    unsigned t = 0;
    std::string parts;
    std::string g;
    std::string method;
    std::string out_path;
};

struct VerifyArgs {
    std::string path;
    std::string mode;
    double tolerance = ZeroTestMode{}.tolerance;
};

struct EnumerateArgs {
    unsigned q = 2;
    unsigned max_m = 6;
    std::size_t max_length = std::numeric_limits<std::size_t>::max();
    unsigned check_table = 0;
    std::string format = "table";
    bool no_verify = false;
};

struct SequenceArgs {
    unsigned q = 0;
    unsigned m = 0;
    std::string f;
    std::size_t length = 0;
};

std::optional<ZeroTestMode> parse_mode(const std::string& name, double tolerance) {
    if (name == "exact") return ZeroTestMode::exact();
    if (name == "float") return ZeroTestMode::floating(tolerance);
    return std::nullopt;
}

int construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
    const PartitionPlan plan(a.m, parse_parts(a.parts), a.t);
    std::vector<Symbol> g;
    if (!a.g.empty()) g = parse_symbol_list(a.g);
    const Symbol q = a.q;

    std::optional<FamilyFile> file;
    if (a.method == "gcs") {
        ComplementarySet set = build_gcs_theorem1(q, plan, g);
        std::vector<Symbol> echoed = g.empty() ? std::vector<Symbol>(plan.m() + 1, 0) : g;
        file = FamilyFile{FamilyKind::gcs,
                          MocsFamily({std::move(set)}, ConstructionParameters{Construction::theorem1, q, plan, echoed})};
    } else if (a.method == "mocs") {
        file = FamilyFile{FamilyKind::mocs, build_mocs_theorem2(q, plan, g)};
    } else {
        file = FamilyFile{FamilyKind::mocs, build_mocs_corollary1(q, plan, g)};
    }

    std::ostringstream summary;
    summary << "(M, N, L) = (" << file->family.set_size() << ", " << file->family.flock_size() << ", "
            << file->family.length() << ")\n";
    if (a.out_path.empty()) {
        write_family_file(out, *file);
        err << summary.str();
        return kExitOk;
    }
    std::ofstream stream(a.out_path, std::ios::binary);
    if (!stream) {
        err << "cannot open " << a.out_path << " for writing\n";
        return kExitNoInput;
    }
    write_family_file(stream, *file);
    stream.close();
    if (!stream) {
        err << "failed writing " << a.out_path << '\n';
        return kExitNoInput;
    }
    out << summary.str();
    return kExitOk;
}

int verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    std::string mode_name = a.mode;
    if (mode_name.empty()) {
        const char* env = std::getenv("MOCS_FORGE_MODE");
        mode_name = env && *env ? env : "exact";
    }
    const auto mode = parse_mode(mode_name, a.tolerance);
    if (!mode) {
        err << "unknown zero-test mode '" << mode_name << "'; expected exact or float\n";
        return kExitUsage;
    }

    std::ifstream stream(a.path, std::ios::binary);
    if (!stream) {
        err << "cannot open " << a.path << '\n';
        return kExitNoInput;
    }
    std::optional<FamilyFile> file;
    try {
        file = read_family_file(stream);
    } catch (const ParseError& e) {
        err << a.path << ": " << e.what() << '\n';
        return kExitData;
    } catch (const DomainError& e) {
        err << a.path << ": " << e.what() << '\n';
        return kExitData;
    }

    const VerificationReport report = file->kind == FamilyKind::gcs ? verify_gcs(file->family[0], *mode)
                                                                     : verify_mocs(file->family, *mode);
    out << format_report(report, &*file);
    return report.passed ? kExitOk : kExitFailed;
}

int enumerate(const EnumerateArgs& a, std::ostream& out) {
    EnumerationOptions options;
    options.verify_witnesses = !a.no_verify;
    const auto records = enumerate_existence(a.q, a.max_m, a.max_length, options);
    out << (a.format == "lines" ? format_records_lines(records) : format_records_table(records));
    if (a.check_table == 0) return kExitOk;
    const ExistenceTable& table = existence_table(a.check_table);
    const TableCheck check = check_table(table, records);
    out << format_table_check(table, check);
    return check.matched ? kExitOk : kExitFailed;
}

int sequence(const SequenceArgs& a, std::ostream& out) {
    const GeneralizedBooleanFunction f = parse_gbf(a.f, a.q, a.m);
    const std::size_t length = a.length ? a.length : std::size_t{1} << a.m;
    out << format_sequence(truncated_sequence(f, length)) << '\n';
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Construct and verify complementary sets and mutually orthogonal complementary sets", "mocs-forge"};
    app.require_subcommand(1);

    ConstructArgs construct_args;
    auto* construct_cmd = app.add_subcommand("construct", "build a family from partition parameters");
    construct_cmd->add_option("--q", construct_args.q, "alphabet size (even)")->required();
    construct_cmd->add_option("--m", construct_args.m, "number of variables")->required();
    construct_cmd->add_option("--t", construct_args.t, "length parameter, L = 2^(m-1) + 2^t")->required();
    construct_cmd->add_option("--parts", construct_args.parts, "parts in pi order, e.g. 1,2;3,4,5")->required();
    construct_cmd->add_option("--g", construct_args.g, "linear coefficients g_0,...,g_m");
    construct_cmd->add_option("--method", construct_args.method, "gcs, mocs or mocs-cor")
        ->required()
        ->check(CLI::IsMember({"gcs", "mocs", "mocs-cor"}));
    construct_cmd->add_option("--out", construct_args.out_path, "output file; stdout when omitted");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "check every correlation property of a family file");
    verify_cmd->add_option("file", verify_args.path, "family file")->required();
    verify_cmd->add_option("--mode", verify_args.mode, "exact or float (default: $MOCS_FORGE_MODE, else exact)")
        ->check(CLI::IsMember({"exact", "float"}));
    verify_cmd->add_option("--tolerance", verify_args.tolerance, "magnitude threshold for float mode")
        ->check(CLI::PositiveNumber);

    EnumerateArgs enumerate_args;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "list achievable (M, N, L) with verified witnesses");
    enumerate_cmd->add_option("--q", enumerate_args.q, "alphabet size")->capture_default_str();
    enumerate_cmd->add_option("--max-m", enumerate_args.max_m, "largest m searched")->capture_default_str();
    enumerate_cmd->add_option("--max-length", enumerate_args.max_length, "largest length L");
    enumerate_cmd->add_option("--check-table", enumerate_args.check_table, "compare against table 1 or 2")
        ->check(CLI::IsMember({1u, 2u}));
    enumerate_cmd->add_option("--format", enumerate_args.format, "table or lines")
        ->check(CLI::IsMember({"table", "lines"}))
        ->capture_default_str();
    enumerate_cmd->add_flag("--no-verify", enumerate_args.no_verify, "skip witness verification");

    SequenceArgs sequence_args;
    auto* sequence_cmd = app.add_subcommand("sequence", "print the truncated sequence of a function");
    sequence_cmd->add_option("--q", sequence_args.q, "alphabet size (even)")->required();
    sequence_cmd->add_option("--m", sequence_args.m, "number of variables")->required();
    sequence_cmd->add_option("--f", sequence_args.f, "function, e.g. 2*x1*x2+x3")->required();
    sequence_cmd->add_option("--length", sequence_args.length, "truncation length (default 2^m)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n' << "run with --help for usage\n";
        return kExitUsage;
    }

    try {
        if (construct_cmd->parsed()) return construct(construct_args, out, err);
        if (verify_cmd->parsed()) return verify(verify_args, out, err);
        if (enumerate_cmd->parsed()) return enumerate(enumerate_args, out);
        return sequence(sequence_args, out);
    } catch (const PreconditionError& e) {
        err << "precondition failed: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const ParseError& e) {
        err << "invalid argument: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "invalid argument: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace mocs::cli
