#include "mocs/family_io.hpp"

#include "mocs/error.hpp"

#include <charconv>
#include <complex>
#include <cstdio>
#include <iomanip>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace mocs {

namespace {

constexpr std::string_view kMagic = "# mocs-family v1";

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::optional<std::uint64_t> to_number(std::string_view s) {
    s = trim(s);
    if (s.empty()) return std::nullopt;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

template <typename T>
std::string join(const std::vector<T>& values, char sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

} // namespace

std::string format_sequence(const QarySequence& sequence) {
    std::string out;
    if (sequence.q() <= 10) {
        out.reserve(sequence.size());
        for (Symbol s : sequence.values()) out += static_cast<char>('0' + s);
        return out;
    }
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(sequence[i]);
    }
    return out;
}

QarySequence parse_sequence(std::string_view text, Symbol q, std::size_t line) {
    std::vector<Symbol> values;
    if (q <= 10) {
        values.reserve(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            const char c = text[i];
            if (c < '0' || c > '9') throw ParseError(std::string("expected a digit, found '") + c + "'", line, i + 1);
            const auto v = static_cast<Symbol>(c - '0');
            if (v >= q) throw ParseError("symbol " + std::to_string(v) + " is not in Z_" + std::to_string(q), line, i + 1);
            values.push_back(v);
        }
    } else {
        std::size_t column = 1;
        for (std::string_view token : split(text, ',')) {
            const auto v = to_number(token);
            if (!v) throw ParseError("expected a non-negative integer", line, column);
            if (*v >= q) throw ParseError("symbol " + std::to_string(*v) + " is not in Z_" + std::to_string(q), line, column);
            values.push_back(static_cast<Symbol>(*v));
            column += token.size() + 1;
        }
    }
    if (values.empty()) throw ParseError("empty sequence", line, 1);
    return QarySequence(q, std::move(values));
}

std::string format_parts(const std::vector<std::vector<unsigned>>& parts) {
    std::string out;
    for (std::size_t a = 0; a < parts.size(); ++a) {
        if (a) out += ';';
        out += join(parts[a], ',');
    }
    return out;
}

std::vector<std::vector<unsigned>> parse_parts(std::string_view text) {
    std::vector<std::vector<unsigned>> parts;
    std::size_t column = 1;
    for (std::string_view part_text : split(text, ';')) {
        std::vector<unsigned> part;
        std::size_t inner = column;
        for (std::string_view token : split(part_text, ',')) {
            const auto v = to_number(token);
            if (!v || *v > kMaxVariables) throw ParseError("expected a variable index", 1, inner);
            part.push_back(static_cast<unsigned>(*v));
            inner += token.size() + 1;
        }
        parts.push_back(std::move(part));
        column += part_text.size() + 1;
    }
    return parts;
}

std::vector<Symbol> parse_symbol_list(std::string_view text) {
    std::vector<Symbol> out;
    std::size_t column = 1;
    for (std::string_view token : split(text, ',')) {
        const auto v = to_number(token);
        if (!v || *v > 0xFFFFFFFFu) throw ParseError("expected a non-negative integer", 1, column);
        out.push_back(static_cast<Symbol>(*v));
        column += token.size() + 1;
    }
    return out;
}

void write_family_file(std::ostream& out, const FamilyFile& file) {
    const MocsFamily& family = file.family;
    out << kMagic << '\n';
    out << "# kind: " << to_string(file.kind) << '\n';
    const auto& provenance = family.provenance();
    out << "# construction: " << to_string(provenance ? provenance->construction : Construction::unspecified) << '\n';
    out << "# q: " << family.q() << '\n';
    out << "# M: " << family.set_size() << '\n';
    out << "# N: " << family.flock_size() << '\n';
    out << "# L: " << family.length() << '\n';
    if (provenance) {
        out << "# m: " << provenance->plan.m() << '\n';
        out << "# t: " << provenance->plan.t() << '\n';
        out << "# parts: " << format_parts(provenance->plan.parts()) << '\n';
        out << "# g: " << join(provenance->g, ',') << '\n';
    }
    for (std::size_t p = 0; p < family.set_size(); ++p) {
        out << "# set: " << p << '\n';
        for (const QarySequence& member : family[p].members()) out << format_sequence(member) << '\n';
    }
}

std::string write_family_file(const FamilyFile& file) {
    std::ostringstream out;
    write_family_file(out, file);
    return out.str();
}

FamilyFile read_family_file(std::istream& in) {
    std::map<std::string, std::pair<std::string, std::size_t>> header;
    std::vector<std::pair<std::string, std::size_t>> body;
    std::vector<std::pair<std::size_t, std::size_t>> markers;  // (set index, body lines before it)

    std::string raw;
    std::size_t line_no = 0;
    bool in_body = false;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line_no == 1) {
            if (line != kMagic) throw ParseError("missing '" + std::string(kMagic) + "' header", 1, 1);
            continue;
        }
        if (line.empty()) continue;
        if (line.front() == '#') {
            const std::string_view content = trim(line.substr(1));
            const auto colon = content.find(':');
            if (colon == std::string_view::npos) throw ParseError("expected '# key: value'", line_no, 1);
            const std::string key(trim(content.substr(0, colon)));
            const std::string value(trim(content.substr(colon + 1)));
            const std::size_t value_column = raw.find(value, raw.find(':')) + 1;
            if (key == "set") {
                const auto index = to_number(value);
                if (!index) throw ParseError("expected a set index", line_no, value_column);
                markers.emplace_back(*index, body.size());
                in_body = true;
                continue;
            }
            if (in_body) throw ParseError("header line '" + key + "' after the first sequence", line_no, 1);
            static const char* known[] = {"kind", "construction", "q", "M", "N", "L", "m", "t", "parts", "g"};
            if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
                throw ParseError("unknown header key '" + key + "'", line_no, 3);
            }
            if (!header.emplace(key, std::make_pair(value, line_no)).second) {
                throw ParseError("duplicate header key '" + key + "'", line_no, 3);
            }
            continue;
        }
        in_body = true;
        body.emplace_back(std::string(line), line_no);
    }
    if (line_no == 0) throw ParseError("empty file", 1, 1);

    auto required = [&](const std::string& key) -> const std::pair<std::string, std::size_t>& {
        auto it = header.find(key);
        if (it == header.end()) throw ParseError("missing header key '" + key + "'", line_no, 1);
        return it->second;
    };
    auto number = [&](const std::string& key) -> std::uint64_t {
        const auto& [value, where] = required(key);
        const auto v = to_number(value);
        if (!v) throw ParseError("header '" + key + "' must be a non-negative integer", where, 1);
        return *v;
    };

    const auto& [kind_text, kind_line] = required("kind");
    FamilyKind kind;
    if (kind_text == "gcs") {
        kind = FamilyKind::gcs;
    } else if (kind_text == "mocs") {
        kind = FamilyKind::mocs;
    } else {
        throw ParseError("kind must be 'gcs' or 'mocs'", kind_line, 1);
    }

    const std::uint64_t q = number("q");
    const std::uint64_t sets = number("M");
    const std::uint64_t flock = number("N");
    const std::uint64_t length = number("L");
    if (q < 2 || q > 0xFFFFFFFFu) throw ParseError("q must be at least 2", header["q"].second, 1);
    if (sets < 1 || flock < 1 || length < 1) throw ParseError("M, N and L must be positive", header["M"].second, 1);
    if (kind == FamilyKind::gcs && sets != 1) throw ParseError("a gcs file holds exactly one set", header["M"].second, 1);

    if (body.empty()) throw ParseError("family file has no sequences", line_no, 1);
    if (body.size() != sets * flock) {
        throw ParseError("expected M*N = " + std::to_string(sets * flock) + " sequence lines, found " +
                             std::to_string(body.size()),
                         body.back().second, 1);
    }
    for (const auto& [index, before] : markers) {
        if (before % flock != 0 || index != before / flock) {
            throw ParseError("'# set: " + std::to_string(index) + "' does not start set " + std::to_string(before / flock),
                             line_no, 1);
        }
    }

    std::vector<ComplementarySet> family_sets;
    for (std::size_t p = 0; p < sets; ++p) {
        std::vector<QarySequence> members;
        for (std::size_t n = 0; n < flock; ++n) {
            const auto& [text, where] = body[p * flock + n];
            QarySequence s = parse_sequence(text, static_cast<Symbol>(q), where);
            if (s.size() != length) {
                throw ParseError("sequence has " + std::to_string(s.size()) + " symbols, expected L = " +
                                     std::to_string(length),
                                 where, std::min(s.size(), static_cast<std::size_t>(length)) + 1);
            }
            members.push_back(std::move(s));
        }
        family_sets.emplace_back(std::move(members));
    }

    std::optional<ConstructionParameters> provenance;
    const std::string construction_text = header.count("construction") ? header["construction"].first : "none";
    if (construction_text != "none") {
        Construction construction;
        if (construction_text == "theorem1") {
            construction = Construction::theorem1;
        } else if (construction_text == "theorem2") {
            construction = Construction::theorem2;
        } else if (construction_text == "corollary1") {
            construction = Construction::corollary1;
        } else {
            throw ParseError("unknown construction '" + construction_text + "'", header["construction"].second, 1);
        }
        const auto m = number("m");
        const auto t = number("t");
        try {
            PartitionPlan plan(static_cast<unsigned>(m), parse_parts(required("parts").first), static_cast<unsigned>(t));
            std::vector<Symbol> g = parse_symbol_list(required("g").first);
            if (g.size() != plan.m() + 1) throw DomainError("g must list m+1 coefficients");
            provenance = ConstructionParameters{construction, static_cast<Symbol>(q), std::move(plan), std::move(g)};
        } catch (const DomainError& e) {
            throw ParseError(std::string("invalid construction parameters: ") + e.what(), header["parts"].second, 1);
        } catch (const ParseError& e) {
            throw ParseError(std::string("invalid construction parameters: ") + e.what(), header["parts"].second, 1);
        }
    }
    return FamilyFile{kind, MocsFamily(std::move(family_sets), std::move(provenance))};
}

FamilyFile read_family_file(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_family_file(in);
}

std::string format_value(const CorrelationValue& value) {
    std::ostringstream out;
    const std::complex<double> z = value.to_complex();
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6g%+.6gi", std::abs(z.real()) < 1e-9 ? 0.0 : z.real(),
                  std::abs(z.imag()) < 1e-9 ? 0.0 : z.imag());
    out << buffer << " exponents {";
    bool first = true;
    for (Symbol e = 0; e < value.q(); ++e) {
        if (value.count(e) == 0) continue;
        out << (first ? "" : ", ") << e << ':' << value.count(e);
        first = false;
    }
    out << '}';
    return out.str();
}

std::string format_report(const VerificationReport& report, const FamilyFile* source, std::size_t max_violations) {
    std::ostringstream out;
    out << "kind: " << to_string(report.kind) << '\n';
    out << "mode: " << (report.mode.kind == ZeroTestMode::Kind::exact ? "exact" : "float");
    if (report.mode.kind == ZeroTestMode::Kind::floating) out << " (tolerance " << report.mode.tolerance << ')';
    out << '\n';
    out << "parameters: q=" << report.q << " M=" << report.set_size << " N=" << report.flock_size
        << " L=" << report.length << '\n';
    if (source && source->family.provenance()) {
        const auto& p = *source->family.provenance();
        out << "construction: " << to_string(p.construction) << " m=" << p.plan.m() << " t=" << p.plan.t()
            << " parts=" << format_parts(p.plan.parts()) << " g=" << join(p.g, ',') << '\n';
    }
    out << "peak: " << report.peak << " (expected " << report.flock_size * report.length << ")\n";
    if (report.kind == FamilyKind::mocs) {
        out << "set-size bound M <= N: " << (report.set_size_bound_holds ? "holds" : "VIOLATED") << '\n';
    }
    out << "correlation values checked: " << report.values_checked << '\n';
    out << "exact/float disagreements: " << report.mode_disagreements << '\n';
    out << "violations: " << report.violations.size() << '\n';
    const std::size_t shown = std::min(max_violations, report.violations.size());
    for (std::size_t i = 0; i < shown; ++i) {
        const Violation& v = report.violations[i];
        out << "  set " << v.set_a;
        if (v.set_b != v.set_a) out << " x set " << v.set_b;
        out << ", shift " << v.shift << ": " << format_value(v.value) << '\n';
    }
    if (shown < report.violations.size()) out << "  ... " << report.violations.size() - shown << " more\n";
    out << "result: " << (report.passed ? "PASS" : "FAIL") << '\n';
    return out.str();
}

std::string format_records_table(const std::vector<ExistenceRecord>& records) {
    std::ostringstream out;
    out << std::setw(5) << "M" << std::setw(6) << "N" << std::setw(6) << "L" << "  " << std::left << std::setw(12)
        << "construction" << std::setw(10) << "verified" << "witness" << std::right << '\n';
    for (const ExistenceRecord& r : records) {
        out << std::setw(5) << r.set_size << std::setw(6) << r.flock_size << std::setw(6) << r.length << "  "
            << std::left << std::setw(12) << to_string(r.construction) << std::setw(10) << (r.verified ? "yes" : "NO")
            << witness_spec(r.witness) << std::right << '\n';
    }
    return out.str();
}

std::string format_records_lines(const std::vector<ExistenceRecord>& records) {
    std::ostringstream out;
    for (const ExistenceRecord& r : records) {
        out << r.set_size << ' ' << r.flock_size << ' ' << r.length << ' ' << to_string(r.construction) << ' '
            << witness_spec(r.witness) << '\n';
    }
    return out.str();
}

std::string format_table_check(const ExistenceTable& table, const TableCheck& check) {
    std::ostringstream out;
    out << "table " << table.id << ": " << check.cells_checked << " cells checked\n";
    for (const CellMismatch& m : check.mismatches) {
        out << "mismatch: " << m.row << " at length " << m.length << ": table says "
            << (m.expected ? "present" : "absent") << ", enumeration found " << (m.found ? "present" : "absent")
            << '\n';
    }
    for (const ExistenceRecord& r : check.unverified) {
        out << "unverified witness: " << r.set_size << ' ' << r.flock_size << ' ' << r.length << ' '
            << to_string(r.construction) << ' ' << witness_spec(r.witness) << '\n';
    }
    for (const ExistenceRecord& r : check.beyond_table) {
        out << "beyond-table: " << r.set_size << ' ' << r.flock_size << ' ' << r.length << ' '
            << to_string(r.construction) << ' ' << witness_spec(r.witness) << '\n';
    }
    out << (check.matched ? "table cells matched" : "table cells mismatched") << '\n';
    return out.str();
}

} // namespace mocs
