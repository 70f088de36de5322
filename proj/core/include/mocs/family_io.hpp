#pragma once

#include "mocs/constructions.hpp"
#include "mocs/enumeration.hpp"
#include "mocs/verification.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mocs {

// Family file layout:
//
//   # mocs-family v1
//   # kind: gcs | mocs
//   # construction: theorem1 | theorem2 | corollary1 | none
//   # q: <q>
//   # M: <set size>
//   # N: <flock size>
//   # L: <length>
//   # m: <m>              (these four only when construction != none)
//   # t: <t>
//   # parts: 1,2;3,4,5   (pi order)
//   # g: g_0,...,g_m
//   # set: 0
//   <N sequence lines>
//   # set: 1
//   ...
//
// A sequence line is a digit string when q <= 10, and comma-separated
// integers otherwise.
struct FamilyFile {
    FamilyKind kind;
    MocsFamily family;

    bool operator==(const FamilyFile&) const = default;
};

std::string format_sequence(const QarySequence& sequence);
// `line` is only used for error positions.
QarySequence parse_sequence(std::string_view text, Symbol q, std::size_t line = 0);

std::string format_parts(const std::vector<std::vector<unsigned>>& parts);
std::vector<std::vector<unsigned>> parse_parts(std::string_view text);
std::vector<Symbol> parse_symbol_list(std::string_view text);

void write_family_file(std::ostream& out, const FamilyFile& file);
std::string write_family_file(const FamilyFile& file);
FamilyFile read_family_file(std::istream& in);
FamilyFile read_family_file(std::string_view text);

// Structured text block: kind, parameters, pass/fail and the first
// `max_violations` violations.
std::string format_report(const VerificationReport& report, const FamilyFile* source = nullptr,
                          std::size_t max_violations = 10);
std::string format_value(const CorrelationValue& value);

// Aligned table; one row per record.
std::string format_records_table(const std::vector<ExistenceRecord>& records);
// "M N L construction witness-spec" per line.
std::string format_records_lines(const std::vector<ExistenceRecord>& records);
std::string format_table_check(const ExistenceTable& table, const TableCheck& check);

} // namespace mocs
