#pragma once

#include "mocs/constructions.hpp"
#include "mocs/correlation.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace mocs {

inline constexpr unsigned kMaxEnumerationVariables = 8;
inline constexpr Symbol kMaxEnumerationAlphabet = 64;

// One achievable (M, N, L) for a construction with a plan that realizes it.
struct ExistenceRecord {
    std::size_t set_size;
    std::size_t flock_size;
    std::size_t length;
    Construction construction;
    PartitionPlan witness;
    // The witness family was built and passed verify_mocs.
    bool verified = false;
};

struct EnumerationOptions {
    bool verify_witnesses = true;
    ZeroTestMode mode = ZeroTestMode::exact();
};

// {2^(m-1) + 2^t : t_min <= t <= t_max}, ascending in t.
std::vector<std::size_t> length_spectrum(unsigned m, unsigned t_min, unsigned t_max);

// All (M, N, L, construction) reachable by theorem 2 or corollary 1 with
// 2 <= m <= m_max and L <= max_length, one witness each, sorted by
// (M, N, L, construction). Partitions are searched with parts ordered by their
// smallest element; orderings inside a part are pruned against the prefix
// condition as they are built.
std::vector<ExistenceRecord> enumerate_existence(Symbol q, unsigned m_max, std::size_t max_length,
                                                 const EnumerationOptions& options = {});

MocsFamily build_witness(Symbol q, const ExistenceRecord& record);

// m=6/t=3/parts=1,2;3,4,5
std::string witness_spec(const PartitionPlan& plan);

struct TableRow {
    std::string label;
    // Construction::unspecified matches either construction.
    Construction construction;
    std::size_t set_size;
    // std::nullopt matches any flock size.
    std::optional<std::size_t> flock_size;
    std::vector<std::size_t> checked_lengths;
};

struct ExistenceTable {
    unsigned id;
    std::vector<std::size_t> columns;
    std::vector<TableRow> rows;
};

// Set sizes 4, 8 and 16 against lengths 4..64, either construction.
const ExistenceTable& existence_table_by_set_size();
// (M, N) rows per construction against even lengths 4..40.
const ExistenceTable& existence_table_by_flock();
const ExistenceTable& existence_table(unsigned id);

struct CellMismatch {
    std::string row;
    std::size_t length;
    bool expected;
    bool found;
};

struct TableCheck {
    bool matched = false;
    std::size_t cells_checked = 0;
    std::vector<CellMismatch> mismatches;
    // Records outside every (row, column) cell of the table.
    std::vector<ExistenceRecord> beyond_table;
    // Records inside the table whose witness did not verify.
    std::vector<ExistenceRecord> unverified;
};

// Every cell of the table grid must be reachable exactly when the table marks
// it; only verified records count as reachable.
TableCheck check_table(const ExistenceTable& table, const std::vector<ExistenceRecord>& records);

} // namespace mocs
